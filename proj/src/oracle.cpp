#include "calogero/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "calogero/construct.hpp"
#include "calogero/dunkl.hpp"
#include "calogero/errors.hpp"
#include "calogero/norms.hpp"

namespace calogero::oracle {

namespace {

bool graded_lex_less(const Composition& a, const Composition& b) {
    const int da = weyl::degree(a), db = weyl::degree(b);
    if (da != db) return da < db;
    return a < b;
}

void enumerate_rec(int pos, int remaining, Composition& cur,
                   std::vector<Composition>& out) {
    if (pos == static_cast<int>(cur.size())) {
        out.push_back(cur);
        return;
    }
    for (int e = 0; e <= remaining; ++e) {
        cur[pos] = e;
        enumerate_rec(pos + 1, remaining - e, cur, out);
    }
    cur[pos] = 0;
}

std::vector<Composition> monomial_basis(int N, int cutoff) {
    std::vector<Composition> out;
    Composition cur(N, 0);
    enumerate_rec(0, cutoff, cur, out);
    std::sort(out.begin(), out.end(), graded_lex_less);
    return out;
}

// True when r sits strictly below c in the degree-extended order.
bool strictly_below(const Composition& r, const Composition& c) {
    const int dr = weyl::degree(r), dc = weyl::degree(c);
    if (dr != dc) return dr < dc;
    return weyl::order_compare(r, c) == weyl::Order::Less;
}

// Back-substitution order: strictly-above elements first.  Degree layers
// descend; inside a layer, repeatedly emit an element that is maximal among
// the remaining ones.
std::vector<int> solve_order(const std::vector<Composition>& basis) {
    std::map<int, std::vector<int>, std::greater<int>> layers;
    for (int i = 0; i < static_cast<int>(basis.size()); ++i)
        layers[weyl::degree(basis[i])].push_back(i);
    std::vector<int> out;
    out.reserve(basis.size());
    for (auto& [deg, layer] : layers) {
        std::vector<char> used(layer.size(), 0);
        for (std::size_t emitted = 0; emitted < layer.size(); ++emitted) {
            int pick = -1;
            for (std::size_t i = 0; i < layer.size() && pick < 0; ++i) {
                if (used[i]) continue;
                bool maximal = true;
                for (std::size_t k = 0; k < layer.size(); ++k) {
                    if (k == i || used[k]) continue;
                    if (weyl::order_compare(basis[layer[i]],
                                            basis[layer[k]]) ==
                        weyl::Order::Less) {
                        maximal = false;
                        break;
                    }
                }
                if (maximal) pick = static_cast<int>(i);
            }
            if (pick < 0)
                throw std::logic_error("cycle in the composition order");
            used[pick] = 1;
            out.push_back(layer[pick]);
        }
    }
    return out;
}

OperatorMatrix build_matrix(const Params& params, int N, int cutoff) {
    OperatorMatrix M{params, N, cutoff, monomial_basis(N, cutoff), {}, {}};
    for (int i = 0; i < static_cast<int>(M.basis.size()); ++i)
        M.index[M.basis[i]] = i;
    const int B = static_cast<int>(M.basis.size());
    M.rows.assign(N, std::vector<OperatorMatrix::Row>(B));
    for (int c = 0; c < B; ++c) {
        const Poly mono = Poly::monomial(M.basis[c]);
        for (int j = 1; j <= N; ++j) {
            const Poly img = dunkl::cherednik_d(params, j, mono);
            for (const auto& [exp, coeff] : img.terms()) {
                const auto it = M.index.find(exp);
                if (it == M.index.end())
                    throw std::logic_error("operator image left the basis");
                M.rows[j - 1][it->second].emplace_back(c, coeff);
            }
        }
    }
    return M;
}

}  // namespace

bool OperatorMatrix::triangular(int j) const {
    const auto& rj = rows.at(j - 1);
    for (int r = 0; r < static_cast<int>(rj.size()); ++r)
        for (const auto& [c, coeff] : rj[r]) {
            if (r == c || coeff == 0) continue;
            if (!strictly_below(basis[r], basis[c])) return false;
        }
    return true;
}

const OperatorMatrix& operator_matrix(const Params& params, int N,
                                      int cutoff) {
    static std::map<std::string, OperatorMatrix> cache;
    const std::string key = params.describe() + " N=" + std::to_string(N) +
                            " cutoff=" + std::to_string(cutoff);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, build_matrix(params, N, cutoff)).first;
    return it->second;
}

Poly triangular_eigensolve(const Params& params, const Composition& mu,
                           int cutoff) {
    const int N = static_cast<int>(mu.size());
    if (cutoff < weyl::degree(mu))
        throw std::invalid_argument("cutoff below the label degree");
    const OperatorMatrix& M = operator_matrix(params, N, cutoff);
    const std::vector<Rational> lambda =
        construct::cherednik_eigenvalues(params, mu);
    const int B = static_cast<int>(M.basis.size());
    const int target = M.index.at(mu);

    std::vector<Rational> v(B, 0);
    std::vector<char> assigned(B, 0);
    v[target] = 1;
    assigned[target] = 1;
    for (int r : solve_order(M.basis)) {
        if (r == target) continue;
        bool solved = false;
        for (int j = 1; j <= N && !solved; ++j) {
            Rational pivot = lambda[j - 1];
            Rational rhs = 0;
            for (const auto& [c, coeff] : M.rows[j - 1][r]) {
                if (c == r)
                    pivot -= coeff;
                else if (assigned[c])
                    rhs += coeff * v[c];
            }
            if (pivot != 0) {
                v[r] = rhs / pivot;
                solved = true;
            } else if (rhs != 0) {
                throw DegenerateEigenvalue(
                    "zero pivot with nonzero residue at basis row " +
                    std::to_string(r));
            }
        }
        assigned[r] = 1;  // all pivots and residues zero: component vanishes
    }

    Poly h(N);
    for (int i = 0; i < B; ++i)
        if (v[i] != 0) h.add_term(M.basis[i], v[i]);
    for (int j = 1; j <= N; ++j)
        if (!(dunkl::cherednik_d(params, j, h) == lambda[j - 1] * h))
            throw DegenerateEigenvalue(
                "back-substituted vector fails the eigenvalue equations");
    return h;
}

namespace {

// Physicists' Hermite polynomial H_n(x) and H_{n-1}(x).
std::pair<Float, Float> hermite_pair(int n, const Float& x) {
    Float hm1 = 0, h = 1;  // H_{-1}, H_0
    for (int k = 0; k < n; ++k) {
        const Float next = 2 * x * h - 2 * k * hm1;
        hm1 = h;
        h = next;
    }
    return {h, hm1};
}

// Orthonormal-recurrence evaluation in double for root scanning; values
// stay O(1) so no overflow for the node counts used here.
double hermite_orthonormal(int n, double x) {
    double pm1 = 0, p = 1;
    for (int k = 0; k < n; ++k) {
        const double next =
            x * std::sqrt(2.0 / (k + 1)) * p - std::sqrt(double(k) / (k + 1)) * pm1;
        pm1 = p;
        p = next;
    }
    return p;
}

// Gauss-Hermite nodes and weights for weight e^{-x^2}, refined at the
// current mpfr working precision.
std::pair<std::vector<Float>, std::vector<Float>> hermite_rule(int n) {
    std::vector<double> seeds;
    if (n % 2 == 1) seeds.push_back(0.0);
    const double top = std::sqrt(2.0 * n + 2) + 1;
    const double step = 1e-3;
    double prev_x = step / 2;
    double prev_f = hermite_orthonormal(n, prev_x);
    for (double x = prev_x + step; x <= top; x += step) {
        const double f = hermite_orthonormal(n, x);
        if ((prev_f < 0) != (f < 0)) {
            double lo = prev_x, hi = x, flo = prev_f;
            for (int it = 0; it < 80; ++it) {
                const double mid = (lo + hi) / 2;
                const double fm = hermite_orthonormal(n, mid);
                if ((flo < 0) != (fm < 0))
                    hi = mid;
                else {
                    lo = mid;
                    flo = fm;
                }
            }
            seeds.push_back((lo + hi) / 2);
        }
        prev_x = x;
        prev_f = f;
    }
    if (static_cast<int>(seeds.size()) != (n + 1) / 2)
        throw std::logic_error("quadrature root scan missed a node");

    Float factor = sqrt(boost::math::constants::pi<Float>());
    for (int k = 1; k < n; ++k) factor *= 2;      // 2^{n-1}
    for (int k = 2; k <= n; ++k) factor *= k;     // n!
    factor /= Float(n) * Float(n);

    std::vector<Float> xs, ws;
    for (double seed : seeds) {
        Float x = seed;
        for (int it = 0; it < 10; ++it) {
            const auto [h, hm1] = hermite_pair(n, x);
            x -= h / (2 * n * hm1);
        }
        const Float hm1 = hermite_pair(n, x).second;
        const Float w = factor / (hm1 * hm1);
        if (x == 0) {
            xs.push_back(x);
            ws.push_back(w);
        } else {
            xs.push_back(x);
            ws.push_back(w);
            xs.push_back(-x);
            ws.push_back(w);
        }
    }
    return {xs, ws};
}

long small_integer(const Rational& q, const char* what) {
    if (!is_integer(q)) throw NonIntegerCoupling(std::string(what) +
                                                 " must be an integer");
    return q.get_num().get_si();
}

}  // namespace

GramMatrix quadrature_gram(const Params& params,
                           const std::vector<Poly>& polys, int nodes,
                           unsigned precision) {
    if (polys.empty()) return {};
    const int N = polys[0].nvars();
    int maxdeg = 0;
    for (const auto& p : polys) {
        if (p.nvars() != N)
            throw std::invalid_argument("mixed variable counts");
        maxdeg = std::max(maxdeg, std::max(0, p.degree()));
    }
    const long la = small_integer(params.a, "coupling a");
    const long lb = params.family == Family::B
                        ? small_integer(params.b, "coupling b")
                        : 0;
    const long wdeg = params.family == Family::A ? 2 * la * (N - 1)
                                                 : 4 * la * (N - 1) + 2 * lb;
    const int need = static_cast<int>((2 * maxdeg + wdeg) / 2 + 1);
    const int n = nodes > 0 ? std::max(nodes, need) : need;

    const unsigned saved = Float::default_precision();
    Float::default_precision(precision + 15);
    auto [xs, ws] = hermite_rule(n);

    // Rescale x = t / sqrt(omega) so the Gaussian factor becomes e^{-t^2}.
    const Float scale = 1 / sqrt(Float(params.omega.get_mpq_t()));
    std::vector<Float> coord(n);
    std::vector<std::vector<Float>> powtab(n);
    for (int i = 0; i < n; ++i) {
        coord[i] = xs[i] * scale;
        powtab[i].assign(maxdeg + 1, 1);
        for (int e = 1; e <= maxdeg; ++e)
            powtab[i][e] = powtab[i][e - 1] * coord[i];
    }

    const std::size_t P = polys.size();
    GramMatrix G;
    G.node_count = n;
    G.precision = precision;
    G.entries.assign(P, std::vector<Float>(P, Float(0)));

    std::vector<int> idx(N, 0);
    std::vector<Float> pv(P);
    while (true) {
        Float w = 1;
        for (int k = 0; k < N; ++k) w *= ws[idx[k]];
        for (int i = 0; i < N; ++i)
            for (int j = i + 1; j < N; ++j) {
                Float d = params.family == Family::A
                              ? Float(coord[idx[i]] - coord[idx[j]])
                              : Float(coord[idx[i]] * coord[idx[i]] -
                                      coord[idx[j]] * coord[idx[j]]);
                for (long e = 0; e < 2 * la; ++e) w *= d;
            }
        if (params.family == Family::B && lb > 0)
            for (int i = 0; i < N; ++i)
                for (long e = 0; e < 2 * lb; ++e) w *= coord[idx[i]];
        for (std::size_t p = 0; p < P; ++p) {
            Float val = 0;
            for (const auto& [exp, coeff] : polys[p].terms()) {
                Float term(coeff.get_mpq_t());
                for (int k = 0; k < N; ++k) term *= powtab[idx[k]][exp[k]];
                val += term;
            }
            pv[p] = val;
        }
        for (std::size_t i = 0; i < P; ++i)
            for (std::size_t j = i; j < P; ++j)
                G.entries[i][j] += w * pv[i] * pv[j];
        int k = 0;
        while (k < N && ++idx[k] == n) idx[k++] = 0;
        if (k == N) break;
    }

    Float jac = 1;
    for (int k = 0; k < N; ++k) jac *= scale;
    for (std::size_t i = 0; i < P; ++i)
        for (std::size_t j = i; j < P; ++j) {
            G.entries[i][j] *= jac;
            G.entries[j][i] = G.entries[i][j];
        }
    Float::default_precision(saved);
    return G;
}

Float quadrature_inner(const Params& params, const Poly& f, const Poly& g,
                       int nodes, unsigned precision) {
    return quadrature_gram(params, {f, g}, nodes, precision).entries[0][1];
}

namespace {

using nlohmann::json;

Poly random_poly(std::mt19937& rng, int N, int maxdeg) {
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> expo(0, maxdeg);
    Poly p(N);
    for (int t = 0; t < 5; ++t) {
        Composition e(N, 0);
        int budget = maxdeg;
        for (int k = 0; k < N; ++k) {
            e[k] = std::min(expo(rng), budget);
            budget -= e[k];
        }
        int c = coeff(rng);
        if (c == 0) c = 1;
        p.add_term(e, c);
    }
    return p;
}

std::vector<Composition> all_compositions(int N, int maxdeg) {
    return monomial_basis(N, maxdeg);
}

json entry(const Params& params, int N, const std::string& check,
           bool pass, const std::string& detail) {
    return json{{"check", check},
                {"family", std::string(1, family_letter(params.family))},
                {"N", N},
                {"params", params.describe()},
                {"status", pass ? "pass" : "fail"},
                {"detail", detail}};
}

json skipped(const Params& params, int N, const std::string& check,
             const std::string& why) {
    json e = entry(params, N, check, true, why);
    e["status"] = "skipped";
    return e;
}

template <typename F>
json run_check(const Params& params, int N, const std::string& check, F f) {
    try {
        std::string detail;
        const bool ok = f(detail);
        return entry(params, N, check, ok,
                     ok ? (detail.empty() ? "ok" : detail) : detail);
    } catch (const std::exception& ex) {
        return entry(params, N, check, false,
                     std::string("exception: ") + ex.what());
    }
}

}  // namespace

nlohmann::json verify_suite(const Params& params, int N, int max_degree) {
    json report = json::array();
    std::mt19937 rng(20010517u);
    const bool is_B = params.family == Family::B;

    report.push_back(run_check(params, N, "cherednik-commutation",
                               [&](std::string& detail) {
        for (int trial = 0; trial < 3; ++trial) {
            const Poly p = random_poly(rng, N, max_degree);
            for (int j = 1; j <= N; ++j)
                for (int k = j + 1; k <= N; ++k) {
                    const Poly lhs = dunkl::cherednik_d(
                        params, j, dunkl::cherednik_d(params, k, p));
                    const Poly rhs = dunkl::cherednik_d(
                        params, k, dunkl::cherednik_d(params, j, p));
                    if (!(lhs == rhs)) {
                        detail = "[d_" + std::to_string(j) + ", d_" +
                                 std::to_string(k) + "] != 0";
                        return false;
                    }
                }
        }
        return true;
    }));

    report.push_back(run_check(params, N, "exchange-relations",
                               [&](std::string& detail) {
        for (int trial = 0; trial < 3; ++trial) {
            const Poly p = random_poly(rng, N, max_degree);
            for (int l = 1; l < N; ++l) {
                Poly lhs = dunkl::cherednik_d(params, l,
                                              p.exchange(l, l + 1)) -
                           dunkl::cherednik_d(params, l + 1, p)
                               .exchange(l, l + 1);
                Poly rhs = params.a * p;
                if (is_B) rhs += params.a * p.reflect(l).reflect(l + 1);
                if (!(lhs == rhs)) {
                    detail = "d_l K_l - K_l d_{l+1} mismatch at l=" +
                             std::to_string(l);
                    return false;
                }
            }
            for (int l = 1; l <= N; ++l)
                for (int m = 1; m < N; ++m) {
                    if (l == m || l == m + 1) continue;
                    const Poly lhs = dunkl::cherednik_d(
                        params, l, p.exchange(m, m + 1));
                    const Poly rhs = dunkl::cherednik_d(params, l, p)
                                         .exchange(m, m + 1);
                    if (!(lhs == rhs)) {
                        detail = "[d_l, K_m] != 0";
                        return false;
                    }
                }
            if (is_B)
                for (int l = 1; l <= N; ++l)
                    for (int m = 1; m <= N; ++m)
                        if (!(dunkl::cherednik_d(params, l, p.reflect(m)) ==
                              dunkl::cherednik_d(params, l, p).reflect(m))) {
                            detail = "[d_l, t_m] != 0";
                            return false;
                        }
        }
        return true;
    }));

    report.push_back(run_check(params, N, "braid-intertwining",
                               [&](std::string& detail) {
        std::uniform_int_distribution<int> lam(0, 3);
        for (int trial = 0; trial < 3; ++trial) {
            const Poly p = random_poly(rng, N, max_degree);
            std::vector<int> lambda(N);
            for (auto& v : lambda) v = lam(rng);
            for (int j = 1; j < N; ++j) {
                const Poly lhs = dunkl::braid_S(
                    params, j, dunkl::cherednik_weighted(params, lambda, p));
                std::vector<int> sl = lambda;
                std::swap(sl[j - 1], sl[j]);
                const Poly rhs = dunkl::cherednik_weighted(
                    params, sl, dunkl::braid_S(params, j, p));
                if (!(lhs == rhs)) {
                    detail = "S_j d^lambda != d^{s_j lambda} S_j";
                    return false;
                }
            }
            // d^lambda e^dag = e^dag (d^{s_1...s_{N-1} lambda} + lambda_N)
            const Poly lhs = dunkl::cherednik_weighted(
                params, lambda, dunkl::knop_sahi_e_dagger(params, p));
            std::vector<int> rot(N);
            rot[0] = lambda[N - 1];
            for (int k = 1; k < N; ++k) rot[k] = lambda[k - 1];
            Poly inner = dunkl::cherednik_weighted(params, rot, p);
            inner += Rational(lambda[N - 1]) * p;
            if (!(lhs == dunkl::knop_sahi_e_dagger(params, inner))) {
                detail = "Knop-Sahi intertwining mismatch";
                return false;
            }
        }
        return true;
    }));

    report.push_back(run_check(params, N, "rodrigues-vs-eigensolver",
                               [&](std::string& detail) {
        construct::Builder builder(params);
        for (const auto& mu : all_compositions(N, max_degree)) {
            const Poly built = builder.nonsym(mu).poly;
            const Poly solved =
                triangular_eigensolve(params, mu, weyl::degree(mu));
            if (!(built == solved)) {
                detail = "mismatch at mu, difference: " +
                         (built - solved).pretty();
                return false;
            }
        }
        return true;
    }));

    report.push_back(run_check(params, N, "exchange-expansion",
                               [&](std::string& detail) {
        construct::Builder builder(params);
        for (const auto& mu : all_compositions(N, max_degree))
            for (int j = 1; j < N; ++j) {
                const auto [self, other] =
                    construct::k_action_expand(params, mu, j);
                const Composition smu = weyl::apply_transposition(mu, j);
                Poly rhs = self * builder.nonsym(mu).poly;
                rhs += other * builder.nonsym(smu).poly;
                if (!(builder.nonsym(mu).poly.exchange(j, j + 1) == rhs)) {
                    detail = "exchange expansion mismatch";
                    return false;
                }
            }
        return true;
    }));

    report.push_back(run_check(params, N, "sym-norm-consistency",
                               [&](std::string& detail) {
        for (const auto& mu : all_compositions(N, max_degree)) {
            if (!weyl::is_partition(mu)) continue;
            for (int sign : {+1, -1}) {
                if (!construct::sector_admissible(params.family, sign, mu))
                    continue;
                Rational expanded = 0;
                for (const auto& [nu, w] : weyl::weyl_orbit(mu)) {
                    const Rational b =
                        construct::sym_coeff(params, mu, nu, sign);
                    expanded += b * b * norms::norm_ratio_nonsym(params, nu);
                }
                if (expanded != norms::norm_ratio_sym(params, mu, sign)) {
                    detail = "orbit expansion disagrees with closed form";
                    return false;
                }
            }
        }
        return true;
    }));

    report.push_back(run_check(params, N, "poincare-identity",
                               [&](std::string& detail) {
        for (const auto& mu : all_compositions(N, max_degree)) {
            if (!weyl::is_partition(mu)) continue;
            for (int sign : {+1, -1}) {
                // The minus sign needs a regular weight: repeated entries
                // put <alpha, mu + a rho> - a on the stabilizer at zero.
                if (sign < 0 &&
                    std::adjacent_find(mu.begin(), mu.end()) != mu.end())
                    continue;
                const auto [lhs, rhs] =
                    norms::poincare_identity_check(N, mu, params, sign);
                if (lhs != rhs) {
                    detail = "orbit sum " + to_string(lhs) +
                             " != " + to_string(rhs);
                    return false;
                }
            }
        }
        return true;
    }));

    report.push_back(run_check(params, N, "parameter-shift",
                               [&](std::string& detail) {
        const int step = is_B ? 2 : 1;
        for (const auto& mu : all_compositions(N, max_degree / step)) {
            if (!weyl::is_partition(mu)) continue;
            Composition scaled = mu;
            for (auto& v : scaled) v *= step;
            for (const auto& chk :
                 construct::parameter_shift_check(params, scaled))
                if (!chk.equal) {
                    detail = chk.relation + " fails, difference: " +
                             chk.difference.pretty();
                    return false;
                }
        }
        return true;
    }));

    const bool quadrature_ok =
        is_integer(params.a) && (!is_B || is_integer(params.b));
    if (!quadrature_ok) {
        report.push_back(skipped(params, N, "gram-vs-norms",
                                 "non-integer couplings"));
        report.push_back(skipped(params, N, "quadrature-adjointness",
                                 "non-integer couplings"));
        return report;
    }

    report.push_back(run_check(params, N, "gram-vs-norms",
                               [&](std::string& detail) {
        construct::Builder builder(params);
        std::vector<Poly> polys;
        std::vector<Composition> labels;
        const int deg = std::min(max_degree, 3);
        for (const auto& mu : all_compositions(N, deg)) {
            polys.push_back(builder.nonsym(mu).poly);
            labels.push_back(mu);
        }
        const GramMatrix G = quadrature_gram(params, polys);
        const Float tol = pow(Float(10), -25);
        Float min_diag = G.entries[0][0];
        for (std::size_t i = 0; i < polys.size(); ++i)
            min_diag = (std::min)(min_diag, G.entries[i][i]);
        for (std::size_t i = 0; i < polys.size(); ++i)
            for (std::size_t j = i + 1; j < polys.size(); ++j)
                if (abs(G.entries[i][j]) > tol * min_diag) {
                    detail = "off-diagonal above tolerance";
                    return false;
                }
        for (std::size_t i = 0; i < polys.size(); ++i) {
            const Rational want = norms::norm_ratio_nonsym(params, labels[i]);
            const Float got = G.entries[i][i] / G.entries[0][0];
            if (abs(got - Float(want.get_mpq_t())) > tol * got) {
                detail = "diagonal ratio disagrees with the closed form";
                return false;
            }
        }
        return true;
    }));

    report.push_back(run_check(params, N, "quadrature-adjointness",
                               [&](std::string& detail) {
        const Float tol = pow(Float(10), -25);
        for (int trial = 0; trial < 2; ++trial) {
            const Poly f = random_poly(rng, N, 3);
            const Poly g = random_poly(rng, N, 3);
            for (int j = 1; j < N; ++j) {
                const Float lhs = quadrature_inner(
                    params, dunkl::braid_S(params, j, f), g);
                const Float rhs = quadrature_inner(
                    params, f, dunkl::braid_S(params, j, g));
                if (abs(lhs + rhs) > tol * (1 + abs(lhs))) {
                    detail = "S_j is not anti-self-adjoint numerically";
                    return false;
                }
            }
            const Float lhs = quadrature_inner(
                params, dunkl::knop_sahi_e_dagger(params, f), g);
            const Float rhs = quadrature_inner(
                params, f, dunkl::knop_sahi_e(params, g));
            if (abs(lhs - rhs) > tol * (1 + abs(lhs))) {
                detail = "e-dagger is not adjoint to e numerically";
                return false;
            }
        }
        return true;
    }));

    return report;
}

bool report_all_pass(const nlohmann::json& report) {
    for (const auto& e : report)
        if (e.at("status") == "fail") return false;
    return true;
}

}  // namespace calogero::oracle
