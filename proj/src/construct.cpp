#include "calogero/construct.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "calogero/errors.hpp"

namespace calogero::construct {

using weyl::ReducedWord;
using weyl::RootVector;

std::vector<Rational> cherednik_eigenvalues(const Params& params,
                                            const Composition& mu) {
    const int n = static_cast<int>(mu.size());
    const auto [mu_plus, word] = weyl::sort_to_partition(mu);
    RootVector shift = params.family == Family::A
                           ? weyl::delta(n)
                           : weyl::rho_kB(n, params.a, params.b);
    shift = weyl::apply_word(word, std::move(shift));
    std::vector<Rational> eig(n);
    const Rational scale = params.family == Family::A ? params.a : Rational(1);
    for (int j = 0; j < n; ++j) eig[j] = mu[j] + scale * shift[j];
    return eig;
}

Rational top_coeff_partition(const Params& params,
                             const Composition& mu_plus) {
    if (!weyl::is_partition(mu_plus))
        throw std::invalid_argument("top_coeff_partition expects a partition");
    const int n = static_cast<int>(mu_plus.size());
    const Rational g = params.rho_coupling();
    Rational c = 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            // alpha = eps_i - eps_j; <alpha_vee, mu> = mu_i - mu_j,
            // <alpha_vee, rho> = j - i.
            const int m = mu_plus[i - 1] - mu_plus[j - 1];
            for (int l = 1; l <= m; ++l) c *= l + g * (j - i);
        }
    }
    return c;
}

namespace {

// <alpha_j_vee, mu + g * rho(mu)> for the simple root alpha_j.
Rational simple_pairing(const Params& params, const Composition& mu, int j) {
    const int n = static_cast<int>(mu.size());
    const auto [mu_plus, word] = weyl::sort_to_partition(mu);
    RootVector rho_mu = weyl::apply_word(word, weyl::rho(n));
    const Rational g = params.rho_coupling();
    return Rational(mu[j - 1] - mu[j]) +
           g * (rho_mu[j - 1] - rho_mu[j]);
}

// Parity factor: a for family A, a(1 + (-1)^d) for family B.
Rational parity_factor(const Params& params, int d) {
    if (params.family == Family::A) return params.a;
    return d % 2 == 0 ? Rational(2 * params.a) : Rational(0);
}

}  // namespace

Rational top_coeff_word(const Params& params, const Composition& mu) {
    const int n = static_cast<int>(mu.size());
    const auto [mu_plus, word] = weyl::sort_to_partition(mu);
    const auto roots = weyl::inversion_set(word);
    const auto rho = weyl::rho(n);
    const Rational g = params.rho_coupling();
    Rational c = 1;
    for (const auto& alpha : roots) {
        const auto av = weyl::coroot(alpha);
        const Rational pairing = weyl::inner(av, mu_plus) + g * weyl::inner(av, rho);
        if (pairing == 0)
            throw SingularParameter("vanishing pairing <alpha_vee, mu+ + " +
                                    to_string(g) + " rho>");
        Rational f = params.a;
        if (params.family == Family::B) {
            // parity of <alpha_vee, mu> (same as of <alpha_vee, mu_plus>)
            const Rational m = weyl::inner(av, mu_plus);
            long mi = m.get_num().get_si();
            f = (mi % 2 == 0) ? Rational(2 * params.a) : Rational(0);
        }
        c *= (pairing * pairing - f * f) / pairing;
    }
    return c;
}

std::pair<Rational, Rational> k_action_expand(const Params& params,
                                              const Composition& mu, int j) {
    const int n = static_cast<int>(mu.size());
    if (j < 1 || j >= n) throw std::out_of_range("index out of range");
    const int d = mu[j - 1] - mu[j];
    if (d == 0) return {Rational(1), Rational(0)};
    const Rational pairing = simple_pairing(params, mu, j);
    if (pairing == 0)
        throw SingularParameter(
            "vanishing pairing <alpha_j_vee, mu + g rho(mu)>");
    const Rational f = parity_factor(params, d);
    if (d < 0) return {f / pairing, Rational(1)};
    return {f / pairing, Rational(1) - f * f / (pairing * pairing)};
}

Rational braid_action_coeff(const Params& params, const Composition& mu,
                            int j) {
    const int d = mu[j - 1] - mu[j];
    if (d == 0) return 0;
    const Rational pairing = simple_pairing(params, mu, j);
    if (pairing == 0)
        throw SingularParameter(
            "vanishing pairing <alpha_j_vee, mu + g rho(mu)>");
    if (d < 0) return pairing;
    const Rational f = parity_factor(params, d);
    return (pairing * pairing - f * f) / pairing;
}

bool sector_admissible(Family family, int sign, const Composition& mu_plus) {
    if (!weyl::is_partition(mu_plus)) return false;
    const int n = static_cast<int>(mu_plus.size());
    if (family == Family::A) {
        if (sign > 0) return true;
        for (int i = 0; i + 1 < n; ++i)
            if (mu_plus[i] <= mu_plus[i + 1]) return false;
        return true;
    }
    // Family B: all entries of equal parity; antisymmetric needs gaps >= 2.
    for (int i = 0; i + 1 < n; ++i)
        if ((mu_plus[i] - mu_plus[i + 1]) % 2 != 0) return false;
    if (sign > 0) return true;
    for (int i = 0; i + 1 < n; ++i)
        if (mu_plus[i] - mu_plus[i + 1] < 2) return false;
    return true;
}

void require_sector(Family family, int sign, const Composition& mu_plus) {
    if (sector_admissible(family, sign, mu_plus)) return;
    std::string msg = "label outside the admissible sublattice for ";
    msg += family_letter(family);
    msg += sign > 0 ? "+ (symmetric)" : "- (antisymmetric)";
    msg += ": A+ any partition, A- strictly decreasing, "
           "B+ all-even or all-odd, B- all-even or all-odd with gaps >= 2";
    throw InvalidSector(msg);
}

Rational sym_coeff(const Params& params, const Composition& mu_plus,
                   const Composition& mu, int sign) {
    require_sector(params.family, sign, mu_plus);
    const int n = static_cast<int>(mu.size());
    {
        Composition sorted = mu;
        std::sort(sorted.begin(), sorted.end(), std::greater<int>());
        if (sorted != mu_plus)
            throw std::invalid_argument("mu not in the orbit of mu_plus");
    }
    const auto word = weyl::sort_to_partition(mu).second;
    const auto roots = weyl::inversion_set(word);
    const auto rho = weyl::rho(n);
    const Rational g = params.rho_coupling();
    const Rational s(sign);
    Rational b = 1;
    for (const auto& alpha : roots) {
        const auto av = weyl::coroot(alpha);
        const Rational pairing =
            weyl::inner(av, mu_plus) + g * weyl::inner(av, rho);
        if (pairing == 0)
            throw SingularParameter(
                "vanishing pairing <alpha_vee, mu+ + g rho>");
        b *= s * (pairing - s * g) / pairing;
    }
    return b;
}

const Poly& Builder::cached(const Composition& mu) {
    if (auto it = cache_.find(mu); it != cache_.end()) return it->second;
    const int n = static_cast<int>(mu.size());
    auto [mu_plus, word] = weyl::sort_to_partition(mu);
    if (!cache_.count(mu_plus)) {
        Poly h = dunkl::raising_A_mu_dagger(params_, mu_plus,
                                            Poly::constant(n, 1));
        // Each braid factor inside the raising operators flips the sign of
        // the leading coefficient, so the raised polynomial is
        // (-1)^K c_{mu+} x^{mu+} + ... with K braid applications in total.
        long braids = 0;
        for (int j = 1; j <= n; ++j) {
            const int reps = mu_plus[j - 1] - (j < n ? mu_plus[j] : 0);
            braids += static_cast<long>(reps) * j * (n - j);
        }
        Rational c = top_coeff_partition(params_, mu_plus);
        if (braids % 2 != 0) c = -c;
        h *= Rational(1) / c;
        cache_.emplace(mu_plus, std::move(h));
    }
    // Sweep the orbit chain mu_plus = mu^(0) -> ... -> mu, one braid step
    // per letter; every intermediate composition gets cached.
    Composition nu = mu_plus;
    for (int j : word.letters) {
        const Poly& h_nu = cache_.at(nu);
        Composition next = weyl::apply_transposition(nu, j);
        if (!cache_.count(next)) {
            const Rational coef = braid_action_coeff(params_, nu, j);
            if (coef == 0)
                throw SingularParameter("braid step coefficient vanished");
            Poly h = dunkl::braid_S(params_, j, h_nu);
            h *= Rational(1) / coef;
            cache_.emplace(next, std::move(h));
        }
        nu = std::move(next);
    }
    return cache_.at(mu);
}

LabeledPoly Builder::nonsym(const Composition& mu) {
    return LabeledPoly{cached(mu), mu, params_,
                       cherednik_eigenvalues(params_, mu)};
}

SymLabeledPoly Builder::sym(const Composition& mu_plus, int sign) {
    require_sector(params_.family, sign, mu_plus);
    const int n = static_cast<int>(mu_plus.size());
    Poly h(n);
    for (const auto& [mu, word] : weyl::weyl_orbit(mu_plus))
        h += sym_coeff(params_, mu_plus, mu, sign) * cached(mu);
    return SymLabeledPoly{std::move(h), mu_plus, params_, sign};
}

LabeledPoly nonsym_poly(const Params& params, const Composition& mu) {
    Builder b(params);
    return b.nonsym(mu);
}

SymLabeledPoly sym_poly(const Params& params, const Composition& mu_plus,
                        int sign) {
    Builder b(params);
    return b.sym(mu_plus, sign);
}

Poly vandermonde(int N) {
    Poly p = Poly::constant(N, 1);
    for (int i = 1; i <= N; ++i) {
        for (int j = i + 1; j <= N; ++j) {
            Poly::Exponents ei(N, 0), ej(N, 0);
            ei[i - 1] = 1;
            ej[j - 1] = 1;
            p = p * (Poly::monomial(ei) - Poly::monomial(ej));
        }
    }
    return p;
}

Poly vandermonde_squares(int N) {
    Poly p = Poly::constant(N, 1);
    for (int i = 1; i <= N; ++i) {
        for (int j = i + 1; j <= N; ++j) {
            Poly::Exponents ei(N, 0), ej(N, 0);
            ei[i - 1] = 2;
            ej[j - 1] = 2;
            p = p * (Poly::monomial(ei) - Poly::monomial(ej));
        }
    }
    return p;
}

Poly variable_product(int N) {
    return Poly::monomial(Poly::Exponents(N, 1));
}

std::vector<ShiftCheck> parameter_shift_check(const Params& params,
                                              const Composition& mu_plus) {
    const int n = static_cast<int>(mu_plus.size());
    std::vector<ShiftCheck> out;
    auto add = [&](std::string name, const Poly& lhs, const Poly& rhs) {
        Poly diff = lhs - rhs;
        out.push_back({std::move(name), diff.is_zero(), std::move(diff)});
    };
    auto shifted = [&](const Rational& da, const Rational& db) {
        return Params(params.family, params.a + da, params.b + db,
                      params.omega);
    };
    if (params.family == Family::A) {
        require_sector(Family::A, +1, mu_plus);
        Composition shifted_label = mu_plus;
        for (int i = 0; i < n; ++i) shifted_label[i] += n - 1 - i;
        add("Delta * H+(a+1) = H-_{mu+delta}(a)",
            vandermonde(n) * sym_poly(shifted(1, 0), mu_plus, +1).poly,
            sym_poly(params, shifted_label, -1).poly);
        return out;
    }
    // Family B: mu in 2P_+.
    if (!sector_admissible(Family::B, +1, mu_plus) || mu_plus[0] % 2 != 0)
        throw InvalidSector("B-type shift identities require mu in 2P_+");
    Composition mu_2delta = mu_plus, mu_1 = mu_plus, mu_2delta_1 = mu_plus;
    for (int i = 0; i < n; ++i) {
        mu_2delta[i] += 2 * (n - 1 - i);
        mu_1[i] += 1;
        mu_2delta_1[i] += 2 * (n - 1 - i) + 1;
    }
    const Poly d1 = vandermonde_squares(n);
    const Poly d2 = variable_product(n);
    const Poly chain_lhs =
        d1 * d2 * sym_poly(shifted(1, 1), mu_plus, +1).poly;
    add("Delta1*Delta2*H+(a+1,b+1) = Delta2*H-_{mu+2delta}(a,b+1)",
        chain_lhs, d2 * sym_poly(shifted(0, 1), mu_2delta, -1).poly);
    add("Delta1*Delta2*H+(a+1,b+1) = Delta1*H+_{mu+1}(a+1,b)",
        chain_lhs, d1 * sym_poly(shifted(1, 0), mu_1, +1).poly);
    add("Delta1*Delta2*H+(a+1,b+1) = H-_{mu+2delta+1}(a,b)",
        chain_lhs, sym_poly(params, mu_2delta_1, -1).poly);
    return out;
}

nlohmann::json LabeledPoly::to_json() const {
    nlohmann::json j = poly.to_json();
    j["label"] = label;
    j["family"] = std::string(1, family_letter(params.family));
    j["params"] = {{"a", to_string(params.a)},
                   {"b", to_string(params.b)},
                   {"omega", to_string(params.omega)}};
    nlohmann::json eig = nlohmann::json::array();
    for (const auto& e : eigenvalues) eig.push_back(to_string(e));
    j["eigenvalues"] = std::move(eig);
    return j;
}

nlohmann::json SymLabeledPoly::to_json() const {
    nlohmann::json j = poly.to_json();
    j["label"] = label;
    j["family"] = std::string(1, family_letter(params.family));
    j["params"] = {{"a", to_string(params.a)},
                   {"b", to_string(params.b)},
                   {"omega", to_string(params.omega)}};
    j["sign"] = sign > 0 ? "+" : "-";
    return j;
}

}  // namespace calogero::construct
