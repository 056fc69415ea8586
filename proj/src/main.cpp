// Command-line front end: construction, norm tables, verification,
// quadrature Gram matrices, and orbit inspection.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "calogero/construct.hpp"
#include "calogero/errors.hpp"
#include "calogero/norms.hpp"
#include "calogero/oracle.hpp"

using nlohmann::json;
using namespace calogero;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFail = 2;
constexpr int kExitSingular = 3;

struct RunConfig {
    std::string family = "A";
    int N = 2;
    std::string a = "1", b = "0", omega = "1";
    std::string mu;
    std::string sym;  // "", "+", "-"
    int degree = 3;
    int cutoff = -1;
    unsigned precision = 40;
    std::string format = "pretty";
    std::string output;
};

unsigned env_precision() {
    if (const char* env = std::getenv("CALOGERO_PRECISION")) {
        const long v = std::atol(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return 40;
}

Params make_params(const RunConfig& cfg) {
    const Family fam = cfg.family == "B" ? Family::B : Family::A;
    return Params(fam, parse_rational(cfg.a), parse_rational(cfg.b),
                  parse_rational(cfg.omega));
}

weyl::Composition parse_mu(const std::string& s, int N) {
    weyl::Composition mu;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        const Rational r = parse_rational(part);
        if (!is_integer(r) || r < 0)
            throw std::invalid_argument("mu entries must be non-negative "
                                        "integers");
        mu.push_back(static_cast<int>(r.get_num().get_si()));
    }
    if (static_cast<int>(mu.size()) != N)
        throw std::invalid_argument("mu must have exactly N entries");
    return mu;
}

std::string mu_string(const weyl::Composition& mu) {
    std::string s;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(mu[i]);
    }
    return s;
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.output.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(cfg.output);
    if (!out) throw std::invalid_argument("cannot open " + cfg.output);
    out << text << "\n";
}

std::vector<weyl::Composition> compositions_up_to(int N, int degree) {
    std::vector<weyl::Composition> out;
    weyl::Composition cur(N, 0);
    // odometer over exponents bounded by total degree
    while (true) {
        if (weyl::degree(cur) <= degree) out.push_back(cur);
        int k = 0;
        while (k < N && ++cur[k] > degree) cur[k++] = 0;
        if (k == N) break;
    }
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) {
                  const int dx = weyl::degree(x), dy = weyl::degree(y);
                  return dx != dy ? dx < dy : x < y;
              });
    return out;
}

int cmd_expand(const RunConfig& cfg) {
    const Params params = make_params(cfg);
    const weyl::Composition mu = parse_mu(cfg.mu, cfg.N);
    json j;
    std::string prettied;
    if (cfg.sym.empty()) {
        const auto lp = construct::nonsym_poly(params, mu);
        j = lp.to_json();
        const auto mu_plus = weyl::sort_to_partition(mu).first;
        j["c_mu_plus"] =
            to_string(construct::top_coeff_partition(params, mu_plus));
        j["c_w_mu"] = to_string(construct::top_coeff_word(params, mu));
        prettied = lp.poly.pretty();
    } else {
        const int sign = cfg.sym == "-" ? -1 : +1;
        const auto sp = construct::sym_poly(params, mu, sign);
        j = sp.to_json();
        json coeffs = json::object();
        for (const auto& [nu, w] : weyl::weyl_orbit(mu))
            coeffs[mu_string(nu)] =
                to_string(construct::sym_coeff(params, mu, nu, sign));
        j["sym_coeffs"] = coeffs;
        prettied = sp.poly.pretty();
    }
    emit(cfg, cfg.format == "pretty" ? prettied : j.dump(2));
    return kExitOk;
}

int cmd_norms(const RunConfig& cfg) {
    const Params params = make_params(cfg);
    const int sign = cfg.sym.empty() ? 0 : (cfg.sym == "-" ? -1 : +1);
    struct Row {
        weyl::Composition mu;
        Rational ratio;
    };
    std::vector<Row> rows;
    for (const auto& mu : compositions_up_to(cfg.N, cfg.degree)) {
        if (sign == 0) {
            rows.push_back({mu, norms::norm_ratio_nonsym(params, mu)});
        } else {
            if (!weyl::is_partition(mu) ||
                !construct::sector_admissible(params.family, sign, mu))
                continue;
            rows.push_back({mu, norms::norm_ratio_sym(params, mu, sign)});
        }
    }
    if (cfg.format == "csv") {
        std::string out = "family,N,mu,sign,ratio_num,ratio_den";
        for (const auto& r : rows) {
            out += "\n";
            out += family_letter(params.family);
            out += "," + std::to_string(cfg.N) + ",\"" + mu_string(r.mu) +
                   "\"," + (sign == 0 ? "0" : (sign > 0 ? "+" : "-")) + "," +
                   r.ratio.get_num().get_str() + "," +
                   r.ratio.get_den().get_str();
        }
        emit(cfg, out);
    } else {
        json out = json::array();
        const norms::Float base =
            norms::base_norm_float(params, cfg.N, cfg.precision);
        for (const auto& r : rows) {
            json e{{"family", std::string(1, family_letter(params.family))},
                   {"N", cfg.N},
                   {"mu", mu_string(r.mu)},
                   {"sign", sign},
                   {"ratio", to_string(r.ratio)}};
            e["absolute"] =
                (base * norms::Float(r.ratio.get_mpq_t())).str(cfg.precision);
            out.push_back(e);
        }
        emit(cfg, out.dump(2));
    }
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
    const Params params = make_params(cfg);
    const json report = oracle::verify_suite(params, cfg.N, cfg.degree);
    emit(cfg, report.dump(2));
    return oracle::report_all_pass(report) ? kExitOk : kExitVerifyFail;
}

int cmd_gram(const RunConfig& cfg) {
    const Params params = make_params(cfg);
    construct::Builder builder(params);
    std::vector<Poly> polys;
    std::vector<std::string> labels;
    for (const auto& mu : compositions_up_to(cfg.N, cfg.degree)) {
        polys.push_back(builder.nonsym(mu).poly);
        labels.push_back(mu_string(mu));
    }
    const auto G = oracle::quadrature_gram(
        params, polys, cfg.cutoff > 0 ? cfg.cutoff : 0, cfg.precision);
    if (cfg.format == "csv") {
        std::string out;
        for (std::size_t i = 0; i < labels.size(); ++i)
            out += (i ? "," : "") + labels[i];
        for (const auto& row : G.entries) {
            out += "\n";
            for (std::size_t j = 0; j < row.size(); ++j)
                out += (j ? "," : "") + row[j].str(cfg.precision);
        }
        emit(cfg, out);
    } else {
        json out{{"labels", labels},
                 {"nodes", G.node_count},
                 {"precision", G.precision}};
        json m = json::array();
        for (const auto& row : G.entries) {
            json r = json::array();
            for (const auto& v : row) r.push_back(v.str(cfg.precision));
            m.push_back(r);
        }
        out["gram"] = m;
        emit(cfg, out.dump(2));
    }
    return kExitOk;
}

int cmd_orbit(const RunConfig& cfg) {
    const Params params = make_params(cfg);
    const weyl::Composition mu = parse_mu(cfg.mu, cfg.N);
    const auto mu_plus = weyl::sort_to_partition(mu).first;
    json out = json::array();
    for (const auto& [nu, w] : weyl::weyl_orbit(mu_plus)) {
        json e{{"mu", mu_string(nu)}, {"length", w.letters.size()}};
        e["word"] = w.letters;
        json eigs = json::array();
        for (const auto& v : construct::cherednik_eigenvalues(params, nu))
            eigs.push_back(to_string(v));
        e["eigenvalues"] = eigs;
        out.push_back(e);
    }
    emit(cfg, out.dump(2));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact multivariable Hermite/Laguerre polynomial toolkit"};
    app.require_subcommand(1);

    RunConfig cfg;
    cfg.precision = env_precision();

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--family", cfg.family)
            ->check(CLI::IsMember({"A", "B"}));
        sub->add_option("--N", cfg.N)->check(CLI::PositiveNumber);
        sub->add_option("--a", cfg.a);
        sub->add_option("--b", cfg.b);
        sub->add_option("--omega", cfg.omega);
        sub->add_option("--format", cfg.format)
            ->check(CLI::IsMember({"json", "csv", "pretty"}));
        sub->add_option("--output", cfg.output);
        sub->add_option("--precision", cfg.precision);
    };

    CLI::App* expand = app.add_subcommand("expand", "construct a polynomial");
    add_common(expand);
    expand->add_option("--mu", cfg.mu)->required();
    expand->add_option("--sym", cfg.sym)->check(CLI::IsMember({"+", "-"}));

    CLI::App* norms_cmd = app.add_subcommand("norms", "norm-ratio tables");
    add_common(norms_cmd);
    norms_cmd->add_option("--degree", cfg.degree);
    norms_cmd->add_option("--sym", cfg.sym)->check(CLI::IsMember({"+", "-"}));

    CLI::App* verify = app.add_subcommand("verify", "run the check suite");
    add_common(verify);
    verify->add_option("--max-degree", cfg.degree);

    CLI::App* gram = app.add_subcommand("gram", "quadrature Gram matrix");
    add_common(gram);
    gram->add_option("--degree", cfg.degree);
    gram->add_option("--nodes", cfg.cutoff);

    CLI::App* orbit = app.add_subcommand("orbit", "orbit of a label");
    add_common(orbit);
    orbit->add_option("--mu", cfg.mu)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (expand->parsed()) return cmd_expand(cfg);
        if (norms_cmd->parsed()) return cmd_norms(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
        if (gram->parsed()) return cmd_gram(cfg);
        if (orbit->parsed()) return cmd_orbit(cfg);
    } catch (const SingularParameter& ex) {
        std::cerr << "singular parameter: " << ex.what() << "\n";
        return kExitSingular;
    } catch (const PoleEncountered& ex) {
        std::cerr << "singular parameter: " << ex.what() << "\n";
        return kExitSingular;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
