#include "calogero/norms.hpp"

#include <cstdlib>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>

#include "calogero/construct.hpp"
#include "calogero/errors.hpp"

namespace calogero::norms {

namespace {

Float to_float(const Rational& q) { return Float(q.get_mpq_t()); }

bool even_pairing(const Rational& p) {
    // p is an integer pairing <alpha_vee, mu>; parity decides the B-family
    // reflection factor.
    return mpz_even_p(p.get_num().get_mpz_t()) != 0;
}

// mu_plus + g * rho as a root vector.
weyl::RootVector shifted_weight(const weyl::Composition& mu_plus,
                                const Rational& g) {
    const int N = static_cast<int>(mu_plus.size());
    weyl::RootVector v = weyl::rho(N);
    for (int j = 0; j < N; ++j) v[j] = mu_plus[j] + g * v[j];
    return v;
}

// Relative factor of <h_mu, h_mu> over <h_{mu+}, h_{mu+}>: a product of
// P^2 / (P^2 - f^2) over the inversion set of w_mu.
Rational orbit_factor(const Params& params, const weyl::Composition& mu) {
    auto [mu_plus, w] = weyl::sort_to_partition(mu);
    const weyl::RootVector shifted =
        shifted_weight(mu_plus, params.rho_coupling());
    Rational factor = 1;
    for (const auto& beta : weyl::inversion_set(w)) {
        const weyl::RootVector bv = weyl::coroot(beta);
        const Rational P = weyl::inner(bv, shifted);
        Rational f = params.a;
        if (params.family == Family::B)
            f = even_pairing(weyl::inner(bv, mu_plus)) ? Rational(2 * params.a)
                                                       : Rational(0);
        const Rational denom = P * P - f * f;
        if (denom == 0)
            throw SingularParameter("vanishing pairing in orbit norm factor");
        factor *= P * P / denom;
    }
    return factor;
}

long to_long(const Rational& q) {
    if (!is_integer(q)) throw std::logic_error("expected integer pairing");
    return q.get_num().get_si();
}

}  // namespace

Rational gamma_ratio(const Rational& x0, long n) {
    Rational r = 1;
    if (n >= 0) {
        for (long k = 0; k < n; ++k) {
            const Rational f = x0 + k;
            if (f == 0)
                throw PoleEncountered("gamma ratio pole at offset " +
                                      std::to_string(k));
            r *= f;
        }
    } else {
        for (long k = 1; k <= -n; ++k) {
            const Rational f = x0 - k;
            if (f == 0)
                throw PoleEncountered("gamma ratio pole at offset -" +
                                      std::to_string(k));
            r /= f;
        }
    }
    return r;
}

Rational norm_ratio_nonsym(const Params& params, const Composition& mu) {
    const int N = static_cast<int>(mu.size());
    const auto mu_plus = weyl::sort_to_partition(mu).first;
    const Rational& a = params.a;

    Rational ratio = orbit_factor(params, mu);
    if (params.family == Family::A) {
        ratio *= pow_rational(Rational(1) / (2 * params.omega),
                              weyl::degree(mu));
        for (int i = 1; i <= N; ++i)
            ratio *= gamma_ratio(a * (N - i) + 1, mu_plus[i - 1]);
        for (int i = 1; i <= N; ++i)
            for (int j = i + 1; j <= N; ++j) {
                const Rational ar = a * (j - i);
                const long m = mu_plus[i - 1] - mu_plus[j - 1];
                ratio *= gamma_ratio(ar + 1 + a, m) *
                         gamma_ratio(ar + 1 - a, m) /
                         (gamma_ratio(ar + 1, m) * gamma_ratio(ar + 1, m));
            }
    } else {
        ratio *= pow_rational(Rational(1) / params.omega, weyl::degree(mu));
        for (int i = 1; i <= N; ++i) {
            const long mi = mu_plus[i - 1];
            ratio *= gamma_ratio(a * (N - i) + params.b + Rational(1, 2),
                                 (mi + 1) / 2);
            ratio *= gamma_ratio(a * (N - i) + 1, mi / 2);
        }
        for (int i = 1; i <= N; ++i)
            for (int j = i + 1; j <= N; ++j) {
                const Rational ar = a * (j - i);
                const long m = (mu_plus[i - 1] - mu_plus[j - 1]) / 2;
                ratio *= gamma_ratio(ar + 1 + a, m) *
                         gamma_ratio(ar + 1 - a, m) /
                         (gamma_ratio(ar + 1, m) * gamma_ratio(ar + 1, m));
            }
    }
    return ratio;
}

Rational norm_ratio_sym(const Params& params, const Composition& mu_plus,
                        int sign) {
    const int N = static_cast<int>(mu_plus.size());
    if (!weyl::is_partition(mu_plus))
        throw std::invalid_argument("norm_ratio_sym expects a partition");
    construct::require_sector(params.family, sign, mu_plus);
    const Rational& a = params.a;

    Rational ratio;
    if (params.family == Family::A) {
        ratio = pow_rational(Rational(1) / (2 * params.omega),
                             weyl::degree(mu_plus));
        for (int i = 1; i <= N; ++i)
            ratio *= gamma_ratio(a * (N - i) + 1, mu_plus[i - 1]);
    } else {
        ratio = pow_rational(Rational(1) / params.omega,
                             weyl::degree(mu_plus));
        for (int i = 1; i <= N; ++i) {
            const long mi = mu_plus[i - 1];
            ratio *= gamma_ratio(a * (N - i) + params.b + Rational(1, 2),
                                 (mi + 1) / 2);
            ratio *= gamma_ratio(a * (N - i) + 1, mi / 2);
        }
    }
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) {
            const Rational ar = a * (j - i);
            long m = mu_plus[i - 1] - mu_plus[j - 1];
            if (params.family == Family::B) m /= 2;
            if (sign > 0)
                ratio *= gamma_ratio(ar + 1 - a, m) * gamma_ratio(ar + a, m) /
                         (gamma_ratio(ar + 1, m) * gamma_ratio(ar, m));
            else
                ratio *= gamma_ratio(ar + a, m + 1) *
                         gamma_ratio(ar + 1 - a, m - 1) /
                         (gamma_ratio(ar + 1, m) * gamma_ratio(ar, m));
        }
    return ratio;
}

Float base_norm_float(const Params& params, int N, unsigned digits) {
    const auto guard = Float::default_precision();
    Float::default_precision(digits);
    const Float pi = boost::math::constants::pi<Float>();
    const Float ga1 = tgamma(to_float(params.a) + 1);
    Float result;
    if (params.family == Family::A) {
        const Rational expo =
            Rational(N) * (N * params.a + 1 - params.a) / 2;
        result = pow(2 * pi, Float(N) / 2) /
                 pow(to_float(2 * params.omega), to_float(expo));
        for (int j = 1; j <= N; ++j)
            result *= tgamma(to_float(j * params.a) + 1) / ga1;
    } else {
        const Rational expo = Rational(N) * (N - 1) * params.a +
                              N * (params.b + Rational(1, 2));
        result = pow(to_float(params.omega), -to_float(expo));
        for (int j = 1; j <= N; ++j) {
            result *= tgamma(to_float(j * params.a) + 1) / ga1;
            result *= tgamma(to_float((j - 1) * params.a + params.b) +
                             Float(0.5));
        }
    }
    Float::default_precision(guard);
    return result;
}

std::pair<Rational, Rational> poincare_identity_check(int N,
                                                      const Composition& mu,
                                                      const Params& params,
                                                      int sign) {
    if (static_cast<int>(mu.size()) != N)
        throw std::invalid_argument("partition of wrong length");
    if (!weyl::is_partition(mu))
        throw std::invalid_argument("expected a partition");
    const Rational s = sign > 0 ? 1 : -1;
    const Rational& a = params.a;
    const weyl::RootVector shifted = shifted_weight(mu, a);

    Rational lhs = 0;
    for (const auto& [nu, w] : weyl::weyl_orbit(mu)) {
        Rational term = 1;
        for (const auto& beta : weyl::inversion_set(w)) {
            const Rational P = weyl::inner(weyl::coroot(beta), shifted);
            if (P + s * a == 0)
                throw PoleEncountered("pairing equals -" +
                                      to_string(s * a));
            term *= (P - s * a) / (P + s * a);
        }
        lhs += term;
    }

    Rational rhs = 1;
    for (int i = 1; i <= N; ++i) rhs *= i;
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) {
            const Rational P = shifted[i - 1] - shifted[j - 1];
            if (P + s * a == 0)
                throw PoleEncountered("pairing equals -" + to_string(s * a));
            rhs *= P / (P + s * a);
        }
    return {lhs, rhs};
}

std::pair<Rational, Rational> macdonald_identity_check(int N,
                                                       const Composition& mu,
                                                       const Params& params,
                                                       const Rational& t,
                                                       const Rational& q) {
    if (static_cast<int>(mu.size()) != N)
        throw std::invalid_argument("partition of wrong length");
    if (!weyl::is_partition(mu))
        throw std::invalid_argument("expected a partition");
    if (!is_integer(params.a))
        throw IrrationalExponent(
            "q-deformed identity needs an integer coupling a");
    const long ai = params.a.get_num().get_si();

    // q^{<alpha_vee, mu + a rho>}; the exponent <alpha_vee, a rho> = a(j - i)
    // is an integer, so the power is an exact rational.
    auto q_power = [&](const weyl::RootVector& beta_vee,
                       const Composition& weight) {
        Rational e = weyl::inner(beta_vee, weight);
        weyl::RootVector r = weyl::rho(N);
        e += ai * weyl::inner(beta_vee, r);
        return pow_rational(q, to_long(e));
    };

    Rational lhs = 0;
    for (const auto& [nu, w] : weyl::weyl_orbit(mu)) {
        Rational term = 1;
        for (const auto& beta : weyl::inversion_set(w)) {
            const Rational qe = q_power(weyl::coroot(beta), mu);
            const Rational denom = 1 - t * qe;
            if (denom == 0)
                throw PoleEncountered("1 - t q^e vanishes");
            term *= (t - qe) / denom;
        }
        lhs += term;
    }

    const std::vector<long> wt = weyl::poincare_polynomial(N);
    Rational rhs = 0;
    for (std::size_t k = 0; k < wt.size(); ++k)
        rhs += wt[k] * pow_rational(t, static_cast<long>(k));
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) {
            weyl::RootVector beta(N, 0);
            beta[i - 1] = 1;
            beta[j - 1] = -1;
            const Rational qe = q_power(beta, mu);
            const Rational denom = 1 - t * qe;
            if (denom == 0)
                throw PoleEncountered("1 - t q^e vanishes");
            rhs *= (1 - qe) / denom;
        }
    return {lhs, rhs};
}

}  // namespace calogero::norms
