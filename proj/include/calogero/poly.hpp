#ifndef CALOGERO_POLY_HPP
#define CALOGERO_POLY_HPP

#include <map>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "calogero/rational.hpp"

namespace calogero {

// Sparse multivariate polynomial over exact rationals.  Terms are keyed by
// exponent vectors of fixed length N; zero coefficients are never stored.
class Poly {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Rational>;

    explicit Poly(int nvars) : n_(nvars) {}

    static Poly constant(int nvars, const Rational& c);
    static Poly monomial(const Exponents& exp, const Rational& coeff = 1);

    int nvars() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // -1 for the zero polynomial
    Rational coeff(const Exponents& exp) const;

    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Rational& c);
    Poly operator-() const;
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    void add_term(const Exponents& exp, const Rational& coeff);

    // K_{jk}: exchanges variables j and k (1-based).  Involution.
    Poly exchange(int j, int k) const;
    // t_j: x_j -> -x_j.  Involution.
    Poly reflect(int j) const;
    // ((1 - K_{jk}) p) / (x_j - x_k), exact by per-monomial telescoping.
    Poly diffquot_minus(int j, int k) const;
    // ((1 - t_j t_k K_{jk}) p) / (x_j + x_k), exact.
    Poly diffquot_plus(int j, int k) const;
    // ((1 - t_j) p) / x_j: odd part in x_j divided by x_j.
    Poly diffquot_reflect(int j) const;
    // d/dx_j.
    Poly partial(int j) const;

    // Evaluation at a rational point (used by shift-identity checks).
    Rational eval(const std::vector<Rational>& x) const;

    // Canonical form: {"N": n, "terms": [{"exp": [...], "num": "...",
    // "den": "..."}]} with terms sorted lexicographically by exponent.
    nlohmann::json to_json() const;
    static Poly from_json(const nlohmann::json& j);

    std::string pretty() const;

private:
    void check_var(int j) const;

    int n_;
    TermMap terms_;
};

}  // namespace calogero

#endif
