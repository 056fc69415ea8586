#include "calogero/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace calogero {

Poly Poly::constant(int nvars, const Rational& c) {
    Poly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

Poly Poly::monomial(const Exponents& exp, const Rational& coeff) {
    Poly p(static_cast<int>(exp.size()));
    for (int e : exp)
        if (e < 0) throw std::invalid_argument("negative exponent");
    p.add_term(exp, coeff);
    return p;
}

int Poly::degree() const {
    int d = -1;
    for (const auto& [exp, c] : terms_)
        d = std::max(d, std::accumulate(exp.begin(), exp.end(), 0));
    return d;
}

Rational Poly::coeff(const Exponents& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Exponents& exp, const Rational& coeff) {
    if (static_cast<int>(exp.size()) != n_)
        throw std::invalid_argument("exponent vector of wrong length");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exp, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& other) {
    if (n_ != other.n_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [exp, c] : other.terms_) add_term(exp, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    if (n_ != other.n_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [exp, c] : other.terms_) add_term(exp, -c);
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [exp, coeff] : terms_) coeff *= c;
    return *this;
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& [exp, coeff] : p.terms_) coeff = -coeff;
    return p;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("variable count mismatch");
    Poly r(a.n_);
    Poly::Exponents exp(a.n_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.n_; ++i) exp[i] = ea[i] + eb[i];
            r.add_term(exp, ca * cb);
        }
    }
    return r;
}

void Poly::check_var(int j) const {
    if (j < 1 || j > n_) throw std::out_of_range("variable index out of range");
}

Poly Poly::exchange(int j, int k) const {
    check_var(j);
    check_var(k);
    Poly r(n_);
    for (const auto& [exp, c] : terms_) {
        Exponents e = exp;
        std::swap(e[j - 1], e[k - 1]);
        r.add_term(e, c);
    }
    return r;
}

Poly Poly::reflect(int j) const {
    check_var(j);
    Poly r(n_);
    for (const auto& [exp, c] : terms_)
        r.add_term(exp, exp[j - 1] % 2 == 0 ? c : -c);
    return r;
}

Poly Poly::diffquot_minus(int j, int k) const {
    check_var(j);
    check_var(k);
    if (j == k) throw std::invalid_argument("diffquot_minus needs j != k");
    Poly r(n_);
    for (const auto& [exp, c] : terms_) {
        const int m = exp[j - 1], nn = exp[k - 1];
        if (m == nn) continue;
        Exponents e = exp;
        if (m > nn) {
            // (x_j^m x_k^n - x_j^n x_k^m)/(x_j - x_k)
            for (int i = 0; i < m - nn; ++i) {
                e[j - 1] = m - 1 - i;
                e[k - 1] = nn + i;
                r.add_term(e, c);
            }
        } else {
            for (int i = 0; i < nn - m; ++i) {
                e[j - 1] = nn - 1 - i;
                e[k - 1] = m + i;
                r.add_term(e, -c);
            }
        }
    }
    return r;
}

Poly Poly::diffquot_plus(int j, int k) const {
    check_var(j);
    check_var(k);
    if (j == k) throw std::invalid_argument("diffquot_plus needs j != k");
    Poly r(n_);
    for (const auto& [exp, c] : terms_) {
        const int m = exp[j - 1], nn = exp[k - 1];
        if (m == nn) continue;  // numerator vanishes: 1 - (-1)^{2m} = 0
        Exponents e = exp;
        if (m > nn) {
            // x_j^n x_k^n (x_j^d - (-x_k)^d)/(x_j + x_k), d = m - n
            const int d = m - nn;
            Rational s = c;
            for (int i = 0; i < d; ++i) {
                e[j - 1] = nn + d - 1 - i;
                e[k - 1] = nn + i;
                r.add_term(e, s);
                s = -s;
            }
        } else {
            const int d = nn - m;
            Rational s = (d % 2 == 0) ? -c : c;
            for (int i = 0; i < d; ++i) {
                e[j - 1] = m + d - 1 - i;
                e[k - 1] = m + i;
                r.add_term(e, s);
                s = -s;
            }
        }
    }
    return r;
}

Poly Poly::diffquot_reflect(int j) const {
    check_var(j);
    Poly r(n_);
    for (const auto& [exp, c] : terms_) {
        if (exp[j - 1] % 2 == 0) continue;
        Exponents e = exp;
        --e[j - 1];
        r.add_term(e, 2 * c);
    }
    return r;
}

Poly Poly::partial(int j) const {
    check_var(j);
    Poly r(n_);
    for (const auto& [exp, c] : terms_) {
        if (exp[j - 1] == 0) continue;
        Exponents e = exp;
        --e[j - 1];
        r.add_term(e, c * exp[j - 1]);
    }
    return r;
}

Rational Poly::eval(const std::vector<Rational>& x) const {
    if (static_cast<int>(x.size()) != n_)
        throw std::invalid_argument("evaluation point of wrong length");
    Rational sum = 0;
    for (const auto& [exp, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < n_; ++i)
            for (int e = 0; e < exp[i]; ++e) t *= x[i];
        sum += t;
    }
    return sum;
}

nlohmann::json Poly::to_json() const {
    nlohmann::json j;
    j["N"] = n_;
    j["terms"] = nlohmann::json::array();
    for (const auto& [exp, c] : terms_) {  // map iterates lexicographically
        nlohmann::json t;
        t["exp"] = exp;
        t["num"] = c.get_num().get_str();
        t["den"] = c.get_den().get_str();
        j["terms"].push_back(std::move(t));
    }
    return j;
}

Poly Poly::from_json(const nlohmann::json& j) {
    Poly p(j.at("N").get<int>());
    for (const auto& t : j.at("terms")) {
        Exponents exp = t.at("exp").get<Exponents>();
        Rational c(Integer(t.at("num").get<std::string>()),
                   Integer(t.at("den").get<std::string>()));
        c.canonicalize();
        p.add_term(exp, c);
    }
    return p;
}

std::string Poly::pretty() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // highest exponent vectors first reads more naturally
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [exp, c] = *it;
        Rational abs = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool allzero =
            std::all_of(exp.begin(), exp.end(), [](int e) { return e == 0; });
        if (abs != 1 || allzero) {
            out << abs.get_str();
            if (!allzero) out << "*";
        }
        bool firstvar = true;
        for (int i = 0; i < n_; ++i) {
            if (exp[i] == 0) continue;
            if (!firstvar) out << "*";
            firstvar = false;
            out << "x" << (i + 1);
            if (exp[i] > 1) out << "^" << exp[i];
        }
        first = false;
    }
    return out.str();
}

}  // namespace calogero
