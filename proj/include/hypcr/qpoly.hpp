#pragma once

#include "hypcr/rational.hpp"

#include <map>
#include <ostream>
#include <stdexcept>
#include <string>

namespace hypcr {

// Polynomial in q with nonnegative rational exponents and positive integer
// coefficients, stored sparsely in exponent order. Coefficients count
// dimensions, so there is no subtraction anywhere in the interface; the
// zero polynomial is the empty sum.
class QPolynomial {
public:
    using TermMap = std::map<Rational, long long>;

    QPolynomial() = default;

    static QPolynomial zero() { return {}; }
    static QPolynomial one() { return monomial(Rational(0)); }

    static QPolynomial monomial(const Rational& exp, long long coeff = 1) {
        if (exp < Rational(0)) throw std::domain_error("QPolynomial: negative exponent");
        if (coeff < 0) throw std::domain_error("QPolynomial: negative coefficient");
        QPolynomial p;
        if (coeff > 0) p.terms_[exp] = coeff;
        return p;
    }

    QPolynomial& operator+=(const QPolynomial& o) {
        for (const auto& [e, c] : o.terms_) terms_[e] += c;
        return *this;
    }
    QPolynomial operator+(const QPolynomial& o) const {
        QPolynomial r = *this;
        r += o;
        return r;
    }
    QPolynomial operator*(const QPolynomial& o) const {
        QPolynomial r;
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) r.terms_[e1 + e2] += c1 * c2;
        return r;
    }

    // q^exp * (*this).
    QPolynomial shifted(const Rational& exp) const {
        if (exp < Rational(0)) throw std::domain_error("QPolynomial: negative shift");
        QPolynomial r;
        for (const auto& [e, c] : terms_) r.terms_[e + exp] = c;
        return r;
    }

    QPolynomial scaled(long long m) const {
        if (m < 0) throw std::domain_error("QPolynomial: negative scale");
        if (m == 0) return {};
        QPolynomial r = *this;
        for (auto& [e, c] : r.terms_) c *= m;
        return r;
    }

    // Evaluation at q = 1: the total dimension carried by the polynomial.
    long long total() const {
        long long t = 0;
        for (const auto& [e, c] : terms_) t += c;
        return t;
    }

    long long coeff(const Rational& exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? 0 : it->second;
    }

    long long constant_term() const { return coeff(Rational(0)); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    bool operator==(const QPolynomial&) const = default;

    // Canonical rendering, ascending exponents: coefficient always printed,
    // "c" for exponent zero, "c*q^n" for integers, "c*q^(a/b)" otherwise.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += std::to_string(c);
            if (e.is_zero()) continue;
            if (e.is_integer())
                out += "*q^" + std::to_string(e.num());
            else
                out += "*q^(" + e.str() + ")";
        }
        return out;
    }

private:
    TermMap terms_;
};

inline std::ostream& operator<<(std::ostream& os, const QPolynomial& p) {
    return os << p.str();
}

// Poincare polynomial of M_{0,k+2}/S_k, the configurations of k unordered
// points on P^1 with two further points fixed pointwise: 1 + q + ... + q^(k-1).
inline QPolynomial p0_two_fixed(long long k) {
    if (k < 1) throw std::invalid_argument("p0_two_fixed: k must be positive");
    QPolynomial p;
    for (long long i = 0; i < k; ++i) p += QPolynomial::monomial(Rational(i));
    return p;
}

// Poincare polynomial of M_{0,k+2}/(S_k x S_2), where the two fixed points
// may also be exchanged: 1 for k = 1, otherwise
// sum_{i=0}^{floor((k-2)/4)} (q^i + q^(i+1)).
inline QPolynomial p0_swap(long long k) {
    if (k < 1) throw std::invalid_argument("p0_swap: k must be positive");
    if (k == 1) return QPolynomial::one();
    QPolynomial p;
    for (long long i = 0; i <= (k - 2) / 4; ++i) {
        p += QPolynomial::monomial(Rational(i));
        p += QPolynomial::monomial(Rational(i + 1));
    }
    return p;
}

}  // namespace hypcr
