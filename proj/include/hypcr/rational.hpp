#pragma once

#include <compare>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace hypcr {

// Exact rational arithmetic on 64-bit integers. Every value is kept in
// lowest terms with a positive denominator, so equality is structural and
// map keys behave. Nothing in this library ever rounds: ages, exponents and
// polynomial supports are all small fractions with denominators bounded by
// the group orders involved, far below any overflow concern.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(long long n) : num_(n) {}
    constexpr Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    constexpr long long num() const { return num_; }
    constexpr long long den() const { return den_; }

    constexpr bool is_zero() const { return num_ == 0; }
    constexpr bool is_integer() const { return den_ == 1; }

    // Largest integer <= *this (rounds toward minus infinity, not zero).
    constexpr long long floor() const {
        if (num_ >= 0) return num_ / den_;
        return -((-num_ + den_ - 1) / den_);
    }

    constexpr Rational operator-() const { return Rational(-num_, den_); }

    constexpr Rational operator+(const Rational& o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    constexpr Rational operator-(const Rational& o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    constexpr Rational operator*(const Rational& o) const {
        return Rational(num_ * o.num_, den_ * o.den_);
    }
    constexpr Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(num_ * o.den_, den_ * o.num_);
    }

    constexpr Rational& operator+=(const Rational& o) { return *this = *this + o; }
    constexpr Rational& operator-=(const Rational& o) { return *this = *this - o; }
    constexpr Rational& operator*=(const Rational& o) { return *this = *this * o; }

    constexpr bool operator==(const Rational& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    constexpr std::strong_ordering operator<=>(const Rational& o) const {
        return num_ * o.den_ <=> o.num_ * den_;
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    long long num_ = 0;
    long long den_ = 1;

    constexpr void normalize() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }
};

// Fractional part in [0, 1): x - floor(x). frac(-1/3) = 2/3.
inline Rational frac(const Rational& x) { return x - Rational(x.floor()); }

inline std::ostream& operator<<(std::ostream& os, const Rational& x) {
    return os << x.str();
}

}  // namespace hypcr
