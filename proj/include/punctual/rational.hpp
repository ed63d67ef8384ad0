#ifndef PUNCTUAL_RATIONAL_HPP
#define PUNCTUAL_RATIONAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "punctual/bigint.hpp"

namespace punctual {

// Exact rational number, normalised with positive denominator and coprime
// numerator/denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {} // NOLINT
    Rational(long long n) : num_(n), den_(1) {}         // NOLINT
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalise(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    std::string to_string() const {
        return den_.is_one() ? num_.to_string() : num_.to_string() + "/" + den_.to_string();
    }

private:
    BigInt num_, den_;

    void normalise() {
        if (den_.is_zero()) throw std::invalid_argument("Rational: zero denominator");
        if (den_.sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = gcd(num_, den_);
        if (!g.is_zero() && !g.is_one()) {
            num_ = BigInt::div_exact(num_, g);
            den_ = BigInt::div_exact(den_, g);
        }
    }
};

// Dense univariate polynomial with exact rational coefficients (ascending).
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> ascending) : c_(std::move(ascending)) {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Rational coeff(long i) const {
        return (i < 0 || i > degree()) ? Rational() : c_[static_cast<std::size_t>(i)];
    }

    Rational eval(const BigInt& x) const {
        Rational acc;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * Rational(x) + c_[i];
        return acc;
    }

private:
    std::vector<Rational> c_;
};

} // namespace punctual

#endif
