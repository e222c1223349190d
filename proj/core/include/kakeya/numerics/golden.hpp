#pragma once

#include <string>
#include <string_view>

#include "kakeya/numerics/interval.hpp"
#include "kakeya/numerics/rational.hpp"

namespace kakeya {

/// Element a + b*phi of the quadratic field Q(phi), phi = (1 + sqrt 5) / 2.
/// Arithmetic uses phi^2 = phi + 1; signs and comparisons are decided exactly.
class GoldenNumber {
public:
    GoldenNumber() = default;
    GoldenNumber(Rational a, Rational b = Rational(0)) : a_(std::move(a)), b_(std::move(b)) {}  // NOLINT
    GoldenNumber(long a) : a_(a) {}  // NOLINT(google-explicit-constructor)

    static GoldenNumber phi() { return GoldenNumber(Rational(0), Rational(1)); }

    /// Inverse of str(): "p/q", "phi", "-1+phi", "1/2-3/4*phi", "2*phi".
    static GoldenNumber parse(std::string_view text);

    const Rational& rational_part() const { return a_; }
    const Rational& phi_part() const { return b_; }
    bool is_rational() const { return b_.is_zero(); }

    /// Galois conjugate a + b*(1 - phi).
    GoldenNumber conjugate() const { return GoldenNumber(a_ + b_, -b_); }
    /// Field norm a^2 + ab - b^2.
    Rational norm() const { return a_ * a_ + a_ * b_ - b_ * b_; }

    int sign() const;
    GoldenNumber inverse() const;
    GoldenNumber pow(long exponent) const;

    /// Outward-rounded enclosure with roughly `bits` significant bits.
    Interval enclose(unsigned bits) const;

    std::string str() const;

    GoldenNumber& operator+=(const GoldenNumber& o) { a_ += o.a_; b_ += o.b_; return *this; }
    GoldenNumber& operator-=(const GoldenNumber& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    GoldenNumber& operator*=(const GoldenNumber& o);
    GoldenNumber& operator/=(const GoldenNumber& o) { return *this *= o.inverse(); }

    friend GoldenNumber operator+(GoldenNumber x, const GoldenNumber& y) { return x += y; }
    friend GoldenNumber operator-(GoldenNumber x, const GoldenNumber& y) { return x -= y; }
    friend GoldenNumber operator*(GoldenNumber x, const GoldenNumber& y) { return x *= y; }
    friend GoldenNumber operator/(GoldenNumber x, const GoldenNumber& y) { return x /= y; }
    friend GoldenNumber operator-(const GoldenNumber& x) { return GoldenNumber(-x.a_, -x.b_); }

    friend bool operator==(const GoldenNumber& x, const GoldenNumber& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend std::strong_ordering operator<=>(const GoldenNumber& x, const GoldenNumber& y) {
        int s = (x - y).sign();
        return s < 0 ? std::strong_ordering::less
                     : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    Rational a_;
    Rational b_;
};

/// Enclosure of sqrt(5) with about `bits` fractional bits.
Interval sqrt5_enclosure(unsigned bits);

enum class GoldenOrder { Less, Greater };

/// Decides t versus phi*s for positive integers using
/// t > phi*s  <=>  t > s and t^2 > t*s + s^2. Equality is impossible.
GoldenOrder golden_compare_integers(const BigInt& s, const BigInt& t);

std::ostream& operator<<(std::ostream& os, const GoldenNumber& g);

}  // namespace kakeya
