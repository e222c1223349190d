#pragma once

#include <string>

#include "kakeya/numerics/rational.hpp"

namespace kakeya {

/// mantissa * 2^exponent, stored with an odd mantissa (or zero).
class Dyadic {
public:
    Dyadic() = default;
    Dyadic(BigInt mantissa, long exponent);
    Dyadic(long value) : Dyadic(BigInt(value), 0) {}  // NOLINT(google-explicit-constructor)

    /// Largest multiple of 2^exponent not above r (floor) or smallest not below (ceil).
    static Dyadic floor_at(const Rational& r, long exponent);
    static Dyadic ceil_at(const Rational& r, long exponent);

    /// Rounds r toward -inf / +inf keeping roughly `bits` significant bits.
    static Dyadic round_down(const Rational& r, unsigned bits);
    static Dyadic round_up(const Rational& r, unsigned bits);

    /// Exact conversion; throws ValidationError unless the denominator is a power of two.
    static Dyadic from_rational(const Rational& r);

    const BigInt& mantissa() const { return mantissa_; }
    long exponent() const { return exponent_; }
    int sign() const { return sgn(mantissa_); }

    Rational to_rational() const;
    std::string str() const { return to_rational().str(); }

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator-(const Dyadic& a) { return Dyadic(-a.mantissa_, a.exponent_); }

    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.exponent_ == b.exponent_ && a.mantissa_ == b.mantissa_;
    }
    friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

private:
    void normalize();

    BigInt mantissa_ = 0;
    long exponent_ = 0;
};

/// Closed interval [lo, hi] with dyadic endpoints, tagged with the working
/// precision it was produced at. Every operation rounds outward, so the exact
/// result for any members of the operands is contained in the result.
class Interval {
public:
    Interval() = default;
    Interval(Dyadic lo, Dyadic hi, unsigned bits);

    static Interval point(const Dyadic& d, unsigned bits) { return Interval(d, d, bits); }
    /// Outward-rounded enclosure of [lo, hi].
    static Interval enclose(const Rational& lo, const Rational& hi, unsigned bits);
    static Interval enclose(const Rational& value, unsigned bits) { return enclose(value, value, bits); }

    const Dyadic& lo() const { return lo_; }
    const Dyadic& hi() const { return hi_; }
    unsigned bits() const { return bits_; }

    Rational width() const { return (hi_ - lo_).to_rational(); }
    bool contains(const Rational& r) const;
    bool contains(const Interval& other) const;
    bool positive() const { return lo_.sign() > 0; }
    bool negative() const { return hi_.sign() < 0; }
    bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }

    /// Re-rounds both endpoints outward to `bits` significant bits.
    Interval rounded(unsigned bits) const;

    Interval reciprocal(unsigned bits) const;
    Interval pow(unsigned long exponent, unsigned bits) const;

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    friend Interval operator/(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a) { return Interval(-a.hi_, -a.lo_, a.bits_); }

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo_ == b.lo_ && a.hi_ == b.hi_ && a.bits_ == b.bits_;
    }

private:
    Dyadic lo_;
    Dyadic hi_;
    unsigned bits_ = 64;
};

}  // namespace kakeya
