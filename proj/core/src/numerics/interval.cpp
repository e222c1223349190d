#include "kakeya/numerics/interval.hpp"

#include <algorithm>
#include <array>

#include "kakeya/error.hpp"

namespace kakeya {

Dyadic::Dyadic(BigInt mantissa, long exponent) : mantissa_(std::move(mantissa)), exponent_(exponent) {
    normalize();
}

void Dyadic::normalize() {
    if (mantissa_ == 0) {
        exponent_ = 0;
        return;
    }
    auto shift = mpz_scan1(mantissa_.get_mpz_t(), 0);
    if (shift > 0) {
        mpz_fdiv_q_2exp(mantissa_.get_mpz_t(), mantissa_.get_mpz_t(), shift);
        exponent_ += static_cast<long>(shift);
    }
}

namespace {

// Scales the rational by 2^-exponent and returns (numerator, denominator).
void scaled(const Rational& r, long exponent, BigInt& num, BigInt& den) {
    num = r.numerator();
    den = r.denominator();
    if (exponent <= 0) {
        mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(-exponent));
    } else {
        mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(exponent));
    }
}

long rounding_exponent(const Rational& r, unsigned bits) {
    return r.floor_log2() - static_cast<long>(bits) - 1;
}

}  // namespace

Dyadic Dyadic::floor_at(const Rational& r, long exponent) {
    BigInt num, den, q;
    scaled(r, exponent, num, den);
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return Dyadic(q, exponent);
}

Dyadic Dyadic::ceil_at(const Rational& r, long exponent) {
    BigInt num, den, q;
    scaled(r, exponent, num, den);
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return Dyadic(q, exponent);
}

Dyadic Dyadic::round_down(const Rational& r, unsigned bits) {
    if (r.is_zero()) return Dyadic();
    if (mpz_popcount(r.denominator().get_mpz_t()) == 1) {
        Dyadic exact = from_rational(r);
        if (mpz_sizeinbase(exact.mantissa_.get_mpz_t(), 2) <= bits + 2) return exact;
    }
    return floor_at(r, rounding_exponent(r, bits));
}

Dyadic Dyadic::round_up(const Rational& r, unsigned bits) {
    if (r.is_zero()) return Dyadic();
    if (mpz_popcount(r.denominator().get_mpz_t()) == 1) {
        Dyadic exact = from_rational(r);
        if (mpz_sizeinbase(exact.mantissa_.get_mpz_t(), 2) <= bits + 2) return exact;
    }
    return ceil_at(r, rounding_exponent(r, bits));
}

Dyadic Dyadic::from_rational(const Rational& r) {
    BigInt den = r.denominator();
    if (mpz_popcount(den.get_mpz_t()) != 1) {
        throw ValidationError("not a dyadic rational: " + r.str());
    }
    long shift = static_cast<long>(mpz_scan1(den.get_mpz_t(), 0));
    return Dyadic(r.numerator(), -shift);
}

Rational Dyadic::to_rational() const {
    BigInt num = mantissa_, den = 1;
    if (exponent_ >= 0) {
        mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(exponent_));
    } else {
        mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(-exponent_));
    }
    return Rational(num, den);
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    if (a.mantissa_ == 0) return b;
    if (b.mantissa_ == 0) return a;
    long e = std::min(a.exponent_, b.exponent_);
    BigInt ma = a.mantissa_, mb = b.mantissa_;
    mpz_mul_2exp(ma.get_mpz_t(), ma.get_mpz_t(), static_cast<unsigned long>(a.exponent_ - e));
    mpz_mul_2exp(mb.get_mpz_t(), mb.get_mpz_t(), static_cast<unsigned long>(b.exponent_ - e));
    return Dyadic(ma + mb, e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    return Dyadic(a.mantissa_ * b.mantissa_, a.exponent_ + b.exponent_);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
    int s = (a - b).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Interval::Interval(Dyadic lo, Dyadic hi, unsigned bits) : lo_(std::move(lo)), hi_(std::move(hi)), bits_(bits) {
    if (hi_ < lo_) throw ValidationError("interval with lo > hi");
    if (bits_ == 0) throw ValidationError("interval precision must be positive");
}

Interval Interval::enclose(const Rational& lo, const Rational& hi, unsigned bits) {
    return Interval(Dyadic::round_down(lo, bits), Dyadic::round_up(hi, bits), bits);
}

bool Interval::contains(const Rational& r) const {
    return lo_.to_rational() <= r && r <= hi_.to_rational();
}

bool Interval::contains(const Interval& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }

Interval Interval::rounded(unsigned bits) const {
    return Interval(Dyadic::round_down(lo_.to_rational(), bits), Dyadic::round_up(hi_.to_rational(), bits), bits);
}

Interval operator+(const Interval& a, const Interval& b) {
    unsigned bits = std::min(a.bits_, b.bits_);
    return Interval(a.lo_ + b.lo_, a.hi_ + b.hi_, bits).rounded(bits);
}

Interval operator-(const Interval& a, const Interval& b) { return a + (-b); }

Interval operator*(const Interval& a, const Interval& b) {
    unsigned bits = std::min(a.bits_, b.bits_);
    std::array<Dyadic, 4> p = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
    auto [mn, mx] = std::minmax_element(p.begin(), p.end());
    return Interval(*mn, *mx, bits).rounded(bits);
}

Interval Interval::reciprocal(unsigned bits) const {
    if (contains_zero()) throw ValidationError("reciprocal of an interval containing zero");
    return enclose(hi_.to_rational().inverse(), lo_.to_rational().inverse(), bits);
}

Interval operator/(const Interval& a, const Interval& b) {
    unsigned bits = std::min(a.bits_, b.bits_);
    return a * b.reciprocal(bits);
}

Interval Interval::pow(unsigned long exponent, unsigned bits) const {
    Interval result = Interval::point(Dyadic(1), bits);
    Interval base = rounded(bits);
    if (!base.positive() && exponent > 1) {
        // Even powers of sign-straddling intervals would need special casing; only positive bases occur here.
        throw ValidationError("interval power requires a positive base");
    }
    while (exponent > 0) {
        if (exponent & 1UL) result = result * base;
        exponent >>= 1;
        if (exponent > 0) base = base * base;
    }
    return result;
}

}  // namespace kakeya
