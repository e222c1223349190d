#include "kakeya/numerics/algebraic.hpp"

#include <algorithm>

#include "kakeya/error.hpp"

namespace kakeya {

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.empty()) throw ValidationError("zero polynomial");
}

IntPolynomial IntPolynomial::from_descending(const std::vector<BigInt>& descending) {
    return IntPolynomial(std::vector<BigInt>(descending.rbegin(), descending.rend()));
}

Rational IntPolynomial::evaluate(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + Rational(*it);
    }
    return acc;
}

namespace {

using RatPoly = std::vector<Rational>;  // ascending

void trim(RatPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

RatPoly remainder(RatPoly a, const RatPoly& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational factor = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

int sign_at(const RatPoly& p, const Rational& x) {
    Rational acc;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc.sign();
}

int variations(const std::vector<RatPoly>& chain, const Rational& x) {
    int count = 0, last = 0;
    for (const auto& p : chain) {
        int s = sign_at(p, x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

}  // namespace

int IntPolynomial::count_roots(const Rational& lo, const Rational& hi) const {
    std::vector<RatPoly> chain;
    RatPoly p0(coeffs_.begin(), coeffs_.end());
    RatPoly p1;
    for (std::size_t i = 1; i < p0.size(); ++i) p1.push_back(p0[i] * Rational(static_cast<long>(i)));
    trim(p1);
    chain.push_back(p0);
    if (!p1.empty()) chain.push_back(p1);
    while (chain.size() >= 2 && chain.back().size() > 1) {
        RatPoly r = remainder(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    return variations(chain, lo) - variations(chain, hi);
}

std::string IntPolynomial::str() const {
    std::string out;
    for (int d = degree(); d >= 0; --d) {
        const BigInt& c = coeffs_[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        BigInt mag = ::abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? "-" : "+";
        }
        if (mag != 1 || d == 0) out += mag.get_str();
        if (d >= 1) out += "x";
        if (d >= 2) out += "^" + std::to_string(d);
    }
    return out;
}

AlgebraicConstant::AlgebraicConstant(IntPolynomial polynomial, Rational lo, Rational hi)
    : poly_(std::move(polynomial)), lo_(std::move(lo)), hi_(std::move(hi)), cache_(std::make_shared<Cache>()) {
    if (!(lo_ < hi_)) throw ValidationError("isolating interval must have lo < hi");
    if (poly_.count_roots(lo_, hi_) != 1) {
        throw ValidationError("polynomial " + poly_.str() + " does not have exactly one root in (" + lo_.str() +
                              ", " + hi_.str() + "]");
    }
    lo_sign_ = poly_.sign_at(lo_);
    int hi_sign = poly_.sign_at(hi_);
    cache_->lo = lo_;
    cache_->hi = hi_;
    if (hi_sign == 0) {
        cache_->lo = hi_;
        cache_->exact = true;
    } else if (lo_sign_ == 0 || lo_sign_ == hi_sign) {
        throw ValidationError("isolating interval of " + poly_.str() + " has no sign change");
    }
}

Interval AlgebraicConstant::refine(unsigned bits) const {
    if (bits == 0) throw ValidationError("refine needs a positive bit count");
    // Bisect to half the requested width so that snapping to the dyadic grid stays inside 2^(1-bits).
    Rational target = Rational(2).pow(-static_cast<long>(bits));
    Rational width0 = hi_ - lo_;
    unsigned long steps = 0;
    for (Rational w = width0; w > target; w /= Rational(2)) ++steps;

    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto& c = *cache_;
    while (!c.exact && c.steps < steps) {
        Rational mid = (c.lo + c.hi) / Rational(2);
        int s = poly_.sign_at(mid);
        ++c.steps;
        if (s == 0) {
            c.lo = c.hi = mid;
            c.exact = true;
            c.exact_step = c.steps;
        } else if (s == lo_sign_) {
            c.lo = mid;
        } else {
            c.hi = mid;
        }
    }
    if (c.exact && c.exact_step <= steps) return Interval::enclose(c.lo, bits + 2);

    // The cache may be deeper than requested; recover the bisection cell at `steps`
    // so results do not depend on earlier calls.
    Rational cell = width0 / Rational(2).pow(static_cast<long>(steps));
    Rational offset = (c.lo - lo_) / cell;
    BigInt j;
    mpz_fdiv_q(j.get_mpz_t(), offset.numerator().get_mpz_t(), offset.denominator().get_mpz_t());
    Rational cell_lo = lo_ + Rational(j) * cell;
    long grid = -static_cast<long>(bits) - 2;
    return Interval(Dyadic::floor_at(cell_lo, grid), Dyadic::ceil_at(cell_lo + cell, grid), bits);
}

std::string AlgebraicConstant::str() const {
    return "root of " + poly_.str() + " in [" + lo_.str() + ", " + hi_.str() + "]";
}

}  // namespace kakeya
