#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "kakeya/numerics/interval.hpp"
#include "kakeya/numerics/rational.hpp"

namespace kakeya {

/// Integer polynomial, coefficients in ascending degree order.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> ascending);
    /// Coefficients listed from the leading term down, as written by hand.
    static IntPolynomial from_descending(const std::vector<BigInt>& descending);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigInt>& coefficients() const { return coeffs_; }

    Rational evaluate(const Rational& x) const;
    int sign_at(const Rational& x) const { return evaluate(x).sign(); }

    /// Number of distinct real roots in the half-open interval (lo, hi], via a Sturm sequence.
    int count_roots(const Rational& lo, const Rational& hi) const;

    /// "x^3-x^2-x-1" style rendering.
    std::string str() const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    std::vector<BigInt> coeffs_;
};

/// A real algebraic number given by its defining polynomial and an isolating
/// interval with exactly one root inside and a sign change across it.
class AlgebraicConstant {
public:
    AlgebraicConstant(IntPolynomial polynomial, Rational lo, Rational hi);

    const IntPolynomial& polynomial() const { return poly_; }
    const Rational& isolating_lo() const { return lo_; }
    const Rational& isolating_hi() const { return hi_; }

    /// Bisection down to width <= 2^(1 - bits). Containment is preserved at every step;
    /// an exactly hit root yields a point interval.
    Interval refine(unsigned bits) const;

    std::string str() const;

private:
    struct Cache {
        std::mutex mutex;
        Rational lo, hi;
        unsigned long steps = 0;
        bool exact = false;
        unsigned long exact_step = 0;
    };

    IntPolynomial poly_;
    Rational lo_, hi_;
    int lo_sign_ = 0;
    std::shared_ptr<Cache> cache_;
};

}  // namespace kakeya
