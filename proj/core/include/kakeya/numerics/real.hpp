#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "kakeya/numerics/golden.hpp"
#include "kakeya/numerics/interval.hpp"
#include "kakeya/numerics/rational.hpp"

namespace kakeya {

/// Default cap on working precision for adaptive comparisons.
inline constexpr unsigned kDefaultMaxBits = 4096;

/// A real number that is either exact in Q(phi) (which contains Q) or known
/// only through enclosures computable at any requested precision. Enclosures
/// must be valid at every precision and shrink to the value as bits grow.
class Real {
public:
    using Evaluator = std::function<Interval(unsigned bits)>;

    Real() : rep_(GoldenNumber()) {}
    Real(GoldenNumber g) : rep_(std::move(g)) {}  // NOLINT(google-explicit-constructor)
    Real(Rational r) : rep_(GoldenNumber(std::move(r))) {}  // NOLINT(google-explicit-constructor)
    Real(long v) : rep_(GoldenNumber(v)) {}  // NOLINT(google-explicit-constructor)

    static Real lazy(Evaluator evaluator);

    bool is_exact() const { return std::holds_alternative<GoldenNumber>(rep_); }
    /// Null for lazy values.
    const GoldenNumber* exact() const { return std::get_if<GoldenNumber>(&rep_); }
    /// The exact value when it is a plain rational.
    std::optional<Rational> rational() const;

    Interval enclose(unsigned bits) const;

    /// Same value; lazy enclosures are remembered per precision.
    Real cached() const;

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);
    friend Real operator-(const Real& a);

    Real& operator+=(const Real& o) { return *this = *this + o; }
    Real& operator-=(const Real& o) { return *this = *this - o; }

private:
    std::variant<GoldenNumber, std::shared_ptr<const Evaluator>> rep_;
};

/// Frozen view of a Real: the exact value, or an enclosure at a fixed precision.
using Value = std::variant<GoldenNumber, Interval>;

Value snapshot(const Real& r, unsigned bits = 64);
std::string to_string(const Value& v);

enum class Ordering { Less, Greater, EqualCertified, Inconclusive };

std::string to_string(Ordering o);

/// Compares two reals. Exact operands are decided exactly; otherwise the
/// difference is enclosed at doubling precision up to max_bits and only a
/// strictly signed enclosure produces Less/Greater.
Ordering cmp_adaptive(const Real& a, const Real& b, unsigned max_bits = kDefaultMaxBits);

/// Sign of r as an Ordering against zero.
inline Ordering sign_adaptive(const Real& r, unsigned max_bits = kDefaultMaxBits) {
    return cmp_adaptive(r, Real(), max_bits);
}

}  // namespace kakeya
