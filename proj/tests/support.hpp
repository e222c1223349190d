#pragma once

#include <random>
#include <string>

#include "kakeya/analysis/optimality.hpp"
#include "kakeya/analysis/uniqueness.hpp"
#include "kakeya/error.hpp"
#include "kakeya/expansion/expansion.hpp"
#include "kakeya/oracle/oracle.hpp"
#include "kakeya/sequences/checks.hpp"
#include "kakeya/sequences/sequence.hpp"

namespace kakeya::test {

inline SequencePtr seq(const std::string& text, bool allow_non_kakeya = false) {
    SpecOptions options;
    options.allow_non_kakeya = allow_non_kakeya;
    return make_sequence(parse_sequence_spec(text, options), options);
}

inline Rational q(const std::string& text) { return Rational::parse(text); }
inline GoldenNumber g(const std::string& text) { return GoldenNumber::parse(text); }

/// The exact value of r; fails the calling test when r is only enclosed.
inline GoldenNumber exact(const Real& r) {
    if (!r.is_exact()) throw std::logic_error("value is not exact");
    return *r.exact();
}

inline GoldenNumber exact(const Value& v) { return std::get<GoldenNumber>(v); }

/// Uniform rational in (lo, hi) with denominator up to max_den.
inline Rational random_rational(std::mt19937_64& rng, const Rational& lo, const Rational& hi, long max_den = 997) {
    std::uniform_int_distribution<long> den(2, max_den);
    long d = den(rng);
    std::uniform_int_distribution<long> num(1, d - 1);
    return lo + (hi - lo) * Rational(num(rng)) / Rational(d);
}

/// Random a + b*phi in (0, hi) with small rational coefficients.
inline GoldenNumber random_golden(std::mt19937_64& rng, const GoldenNumber& hi) {
    std::uniform_int_distribution<long> coef(-12, 12), den(1, 12);
    while (true) {
        GoldenNumber x(Rational(coef(rng)) / Rational(den(rng)), Rational(coef(rng)) / Rational(den(rng)));
        if (x.sign() > 0 && x < hi) return x;
    }
}

/// All words of length n, in lexicographic order.
inline std::vector<DigitWord> all_words(Index n) {
    std::vector<DigitWord> out;
    for (unsigned long m = 0; m < (1ul << n); ++m) {
        std::vector<std::uint8_t> d(n);
        for (Index i = 0; i < n; ++i) d[i] = (m >> (n - 1 - i)) & 1u;
        out.emplace_back(std::move(d));
    }
    return out;
}

/// x - sum c_i p_i over a finite word, summed from scratch.
inline GoldenNumber word_remainder(const Sequence& s, const GoldenNumber& x, const DigitWord& w) {
    GoldenNumber r = x;
    for (Index i = 0; i < w.size(); ++i) {
        if (w[i]) r -= exact(s.term(i + 1));
    }
    return r;
}

}  // namespace kakeya::test
