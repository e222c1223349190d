#pragma once

#include <vector>

#include "kakeya/expansion/digits.hpp"
#include "kakeya/numerics/real.hpp"
#include "kakeya/sequences/sequence.hpp"

namespace kakeya {

struct ExpansionTrace {
    DigitWord digits;
    /// r_n = x - sum_{i<=n} c_i p_i for n = 1..D.
    std::vector<Real> remainders;

    Value remainder(Index n, unsigned bits = 64) const { return snapshot(remainders.at(n - 1), bits); }
};

/// Throws OutOfRange unless 0 <= x <= S_0 is certified (PrecisionExhausted(0) if undecided).
void require_in_range(const Sequence& seq, const Real& x, unsigned max_bits = kDefaultMaxBits);

/// Digit n is 1 iff p_n <= r_{n-1}.
ExpansionTrace greedy_digits(const Sequence& seq, const Real& x, Index depth, unsigned max_bits = kDefaultMaxBits);

/// Digit n is 0 iff r_{n-1} <= S_n.
ExpansionTrace lazy_digits(const Sequence& seq, const Real& x, Index depth, unsigned max_bits = kDefaultMaxBits);

/// sum c_i p_i.
Real evaluate(const Sequence& seq, const EventuallyPeriodicDigits& c);
Real evaluate(const Sequence& seq, const DigitWord& w);

EventuallyPeriodicDigits reflect(const EventuallyPeriodicDigits& c);

}  // namespace kakeya
