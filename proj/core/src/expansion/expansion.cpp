#include "kakeya/expansion/expansion.hpp"

#include "kakeya/error.hpp"

namespace kakeya {

void require_in_range(const Sequence& seq, const Real& x, unsigned max_bits) {
    Ordering low = sign_adaptive(x, max_bits);
    if (low == Ordering::Less) throw OutOfRange("x is negative");
    if (low == Ordering::Inconclusive) throw PrecisionExhausted(0, "sign of x");
    Ordering high = cmp_adaptive(x, seq.tail(0), max_bits);
    if (high == Ordering::Greater) throw OutOfRange("x exceeds S_0 = sum of all terms");
    if (high == Ordering::Inconclusive) throw PrecisionExhausted(0, "x versus S_0");
}

ExpansionTrace greedy_digits(const Sequence& seq, const Real& x, Index depth, unsigned max_bits) {
    require_in_range(seq, x, max_bits);
    ExpansionTrace t;
    Real r = x;
    for (Index n = 1; n <= depth; ++n) {
        Real p = seq.term(n);
        Ordering o = cmp_adaptive(p, r, max_bits);
        if (o == Ordering::Inconclusive) throw PrecisionExhausted(n, "greedy test p_n <= r_{n-1}");
        std::uint8_t d = o == Ordering::Greater ? 0 : 1;
        if (d) r = r - p;
        t.digits.push_back(d);
        t.remainders.push_back(r);
    }
    return t;
}

ExpansionTrace lazy_digits(const Sequence& seq, const Real& x, Index depth, unsigned max_bits) {
    require_in_range(seq, x, max_bits);
    ExpansionTrace t;
    Real r = x;
    for (Index n = 1; n <= depth; ++n) {
        Ordering o = cmp_adaptive(r, seq.tail(n), max_bits);
        if (o == Ordering::Inconclusive) throw PrecisionExhausted(n, "lazy test r_{n-1} <= S_n");
        std::uint8_t d = o == Ordering::Greater ? 1 : 0;
        if (d) r = r - seq.term(n);
        t.digits.push_back(d);
        t.remainders.push_back(r);
    }
    return t;
}

Real evaluate(const Sequence& seq, const EventuallyPeriodicDigits& c) { return seq.select_sum(c.pattern(), 0); }

Real evaluate(const Sequence& seq, const DigitWord& w) {
    return seq.select_sum(IndexPattern::finite(w.digits()), 0);
}

EventuallyPeriodicDigits reflect(const EventuallyPeriodicDigits& c) { return c.complement(); }

}  // namespace kakeya
