#include "kakeya/sequences/checks.hpp"

#include <algorithm>
#include <numeric>

#include "kakeya/error.hpp"

namespace kakeya {

Check check_le(const Real& a, const Real& b, unsigned max_bits) {
    switch (cmp_adaptive(a, b, max_bits)) {
        case Ordering::Less:
        case Ordering::EqualCertified: return Check::Holds;
        case Ordering::Greater: return Check::Fails;
        case Ordering::Inconclusive: break;
    }
    return Check::Unknown;
}

Check check_lt(const Real& a, const Real& b, unsigned max_bits) {
    switch (cmp_adaptive(a, b, max_bits)) {
        case Ordering::Less: return Check::Holds;
        case Ordering::EqualCertified:
        case Ordering::Greater: return Check::Fails;
        case Ordering::Inconclusive: break;
    }
    return Check::Unknown;
}

WindowScan scan_window(const IndexPredicate& predicate, Index first, Index last) {
    WindowScan scan;
    scan.first = first;
    scan.last = last;
    for (Index n = first; n <= last; ++n) {
        switch (predicate(n)) {
            case Check::Holds: scan.holds.push_back(n); break;
            case Check::Fails: scan.fails.push_back(n); break;
            case Check::Unknown: scan.unknown.push_back(n); break;
        }
    }
    return scan;
}

std::optional<PeriodicWindow> periodic_window(const Sequence& seq) {
    auto p = seq.periodicity();
    if (!p) return std::nullopt;
    PeriodicWindow w;
    w.stable_from = p->preperiod + 2;
    w.period = std::lcm(p->period, Index{2});
    w.horizon = w.stable_from + 2 * w.period - 1;
    return w;
}

namespace {

Eventually settle(const WindowScan& scan) {
    Eventually e;
    e.from = scan.fails.empty() ? scan.first : scan.fails.back() + 1;
    bool unknown_after = std::any_of(scan.unknown.begin(), scan.unknown.end(), [&](Index n) { return n >= e.from; });
    e.kind = unknown_after ? Eventually::Kind::Unknown : Eventually::Kind::HoldsFrom;
    return e;
}

}  // namespace

Eventually eventually_from_periodic(const WindowScan& scan, const PeriodicWindow& w) {
    if (scan.last < w.horizon) throw ValidationError("periodic scan stops before the horizon");
    if (!scan.fails.empty() && scan.fails.back() >= w.stable_from) {
        return {Eventually::Kind::FailsInfinitelyOften, 0};
    }
    return settle(scan);
}

Eventually eventually_from_fact(const WindowScan& scan, Index fact_from) {
    if (scan.last + 1 < fact_from) throw ValidationError("scan does not reach the provider certificate");
    return settle(scan);
}

std::string to_string(KakeyaVerdict::Status s) {
    switch (s) {
        case KakeyaVerdict::Status::Kakeya: return "kakeya";
        case KakeyaVerdict::Status::NotKakeya: return "not_kakeya";
        case KakeyaVerdict::Status::VerifiedUpTo: return "verified_up_to";
        case KakeyaVerdict::Status::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

KakeyaVerdict check_kakeya(const Sequence& seq, Index depth, unsigned max_bits) {
    if (depth == 0) throw ValidationError("depth must be at least 1");
    KakeyaVerdict v;
    v.depth = depth;
    auto window = periodic_window(seq);
    auto facts = seq.facts();
    Index last = depth;
    if (window) {
        last = std::max(depth, window->horizon);
    } else if (facts.at_most_double_from) {
        last = *facts.at_most_double_from - 1;
    }
    for (Index n = 1; n <= last; ++n) {
        Ordering o = cmp_adaptive(seq.term(n), seq.tail(n), max_bits);
        if (o == Ordering::EqualCertified && n <= depth) v.equality_indices.push_back(n);
        if (o == Ordering::Greater) {
            v.status = KakeyaVerdict::Status::NotKakeya;
            v.witness = n;
            v.unconditional = true;
            v.equality_indices.clear();
            v.justification = "p_n > S_n certified at n = " + std::to_string(n);
            return v;
        }
        if (o == Ordering::Inconclusive) {
            v.status = KakeyaVerdict::Status::Inconclusive;
            v.witness = n;
            v.justification = "p_n versus S_n unresolved at the precision cap";
            return v;
        }
    }
    if (window) {
        v.status = KakeyaVerdict::Status::Kakeya;
        v.unconditional = true;
        v.justification = "exact check over the eventually periodic window up to n = " + std::to_string(last);
    } else if (facts.at_most_double_from) {
        v.status = KakeyaVerdict::Status::Kakeya;
        v.unconditional = true;
        v.justification = "p_n <= 2 p_{n+1} for n >= " + std::to_string(*facts.at_most_double_from) +
                          " implies p_n <= S_n; earlier indices checked directly";
    } else {
        v.status = KakeyaVerdict::Status::VerifiedUpTo;
        v.justification = "checked n = 1.." + std::to_string(depth);
    }
    return v;
}

std::optional<Index> first_non_decrease(const Sequence& seq, Index depth, unsigned max_bits) {
    for (Index n = 1; n <= depth; ++n) {
        Check c = check_lt(seq.term(n + 1), seq.term(n), max_bits);
        if (c == Check::Fails) return n;
        if (c == Check::Unknown) throw PrecisionExhausted(n, "p_n versus p_{n+1}");
    }
    return std::nullopt;
}

}  // namespace kakeya
