#include "kakeya/analysis/uniqueness.hpp"

#include <algorithm>
#include <numeric>

#include "kakeya/error.hpp"
#include "kakeya/sequences/checks.hpp"

namespace kakeya {

std::string to_string(UniquenessRoute r) {
    switch (r) {
        case UniquenessRoute::None: return "none";
        case UniquenessRoute::Cnu1: return "cnu1";
        case UniquenessRoute::GoldenRatioTest: return "golden_ratio_test";
        case UniquenessRoute::WindowOnly: return "window_only";
        case UniquenessRoute::CsuViolation: return "csu_violation";
        case UniquenessRoute::Alternation: return "alternation";
    }
    return "none";
}

UniquenessRoute route_from_string(const std::string& s) {
    for (auto r : {UniquenessRoute::None, UniquenessRoute::Cnu1, UniquenessRoute::GoldenRatioTest,
                   UniquenessRoute::WindowOnly, UniquenessRoute::CsuViolation, UniquenessRoute::Alternation}) {
        if (to_string(r) == s) return r;
    }
    throw ParseError(0, "unknown uniqueness route '" + s + "'");
}

std::string to_string(UniquenessVerdict::Status s) {
    switch (s) {
        case UniquenessVerdict::Status::UniqueCandidate: return "unique_candidate";
        case UniquenessVerdict::Status::NoUnique: return "no_unique";
        case UniquenessVerdict::Status::CandidateRejected: return "candidate_rejected";
        case UniquenessVerdict::Status::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

Ordering compare_golden_ratio(const Sequence& seq, Index n, unsigned max_bits) {
    Real a = seq.term(n), b = seq.term(n + 1);
    auto ra = a.rational(), rb = b.rational();
    if (ra && rb && ra->numerator() == 1 && rb->numerator() == 1) {
        // p_n = 1/s, p_{n+1} = 1/t: p_n > phi p_{n+1} iff t > phi s.
        GoldenOrder o = golden_compare_integers(ra->denominator(), rb->denominator());
        return o == GoldenOrder::Greater ? Ordering::Greater : Ordering::Less;
    }
    return cmp_adaptive(a, Real(GoldenNumber::phi()) * b, max_bits);
}

namespace {

Check as_check(bool holds, bool unknown) { return unknown ? Check::Unknown : (holds ? Check::Holds : Check::Fails); }

std::vector<Index> up_to(const std::vector<Index>& v, Index from, Index depth) {
    std::vector<Index> out;
    for (Index n : v) {
        if (n >= from && n <= depth) out.push_back(n);
    }
    return out;
}

// Index N with 0^N(10) unique when the alternating-sum criterion holds for all n >= m.
Index zeros_for(Index m) { return m >= 3 ? m - 1 : 0; }

}  // namespace

UniquenessVerdict check_unique_candidate(const Sequence& seq, const EventuallyPeriodicDigits& c, Index depth,
                                         unsigned max_bits) {
    if (depth == 0) throw ValidationError("depth must be at least 1");
    UniquenessVerdict v;
    v.depth = depth;
    v.digits = c;
    v.route = UniquenessRoute::WindowOnly;
    if (c.is_all_zero() || c.is_all_one()) {
        v.status = UniquenessVerdict::Status::UniqueCandidate;
        v.unconditional = true;
        v.from = 1;
        v.reason = "the endpoints 0 and S_0 have only the constant expansions";
        return v;
    }
    if (c.ends_constant()) {
        v.status = UniquenessVerdict::Status::CandidateRejected;
        v.reason = "a unique expansion cannot end with (0) or (1)";
        return v;
    }
    Index last = depth;
    if (auto per = seq.periodicity()) {
        Index stable = std::max<Index>(per->preperiod, c.preperiod().size()) + 2;
        Index period = std::lcm(per->period, c.period().size());
        last = std::max(depth, stable + 2 * period);
        v.unconditional = true;
    }
    auto predicate = [&](Index n) {
        Real tail_c = seq.select_sum(c.suffix_pattern(n), n);
        if (c.at(n) == 0) return check_lt(tail_c, seq.term(n), max_bits);
        return check_lt(seq.tail(n) - seq.term(n), tail_c, max_bits);
    };
    for (Index n = 1; n <= last; ++n) {
        Check r = predicate(n);
        if (r == Check::Fails) {
            v.status = UniquenessVerdict::Status::CandidateRejected;
            v.unconditional = false;
            v.violation = n;
            v.reason = c.at(n) == 0 ? "c_n = 0 but sum_{i>n} c_i p_i >= p_n"
                                    : "c_n = 1 but sum_{i>n} c_i p_i <= S_n - p_n";
            return v;
        }
        if (r == Check::Unknown) {
            v.status = UniquenessVerdict::Status::Inconclusive;
            v.unconditional = false;
            v.violation = n;
            v.reason = "uniqueness condition unresolved at the precision cap";
            return v;
        }
        if (n <= depth) v.certified_indices.push_back(n);
    }
    v.status = UniquenessVerdict::Status::UniqueCandidate;
    v.from = 1;
    v.reason = v.unconditional ? "conditions certified over the full periodic window up to n = " + std::to_string(last)
                               : "conditions certified for n = 1.." + std::to_string(depth);
    return v;
}

UniquenessVerdict certify_uniqueness(const Sequence& seq, Index depth, unsigned max_bits) {
    if (depth == 0) throw ValidationError("depth must be at least 1");
    UniquenessVerdict v;
    v.depth = depth;
    KakeyaVerdict kv = check_kakeya(seq, depth, max_bits);
    if (kv.status == KakeyaVerdict::Status::NotKakeya) {
        throw ValidationError("not a Kakeya sequence: p_n > S_n at n = " + std::to_string(kv.witness));
    }
    if (kv.status == KakeyaVerdict::Status::Inconclusive) {
        v.violation = kv.witness;
        v.reason = "Kakeya property unresolved";
        return v;
    }
    if (auto bad = first_non_decrease(seq, depth, max_bits)) {
        throw ValidationError("sequence is not strictly decreasing at n = " + std::to_string(*bad));
    }
    const auto window = periodic_window(seq);
    const auto facts = seq.facts();
    const Index last = window ? std::max(depth, window->horizon) : depth;
    std::vector<std::string> tried;

    auto ratio_ge = [&](Index n) {
        Ordering o = compare_golden_ratio(seq, n, max_bits);
        return as_check(o != Ordering::Less, o == Ordering::Inconclusive);
    };
    auto ratio_le = [&](Index n) {
        Ordering o = compare_golden_ratio(seq, n, max_bits);
        return as_check(o != Ordering::Greater, o == Ordering::Inconclusive);
    };

    // (a) p_n >= phi p_{n+1} for n >= R, strictly infinitely often.
    {
        std::optional<Eventually> ev;
        WindowScan scan;
        if (window) {
            scan = scan_window(ratio_ge, 1, last);
            ev = eventually_from_periodic(scan, *window);
            if (ev->kind == Eventually::Kind::HoldsFrom) {
                bool strict = false;
                for (Index n = window->stable_from; n < window->stable_from + window->period && !strict; ++n) {
                    strict = compare_golden_ratio(seq, n, max_bits) == Ordering::Greater;
                }
                if (!strict) ev->kind = Eventually::Kind::Unknown;
            }
        } else if (facts.ratio_above_golden_from) {
            scan = scan_window(ratio_ge, 1, std::max(depth, *facts.ratio_above_golden_from - 1));
            ev = eventually_from_fact(scan, *facts.ratio_above_golden_from);
        }
        if (ev && ev->kind == Eventually::Kind::HoldsFrom && ev->from <= depth) {
            Index N = zeros_for(ev->from + 1);
            v.status = UniquenessVerdict::Status::UniqueCandidate;
            v.route = UniquenessRoute::GoldenRatioTest;
            v.digits = EventuallyPeriodicDigits::zeros_then_ten(N);
            v.zeros = N;
            v.from = ev->from;
            v.unconditional = true;
            v.certified_indices = up_to(scan.holds, ev->from, depth);
            v.reason = "p_n >= phi p_{n+1} for all n >= " + std::to_string(ev->from) +
                       (window ? ", strict once per period" : ", provider certificate: " + facts.justification);
            return v;
        }
        tried.push_back("golden ratio test (unique)");
    }

    // (b) sum_{i>=0} p_{n+2i} < p_{n-1} for all n >= M.
    if (window) {
        auto cnu1 = [&](Index n) {
            return check_lt(seq.select_sum(IndexPattern::every_other(), n - 1), seq.term(n - 1), max_bits);
        };
        WindowScan scan = scan_window(cnu1, 2, last);
        Eventually ev = eventually_from_periodic(scan, *window);
        if (ev.kind == Eventually::Kind::HoldsFrom && ev.from <= depth) {
            Index N = zeros_for(ev.from);
            v.status = UniquenessVerdict::Status::UniqueCandidate;
            v.route = UniquenessRoute::Cnu1;
            v.digits = EventuallyPeriodicDigits::zeros_then_ten(N);
            v.zeros = N;
            v.from = ev.from;
            v.unconditional = true;
            v.certified_indices = up_to(scan.holds, ev.from, depth);
            v.reason = "sum_{i>=0} p_{n+2i} < p_{n-1} for all n >= " + std::to_string(ev.from);
            return v;
        }
        tried.push_back("alternating-sum criterion");
    }

    // (c) p_n <= phi p_{n+1} for n >= N.
    {
        std::optional<Eventually> ev;
        WindowScan scan;
        if (window) {
            scan = scan_window(ratio_le, 1, last);
            ev = eventually_from_periodic(scan, *window);
        } else if (facts.ratio_at_most_golden_from) {
            scan = scan_window(ratio_le, 1, std::max(depth, *facts.ratio_at_most_golden_from - 1));
            ev = eventually_from_fact(scan, *facts.ratio_at_most_golden_from);
        }
        if (ev && ev->kind == Eventually::Kind::HoldsFrom && ev->from <= depth) {
            v.status = UniquenessVerdict::Status::NoUnique;
            v.route = UniquenessRoute::GoldenRatioTest;
            v.from = ev->from;
            v.unconditional = true;
            v.certified_indices = up_to(scan.holds, ev->from, depth);
            v.reason = "p_n <= phi p_{n+1} for all n >= " + std::to_string(ev->from);
            return v;
        }
        tried.push_back("golden ratio test (no unique)");
    }

    // (d) p_{2n} >= sum_{i>=0} p_{2n+2i+1} and p_{2n+1} <= sum_{i>=1} p_{2n+2i} for large n.
    if (window) {
        auto alternated = [&](Index n) {
            Check a = check_le(seq.select_sum(IndexPattern::every_other(), 2 * n), seq.term(2 * n), max_bits);
            Check b = check_le(seq.term(2 * n + 1), seq.select_sum(IndexPattern::every_other(), 2 * n + 1), max_bits);
            if (a == Check::Fails || b == Check::Fails) return Check::Fails;
            if (a == Check::Unknown || b == Check::Unknown) return Check::Unknown;
            return Check::Holds;
        };
        WindowScan scan = scan_window(alternated, 1, last);
        Eventually ev = eventually_from_periodic(scan, *window);
        if (ev.kind == Eventually::Kind::HoldsFrom && ev.from <= depth) {
            v.status = UniquenessVerdict::Status::NoUnique;
            v.route = UniquenessRoute::Alternation;
            v.from = ev.from;
            v.unconditional = true;
            v.certified_indices = up_to(scan.holds, ev.from, depth);
            v.reason = "both alternated inequalities hold for all n >= " + std::to_string(ev.from);
            return v;
        }
        tried.push_back("alternation");
    }

    // (e) S_n > p_{n-1} infinitely often, with p_n <= 2 p_{n+1} eventually.
    if (window) {
        auto violated = [&](Index n) { return check_lt(seq.term(n - 1), seq.tail(n), max_bits); };
        auto doubling = [&](Index n) { return check_le(seq.term(n), Real(2) * seq.term(n + 1), max_bits); };
        WindowScan viol = scan_window(violated, 2, last);
        WindowScan dbl = scan_window(doubling, 1, last);
        Eventually ev = eventually_from_periodic(dbl, *window);
        bool infinitely_often = std::any_of(viol.holds.begin(), viol.holds.end(),
                                            [&](Index n) { return n >= window->stable_from; });
        if (infinitely_often && ev.kind == Eventually::Kind::HoldsFrom) {
            v.status = UniquenessVerdict::Status::NoUnique;
            v.route = UniquenessRoute::CsuViolation;
            v.from = ev.from;
            v.unconditional = true;
            v.certified_indices = up_to(viol.holds, 1, depth);
            v.reason = "S_n > p_{n-1} once per period and p_n <= 2 p_{n+1} for all n >= " + std::to_string(ev.from);
            return v;
        }
        tried.push_back("tail-sum violation");
    }

    v.status = UniquenessVerdict::Status::Inconclusive;
    std::string list;
    for (const auto& t : tried) list += (list.empty() ? "" : ", ") + t;
    v.reason = "no route certified for all large n (tried: " + list + ")";
    if (!window && !facts.ratio_above_golden_from && !facts.ratio_at_most_golden_from) {
        v.reason += "; the provider has no ratio certificate beyond a finite window";
    }
    return v;
}

}  // namespace kakeya
