#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kakeya/numerics/real.hpp"
#include "kakeya/sequences/sequence.hpp"

namespace kakeya {

/// Outcome of one inequality at one index.
enum class Check { Holds, Fails, Unknown };

/// a <= b and a < b as checks.
Check check_le(const Real& a, const Real& b, unsigned max_bits = kDefaultMaxBits);
Check check_lt(const Real& a, const Real& b, unsigned max_bits = kDefaultMaxBits);

using IndexPredicate = std::function<Check(Index)>;

struct WindowScan {
    Index first = 1;
    Index last = 0;
    std::vector<Index> holds;
    std::vector<Index> fails;
    std::vector<Index> unknown;
};

WindowScan scan_window(const IndexPredicate& predicate, Index first, Index last);

/// For closed-form providers every index predicate built from terms, tails and
/// shifted period-2 selections is periodic in n from `stable_from` on, with a
/// period dividing `period`; scanning up to `horizon` covers two full periods.
struct PeriodicWindow {
    Index stable_from = 1;
    Index period = 1;
    Index horizon = 1;
};

std::optional<PeriodicWindow> periodic_window(const Sequence& seq);

/// "predicate holds for all n >= from" derived from a scan.
struct Eventually {
    enum class Kind { HoldsFrom, FailsInfinitelyOften, Unknown };
    Kind kind = Kind::Unknown;
    Index from = 0;
};

/// Interprets a scan over [1, w.horizon] (or further) of a predicate that is periodic per `w`.
Eventually eventually_from_periodic(const WindowScan& scan, const PeriodicWindow& w);

/// Interprets a scan over [1, last] for a predicate a provider proves for all n >= fact_from.
/// Requires last + 1 >= fact_from.
Eventually eventually_from_fact(const WindowScan& scan, Index fact_from);

struct KakeyaVerdict {
    enum class Status { Kakeya, NotKakeya, VerifiedUpTo, Inconclusive };

    Status status = Status::VerifiedUpTo;
    Index depth = 0;
    /// NotKakeya: an n with p_n > S_n certified. Inconclusive: the unresolved n.
    Index witness = 0;
    /// True when the verdict covers every n, not only n <= depth.
    bool unconditional = false;
    /// n <= depth with p_n = S_n certified exactly.
    std::vector<Index> equality_indices;
    std::string justification;

    friend bool operator==(const KakeyaVerdict&, const KakeyaVerdict&) = default;
};

std::string to_string(KakeyaVerdict::Status s);

/// Kakeya property p_n <= S_n.
KakeyaVerdict check_kakeya(const Sequence& seq, Index depth, unsigned max_bits = kDefaultMaxBits);

/// First n <= depth with p_n <= p_{n+1}, if any. Throws PrecisionExhausted when undecided.
std::optional<Index> first_non_decrease(const Sequence& seq, Index depth, unsigned max_bits = kDefaultMaxBits);

}  // namespace kakeya
