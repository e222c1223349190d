#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kakeya/expansion/digits.hpp"
#include "kakeya/numerics/real.hpp"
#include "kakeya/sequences/sequence.hpp"

namespace kakeya {

enum class UniquenessRoute { None, Cnu1, GoldenRatioTest, WindowOnly, CsuViolation, Alternation };

std::string to_string(UniquenessRoute r);
UniquenessRoute route_from_string(const std::string& s);

struct UniquenessVerdict {
    enum class Status { UniqueCandidate, NoUnique, CandidateRejected, Inconclusive };

    Status status = Status::Inconclusive;
    UniquenessRoute route = UniquenessRoute::None;
    Index depth = 0;
    std::optional<EventuallyPeriodicDigits> digits;
    /// N when digits = 0^N(10).
    std::optional<Index> zeros;
    /// First index of the range on which the route's inequality is certified.
    Index from = 0;
    /// True when the inequalities are certified for every index, not only up to depth.
    bool unconditional = false;
    /// Indices <= depth at which the defining inequalities were certified.
    std::vector<Index> certified_indices;
    /// CandidateRejected: a certified violation index. Inconclusive: the unresolved index.
    std::optional<Index> violation;
    std::string reason;

    friend bool operator==(const UniquenessVerdict&, const UniquenessVerdict&) = default;
};

std::string to_string(UniquenessVerdict::Status s);

/// Checks, for n <= depth (for all n when the provider is eventually periodic),
/// c_n = 0 => sum_{i>n} c_i p_i < p_n and c_n = 1 => sum_{i>n} c_i p_i > S_n - p_n.
UniquenessVerdict check_unique_candidate(const Sequence& seq, const EventuallyPeriodicDigits& c, Index depth,
                                         unsigned max_bits = kDefaultMaxBits);

/// Tries golden-ratio test (unique), the alternating-sum criterion, golden-ratio
/// test (no unique), alternation and tail-sum violation, in that order.
UniquenessVerdict certify_uniqueness(const Sequence& seq, Index depth, unsigned max_bits = kDefaultMaxBits);

/// p_n versus phi p_{n+1}; integer reciprocal terms use golden_compare_integers.
Ordering compare_golden_ratio(const Sequence& seq, Index n, unsigned max_bits = kDefaultMaxBits);

}  // namespace kakeya
