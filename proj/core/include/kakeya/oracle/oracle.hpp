#pragma once

#include <cstdint>
#include <vector>

#include "kakeya/expansion/digits.hpp"
#include "kakeya/numerics/real.hpp"
#include "kakeya/sequences/sequence.hpp"

namespace kakeya {

inline constexpr Index kOracleDepthGuard = 24;

struct OracleOptions {
    unsigned max_bits = kDefaultMaxBits;
    Index depth_guard = kOracleDepthGuard;
    /// Permits depths above the guard.
    bool allow_deep = false;
};

struct PrefixEntry {
    DigitWord word;
    /// x - sum_{i<=n} c_i p_i.
    Real remainder;
    /// Some feasibility test on the path stayed unresolved; kept as possibly feasible.
    bool flagged = false;
    /// Number of one-digit extensions kept at the next level (set below the last level).
    std::uint8_t children = 0;
};

/// Every prefix of length n <= depth whose remainder r satisfies 0 <= r <= S_n,
/// in lexicographic order per level.
struct PrefixSet {
    Index depth = 0;
    /// levels[n] holds the prefixes of length n; levels[0] is the empty word.
    std::vector<std::vector<PrefixEntry>> levels;

    const std::vector<PrefixEntry>& prefixes() const { return levels.back(); }
};

/// Throws OutOfRange, DepthTooLarge, or PrecisionExhausted when x itself cannot be placed in [0, S_0].
PrefixSet enumerate_prefixes(const Sequence& seq, const Real& x, Index depth, const OracleOptions& options = {});

struct MinError {
    Index n = 0;
    Value value;
    /// Lexicographically greatest prefix attaining the minimum.
    DigitWord argmin;
    /// A flagged prefix or an unresolved comparison may hide a smaller error.
    bool uncertain = false;

    friend bool operator==(const MinError&, const MinError&) = default;
};

std::vector<MinError> min_error_per_depth(const PrefixSet& set, unsigned max_bits = kDefaultMaxBits);
std::vector<MinError> min_error_per_depth(const Sequence& seq, const Real& x, Index depth,
                                          const OracleOptions& options = {});

struct EnvelopeLevel {
    Index n = 0;
    Value greedy_error;
    Value lazy_error;
    std::vector<Value> observed;
    /// Observed errors certified outside [greedy_error, lazy_error].
    Index violations = 0;
    /// Observed errors whose position could not be decided, including flagged prefixes.
    Index unresolved = 0;

    bool contained() const { return violations == 0 && unresolved == 0; }
    friend bool operator==(const EnvelopeLevel&, const EnvelopeLevel&) = default;
};

struct EnvelopeReport {
    Index depth = 0;
    std::vector<EnvelopeLevel> levels;

    bool all_contained() const;
    bool any_violation() const;
    friend bool operator==(const EnvelopeReport&, const EnvelopeReport&) = default;
};

/// Compares every oracle error at each n with the greedy and lazy errors there.
EnvelopeReport error_envelope(const Sequence& seq, const Real& x, Index depth, const OracleOptions& options = {});

/// Per level n = 1..depth: prefixes of length n - 1 with both extensions feasible.
std::vector<Index> branchings_per_level(const PrefixSet& set);
Index count_branchings(const PrefixSet& set);
Index count_branchings(const Sequence& seq, const Real& x, Index depth, const OracleOptions& options = {});

}  // namespace kakeya
