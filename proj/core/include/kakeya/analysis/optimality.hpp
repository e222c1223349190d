#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kakeya/expansion/expansion.hpp"
#include "kakeya/numerics/real.hpp"
#include "kakeya/sequences/sequence.hpp"

namespace kakeya {

inline constexpr Index kMaxWitnessK = 10000;

/// sum_{i=n+1}^{n+k} p_i < p_n < sum_{i=n+1}^{n+k+1} p_i.
struct SandwichWitness {
    Index n = 0;
    Index k = 0;
    Value lower;
    Value upper;

    friend bool operator==(const SandwichWitness&, const SandwichWitness&) = default;
};

/// How p_n relates to the partial sums p_{n+1} + ... + p_{n+m}.
struct IndexClass {
    enum class Kind { Equality, Sandwich, TailDegenerate, Inconclusive };

    Kind kind = Kind::Inconclusive;
    Index n = 0;
    /// Equality: p_n = sum_{i=n+1}^{n+1+k} p_i. Sandwich: the k of the witness.
    Index k = 0;
    std::optional<SandwichWitness> sandwich;
    std::string reason;
};

/// Throws ValidationError when p_n > S_n or p_n <= p_{n+1} is certified.
IndexClass classify_index(const Sequence& seq, Index n, unsigned max_bits = kDefaultMaxBits,
                          Index k_cap = kMaxWitnessK);

std::optional<SandwichWitness> find_sandwich_at(const Sequence& seq, Index n, unsigned max_bits = kDefaultMaxBits);

struct OptimalityVerdict {
    enum class Status { OptimalWitness, NotOptimal, TailDegenerate, Inconclusive };

    Status status = Status::Inconclusive;
    Index depth = 0;
    /// OptimalWitness: k_1..k_depth.
    std::vector<Index> k;
    /// NotOptimal: the smallest certified sandwich.
    std::optional<SandwichWitness> sandwich;
    /// NotOptimal: every n below the sandwich index was resolved, so it is the smallest n overall.
    bool smallest = false;
    /// TailDegenerate: indices with p_n = S_n.
    std::vector<Index> degenerate_indices;
    /// Inconclusive: first unresolved index.
    Index unresolved = 0;
    std::string reason;

    friend bool operator==(const OptimalityVerdict&, const OptimalityVerdict&) = default;
};

std::string to_string(OptimalityVerdict::Status s);

/// Requires the Kakeya property and strict decrease up to depth (ValidationError otherwise).
OptimalityVerdict check_optimality(const Sequence& seq, Index depth, unsigned max_bits = kDefaultMaxBits);

struct CounterexampleReport {
    Index n = 0;
    Index k = 0;
    Value x;
    /// 0^n 1^{k+1}.
    DigitWord alt_digits;
    DigitWord greedy_digits;
    /// n + 1 + k.
    Index position = 0;
    Value greedy_error;
    Value alt_error;
    /// greedy_error > 0 certified.
    bool certified = false;

    friend bool operator==(const CounterexampleReport&, const CounterexampleReport&) = default;
};

/// x = sum_{i=n+1}^{n+1+k} p_i has the zero-error expansion 0^n 1^{k+1} while the
/// greedy error at n + 1 + k is positive. Throws PrecisionExhausted if that is undecided.
CounterexampleReport build_counterexample(const Sequence& seq, const SandwichWitness& w,
                                          unsigned max_bits = kDefaultMaxBits);

}  // namespace kakeya
