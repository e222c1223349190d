#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kakeya/numerics/golden.hpp"
#include "kakeya/numerics/interval.hpp"
#include "kakeya/numerics/real.hpp"
#include "kakeya/sequences/spec.hpp"

namespace kakeya {

/// Eventually periodic 0/1 selector d_1 d_2 ...: prefix first, then period forever.
struct IndexPattern {
    std::vector<std::uint8_t> prefix;
    std::vector<std::uint8_t> period;  // nonempty

    std::uint8_t at(Index i) const;  // 1-based
    bool period_all_zero() const;

    static IndexPattern all_ones() { return {{}, {1}}; }
    /// 1 0 1 0 ...
    static IndexPattern every_other() { return {{}, {1, 0}}; }
    /// Finite selection: the given digits, then zeros.
    static IndexPattern finite(std::vector<std::uint8_t> digits) { return {std::move(digits), {0}}; }
};

/// Enclosure of the tail sum S_n = sum_{i>n} p_i.
struct TailEnclosure {
    Index n = 0;
    Interval interval;
    /// Number of explicitly summed terms m; the rest is bounded geometrically.
    Index terms_summed = 0;
    /// r < 1 with p_{i+1} <= r p_i for all i > n + m.
    Rational ratio_bound;
    /// Set when S_n has a closed form in Q(phi).
    std::optional<GoldenNumber> exact;
};

/// For n > preperiod, p_{n+period} = ratio^period * p_n exactly.
struct Periodicity {
    Index preperiod = 0;
    Index period = 1;
    GoldenNumber ratio;
};

/// Closed-form facts a provider proves for all indices from some point on.
/// Each engaged field holds the first index N from which the statement holds.
struct ProviderFacts {
    std::optional<Index> ratio_above_golden_from;    // p_n > phi p_{n+1}
    std::optional<Index> ratio_at_most_golden_from;  // p_n <= phi p_{n+1}
    std::optional<Index> at_most_double_from;        // p_n <= 2 p_{n+1}
    std::optional<Index> strictly_decreasing_from;   // p_n > p_{n+1}
    std::string justification;
};

/// A Kakeya-sequence provider: exact or enclosed terms and index-pattern sums.
/// Providers are immutable and safe to share across threads.
class Sequence {
public:
    virtual ~Sequence() = default;

    virtual std::string name() const = 0;
    /// p_n, n >= 1.
    virtual Real term(Index n) const = 0;
    /// sum_{i>=1} d_i p_{offset+i}.
    virtual Real select_sum(const IndexPattern& pattern, Index offset) const = 0;
    virtual TailEnclosure tail_enclosure(Index n, unsigned bits) const;
    /// True when every term and pattern sum is exact in Q(phi).
    virtual bool is_exact() const = 0;
    virtual std::optional<Periodicity> periodicity() const { return std::nullopt; }
    virtual ProviderFacts facts() const { return {}; }

    /// S_n = sum_{i>n} p_i.
    Real tail(Index n) const { return select_sum(IndexPattern::all_ones(), n); }
    /// sum_{i=from}^{to} p_i (zero when from > to).
    Real partial_sum(Index from, Index to) const;
};

using SequencePtr = std::shared_ptr<const Sequence>;

SequencePtr make_sequence(const SequenceSpec& spec, const SpecOptions& options = {});

/// Fibonacci numbers F_1 = F_2 = 1 and Tribonacci numbers T_1 = T_2 = 1, T_3 = 2.
BigInt fibonacci(Index n);
BigInt tribonacci(Index n);

}  // namespace kakeya
