#include "kakeya/oracle/oracle.hpp"

#include <numeric>

#include "kakeya/error.hpp"
#include "kakeya/expansion/expansion.hpp"
#include "kakeya/sequences/checks.hpp"

namespace kakeya {

namespace {

struct Enumerator {
    const Sequence& seq;
    const OracleOptions& options;
    Index depth;
    std::vector<Real> terms;  // terms[n] = p_n
    std::vector<Real> tails;  // tails[n] = S_n
    PrefixSet set;

    Enumerator(const Sequence& s, const OracleOptions& o, Index d) : seq(s), options(o), depth(d) {
        terms.emplace_back();
        for (Index n = 0; n <= depth; ++n) {
            if (n > 0) terms.push_back(seq.term(n).cached());
            tails.push_back(seq.tail(n).cached());
        }
        set.depth = depth;
        set.levels.resize(depth + 1);
    }

    // Returns the index of the stored entry.
    std::size_t visit(DigitWord word, Real r, bool flagged) {
        Index n = word.size();
        set.levels[n].push_back(PrefixEntry{word, r, flagged, 0});
        std::size_t self = set.levels[n].size() - 1;
        if (n == depth) return self;
        std::uint8_t kept = 0;
        for (std::uint8_t d = 0; d <= 1; ++d) {
            Real child = d ? r - terms[n + 1] : r;
            Check lo = check_le(Real(), child, options.max_bits);
            Check hi = check_le(child, tails[n + 1], options.max_bits);
            if (lo == Check::Fails || hi == Check::Fails) continue;
            bool child_flag = flagged || lo == Check::Unknown || hi == Check::Unknown;
            DigitWord next = word;
            next.push_back(d);
            visit(std::move(next), d ? child.cached() : child, child_flag);
            ++kept;
        }
        set.levels[n][self].children = kept;
        return self;
    }
};

}  // namespace

PrefixSet enumerate_prefixes(const Sequence& seq, const Real& x, Index depth, const OracleOptions& options) {
    if (depth > options.depth_guard && !options.allow_deep) {
        throw DepthTooLarge("depth " + std::to_string(depth) + " exceeds the enumeration guard " +
                            std::to_string(options.depth_guard));
    }
    require_in_range(seq, x, options.max_bits);
    Enumerator e(seq, options, depth);
    e.visit(DigitWord(), x, false);
    return std::move(e.set);
}

std::vector<MinError> min_error_per_depth(const PrefixSet& set, unsigned max_bits) {
    std::vector<MinError> out;
    for (Index n = 1; n <= set.depth; ++n) {
        const auto& level = set.levels[n];
        if (level.empty()) throw ValidationError("no feasible prefix at length " + std::to_string(n));
        const PrefixEntry* best = &level.front();
        bool uncertain = best->flagged;
        for (std::size_t i = 1; i < level.size(); ++i) {
            const PrefixEntry& e = level[i];
            uncertain = uncertain || e.flagged;
            Ordering o = cmp_adaptive(e.remainder, best->remainder, max_bits);
            if (o == Ordering::Less || o == Ordering::EqualCertified) best = &e;
            if (o == Ordering::Inconclusive) uncertain = true;
        }
        out.push_back(MinError{n, snapshot(best->remainder), best->word, uncertain});
    }
    return out;
}

std::vector<MinError> min_error_per_depth(const Sequence& seq, const Real& x, Index depth,
                                          const OracleOptions& options) {
    return min_error_per_depth(enumerate_prefixes(seq, x, depth, options), options.max_bits);
}

bool EnvelopeReport::all_contained() const {
    for (const auto& l : levels) {
        if (!l.contained()) return false;
    }
    return true;
}

bool EnvelopeReport::any_violation() const {
    for (const auto& l : levels) {
        if (l.violations) return true;
    }
    return false;
}

EnvelopeReport error_envelope(const Sequence& seq, const Real& x, Index depth, const OracleOptions& options) {
    PrefixSet set = enumerate_prefixes(seq, x, depth, options);
    ExpansionTrace greedy = greedy_digits(seq, x, depth, options.max_bits);
    ExpansionTrace lazy = lazy_digits(seq, x, depth, options.max_bits);
    EnvelopeReport report;
    report.depth = depth;
    for (Index n = 1; n <= depth; ++n) {
        EnvelopeLevel level;
        level.n = n;
        const Real& lo = greedy.remainders[n - 1];
        const Real& hi = lazy.remainders[n - 1];
        level.greedy_error = snapshot(lo);
        level.lazy_error = snapshot(hi);
        for (const auto& e : set.levels[n]) {
            level.observed.push_back(snapshot(e.remainder));
            Check a = check_le(lo, e.remainder, options.max_bits);
            Check b = check_le(e.remainder, hi, options.max_bits);
            if (a == Check::Fails || b == Check::Fails) {
                ++level.violations;
            } else if (e.flagged || a == Check::Unknown || b == Check::Unknown) {
                ++level.unresolved;
            }
        }
        report.levels.push_back(std::move(level));
    }
    return report;
}

std::vector<Index> branchings_per_level(const PrefixSet& set) {
    std::vector<Index> out(set.depth, 0);
    for (Index n = 0; n < set.depth; ++n) {
        for (const auto& e : set.levels[n]) {
            if (e.children == 2) ++out[n];
        }
    }
    return out;
}

Index count_branchings(const PrefixSet& set) {
    auto per = branchings_per_level(set);
    return std::accumulate(per.begin(), per.end(), Index{0});
}

Index count_branchings(const Sequence& seq, const Real& x, Index depth, const OracleOptions& options) {
    return count_branchings(enumerate_prefixes(seq, x, depth, options));
}

}  // namespace kakeya
