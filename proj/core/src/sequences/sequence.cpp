#include "kakeya/sequences/sequence.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>

#include <gmpxx.h>

#include "kakeya/error.hpp"

namespace kakeya {

std::uint8_t IndexPattern::at(Index i) const {
    if (i == 0) throw ValidationError("index patterns are 1-based");
    if (i <= prefix.size()) return prefix[i - 1];
    return period[(i - prefix.size() - 1) % period.size()];
}

bool IndexPattern::period_all_zero() const {
    return std::all_of(period.begin(), period.end(), [](std::uint8_t d) { return d == 0; });
}

Real Sequence::partial_sum(Index from, Index to) const {
    Real acc;
    for (Index i = from; i <= to; ++i) acc += term(i);
    return acc;
}

TailEnclosure Sequence::tail_enclosure(Index n, unsigned bits) const {
    Real s = tail(n);
    TailEnclosure out;
    out.n = n;
    out.interval = s.enclose(bits);
    if (const GoldenNumber* g = s.exact()) out.exact = *g;
    return out;
}

BigInt fibonacci(Index n) {
    if (n == 0) return 0;
    BigInt f;
    mpz_fib_ui(f.get_mpz_t(), n);
    return f;
}

BigInt tribonacci(Index n) {
    static std::mutex mutex;
    static std::vector<BigInt> memo = {0, 1, 1, 2};
    if (n == 0) throw ValidationError("Tribonacci numbers are 1-based");
    std::lock_guard<std::mutex> lock(mutex);
    while (memo.size() <= n) {
        std::size_t k = memo.size();
        memo.push_back(memo[k - 1] + memo[k - 2] + memo[k - 3]);
    }
    return memo[n];
}

namespace {

void validate_pattern(const IndexPattern& pattern) {
    if (pattern.period.empty()) throw ValidationError("index pattern needs a nonempty period");
}

unsigned bit_length(Index n) {
    unsigned b = 0;
    while (n > 0) {
        ++b;
        n >>= 1;
    }
    return b;
}

/// Terms exact in Q(phi); eventually p_{M+t} = c_{(t-1) mod L} * rho^(t-1).
class ClosedFormSequence final : public Sequence {
public:
    ClosedFormSequence(std::string name, std::vector<GoldenNumber> prefix, std::vector<GoldenNumber> coeffs,
                       GoldenNumber ratio)
        : name_(std::move(name)), prefix_(std::move(prefix)), coeffs_(std::move(coeffs)), ratio_(std::move(ratio)) {
        if (coeffs_.empty()) throw ValidationError("closed-form tail needs at least one coefficient");
        if (ratio_.sign() <= 0 || ratio_ >= GoldenNumber(1)) {
            throw ValidationError(name_ + ": tail ratio must lie in (0,1)");
        }
        for (Index n = 1; n <= prefix_.size() + 2 * coeffs_.size(); ++n) {
            if (term_exact(n).sign() <= 0) throw ValidationError(name_ + ": terms must be strictly positive");
        }
    }

    std::string name() const override { return name_; }
    bool is_exact() const override { return true; }
    Real term(Index n) const override { return term_exact(n); }

    std::optional<Periodicity> periodicity() const override {
        return Periodicity{prefix_.size(), coeffs_.size(), ratio_};
    }

    Real select_sum(const IndexPattern& pattern, Index offset) const override {
        validate_pattern(pattern);
        const Index M = prefix_.size();
        const Index K = pattern.prefix.size();
        Index start = std::max<Index>(K, M > offset ? M - offset : 0) + 1;
        GoldenNumber acc;
        for (Index i = 1; i < start; ++i) {
            if (pattern.at(i)) acc += term_exact(offset + i);
        }
        if (pattern.period_all_zero()) return acc;
        Index block = std::lcm(pattern.period.size(), coeffs_.size());
        GoldenNumber block_sum;
        GoldenNumber p = term_exact(offset + start);
        for (Index i = start; i < start + block; ++i) {
            if (pattern.at(i)) block_sum += p;
            p = term_exact(offset + i + 1);
        }
        return acc + block_sum / (GoldenNumber(1) - ratio_.pow(static_cast<long>(block)));
    }

    TailEnclosure tail_enclosure(Index n, unsigned bits) const override {
        TailEnclosure out = Sequence::tail_enclosure(n, bits);
        // Largest consecutive ratio beyond n: prefix ratios plus one full tail period.
        GoldenNumber worst;
        for (Index i = n + 1; i <= std::max(n + 1, prefix_.size() + 1) + coeffs_.size(); ++i) {
            GoldenNumber r = term_exact(i + 1) / term_exact(i);
            if (r > worst) worst = r;
        }
        out.ratio_bound = worst.enclose(64).hi().to_rational();
        return out;
    }

private:
    GoldenNumber term_exact(Index n) const {
        if (n == 0) throw ValidationError("sequence terms are 1-based");
        if (n <= prefix_.size()) return prefix_[n - 1];
        Index t = n - prefix_.size();
        return coeffs_[(t - 1) % coeffs_.size()] * ratio_.pow(static_cast<long>(t - 1));
    }

    std::string name_;
    std::vector<GoldenNumber> prefix_;
    std::vector<GoldenNumber> coeffs_;
    GoldenNumber ratio_;
};

/// p_i = 1 / X_{i+1} for an integer recurrence X with a proven ratio bound
/// p_{i+1} <= r p_i for all i >= ratio_from.
class IntegerReciprocalSequence final : public Sequence {
public:
    using Numbers = BigInt (*)(Index);

    IntegerReciprocalSequence(std::string name, Numbers numbers, Rational ratio_bound, Index ratio_from,
                              ProviderFacts facts)
        : name_(std::move(name)),
          numbers_(numbers),
          ratio_bound_(std::move(ratio_bound)),
          ratio_from_(ratio_from),
          facts_(std::move(facts)) {}

    std::string name() const override { return name_; }
    bool is_exact() const override { return false; }
    ProviderFacts facts() const override { return facts_; }

    Real term(Index n) const override { return exact_term(n); }

    Real select_sum(const IndexPattern& pattern, Index offset) const override {
        validate_pattern(pattern);
        if (pattern.period_all_zero()) {
            Rational acc;
            for (Index i = 1; i <= pattern.prefix.size(); ++i) {
                if (pattern.at(i)) acc += exact_term(offset + i);
            }
            return acc;
        }
        auto numbers = numbers_;
        Rational r = ratio_bound_;
        Index from = ratio_from_;
        return Real::lazy([pattern, offset, numbers, r, from](unsigned bits) {
            return sum_enclosure(pattern, offset, numbers, r, from, bits).first;
        });
    }

    TailEnclosure tail_enclosure(Index n, unsigned bits) const override {
        auto [interval, summed] = sum_enclosure(IndexPattern::all_ones(), n, numbers_, ratio_bound_, ratio_from_, bits);
        TailEnclosure out;
        out.n = n;
        out.interval = interval;
        out.terms_summed = summed;
        out.ratio_bound = ratio_bound_;
        return out;
    }

private:
    Rational exact_term(Index n) const {
        if (n == 0) throw ValidationError("sequence terms are 1-based");
        return Rational(BigInt(1), numbers_(n + 1));
    }

    // Sums selected terms until the geometric bound on everything left is below
    // 2^-bits of the accumulated sum. Returns the enclosure and the number of terms visited.
    static std::pair<Interval, Index> sum_enclosure(const IndexPattern& pattern, Index offset, Numbers numbers,
                                                    const Rational& r, Index ratio_from, unsigned bits) {
        const unsigned work = bits + 2 * bit_length(bits) + 16;
        const Index must_visit = pattern.prefix.size() + pattern.period.size();
        const Index hard_cap = 64 * static_cast<Index>(bits) + 4096;
        const Rational factor = r / (Rational(1) - r);
        Interval acc = Interval::point(Dyadic(0), work);
        Index i = 1;
        for (;; ++i) {
            Index j = offset + i;
            if (pattern.at(i)) acc = acc + Interval::enclose(Rational(BigInt(1), numbers(j + 1)), work);
            if (i < must_visit || j < ratio_from) continue;
            Rational bound = factor / Rational(numbers(j + 1));
            Rational threshold = acc.lo().to_rational() / Rational(2).pow(static_cast<long>(bits));
            if ((acc.lo().sign() > 0 && bound <= threshold) || i >= hard_cap) {
                Interval tail = Interval::enclose(Rational(0), bound, work);
                return {(acc + tail).rounded(bits + 4), i};
            }
        }
    }

    std::string name_;
    Numbers numbers_;
    Rational ratio_bound_;
    Index ratio_from_;
    ProviderFacts facts_;
};

/// p_n = q^-n for a real algebraic q, available only through enclosures.
class AlgebraicGeometricSequence final : public Sequence {
public:
    AlgebraicGeometricSequence(std::string name, AlgebraicConstant q) : name_(std::move(name)), q_(std::move(q)) {
        Real base = base_real(q_);
        ProviderFacts f;
        f.strictly_decreasing_from = 1;
        Ordering vs_phi = cmp_adaptive(base, GoldenNumber::phi());
        if (vs_phi == Ordering::Greater) {
            f.ratio_above_golden_from = 1;
        } else if (vs_phi == Ordering::Less || vs_phi == Ordering::EqualCertified) {
            f.ratio_at_most_golden_from = 1;
        }
        Ordering vs_two = cmp_adaptive(base, Real(2));
        if (vs_two == Ordering::Less || vs_two == Ordering::EqualCertified) f.at_most_double_from = 1;
        f.justification = "constant ratio p_n/p_{n+1} = q compared once with phi and 2";
        facts_ = std::move(f);
    }

    std::string name() const override { return name_; }
    bool is_exact() const override { return false; }
    ProviderFacts facts() const override { return facts_; }

    Real term(Index n) const override {
        if (n == 0) throw ValidationError("sequence terms are 1-based");
        AlgebraicConstant q = q_;
        return Real::lazy([q, n](unsigned bits) {
            unsigned work = bits + 2 * bit_length(n) + 8;
            return inverse_base(q, work).pow(n, work).rounded(bits);
        });
    }

    Real select_sum(const IndexPattern& pattern, Index offset) const override {
        validate_pattern(pattern);
        AlgebraicConstant q = q_;
        return Real::lazy([q, pattern, offset](unsigned bits) {
            const Index K = pattern.prefix.size(), P = pattern.period.size();
            unsigned work = bits + 2 * bit_length(offset + K + P) + 16;
            Interval x = inverse_base(q, work);
            Interval zero = Interval::point(Dyadic(0), work);
            Interval one = Interval::point(Dyadic(1), work);
            Interval head = zero, power = one;
            for (Index i = 1; i <= K; ++i) {
                power = power * x;
                if (pattern.at(i)) head = head + power;
            }
            Interval block = zero, block_power = one;
            for (Index t = 1; t <= P; ++t) {
                block_power = block_power * x;
                if (pattern.period[t - 1]) block = block + block_power;
            }
            Interval periodic = zero;
            if (!pattern.period_all_zero()) periodic = power * block / (one - block_power);
            return (x.pow(offset, work) * (head + periodic)).rounded(bits);
        });
    }

    TailEnclosure tail_enclosure(Index n, unsigned bits) const override {
        TailEnclosure out = Sequence::tail_enclosure(n, bits);
        out.ratio_bound = inverse_base(q_, 64).hi().to_rational();
        return out;
    }

private:
    static Real base_real(const AlgebraicConstant& q) {
        return Real::lazy([q](unsigned bits) { return q.refine(bits); });
    }

    // 1/q with an upper endpoint strictly below 1.
    static Interval inverse_base(const AlgebraicConstant& q, unsigned bits) {
        Interval base = q.refine(bits);
        for (unsigned b = bits; base.lo() <= Dyadic(1); b *= 2) base = q.refine(2 * b);
        return base.reciprocal(bits);
    }

    std::string name_;
    AlgebraicConstant q_;
    ProviderFacts facts_;
};

SequencePtr make_geometric(const Geometric& g, const std::string& name) {
    if (const auto* r = std::get_if<Rational>(&g.base)) {
        Rational inv = r->inverse();
        return std::make_shared<ClosedFormSequence>(name, std::vector<GoldenNumber>{},
                                                    std::vector<GoldenNumber>{GoldenNumber(inv)}, GoldenNumber(inv));
    }
    if (const auto* q = std::get_if<GoldenNumber>(&g.base)) {
        GoldenNumber inv = q->inverse();
        return std::make_shared<ClosedFormSequence>(name, std::vector<GoldenNumber>{}, std::vector<GoldenNumber>{inv},
                                                    inv);
    }
    return std::make_shared<AlgebraicGeometricSequence>(name, std::get<AlgebraicConstant>(g.base));
}

GoldenNumber perturbed_term(const PerturbationSchedule& s, Index n) {
    return GoldenNumber::phi().pow(-static_cast<long>(n)) * GoldenNumber(Rational(1) + s.effective(n));
}

SequencePtr make_perturbed(const PerturbedGolden& pg, const std::string& name) {
    const auto& s = pg.schedule;
    const Index M = s.epsilons.size();
    const Index L = s.mode == PerturbationMode::Alternating ? 2 : 1;
    GoldenNumber rho = GoldenNumber::phi().inverse();
    std::vector<GoldenNumber> prefix, coeffs;
    for (Index n = 1; n <= M; ++n) prefix.push_back(perturbed_term(s, n));
    for (Index r = 0; r < L; ++r) {
        coeffs.push_back(perturbed_term(s, M + 1 + r) / rho.pow(static_cast<long>(r)));
    }
    return std::make_shared<ClosedFormSequence>(name, std::move(prefix), std::move(coeffs), rho);
}

SequencePtr make_user_defined(const UserDefined& u, const std::string& name) {
    std::vector<GoldenNumber> prefix(u.terms.begin(), u.terms.end());
    GoldenNumber first_tail = GoldenNumber(u.terms.back() * u.tail_ratio);
    return std::make_shared<ClosedFormSequence>(name, std::move(prefix), std::vector<GoldenNumber>{first_tail},
                                                GoldenNumber(u.tail_ratio));
}

SequencePtr make_fibonacci(const std::string& name) {
    ProviderFacts f;
    // F_{n+2} <= 2 F_{n+1} and F_{n+2} > F_{n+1} for n >= 1.
    f.at_most_double_from = 1;
    f.strictly_decreasing_from = 1;
    f.justification = "F_{n+2} = F_{n+1} + F_n <= 2 F_{n+1}; ratio bound 2F_k >= F_{k+1} gives r = 2/3";
    return std::make_shared<IntegerReciprocalSequence>(name, &fibonacci, Rational(2, 3), 1, std::move(f));
}

SequencePtr make_tribonacci(const std::string& name) {
    ProviderFacts f;
    // For k >= 2, T_{k+1}/T_k lies in [7/4, 2]: true at k = 2, 3 and preserved by
    // T_{k+1}/T_k = 1 + T_{k-1}/T_k + (T_{k-1}/T_k)(T_{k-2}/T_{k-1}).
    // Hence p_n / p_{n+1} = T_{n+2}/T_{n+1} >= 7/4 > phi and <= 2 for n >= 1.
    f.ratio_above_golden_from = 1;
    f.at_most_double_from = 1;
    f.strictly_decreasing_from = 1;
    f.justification = "7/4 <= T_{k+1}/T_k <= 2 for k >= 2 by induction; 7/4 > phi";
    return std::make_shared<IntegerReciprocalSequence>(name, &tribonacci, Rational(4, 7), 3, std::move(f));
}

}  // namespace

SequencePtr make_sequence(const SequenceSpec& spec, const SpecOptions& options) {
    validate(spec, options);
    std::string name = to_string(spec);
    return std::visit(
        [&](const auto& s) -> SequencePtr {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Geometric>) {
                return make_geometric(s, name);
            } else if constexpr (std::is_same_v<T, FibonacciReciprocal>) {
                return make_fibonacci(name);
            } else if constexpr (std::is_same_v<T, TribonacciReciprocal>) {
                return make_tribonacci(name);
            } else if constexpr (std::is_same_v<T, PerturbedGolden>) {
                return make_perturbed(s, name);
            } else {
                return make_user_defined(s, name);
            }
        },
        spec);
}

}  // namespace kakeya
