#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "kakeya/cli/cli.hpp"
#include "kakeya/cli/json.hpp"
#include "kakeya/numerics/algebraic.hpp"
#include "properties.hpp"

namespace kakeya {
namespace {

using namespace test;

constexpr std::size_t kCases = 100;

void expect_ok(const PropertyResult& r) {
    EXPECT_GE(r.cases, kCases);
    for (const auto& f : r.failures) ADD_FAILURE() << f;
}

Interval enclose(const Rational& r) { return Interval::enclose(r, 53); }

TEST(Property, IntervalInclusion) {
    std::mt19937_64 rng(11);
    for (std::size_t c = 0; c < 500; ++c) {
        Rational a = random_rational(rng, Rational(-5), Rational(5), 10007);
        Rational b = random_rational(rng, Rational(1) / Rational(7), Rational(5), 10007);
        EXPECT_TRUE((enclose(a) + enclose(b)).contains(a + b));
        EXPECT_TRUE((enclose(a) - enclose(b)).contains(a - b));
        EXPECT_TRUE((enclose(a) * enclose(b)).contains(a * b));
        EXPECT_TRUE((enclose(a) / enclose(b)).contains(a / b));
        EXPECT_TRUE(enclose(b).reciprocal(40).contains(b.inverse()));
        EXPECT_TRUE(enclose(b).pow(5, 40).contains(b.pow(5)));
        EXPECT_TRUE(enclose(a).rounded(12).contains(enclose(a)));
    }
}

TEST(Property, GoldenEnclosureAndComparison) {
    std::mt19937_64 rng(12);
    for (std::size_t c = 0; c < 1000; ++c) {
        GoldenNumber a = random_golden(rng, GoldenNumber(10)) - GoldenNumber(5);
        GoldenNumber b = random_golden(rng, GoldenNumber(10)) - GoldenNumber(5);
        unsigned bits = 16 + c % 200;
        Interval ia = a.enclose(bits);
        EXPECT_TRUE(ia.contains(a.enclose(bits + 64)));
        Real la = Real::lazy([a](unsigned p) { return a.enclose(p); });
        Real lb = Real::lazy([b](unsigned p) { return b.enclose(p); });
        Ordering expected = a < b ? Ordering::Less : (a > b ? Ordering::Greater : Ordering::Inconclusive);
        EXPECT_EQ(cmp_adaptive(la, lb), expected) << a.str() << " vs " << b.str();
        EXPECT_EQ(cmp_adaptive(Real(a), Real(b)),
                  a < b ? Ordering::Less : (a > b ? Ordering::Greater : Ordering::EqualCertified));
    }
}

TEST(Property, GoldenIntegerTestMatchesField) {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long> dist(1, 1000000);
    for (std::size_t c = 0; c < 1000; ++c) {
        long s = dist(rng), t = dist(rng);
        bool greater = GoldenNumber(t) > GoldenNumber::phi() * GoldenNumber(s);
        EXPECT_EQ(golden_compare_integers(s, t), greater ? GoldenOrder::Greater : GoldenOrder::Less);
    }
}

TEST(Property, RefineContraction) {
    std::mt19937_64 rng(14);
    std::uniform_int_distribution<unsigned> bits(2, 300);
    std::vector<AlgebraicConstant> roots = {
        AlgebraicConstant(IntPolynomial::from_descending({1, -1, -1}), 1, 2),
        AlgebraicConstant(IntPolynomial::from_descending({1, -1, -1, -1}), 1, 2),
        AlgebraicConstant(IntPolynomial::from_descending({1, 0, -2}), 1, 2),
        AlgebraicConstant(IntPolynomial::from_descending({2, -3}), 1, 2),
    };
    for (std::size_t c = 0; c < 200; ++c) {
        const AlgebraicConstant& a = roots[c % roots.size()];
        unsigned b1 = bits(rng), b2 = b1 + bits(rng);
        Interval coarse = a.refine(b1), fine = a.refine(b2);
        EXPECT_LE(coarse.width(), Rational(2) / Rational(2).pow(b1));
        EXPECT_LE(fine.width(), Rational(2) / Rational(2).pow(b2));
        EXPECT_TRUE(coarse.contains(fine)) << a.str() << " " << b1 << " " << b2;
        const auto& p = a.polynomial();
        EXPECT_LE(p.sign_at(fine.lo().to_rational()) * p.sign_at(fine.hi().to_rational()), 0);
    }
}

const std::vector<std::string> kBuiltins = {"fib", "trib", "geometric:3/2", "geometric:phi", "geometric:19/10",
                                            "geometric:poly(1,-1,-1,-1)", "perturbed-phi:alt:1/10",
                                            "perturbed-phi:same:1/10,0"};

TEST(Property, TermTailConsistency) {
    std::size_t cases = 0;
    for (const auto& name : kBuiltins) {
        auto s = seq(name);
        for (Index n = 1; n <= 64; ++n, ++cases) {
            Real diff = s->tail(n - 1) - s->tail(n);
            if (diff.is_exact() && s->term(n).is_exact()) {
                EXPECT_EQ(exact(diff), exact(s->term(n))) << name << " n=" << n;
            }
            Interval d = s->tail_enclosure(n - 1, 128).interval - s->tail_enclosure(n, 128).interval;
            EXPECT_TRUE(d.contains(s->term(n).enclose(256))) << name << " n=" << n;
        }
    }
    EXPECT_GE(cases, kCases);
}

TEST(Property, StrictDecrease) {
    for (const auto& name : kBuiltins) {
        auto s = seq(name);
        for (Index n = 1; n <= 64; ++n) {
            EXPECT_EQ(cmp_adaptive(s->term(n), s->term(n + 1)), Ordering::Greater) << name << " n=" << n;
        }
    }
}

TEST(Property, TailEnclosureContainsPartialSums) {
    std::size_t cases = 0;
    for (const auto& s : {seq("fib"), seq("trib")}) {
        for (Index n = 0; n < 60; ++n, ++cases) {
            TailEnclosure e = s->tail_enclosure(n, 64);
            ASSERT_GT(e.terms_summed, 0u);
            GoldenNumber partial = exact(s->partial_sum(n + 1, n + 10 * e.terms_summed));
            EXPECT_TRUE(e.interval.contains(partial.rational_part())) << s->name() << " n=" << n;
            EXPECT_LT(e.ratio_bound, Rational(1));
        }
    }
    EXPECT_GE(cases, kCases);
}

TEST(Property, ClosedFormTailsAreExact) {
    UserDefined u;
    u.terms = {Rational(1) / Rational(2), Rational(1) / Rational(3), Rational(1) / Rational(5)};
    u.tail_ratio = Rational(1) / Rational(2);
    auto s = make_sequence(u);
    for (Index n = 0; n < 100; ++n) {
        TailEnclosure e = s->tail_enclosure(n, 64);
        ASSERT_TRUE(e.exact);
        EXPECT_TRUE(e.interval.contains(e.exact->rational_part()));
        GoldenNumber partial = exact(s->partial_sum(n + 1, n + 10));
        EXPECT_LT(partial, *e.exact);
        EXPECT_EQ(*e.exact, partial + exact(s->tail(n + 10)));
    }
}

TEST(Property, GeometricDichotomy) { expect_ok(geometric_dichotomy(15, kCases)); }

TEST(Property, LexicographicExtremality) { expect_ok(lex_extremality(16, kCases)); }

TEST(Property, RemainderBounds) { expect_ok(remainder_bounds(17, kCases)); }

TEST(Property, ReflectionDuality) { expect_ok(reflection_duality(18, kCases)); }

TEST(Property, ConstantTailRejection) { expect_ok(constant_tail_rejection(19, kCases)); }

TEST(Property, Reconstruction) {
    std::mt19937_64 rng(20);
    std::uniform_int_distribution<Index> depth_dist(1, 25);
    for (std::size_t c = 0; c < kCases; ++c) {
        std::string name;
        auto s = random_exact_sequence(rng, &name);
        Index depth = depth_dist(rng);
        GoldenNumber x = random_target(rng, *s, 10);
        for (const auto& t : {greedy_digits(*s, Real(x), depth), lazy_digits(*s, Real(x), depth)}) {
            for (Index n = 1; n <= depth; ++n) {
                std::vector<std::uint8_t> d(t.digits.digits().begin(), t.digits.digits().begin() + n);
                EXPECT_EQ(exact(evaluate(*s, DigitWord(d))) + exact(t.remainders[n - 1]), x) << name;
            }
        }
    }
}

TEST(Property, CanonicalDigitsRoundTrip) {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<Index> len(0, 9), per(1, 5);
    std::bernoulli_distribution coin(0.5);
    auto fib = seq("fib");
    auto phi = seq("geometric:phi");
    for (std::size_t c = 0; c < 300; ++c) {
        std::vector<std::uint8_t> pre(len(rng)), period(per(rng));
        for (auto& d : pre) d = coin(rng);
        for (auto& d : period) d = coin(rng);
        EventuallyPeriodicDigits raw{DigitWord(pre), DigitWord(period)};
        EXPECT_EQ(EventuallyPeriodicDigits::parse(raw.str()), raw) << raw.str();
        for (Index i = 1; i <= 30; ++i) {
            std::uint8_t expected = i <= pre.size() ? pre[i - 1] : period[(i - pre.size() - 1) % period.size()];
            EXPECT_EQ(raw.at(i), expected);
        }
        // The canonical form denotes the same digit string, hence the same value.
        EXPECT_EQ(exact(evaluate(*phi, raw)), exact(phi->select_sum(IndexPattern{pre, period}, 0)));
        Interval a = evaluate(*fib, raw).enclose(64);
        Interval b = fib->select_sum(IndexPattern{pre, period}, 0).enclose(64);
        EXPECT_TRUE(a.contains(b.lo().to_rational()) || b.contains(a.lo().to_rational()));
    }
}

std::set<std::string> brute_force_prefixes(const Sequence& s, const GoldenNumber& x, Index depth) {
    std::set<std::string> out;
    Real tail = s.tail(depth);
    for (const auto& w : all_words(depth)) {
        GoldenNumber r = word_remainder(s, x, w);
        if (r.sign() >= 0 && cmp_adaptive(Real(r), tail) != Ordering::Greater) out.insert(w.str());
    }
    return out;
}

TEST(Property, OracleCompleteness) {
    std::mt19937_64 rng(22);
    std::uniform_int_distribution<Index> depth_dist(1, 10);
    for (std::size_t c = 0; c < kCases; ++c) {
        std::string name;
        auto s = random_exact_sequence(rng, &name);
        Index depth = depth_dist(rng);
        GoldenNumber x = random_target(rng, *s, depth);
        PrefixSet set = enumerate_prefixes(*s, Real(x), depth);
        std::set<std::string> found;
        for (const auto& e : set.prefixes()) {
            EXPECT_FALSE(e.flagged);
            found.insert(e.word.str());
        }
        EXPECT_EQ(found, brute_force_prefixes(*s, x, depth)) << describe(name, x, depth);
    }
}

TEST(Property, OracleOverApproximation) {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<Index> depth_dist(4, 12);
    auto poly = seq("geometric:poly(1,-1,-1,-1)");
    auto trib = seq("trib");
    for (std::size_t c = 0; c < kCases; ++c) {
        const Sequence& s = c % 2 ? *poly : *trib;
        Index depth = depth_dist(rng);
        Real x(random_rational(rng, Rational(0), Rational(11) / Rational(10)));
        std::set<std::string> coarse, fine;
        OracleOptions low, high;
        low.max_bits = 16;
        high.max_bits = 32;
        PrefixSet low_set = enumerate_prefixes(s, x, depth, low);
        PrefixSet high_set = enumerate_prefixes(s, x, depth, high);
        for (const auto& e : low_set.prefixes()) coarse.insert(e.word.str());
        for (const auto& e : high_set.prefixes()) fine.insert(e.word.str());
        EXPECT_FALSE(fine.empty());
        for (const auto& w : fine) EXPECT_TRUE(coarse.count(w)) << s.name() << " " << w;
    }
}

TEST(Property, GreedyMatchesOracleUnderWitness) {
    std::mt19937_64 rng(24);
    auto s = seq("geometric:phi");
    ASSERT_EQ(check_optimality(*s, 12).status, OptimalityVerdict::Status::OptimalWitness);
    for (std::size_t c = 0; c < kCases; ++c) {
        GoldenNumber x = random_target(rng, *s, 10);
        auto minima = min_error_per_depth(*s, Real(x), 10);
        ExpansionTrace t = greedy_digits(*s, Real(x), 10);
        for (Index n = 1; n <= 10; ++n) {
            EXPECT_EQ(exact(minima[n - 1].value), exact(t.remainders[n - 1])) << x.str() << " n=" << n;
            EXPECT_EQ(minima[n - 1].argmin, DigitWord(std::vector<std::uint8_t>(
                                                t.digits.digits().begin(), t.digits.digits().begin() + n)));
        }
    }
}

TEST(Property, CounterexamplesBeatGreedy) {
    std::mt19937_64 rng(25);
    std::vector<SequencePtr> specs;
    for (std::size_t c = 0; c < kCases; ++c) {
        UserDefined u;
        std::size_t len = 2 + c % 4;
        Rational t(1);
        for (std::size_t i = 0; i < len; ++i) {
            t *= random_rational(rng, Rational(1) / Rational(2), Rational(4) / Rational(5), 20);
            u.terms.push_back(t);
        }
        u.tail_ratio = random_rational(rng, Rational(1) / Rational(2), Rational(4) / Rational(5), 20);
        auto s = make_sequence(u);
        if (check_kakeya(*s, 12).status != KakeyaVerdict::Status::Kakeya) continue;
        OptimalityVerdict v = check_optimality(*s, 8);
        if (v.status == OptimalityVerdict::Status::OptimalWitness) {
            for (std::size_t i = 1; i < v.k.size(); ++i) EXPECT_LE(v.k[i - 1], v.k[i]);
            continue;
        }
        if (v.status != OptimalityVerdict::Status::NotOptimal) continue;
        CounterexampleReport r = build_counterexample(*s, *v.sandwich);
        ASSERT_TRUE(r.certified);
        GoldenNumber x = exact(r.x);
        PrefixSet set = enumerate_prefixes(*s, Real(x), r.position);
        bool alt_feasible = false;
        for (const auto& e : set.prefixes()) alt_feasible = alt_feasible || e.word == r.alt_digits;
        EXPECT_TRUE(alt_feasible) << s->name();
        auto minima = min_error_per_depth(set);
        EXPECT_LT(exact(minima[r.position - 1].value), exact(r.greedy_error)) << s->name();
    }
}

TEST(Property, UniquenessCrossCheck) {
    std::mt19937_64 rng(26);
    std::size_t unique = 0, none = 0;
    for (std::size_t c = 0; c < kCases; ++c) {
        Rational base = random_rational(rng, Rational(1), Rational(2), 60);
        auto s = seq("geometric:" + base.str());
        UniquenessVerdict v = certify_uniqueness(*s, 20);
        if (v.status == UniquenessVerdict::Status::UniqueCandidate) {
            ++unique;
            EXPECT_EQ(check_unique_candidate(*s, *v.digits, 20).status, UniquenessVerdict::Status::UniqueCandidate)
                << base.str();
        } else {
            ASSERT_EQ(v.status, UniquenessVerdict::Status::NoUnique) << base.str();
            ++none;
            GoldenNumber total = exact(s->tail(0));
            // Targets within about p_12 of an endpoint cannot branch before depth 12, so draw from the middle half.
            Rational quarter = total.rational_part() / Rational(4);
            for (int t = 0; t < 10; ++t) {
                Real x(random_rational(rng, quarter, Rational(3) * quarter));
                EXPECT_GT(count_branchings(*s, x, 12), 0u) << base.str();
            }
        }
    }
    EXPECT_GT(unique, 0u);
    EXPECT_GT(none, 0u);
}

TEST(Property, JsonRoundTrip) {
    std::mt19937_64 rng(27);
    std::uniform_int_distribution<Index> depth_dist(1, 12);
    for (std::size_t c = 0; c < kCases; ++c) {
        std::string name;
        auto s = random_exact_sequence(rng, &name);
        Index depth = depth_dist(rng);
        KakeyaVerdict k = check_kakeya(*s, depth);
        EXPECT_EQ(kakeya_verdict_from_json(Json::parse(to_json(k).dump())), k) << name;
        OptimalityVerdict o = check_optimality(*s, depth);
        EXPECT_EQ(optimality_verdict_from_json(Json::parse(to_json(o).dump())), o) << name;
        UniquenessVerdict u = certify_uniqueness(*s, depth);
        EXPECT_EQ(uniqueness_verdict_from_json(Json::parse(to_json(u).dump())), u) << name;
        GoldenNumber x = random_target(rng, *s, std::min<Index>(depth, 8));
        EnvelopeReport e = error_envelope(*s, Real(x), std::min<Index>(depth, 8));
        EXPECT_EQ(envelope_report_from_json(Json::parse(to_json(e).dump())), e) << name;
    }
}

TEST(Property, CliDeterminism) {
    std::mt19937_64 rng(28);
    const std::vector<std::string> commands = {"check-kakeya", "expand", "enumerate", "optimal", "unique", "envelope"};
    for (std::size_t c = 0; c < kCases; ++c) {
        std::string name;
        auto s = random_exact_sequence(rng, &name);
        std::string command = commands[c % commands.size()];
        std::vector<std::string> args = {command, "--seq", name, "--depth", std::to_string(1 + c % 8), "--json"};
        if (command == "expand" || command == "enumerate" || command == "envelope") {
            args.push_back("--x=" + random_target(rng, *s, 6).str());
        }
        std::ostringstream out1, err1, out2, err2;
        int code1 = cli::run(args, out1, err1);
        int code2 = cli::run(args, out2, err2);
        EXPECT_EQ(code1, code2);
        EXPECT_EQ(out1.str(), out2.str()) << name << " " << command;
        EXPECT_EQ(err1.str(), err2.str());
    }
}

}  // namespace
}  // namespace kakeya
