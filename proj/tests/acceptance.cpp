// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <functional>
#include <iostream>

#include "properties.hpp"

namespace kakeya::test {
namespace {

struct Check {
    std::vector<std::string> problems;
    void expect(bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    }
};

GoldenNumber err_at(const ExpansionTrace& t, Index n) { return exact(t.remainders.at(n - 1)); }

void fibonacci_non_optimality(Check& c) {
    auto fib = seq("fib");
    GoldenNumber x(Rational::parse("8/15"));
    ExpansionTrace greedy = greedy_digits(*fib, Real(x), 5);
    c.expect(greedy.digits.str() == "01000", "greedy digits " + greedy.digits.str());
    c.expect(err_at(greedy, 5) == GoldenNumber(Rational::parse("1/30")), "greedy error " + err_at(greedy, 5).str());
    // 1/F_4 + 1/F_5 written out by hand.
    GoldenNumber alt = x - GoldenNumber(Rational::parse("1/3")) - GoldenNumber(Rational::parse("1/5"));
    c.expect(alt == GoldenNumber(0), "00110 leaves " + alt.str());
    c.expect(exact(evaluate(*fib, DigitWord::parse("00110"))) == x, "00110 does not evaluate to 8/15");
}

void golden_optimality(Check& c) {
    auto s = seq("geometric:phi");
    OptimalityVerdict v = check_optimality(*s, 50);
    c.expect(v.status == OptimalityVerdict::Status::OptimalWitness, "status " + to_string(v.status));
    c.expect(v.k == std::vector<Index>(50, 1), "k is not identically 1");
    GoldenNumber phi = GoldenNumber::phi();
    for (Index n = 1; n <= 50; ++n) {
        c.expect(exact(s->term(n)) == phi.pow(-static_cast<long>(n)), "term " + std::to_string(n));
        c.expect(phi.pow(-static_cast<long>(n)) == phi.pow(-static_cast<long>(n + 1)) + phi.pow(-static_cast<long>(n + 2)),
                 "equality at " + std::to_string(n));
    }
    std::mt19937_64 rng(101);
    for (int i = 0; i < 20; ++i) {
        GoldenNumber x = random_golden(rng, phi);
        ExpansionTrace t = greedy_digits(*s, Real(x), 10);
        auto minima = min_error_per_depth(*s, Real(x), 10);
        for (Index n = 1; n <= 10; ++n) {
            c.expect(!minima[n - 1].uncertain && exact(minima[n - 1].value) == err_at(t, n),
                     "x=" + x.str() + " depth " + std::to_string(n));
        }
    }
}

void only_if_direction(Check& c) {
    auto fib = seq("fib");
    OptimalityVerdict v = check_optimality(*fib, 10);
    c.expect(v.status == OptimalityVerdict::Status::NotOptimal, "status " + to_string(v.status));
    if (!v.sandwich) {
        c.expect(false, "no sandwich");
        return;
    }
    const auto& w = *v.sandwich;
    c.expect(v.smallest && w.n == 1 && w.k == 2, "sandwich at n=" + std::to_string(w.n) + " k=" + std::to_string(w.k));
    GoldenNumber lower(Rational::parse("1/2") + Rational::parse("1/3"));
    GoldenNumber upper = lower + GoldenNumber(Rational::parse("1/5"));
    c.expect(exact(w.lower) == lower && lower == GoldenNumber(Rational::parse("5/6")), "lower " + to_string(w.lower));
    c.expect(exact(w.upper) == upper && upper == GoldenNumber(Rational::parse("31/30")), "upper " + to_string(w.upper));
    c.expect(lower < GoldenNumber(1) && GoldenNumber(1) < upper, "sandwich does not hold");

    CounterexampleReport r = build_counterexample(*fib, w);
    c.expect(r.certified, "counterexample not certified");
    GoldenNumber x = exact(r.x);
    PrefixSet set = enumerate_prefixes(*fib, Real(x), r.position);
    bool alt = false, greedy = false;
    for (const auto& e : set.prefixes()) {
        alt = alt || (e.word == r.alt_digits && !e.flagged);
        greedy = greedy || e.word == r.greedy_digits;
    }
    c.expect(alt && greedy, "oracle misses alt or greedy prefix");
    c.expect(exact(evaluate(*fib, r.alt_digits)) == x, "alt digits do not evaluate to x");
    auto minima = min_error_per_depth(set);
    c.expect(exact(minima[r.position - 1].value) == GoldenNumber(0), "oracle minimum is not zero");
    c.expect(exact(r.greedy_error) > GoldenNumber(0), "greedy error not positive");
}

void envelope(Check& c) {
    auto s = seq("geometric:phi");
    std::mt19937_64 rng(104);
    for (int i = 0; i < 20; ++i) {
        GoldenNumber x = random_golden(rng, GoldenNumber::phi());
        EnvelopeReport r = error_envelope(*s, Real(x), 10);
        c.expect(r.levels.size() == 10 && r.all_contained(), "envelope not contained for x=" + x.str());
        for (const auto& l : r.levels) {
            for (const auto& o : l.observed) {
                c.expect(exact(l.greedy_error) <= exact(o) && exact(o) <= exact(l.lazy_error),
                         "x=" + x.str() + " n=" + std::to_string(l.n));
            }
        }
    }
}

void uniqueness_thresholds(Check& c) {
    auto high = seq("geometric:19/10");
    UniquenessVerdict v = certify_uniqueness(*high, 40);
    c.expect(v.status == UniquenessVerdict::Status::UniqueCandidate, "19/10 status " + to_string(v.status));
    c.expect(v.digits && v.zeros && *v.digits == EventuallyPeriodicDigits::zeros_then_ten(*v.zeros),
             "19/10 candidate is not 0^N(10)");
    c.expect(v.unconditional, "19/10 not unconditional");
    UniquenessVerdict w = check_unique_candidate(*high, EventuallyPeriodicDigits::parse("(10)"), 40);
    c.expect(w.status == UniquenessVerdict::Status::UniqueCandidate && w.certified_indices.size() == 40,
             "window check of (10) for 19/10");
    if (v.digits) {
        UniquenessVerdict own = check_unique_candidate(*high, *v.digits, 40);
        c.expect(own.status == UniquenessVerdict::Status::UniqueCandidate, "window check of certified candidate");
    }
    UniquenessVerdict low = certify_uniqueness(*seq("geometric:3/2"), 40);
    c.expect(low.status == UniquenessVerdict::Status::NoUnique, "3/2 status " + to_string(low.status));
    c.expect(GoldenNumber(Rational::parse("3/2")) < GoldenNumber::phi() &&
                 GoldenNumber(Rational::parse("19/10")) > GoldenNumber::phi(),
             "threshold sides");
}

void tribonacci_uniqueness(Check& c) {
    for (Index n = 3; n <= 64; ++n) {
        BigInt s = tribonacci(n + 1), t = tribonacci(n + 2);
        c.expect(golden_compare_integers(s, t) == GoldenOrder::Greater, "T ratio at " + std::to_string(n));
        c.expect(t * t > t * s + s * s, "integer test at " + std::to_string(n));
    }
    UniquenessVerdict v = certify_uniqueness(*seq("trib"), 40);
    c.expect(v.status == UniquenessVerdict::Status::UniqueCandidate, "status " + to_string(v.status));
    c.expect(v.route == UniquenessRoute::GoldenRatioTest, "route " + to_string(v.route));
    c.expect(v.digits && v.zeros && *v.digits == EventuallyPeriodicDigits::zeros_then_ten(*v.zeros),
             "candidate is not 0^N(10)");
}

void alternation(Check& c) {
    GoldenNumber ratio = GoldenNumber(Rational::parse("9/10")) / GoldenNumber(Rational::parse("11/10"));
    c.expect(ratio == GoldenNumber(Rational::parse("9/11")), "ratio");
    c.expect(ratio >= GoldenNumber::phi() - GoldenNumber(1), "9/11 < phi - 1");
    auto s = seq("perturbed-phi:alt:1/10");
    UniquenessVerdict v = certify_uniqueness(*s, 30);
    c.expect(v.status == UniquenessVerdict::Status::NoUnique, "status " + to_string(v.status));
    c.expect(v.route == UniquenessRoute::Alternation, "route " + to_string(v.route));
    c.expect(v.unconditional, "not extended to all n");
    // Closed forms: p_k = phi^-k (1 + (-1)^k / 10), and sum_{i>=0} phi^-(m+2i) = phi^-m / (1 - phi^-2).
    GoldenNumber phi = GoldenNumber::phi();
    GoldenNumber geo = (GoldenNumber(1) - phi.pow(-2)).inverse();
    GoldenNumber up(Rational::parse("11/10")), down(Rational::parse("9/10"));
    for (long n = 1; n <= 15; ++n) {
        GoldenNumber p_even = phi.pow(-2 * n) * up;
        GoldenNumber odd_tail = phi.pow(-(2 * n + 1)) * down * geo;
        GoldenNumber p_odd = phi.pow(-(2 * n + 1)) * down;
        GoldenNumber even_tail = phi.pow(-(2 * n + 2)) * up * geo;
        c.expect(exact(s->term(2 * n)) == p_even && exact(s->term(2 * n + 1)) == p_odd, "terms");
        c.expect(p_even >= odd_tail, "first inequality at n=" + std::to_string(n));
        c.expect(p_odd <= even_tail, "second inequality at n=" + std::to_string(n));
        c.expect(exact(s->select_sum(IndexPattern::every_other(), 2 * n)) == odd_tail, "odd tail sum");
    }
}

void property_suites(Check& c) {
    for (const auto& [name, run] : std::vector<std::pair<std::string, std::function<PropertyResult()>>>{
             {"lexicographic extremality", [] { return lex_extremality(201, 100); }},
             {"remainder bounds", [] { return remainder_bounds(202, 100); }},
             {"reflection duality", [] { return reflection_duality(203, 100); }},
             {"constant tail rejection", [] { return constant_tail_rejection(204, 100); }},
             {"geometric dichotomy", [] { return geometric_dichotomy(205, 100); }},
         }) {
        PropertyResult r = run();
        c.expect(r.cases >= 100, name + ": only " + std::to_string(r.cases) + " cases");
        for (const auto& f : r.failures) c.expect(false, name + ": " + f);
    }
}

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;
    std::function<void(Check&)> body;
};

}  // namespace
}  // namespace kakeya::test

int main() {
    using namespace kakeya::test;
    const std::vector<Criterion> criteria = {
        {1, "Fibonacci greedy error 1/30 vs exact 00110", 1, fibonacci_non_optimality},
        {2, "golden ratio optimal witness and oracle agreement", 10, golden_optimality},
        {3, "Fibonacci smallest sandwich and validated counterexample", 1, only_if_direction},
        {4, "golden ratio error envelope", 30, envelope},
        {5, "geometric uniqueness thresholds", 5, uniqueness_thresholds},
        {6, "Tribonacci unique expansion", 1, tribonacci_uniqueness},
        {7, "alternated perturbation has no unique expansion", 5, alternation},
        {8, "property suites", 60, property_suites},
    };
    int failed = 0;
    for (const auto& cr : criteria) {
        Check check;
        auto start = std::chrono::steady_clock::now();
        try {
            cr.body(check);
        } catch (const std::exception& e) {
            check.problems.push_back(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > cr.limit_seconds) {
            check.problems.push_back("took " + std::to_string(secs) + " s, limit " + std::to_string(cr.limit_seconds));
        }
        bool ok = check.problems.empty();
        failed += !ok;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << cr.id << ": " << cr.title << " (" << secs << " s)";
        if (!ok) std::cout << " -- " << check.problems.front();
        std::cout << "\n";
        for (std::size_t i = 1; i < check.problems.size() && i < 5; ++i) std::cout << "    " << check.problems[i] << "\n";
    }
    return failed == 0 ? 0 : 1;
}
