#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "kakeya/cli/cli.hpp"
#include "kakeya/cli/json.hpp"
#include "support.hpp"

namespace kakeya {
namespace {

using test::seq;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args, int expected_code = 0) {
    args.push_back("--json");
    Result r = run(args);
    EXPECT_EQ(r.code, expected_code) << r.err;
    return Json::parse(r.out);
}

TEST(Cli, ExpandGreedy) {
    Json j = run_json({"expand", "--seq", "geometric:2", "--x", "3/8", "--mode", "greedy", "--digits", "4"});
    EXPECT_EQ(j["version"], "0.1.0");
    EXPECT_EQ(j["command"], "expand");
    EXPECT_EQ(j["sequence"], "geometric:2");
    EXPECT_EQ(j["verdict"]["digits"], "0110");
    EXPECT_EQ(j["verdict"]["remainder"], "0");
    EXPECT_TRUE(j["timings_ms"].is_object());
}

TEST(Cli, OptimalCounterexample) {
    Json j = run_json({"optimal", "--seq", "fib", "--depth", "10", "--find-counterexample", "--at-n", "2"});
    EXPECT_EQ(j["verdict"]["status"], "not_optimal");
    EXPECT_EQ(j["verdict"]["counterexample"]["x"], "8/15");
    EXPECT_EQ(j["verdict"]["counterexample"]["greedy_error"], "1/30");

    j = run_json({"optimal", "--seq", "fib", "--depth", "10", "--find-counterexample"});
    EXPECT_EQ(j["verdict"]["counterexample"]["x"], "31/30");
}

TEST(Cli, UniqueTribonacci) {
    Json j = run_json({"unique", "--seq", "trib", "--depth", "40"});
    EXPECT_EQ(j["verdict"]["status"], "unique_candidate");
    EXPECT_EQ(j["verdict"]["route"], "golden_ratio_test");
    std::string digits = j["verdict"]["digits"];
    EXPECT_EQ(digits, "0^" + std::to_string(j["verdict"]["N"].get<int>()) + "(10)");

    Result text = run({"unique", "--seq", "trib", "--depth", "40"});
    EXPECT_EQ(text.code, 0);
    EXPECT_NE(text.out.find("verdict.status: unique_candidate"), std::string::npos);
}

TEST(Cli, UniqueCandidateOption) {
    Json j = run_json({"unique", "--seq", "geometric:3/2", "--depth", "10", "--candidate", "(10)"});
    EXPECT_EQ(j["verdict"]["status"], "candidate_rejected");
    EXPECT_EQ(j["verdict"]["witness"], 1);
}

TEST(Cli, EnumerateAndEnvelope) {
    Json j = run_json({"enumerate", "--seq", "geometric:2", "--x", "1/2", "--depth", "3"});
    EXPECT_EQ(j["verdict"]["prefixes"].size(), 2u);
    EXPECT_EQ(j["verdict"]["branchings"], 1);
    j = run_json({"envelope", "--seq", "geometric:phi", "--x", "1", "--depth", "8"});
    EXPECT_EQ(j["verdict"]["status"], "contained");
    EXPECT_EQ(j["verdict"]["errors"].size(), 8u);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({"check-kakeya", "--seq", "geometric:5/2"}).code, cli::kExitError);
    EXPECT_EQ(run({"check-kakeya", "--seq", "geometric:5/2", "--allow-non-kakeya"}).code, cli::kExitOk);
    EXPECT_EQ(run({"check-kakeya", "--seq", "nonsense"}).code, cli::kExitError);
    EXPECT_EQ(run({"expand", "--seq", "fib"}).code, cli::kExitError);
    EXPECT_EQ(run({"expand", "--seq", "fib", "--x", "2/1", "--depth", "0"}).code, cli::kExitError);
    EXPECT_EQ(run({"frobnicate"}).code, cli::kExitError);
    EXPECT_EQ(run({}).code, cli::kExitError);
    EXPECT_EQ(run({"check-kakeya", "--seq", "fib", "--precision-bits", "100000"}).code, cli::kExitError);
    EXPECT_EQ(run({"expand", "--seq", "fib", "--x", "9"}).code, cli::kExitError);
    // Fibonacci ratios alternate around phi and no route is certified.
    EXPECT_EQ(run({"unique", "--seq", "fib", "--depth", "40"}).code, cli::kExitInconclusive);
    EXPECT_EQ(run({"check-kakeya", "--help"}).code, cli::kExitOk);
}

TEST(Cli, PrecisionCapFromEnvironment) {
    ::setenv("KAKEYA_MAX_BITS", "128", 1);
    EXPECT_EQ(run({"check-kakeya", "--seq", "fib", "--precision-bits", "256"}).code, cli::kExitError);
    EXPECT_EQ(run({"check-kakeya", "--seq", "fib", "--precision-bits", "64"}).code, cli::kExitOk);
    ::setenv("KAKEYA_MAX_BITS", "lots", 1);
    EXPECT_EQ(run({"check-kakeya", "--seq", "fib"}).code, cli::kExitError);
    ::unsetenv("KAKEYA_MAX_BITS");
}

TEST(Cli, Timings) {
    Json j = run_json({"check-kakeya", "--seq", "fib", "--timings"});
    EXPECT_TRUE(j["timings_ms"].contains("total"));
}

TEST(Json, ValueRoundTrip) {
    for (const Value& v : {Value(GoldenNumber(Rational::parse("8/15"))), Value(GoldenNumber::phi()),
                           Value(Interval::enclose(Rational::parse("1/3"), 40))}) {
        EXPECT_EQ(value_from_json(value_to_json(v)), v);
    }
}

TEST(Json, VerdictRoundTrip) {
    KakeyaVerdict k = check_kakeya(*seq("geometric:2"), 6);
    EXPECT_EQ(kakeya_verdict_from_json(to_json(k)), k);
    OptimalityVerdict o = check_optimality(*seq("fib"), 10);
    EXPECT_EQ(optimality_verdict_from_json(to_json(o)), o);
    CounterexampleReport c = build_counterexample(*seq("fib"), *o.sandwich);
    EXPECT_EQ(counterexample_from_json(to_json(c)), c);
    UniquenessVerdict u = certify_uniqueness(*seq("trib"), 20);
    EXPECT_EQ(uniqueness_verdict_from_json(to_json(u)), u);
    EnvelopeReport e = error_envelope(*seq("geometric:2"), Real(Rational::parse("3/8")), 4);
    EXPECT_EQ(envelope_report_from_json(to_json(e)), e);
    for (const auto& m : min_error_per_depth(*seq("fib"), Real(Rational::parse("8/15")), 5)) {
        EXPECT_EQ(min_error_from_json(to_json(m)), m);
    }
}

}  // namespace
}  // namespace kakeya
