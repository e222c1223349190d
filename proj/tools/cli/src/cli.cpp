#include "kakeya/cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>

#include "kakeya/cli/json.hpp"
#include "kakeya/error.hpp"

#ifndef KAKEYA_VERSION
#define KAKEYA_VERSION "0.0.0"
#endif

namespace kakeya::cli {

namespace {

struct Options {
    std::string seq;
    std::string x;
    Index depth = 20;
    Index digits = 10;
    std::string mode = "greedy";
    bool json = false;
    unsigned precision_bits = 0;
    bool allow_non_kakeya = false;
    bool find_counterexample = false;
    Index at_n = 0;
    std::string candidate;
    bool timings = false;
    bool allow_deep = false;
};

// Outcome of one subcommand: the verdict object and whether it is conclusive.
struct Outcome {
    Json verdict;
    bool conclusive = true;
};

unsigned precision_cap() {
    if (const char* env = std::getenv("KAKEYA_MAX_BITS")) {
        try {
            std::size_t used = 0;
            unsigned long v = std::stoul(env, &used);
            if (used == std::string(env).size() && v > 0 && v <= 1u << 20) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
        throw ValidationError(std::string("KAKEYA_MAX_BITS must be a positive integer, got '") + env + "'");
    }
    return kDefaultMaxBits;
}

Real parse_x(const std::string& text) {
    if (text.empty()) throw ValidationError("--x is required for this command");
    return Real(GoldenNumber::parse(text));
}

Json digit_values(const ExpansionTrace& t) {
    Json r = Json::array();
    for (Index n = 1; n <= t.remainders.size(); ++n) r.push_back(value_to_json(t.remainder(n)));
    return r;
}

Outcome cmd_check_kakeya(const Sequence& seq, const Options& o, unsigned bits) {
    KakeyaVerdict v = check_kakeya(seq, o.depth, bits);
    return {to_json(v), v.status != KakeyaVerdict::Status::Inconclusive};
}

Outcome cmd_expand(const Sequence& seq, const Options& o, unsigned bits) {
    Real x = parse_x(o.x);
    ExpansionTrace t;
    if (o.mode == "greedy") {
        t = greedy_digits(seq, x, o.digits, bits);
    } else if (o.mode == "lazy") {
        t = lazy_digits(seq, x, o.digits, bits);
    } else {
        throw ValidationError("--mode must be greedy or lazy");
    }
    Json j;
    j["status"] = "ok";
    j["mode"] = o.mode;
    j["depth"] = o.digits;
    j["x"] = value_to_json(snapshot(x));
    j["digits"] = t.digits.str();
    j["remainder"] = t.remainders.empty() ? value_to_json(snapshot(x)) : value_to_json(t.remainder(o.digits));
    j["remainders"] = digit_values(t);
    return {j, true};
}

OracleOptions oracle_options(const Options& o, unsigned bits) {
    OracleOptions opt;
    opt.max_bits = bits;
    opt.allow_deep = o.allow_deep;
    return opt;
}

Outcome cmd_enumerate(const Sequence& seq, const Options& o, unsigned bits) {
    Real x = parse_x(o.x);
    PrefixSet set = enumerate_prefixes(seq, x, o.depth, oracle_options(o, bits));
    Json prefixes = Json::array();
    bool flagged = false;
    for (const auto& e : set.prefixes()) {
        prefixes.push_back(Json{{"digits", e.word.str()},
                                {"remainder", value_to_json(snapshot(e.remainder))},
                                {"flagged", e.flagged}});
        flagged = flagged || e.flagged;
    }
    Json minima = Json::array();
    for (const auto& m : min_error_per_depth(set, bits)) minima.push_back(to_json(m));
    Json j;
    j["status"] = flagged ? "flagged" : "ok";
    j["depth"] = o.depth;
    j["x"] = value_to_json(snapshot(x));
    j["prefixes"] = prefixes;
    j["branchings"] = count_branchings(set);
    j["branchings_per_level"] = Json(branchings_per_level(set));
    j["min_errors"] = minima;
    return {j, !flagged};
}

Outcome cmd_optimal(const Sequence& seq, const Options& o, unsigned bits) {
    OptimalityVerdict v = check_optimality(seq, o.depth, bits);
    Json j = to_json(v);
    bool conclusive = v.status != OptimalityVerdict::Status::Inconclusive;
    if (o.find_counterexample || o.at_n) {
        std::optional<SandwichWitness> w;
        if (o.at_n) {
            w = find_sandwich_at(seq, o.at_n, bits);
            if (!w) throw ValidationError("no sandwich at n = " + std::to_string(o.at_n));
        } else {
            w = v.sandwich;
        }
        if (w) j["counterexample"] = to_json(build_counterexample(seq, *w, bits));
    }
    return {j, conclusive};
}

Outcome cmd_unique(const Sequence& seq, const Options& o, unsigned bits) {
    UniquenessVerdict v = o.candidate.empty()
                              ? certify_uniqueness(seq, o.depth, bits)
                              : check_unique_candidate(seq, EventuallyPeriodicDigits::parse(o.candidate), o.depth, bits);
    return {to_json(v), v.status != UniquenessVerdict::Status::Inconclusive};
}

Outcome cmd_envelope(const Sequence& seq, const Options& o, unsigned bits) {
    Real x = parse_x(o.x);
    EnvelopeReport r = error_envelope(seq, x, o.depth, oracle_options(o, bits));
    Json j = to_json(r);
    return {j, r.all_contained() || r.any_violation()};
}

void render_text(const Json& j, const std::string& prefix, std::ostream& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            render_text(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
        }
    } else if (j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); })) {
        out << prefix << ":";
        for (const auto& e : j) out << " " << (e.is_string() ? e.get<std::string>() : e.dump());
        out << "\n";
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) render_text(j[i], prefix + "[" + std::to_string(i) + "]", out);
    } else {
        out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Expansions over Kakeya sequences: greedy, lazy, optimal and unique"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seq", o.seq, "sequence spec, e.g. fib, trib, geometric:3/2, file:<path>")->required();
        sub->add_flag("--json", o.json, "emit JSON");
        sub->add_option("--precision-bits", o.precision_bits, "working precision cap in bits");
        sub->add_flag("--allow-non-kakeya", o.allow_non_kakeya, "accept geometric bases above 2");
        sub->add_flag("--timings", o.timings, "report wall-clock timings in JSON");
    };
    CLI::App* check = app.add_subcommand("check-kakeya", "check p_n <= S_n");
    add_common(check);
    check->add_option("--depth", o.depth, "indices to check")->check(CLI::PositiveNumber);

    CLI::App* expand = app.add_subcommand("expand", "greedy or lazy digits of x");
    add_common(expand);
    expand->add_option("--x", o.x, "value to expand (p/q or a+b*phi)")->required();
    expand->add_option("--digits,--depth", o.digits, "number of digits")->check(CLI::PositiveNumber);
    expand->add_option("--mode", o.mode, "greedy or lazy")->check(CLI::IsMember({"greedy", "lazy"}));

    CLI::App* enumerate = app.add_subcommand("enumerate", "all feasible prefixes of x");
    add_common(enumerate);
    enumerate->add_option("--x", o.x, "value to expand")->required();
    enumerate->add_option("--depth", o.depth, "prefix length")->check(CLI::PositiveNumber);
    enumerate->add_flag("--allow-deep", o.allow_deep, "permit depths above the enumeration guard");

    CLI::App* optimal = app.add_subcommand("optimal", "decide greedy optimality");
    add_common(optimal);
    optimal->add_option("--depth", o.depth, "indices to classify")->check(CLI::PositiveNumber);
    optimal->add_flag("--find-counterexample", o.find_counterexample, "build a counterexample from the sandwich");
    optimal->add_option("--at-n", o.at_n, "build the counterexample from the sandwich at this n")
        ->check(CLI::PositiveNumber);

    CLI::App* unique = app.add_subcommand("unique", "certify unique expansions");
    add_common(unique);
    unique->add_option("--depth", o.depth, "window depth")->check(CLI::PositiveNumber);
    unique->add_option("--candidate", o.candidate, "check this digit sequence instead, e.g. 0^3(10)");

    CLI::App* envelope = app.add_subcommand("envelope", "compare oracle errors with greedy and lazy errors");
    add_common(envelope);
    envelope->add_option("--x", o.x, "value to expand")->required();
    envelope->add_option("--depth", o.depth, "prefix length")->check(CLI::PositiveNumber);
    envelope->add_flag("--allow-deep", o.allow_deep, "permit depths above the enumeration guard");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitError;
    }

    CLI::App* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();
    auto start = std::chrono::steady_clock::now();
    try {
        unsigned cap = precision_cap();
        if (o.precision_bits > cap) {
            throw ValidationError("--precision-bits " + std::to_string(o.precision_bits) + " exceeds the cap " +
                                  std::to_string(cap));
        }
        unsigned bits = o.precision_bits ? o.precision_bits : cap;
        SpecOptions spec_options;
        spec_options.allow_non_kakeya = o.allow_non_kakeya;
        SequenceSpec spec = parse_sequence_spec(o.seq, spec_options);
        SequencePtr seq = make_sequence(spec, spec_options);

        Outcome outcome;
        if (command == "check-kakeya") {
            outcome = cmd_check_kakeya(*seq, o, bits);
        } else if (command == "expand") {
            outcome = cmd_expand(*seq, o, bits);
        } else if (command == "enumerate") {
            outcome = cmd_enumerate(*seq, o, bits);
        } else if (command == "optimal") {
            outcome = cmd_optimal(*seq, o, bits);
        } else if (command == "unique") {
            outcome = cmd_unique(*seq, o, bits);
        } else {
            outcome = cmd_envelope(*seq, o, bits);
        }

        Json doc;
        doc["version"] = KAKEYA_VERSION;
        doc["command"] = command;
        doc["sequence"] = to_string(spec);
        doc["verdict"] = outcome.verdict;
        doc["timings_ms"] = Json::object();
        if (o.timings) {
            auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
            doc["timings_ms"]["total"] = elapsed.count();
        }
        if (o.json) {
            out << doc.dump(2) << "\n";
        } else {
            render_text(doc, "", out);
        }
        return outcome.conclusive ? kExitOk : kExitInconclusive;
    } catch (const PrecisionExhausted& e) {
        err << "inconclusive: " << e.what() << "\n";
        return kExitInconclusive;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
}

}  // namespace kakeya::cli
