#include "kakeya/cli/json.hpp"

#include "kakeya/error.hpp"

namespace kakeya {

namespace {

template <typename T>
std::optional<T> optional_field(const Json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<T>();
}

Json words(const std::vector<Index>& v) { return Json(v); }

OptimalityVerdict::Status optimality_status(const std::string& s) {
    using S = OptimalityVerdict::Status;
    for (auto st : {S::OptimalWitness, S::NotOptimal, S::TailDegenerate, S::Inconclusive}) {
        if (to_string(st) == s) return st;
    }
    throw ParseError(0, "unknown optimality status '" + s + "'");
}

UniquenessVerdict::Status uniqueness_status(const std::string& s) {
    using S = UniquenessVerdict::Status;
    for (auto st : {S::UniqueCandidate, S::NoUnique, S::CandidateRejected, S::Inconclusive}) {
        if (to_string(st) == s) return st;
    }
    throw ParseError(0, "unknown uniqueness status '" + s + "'");
}

KakeyaVerdict::Status kakeya_status(const std::string& s) {
    using S = KakeyaVerdict::Status;
    for (auto st : {S::Kakeya, S::NotKakeya, S::VerifiedUpTo, S::Inconclusive}) {
        if (to_string(st) == s) return st;
    }
    throw ParseError(0, "unknown Kakeya status '" + s + "'");
}

}  // namespace

Json value_to_json(const Value& v) {
    if (const auto* g = std::get_if<GoldenNumber>(&v)) return g->str();
    const auto& i = std::get<Interval>(v);
    return Json{{"lo", i.lo().str()}, {"hi", i.hi().str()}, {"bits", i.bits()}};
}

Value value_from_json(const Json& j) {
    if (j.is_string()) return GoldenNumber::parse(j.get<std::string>());
    Dyadic lo = Dyadic::from_rational(Rational::parse(j.at("lo").get<std::string>()));
    Dyadic hi = Dyadic::from_rational(Rational::parse(j.at("hi").get<std::string>()));
    return Interval(lo, hi, j.at("bits").get<unsigned>());
}

Json to_json(const KakeyaVerdict& v) {
    Json j;
    j["status"] = to_string(v.status);
    j["depth"] = v.depth;
    if (v.status == KakeyaVerdict::Status::NotKakeya || v.status == KakeyaVerdict::Status::Inconclusive) {
        j["witness"] = v.witness;
    }
    j["unconditional"] = v.unconditional;
    j["equality_indices"] = words(v.equality_indices);
    j["justification"] = v.justification;
    return j;
}

KakeyaVerdict kakeya_verdict_from_json(const Json& j) {
    KakeyaVerdict v;
    v.status = kakeya_status(j.at("status").get<std::string>());
    v.depth = j.at("depth").get<Index>();
    v.witness = optional_field<Index>(j, "witness").value_or(0);
    v.unconditional = j.at("unconditional").get<bool>();
    v.equality_indices = j.at("equality_indices").get<std::vector<Index>>();
    v.justification = j.at("justification").get<std::string>();
    return v;
}

Json to_json(const SandwichWitness& w) {
    return Json{{"n", w.n}, {"k", w.k}, {"lower", value_to_json(w.lower)}, {"upper", value_to_json(w.upper)}};
}

SandwichWitness sandwich_from_json(const Json& j) {
    return SandwichWitness{j.at("n").get<Index>(), j.at("k").get<Index>(), value_from_json(j.at("lower")),
                           value_from_json(j.at("upper"))};
}

Json to_json(const OptimalityVerdict& v) {
    Json j;
    j["status"] = to_string(v.status);
    j["depth"] = v.depth;
    switch (v.status) {
        case OptimalityVerdict::Status::OptimalWitness: j["witness"] = Json{{"k", words(v.k)}}; break;
        case OptimalityVerdict::Status::NotOptimal:
            j["witness"] = Json{{"sandwich", to_json(*v.sandwich)}, {"smallest", v.smallest}};
            break;
        case OptimalityVerdict::Status::TailDegenerate:
            j["witness"] = Json{{"indices", words(v.degenerate_indices)}};
            break;
        case OptimalityVerdict::Status::Inconclusive: j["witness"] = Json{{"unresolved", v.unresolved}}; break;
    }
    j["reason"] = v.reason;
    return j;
}

OptimalityVerdict optimality_verdict_from_json(const Json& j) {
    OptimalityVerdict v;
    v.status = optimality_status(j.at("status").get<std::string>());
    v.depth = j.at("depth").get<Index>();
    const Json& w = j.at("witness");
    switch (v.status) {
        case OptimalityVerdict::Status::OptimalWitness: v.k = w.at("k").get<std::vector<Index>>(); break;
        case OptimalityVerdict::Status::NotOptimal:
            v.sandwich = sandwich_from_json(w.at("sandwich"));
            v.smallest = w.at("smallest").get<bool>();
            break;
        case OptimalityVerdict::Status::TailDegenerate:
            v.degenerate_indices = w.at("indices").get<std::vector<Index>>();
            break;
        case OptimalityVerdict::Status::Inconclusive: v.unresolved = w.at("unresolved").get<Index>(); break;
    }
    v.reason = j.at("reason").get<std::string>();
    return v;
}

Json to_json(const CounterexampleReport& r) {
    Json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["x"] = value_to_json(r.x);
    j["alt_digits"] = r.alt_digits.str();
    j["greedy_digits"] = r.greedy_digits.str();
    j["position"] = r.position;
    j["greedy_error"] = value_to_json(r.greedy_error);
    j["alt_error"] = value_to_json(r.alt_error);
    j["certified"] = r.certified;
    return j;
}

CounterexampleReport counterexample_from_json(const Json& j) {
    CounterexampleReport r;
    r.n = j.at("n").get<Index>();
    r.k = j.at("k").get<Index>();
    r.x = value_from_json(j.at("x"));
    r.alt_digits = DigitWord::parse(j.at("alt_digits").get<std::string>());
    r.greedy_digits = DigitWord::parse(j.at("greedy_digits").get<std::string>());
    r.position = j.at("position").get<Index>();
    r.greedy_error = value_from_json(j.at("greedy_error"));
    r.alt_error = value_from_json(j.at("alt_error"));
    r.certified = j.at("certified").get<bool>();
    return r;
}

Json to_json(const UniquenessVerdict& v) {
    Json j;
    j["status"] = to_string(v.status);
    j["route"] = to_string(v.route);
    j["depth"] = v.depth;
    if (v.digits) {
        j["digits"] = v.zeros ? "0^" + std::to_string(*v.zeros) + "(10)" : v.digits->str();
    }
    if (v.zeros) j["N"] = *v.zeros;
    if (v.violation) j["witness"] = *v.violation;
    j["from"] = v.from;
    j["unconditional"] = v.unconditional;
    j["certified_indices"] = words(v.certified_indices);
    j["reason"] = v.reason;
    return j;
}

UniquenessVerdict uniqueness_verdict_from_json(const Json& j) {
    UniquenessVerdict v;
    v.status = uniqueness_status(j.at("status").get<std::string>());
    v.route = route_from_string(j.at("route").get<std::string>());
    v.depth = j.at("depth").get<Index>();
    if (auto d = optional_field<std::string>(j, "digits")) v.digits = EventuallyPeriodicDigits::parse(*d);
    v.zeros = optional_field<Index>(j, "N");
    v.violation = optional_field<Index>(j, "witness");
    v.from = j.at("from").get<Index>();
    v.unconditional = j.at("unconditional").get<bool>();
    v.certified_indices = j.at("certified_indices").get<std::vector<Index>>();
    v.reason = j.at("reason").get<std::string>();
    return v;
}

Json to_json(const EnvelopeReport& r) {
    Json j;
    j["status"] = r.any_violation() ? "violated" : (r.all_contained() ? "contained" : "uncertain");
    j["depth"] = r.depth;
    Json errors = Json::array();
    for (const auto& l : r.levels) {
        Json observed = Json::array();
        for (const auto& o : l.observed) observed.push_back(value_to_json(o));
        errors.push_back(Json{{"n", l.n},
                              {"greedy", value_to_json(l.greedy_error)},
                              {"lazy", value_to_json(l.lazy_error)},
                              {"observed", observed},
                              {"violations", l.violations},
                              {"unresolved", l.unresolved},
                              {"contained", l.contained()}});
    }
    j["errors"] = errors;
    return j;
}

EnvelopeReport envelope_report_from_json(const Json& j) {
    EnvelopeReport r;
    r.depth = j.at("depth").get<Index>();
    for (const auto& e : j.at("errors")) {
        EnvelopeLevel l;
        l.n = e.at("n").get<Index>();
        l.greedy_error = value_from_json(e.at("greedy"));
        l.lazy_error = value_from_json(e.at("lazy"));
        for (const auto& o : e.at("observed")) l.observed.push_back(value_from_json(o));
        l.violations = e.at("violations").get<Index>();
        l.unresolved = e.at("unresolved").get<Index>();
        r.levels.push_back(std::move(l));
    }
    return r;
}

Json to_json(const MinError& m) {
    return Json{{"n", m.n}, {"value", value_to_json(m.value)}, {"argmin", m.argmin.str()}, {"uncertain", m.uncertain}};
}

MinError min_error_from_json(const Json& j) {
    return MinError{j.at("n").get<Index>(), value_from_json(j.at("value")),
                    DigitWord::parse(j.at("argmin").get<std::string>()), j.at("uncertain").get<bool>()};
}

}  // namespace kakeya
