#include "kakeya/sequences/spec.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "kakeya/error.hpp"
#include "kakeya/numerics/real.hpp"

namespace kakeya {

const Rational& PerturbationSchedule::epsilon(Index n) const {
    if (epsilons.empty()) throw ValidationError("perturbation schedule is empty");
    if (n == 0) throw ValidationError("perturbation indices are 1-based");
    return epsilons[std::min(n, epsilons.size()) - 1];
}

Rational PerturbationSchedule::effective(Index n) const {
    const Rational& e = epsilon(n);
    if (mode == PerturbationMode::Alternating && n % 2 == 1) return -e;
    return e;
}

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

// Rational parse with positions reported relative to the full spec text.
Rational parse_rational_at(std::string_view text, std::size_t base) {
    try {
        return Rational::parse(text);
    } catch (const ParseError& e) {
        throw ParseError(base + e.position(), "expected a rational, got '" + std::string(text) + "'");
    }
}

std::vector<Rational> parse_rational_list(std::string_view text, std::size_t base) {
    std::vector<Rational> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        out.push_back(parse_rational_at(item, base + pos));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

void validate_geometric(const Geometric& g, const SpecOptions& options) {
    auto fail_range = [&](const std::string& q) {
        throw ValidationError("geometric base " + q + " must lie in (1,2]" +
                              (options.allow_non_kakeya ? "" : " (use allow-non-kakeya for bases above 2)"));
    };
    if (const auto* r = std::get_if<Rational>(&g.base)) {
        if (*r <= Rational(1)) throw ValidationError("geometric base " + r->str() + " must exceed 1");
        if (*r > Rational(2) && !options.allow_non_kakeya) fail_range(r->str());
        return;
    }
    if (const auto* q = std::get_if<GoldenNumber>(&g.base)) {
        if (*q <= GoldenNumber(1)) throw ValidationError("geometric base " + q->str() + " must exceed 1");
        if (*q > GoldenNumber(2) && !options.allow_non_kakeya) fail_range(q->str());
        return;
    }
    const auto& a = std::get<AlgebraicConstant>(g.base);
    Real q = Real::lazy([a](unsigned bits) { return a.refine(bits); });
    Ordering above_one = cmp_adaptive(q, Real(1));
    if (above_one != Ordering::Greater) throw ValidationError("geometric base " + a.str() + " must exceed 1");
    Ordering vs_two = cmp_adaptive(q, Real(2));
    if (vs_two == Ordering::Greater && !options.allow_non_kakeya) fail_range(a.str());
}

void validate_perturbed(const PerturbedGolden& pg) {
    const auto& s = pg.schedule;
    if (s.epsilons.empty()) throw ValidationError("perturbation schedule needs at least one epsilon");
    for (const auto& e : s.epsilons) {
        if (e <= Rational(-1) || e >= Rational(1)) {
            throw ValidationError("perturbation " + e.str() + " must lie in (-1,1)");
        }
    }
    // Effective perturbations are eventually periodic with period <= 2, so
    // indices up to m + 2 realise the infimum and supremum.
    Rational inf = s.effective(1), sup = inf;
    for (Index n = 2; n <= s.epsilons.size() + 2; ++n) {
        Rational d = s.effective(n);
        inf = std::min(inf, d);
        sup = std::max(sup, d);
    }
    GoldenNumber lhs(Rational(1) + inf);
    GoldenNumber rhs = (GoldenNumber::phi() - GoldenNumber(1)) * GoldenNumber(Rational(1) + sup);
    if (lhs < rhs) {
        throw ValidationError("perturbation schedule violates (1+inf eps)/(1+sup eps) >= phi-1: (1+" + inf.str() +
                              ")/(1+" + sup.str() + ") < phi-1");
    }
}

void validate_user_defined(const UserDefined& u) {
    if (u.terms.empty()) throw ValidationError("user-defined sequence needs at least one term");
    for (const auto& t : u.terms) {
        if (t.sign() <= 0) throw ValidationError("user-defined term " + t.str() + " is not strictly positive");
    }
    if (u.tail_ratio <= Rational(0) || u.tail_ratio >= Rational(1)) {
        throw ValidationError("tail_ratio " + u.tail_ratio.str() + " must lie in (0,1)");
    }
}

}  // namespace

void validate(const SequenceSpec& spec, const SpecOptions& options) {
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Geometric>) {
                validate_geometric(s, options);
            } else if constexpr (std::is_same_v<T, PerturbedGolden>) {
                validate_perturbed(s);
            } else if constexpr (std::is_same_v<T, UserDefined>) {
                validate_user_defined(s);
            }
        },
        spec);
}

UserDefined parse_user_defined(std::string_view contents) {
    UserDefined out;
    bool have_ratio = false;
    std::istringstream in{std::string(contents)};
    std::string line;
    std::size_t offset = 0;
    while (std::getline(in, line)) {
        std::size_t line_start = offset;
        offset += line.size() + 1;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (have_ratio) throw ParseError(line_start, "tail_ratio must be the last line");
        std::string lt = lower(t);
        if (starts_with(lt, "tail_ratio=")) {
            out.tail_ratio = parse_rational_at(t.substr(11), line_start + 11);
            have_ratio = true;
        } else {
            out.terms.push_back(parse_rational_at(t, line_start));
        }
    }
    if (!have_ratio) throw ParseError(offset, "missing final tail_ratio=<rational> line");
    validate_user_defined(out);
    return out;
}

SequenceSpec parse_sequence_spec(std::string_view text, const SpecOptions& options) {
    std::string raw = trim(text);
    std::string lt = lower(raw);
    SequenceSpec spec;
    if (lt == "fib") {
        spec = FibonacciReciprocal{};
    } else if (lt == "trib") {
        spec = TribonacciReciprocal{};
    } else if (starts_with(lt, "geometric:")) {
        std::string arg = lt.substr(10);
        const std::size_t base = 10;
        if (starts_with(arg, "poly(")) {
            if (arg.back() != ')') throw ParseError(raw.size(), "expected ')' closing poly(");
            std::vector<BigInt> coeffs;
            for (const auto& c : parse_rational_list(std::string_view(arg).substr(5, arg.size() - 6), base + 5)) {
                if (!c.is_integer()) throw ParseError(base + 5, "poly coefficients must be integers");
                coeffs.push_back(c.numerator());
            }
            IntPolynomial poly = IntPolynomial::from_descending(coeffs);
            spec = Geometric{AlgebraicConstant(poly, Rational(1), Rational(2))};
        } else if (arg.find("phi") != std::string::npos) {
            try {
                spec = Geometric{GoldenNumber::parse(arg)};
            } catch (const ParseError& e) {
                throw ParseError(base + e.position(), "malformed golden base '" + arg + "'");
            }
        } else {
            spec = Geometric{parse_rational_at(arg, base)};
        }
    } else if (starts_with(lt, "perturbed-phi:")) {
        std::string rest = lt.substr(14);
        std::size_t colon = rest.find(':');
        if (colon == std::string::npos) throw ParseError(14, "expected perturbed-phi:<mode>:<epsilons>");
        std::string mode = rest.substr(0, colon);
        PerturbationSchedule schedule;
        if (mode == "same" || mode == "same-sign") {
            schedule.mode = PerturbationMode::SameSign;
        } else if (mode == "alt" || mode == "alternating") {
            schedule.mode = PerturbationMode::Alternating;
        } else {
            throw ParseError(14, "unknown perturbation mode '" + mode + "' (expected same or alt)");
        }
        schedule.epsilons = parse_rational_list(std::string_view(rest).substr(colon + 1), 14 + colon + 1);
        spec = PerturbedGolden{std::move(schedule)};
    } else if (starts_with(lt, "file:")) {
        std::string path = raw.substr(5);
        std::ifstream file(path);
        if (!file) throw ValidationError("cannot open sequence file '" + path + "'");
        std::stringstream buffer;
        buffer << file.rdbuf();
        spec = parse_user_defined(buffer.str());
    } else {
        throw ParseError(0, "unknown sequence spec '" + raw + "'");
    }
    validate(spec, options);
    return spec;
}

std::string to_string(const SequenceSpec& spec) {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Geometric>) {
                if (const auto* r = std::get_if<Rational>(&s.base)) return "geometric:" + r->str();
                if (const auto* g = std::get_if<GoldenNumber>(&s.base)) return "geometric:" + g->str();
                const auto& a = std::get<AlgebraicConstant>(s.base);
                std::string coeffs;
                const auto& c = a.polynomial().coefficients();
                for (auto it = c.rbegin(); it != c.rend(); ++it) {
                    if (!coeffs.empty()) coeffs += ",";
                    coeffs += it->get_str();
                }
                return "geometric:poly(" + coeffs + ")";
            } else if constexpr (std::is_same_v<T, FibonacciReciprocal>) {
                return "fib";
            } else if constexpr (std::is_same_v<T, TribonacciReciprocal>) {
                return "trib";
            } else if constexpr (std::is_same_v<T, PerturbedGolden>) {
                std::string out = std::string("perturbed-phi:") +
                                  (s.schedule.mode == PerturbationMode::Alternating ? "alt" : "same") + ":";
                for (std::size_t i = 0; i < s.schedule.epsilons.size(); ++i) {
                    if (i) out += ",";
                    out += s.schedule.epsilons[i].str();
                }
                return out;
            } else {
                std::string out = "user:";
                for (std::size_t i = 0; i < s.terms.size(); ++i) {
                    if (i) out += ",";
                    out += s.terms[i].str();
                }
                return out + ";tail_ratio=" + s.tail_ratio.str();
            }
        },
        spec);
}

}  // namespace kakeya
