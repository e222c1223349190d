#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kakeya/numerics/algebraic.hpp"
#include "kakeya/numerics/golden.hpp"
#include "kakeya/numerics/rational.hpp"

namespace kakeya {

using Index = std::size_t;

struct Geometric {
    /// p_n = base^-n.
    std::variant<Rational, GoldenNumber, AlgebraicConstant> base;
};

/// p_i = 1/F_{i+1}, F_1 = F_2 = 1.
struct FibonacciReciprocal {};

/// p_i = 1/T_{i+1}, T_1 = T_2 = 1, T_3 = 2.
struct TribonacciReciprocal {};

enum class PerturbationMode { SameSign, Alternating };

/// epsilons e_1..e_m, with e_n = e_m for n > m.
struct PerturbationSchedule {
    PerturbationMode mode = PerturbationMode::SameSign;
    std::vector<Rational> epsilons;

    const Rational& epsilon(Index n) const;
    /// The signed perturbation actually applied at n: e_n or (-1)^n e_n.
    Rational effective(Index n) const;
};

/// p_n = phi^-n (1 + effective(n)).
struct PerturbedGolden {
    PerturbationSchedule schedule;
};

/// Explicit terms, continued geometrically with ratio tail_ratio after the last one.
struct UserDefined {
    std::vector<Rational> terms;
    Rational tail_ratio;
};

using SequenceSpec = std::variant<Geometric, FibonacciReciprocal, TribonacciReciprocal, PerturbedGolden, UserDefined>;

struct SpecOptions {
    /// Permits geometric bases above 2 (not Kakeya) for negative testing.
    bool allow_non_kakeya = false;
};

/// Throws ValidationError if the sequence parameters violate their invariants.
void validate(const SequenceSpec& spec, const SpecOptions& options = {});

/// Grammar (keywords are case-insensitive):
///   geometric:<rational> | geometric:phi | geometric:poly(<int>,...) | fib | trib
///   perturbed-phi:<same|alt>:<rational>,... | file:<path>
/// poly coefficients are listed from the leading term; the root in (1,2] is used.
SequenceSpec parse_sequence_spec(std::string_view text, const SpecOptions& options = {});

/// Reads the UserDefined file format: one rational per line, a final
/// "tail_ratio=<rational>" line, and '#' comment lines.
UserDefined parse_user_defined(std::string_view contents);

/// Canonical text; parse_sequence_spec(to_string(s)) reproduces s for grammar-expressible specs.
std::string to_string(const SequenceSpec& spec);

}  // namespace kakeya
