#include "kakeya/numerics/golden.hpp"

#include <cctype>
#include <ostream>

#include "kakeya/error.hpp"

namespace kakeya {

GoldenNumber& GoldenNumber::operator*=(const GoldenNumber& o) {
    // (a + b phi)(c + d phi) = (ac + bd) + (ad + bc + bd) phi
    Rational bd = b_ * o.b_;
    Rational a = a_ * o.a_ + bd;
    Rational b = a_ * o.b_ + b_ * o.a_ + bd;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

int GoldenNumber::sign() const {
    // 2(a + b phi) = (2a + b) + b sqrt5
    Rational u = a_ * Rational(2) + b_;
    const Rational& v = b_;
    int su = u.sign(), sv = v.sign();
    if (sv == 0) return su;
    if (su == 0) return sv;
    if (su == sv) return su;
    // u^2 = 5 v^2 has no rational solution with v != 0.
    return u * u > Rational(5) * v * v ? su : sv;
}

GoldenNumber GoldenNumber::inverse() const {
    Rational n = norm();
    if (n.is_zero()) throw ValidationError("inverse of zero in Q(phi)");
    GoldenNumber c = conjugate();
    return GoldenNumber(c.a_ / n, c.b_ / n);
}

GoldenNumber GoldenNumber::pow(long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    GoldenNumber result(1), base = *this;
    auto e = static_cast<unsigned long>(exponent);
    while (e > 0) {
        if (e & 1UL) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

Interval sqrt5_enclosure(unsigned bits) {
    BigInt scaled = 5, root;
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2UL * bits);
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    long e = -static_cast<long>(bits);
    return Interval(Dyadic(root, e), Dyadic(root + 1, e), bits);
}

Interval GoldenNumber::enclose(unsigned bits) const {
    if (is_rational()) return Interval::enclose(a_, bits);
    // a + b/2 + (b/2) sqrt5, with enough guard bits that the sqrt5 error is below the target.
    long scale = b_.abs().floor_log2() + 4;
    auto guard = static_cast<unsigned>(bits + 8 + (scale > 0 ? scale : 0));
    Interval s5 = sqrt5_enclosure(guard);
    Rational half_b = b_ / Rational(2);
    Rational lo = a_ + half_b, hi = lo;
    Rational s_lo = s5.lo().to_rational(), s_hi = s5.hi().to_rational();
    if (half_b.sign() > 0) {
        lo += half_b * s_lo;
        hi += half_b * s_hi;
    } else {
        lo += half_b * s_hi;
        hi += half_b * s_lo;
    }
    return Interval::enclose(lo, hi, bits);
}

std::string GoldenNumber::str() const {
    if (is_rational()) return a_.str();
    std::string phi_term = b_.abs() == Rational(1) ? "phi" : b_.abs().str() + "*phi";
    if (a_.is_zero()) return (b_.sign() < 0 ? "-" : "") + phi_term;
    return a_.str() + (b_.sign() < 0 ? "-" : "+") + phi_term;
}

GoldenNumber GoldenNumber::parse(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(static_cast<char>(std::tolower(c)));
    }
    if (s.empty()) throw ParseError(0, "expected a number");
    Rational a, b;
    std::size_t pos = 0;
    bool saw_rational = false, saw_phi = false;
    while (pos < s.size()) {
        std::size_t start = pos;
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
        } else if (start != 0) {
            throw ParseError(pos, "expected '+' or '-'");
        }
        std::size_t next = s.find_first_of("+-", pos);
        std::string term = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (term.empty()) throw ParseError(pos, "empty term");
        bool is_phi = term.size() >= 3 && term.compare(term.size() - 3, 3, "phi") == 0;
        if (is_phi) {
            if (saw_phi) throw ParseError(pos, "repeated phi term");
            saw_phi = true;
            std::string coeff = term.substr(0, term.size() - 3);
            Rational c(1);
            if (!coeff.empty()) {
                if (coeff.back() != '*') throw ParseError(pos, "expected '*' before phi");
                coeff.pop_back();
                c = Rational::parse(coeff);
            }
            b = negative ? -c : c;
        } else {
            if (saw_rational) throw ParseError(pos, "repeated rational term");
            saw_rational = true;
            Rational c = Rational::parse(term);
            a = negative ? -c : c;
        }
        pos = next == std::string::npos ? s.size() : next;
    }
    return GoldenNumber(a, b);
}

GoldenOrder golden_compare_integers(const BigInt& s, const BigInt& t) {
    if (s <= 0 || t <= 0) throw ValidationError("golden_compare_integers expects positive integers");
    if (t <= s) return GoldenOrder::Less;
    return t * t > t * s + s * s ? GoldenOrder::Greater : GoldenOrder::Less;
}

std::ostream& operator<<(std::ostream& os, const GoldenNumber& g) { return os << g.str(); }

}  // namespace kakeya
