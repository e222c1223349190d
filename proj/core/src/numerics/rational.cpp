#include "kakeya/numerics/rational.hpp"

#include <cctype>
#include <ostream>

#include "kakeya/error.hpp"

namespace kakeya {

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) {
        throw ValidationError("rational with zero denominator");
    }
    q_ = mpq_class(numerator, denominator);
    q_.canonicalize();
}

Rational::Rational(mpq_class value) : q_(std::move(value)) { q_.canonicalize(); }

namespace {

bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::size_t begin = 0;
    while (begin < text.size() && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    std::size_t end = text.size();
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    std::string_view body = text.substr(begin, end - begin);
    if (body.empty()) throw ParseError(begin, "expected a rational number");

    bool negative = false;
    std::size_t pos = 0;
    if (body[0] == '-' || body[0] == '+') {
        negative = body[0] == '-';
        pos = 1;
    }
    std::string_view rest = body.substr(pos);
    std::size_t slash = rest.find('/');
    std::string_view num_text = rest.substr(0, slash);
    if (!is_digits(num_text)) throw ParseError(begin + pos, "malformed numerator '" + std::string(num_text) + "'");
    BigInt num(std::string(num_text), 10);
    BigInt den = 1;
    if (slash != std::string_view::npos) {
        std::string_view den_text = rest.substr(slash + 1);
        if (!is_digits(den_text)) {
            throw ParseError(begin + pos + slash + 1, "malformed denominator '" + std::string(den_text) + "'");
        }
        den = BigInt(std::string(den_text), 10);
        if (den == 0) throw ParseError(begin + pos + slash + 1, "zero denominator");
    }
    if (negative) num = -num;
    return Rational(num, den);
}

Rational Rational::inverse() const {
    if (is_zero()) throw ValidationError("inverse of zero");
    return Rational(mpq_class(1) / q_);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ValidationError("division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::pow(long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(n, d);
}

long Rational::floor_log2() const {
    if (is_zero()) throw ValidationError("log2 of zero");
    BigInt n = ::abs(q_.get_num());
    const BigInt& d = q_.get_den();
    long guess = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)) -
                 static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2));
    // guess is floor(log2) or floor(log2) + 1; test n >= d * 2^guess.
    BigInt lhs = n, rhs = d;
    if (guess >= 0) {
        mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), static_cast<unsigned long>(guess));
    } else {
        mpz_mul_2exp(lhs.get_mpz_t(), lhs.get_mpz_t(), static_cast<unsigned long>(-guess));
    }
    return lhs >= rhs ? guess : guess - 1;
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace kakeya
