#include "kakeya/numerics/real.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "kakeya/error.hpp"

namespace kakeya {

namespace {

constexpr unsigned kGuardBits = 4;
constexpr unsigned kInitialBits = 32;

Interval enclose_rep(const Real& r, unsigned bits) { return r.enclose(bits); }

}  // namespace

Real Real::lazy(Evaluator evaluator) {
    Real r;
    r.rep_ = std::make_shared<const Evaluator>(std::move(evaluator));
    return r;
}

std::optional<Rational> Real::rational() const {
    const GoldenNumber* g = exact();
    if (g && g->is_rational()) return g->rational_part();
    return std::nullopt;
}

Interval Real::enclose(unsigned bits) const {
    if (const GoldenNumber* g = exact()) return g->enclose(bits);
    return (*std::get<std::shared_ptr<const Evaluator>>(rep_))(bits);
}

Real Real::cached() const {
    if (is_exact()) return *this;
    struct Memo {
        std::mutex mutex;
        std::map<unsigned, Interval> values;
    };
    auto memo = std::make_shared<Memo>();
    Real inner = *this;
    return Real::lazy([memo, inner](unsigned bits) {
        {
            std::lock_guard<std::mutex> lock(memo->mutex);
            auto it = memo->values.find(bits);
            if (it != memo->values.end()) return it->second;
        }
        Interval v = inner.enclose(bits);
        std::lock_guard<std::mutex> lock(memo->mutex);
        memo->values.emplace(bits, v);
        return v;
    });
}

Real operator+(const Real& a, const Real& b) {
    if (a.is_exact() && b.is_exact()) return Real(*a.exact() + *b.exact());
    return Real::lazy([a, b](unsigned bits) {
        return (enclose_rep(a, bits + kGuardBits) + enclose_rep(b, bits + kGuardBits)).rounded(bits);
    });
}

Real operator-(const Real& a) {
    if (a.is_exact()) return Real(-*a.exact());
    return Real::lazy([a](unsigned bits) { return -enclose_rep(a, bits); });
}

Real operator-(const Real& a, const Real& b) {
    if (a.is_exact() && b.is_exact()) return Real(*a.exact() - *b.exact());
    return a + (-b);
}

Real operator*(const Real& a, const Real& b) {
    if (a.is_exact() && b.is_exact()) return Real(*a.exact() * *b.exact());
    return Real::lazy([a, b](unsigned bits) {
        return (enclose_rep(a, bits + kGuardBits) * enclose_rep(b, bits + kGuardBits)).rounded(bits);
    });
}

Real operator/(const Real& a, const Real& b) {
    if (a.is_exact() && b.is_exact()) return Real(*a.exact() / *b.exact());
    return Real::lazy([a, b](unsigned bits) {
        Interval den = enclose_rep(b, bits + kGuardBits);
        // Refine the divisor until it excludes zero; a zero divisor never resolves.
        for (unsigned extra = 2 * bits; den.contains_zero() && extra <= 64 * bits + 4096; extra *= 2) {
            den = enclose_rep(b, extra);
        }
        return (enclose_rep(a, bits + kGuardBits) / den).rounded(bits);
    });
}

Value snapshot(const Real& r, unsigned bits) {
    if (const GoldenNumber* g = r.exact()) return *g;
    return r.enclose(bits);
}

std::string to_string(const Value& v) {
    if (const auto* g = std::get_if<GoldenNumber>(&v)) return g->str();
    const auto& i = std::get<Interval>(v);
    return "[" + i.lo().str() + ", " + i.hi().str() + "]";
}

std::string to_string(Ordering o) {
    switch (o) {
        case Ordering::Less: return "less";
        case Ordering::Greater: return "greater";
        case Ordering::EqualCertified: return "equal";
        case Ordering::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

Ordering cmp_adaptive(const Real& a, const Real& b, unsigned max_bits) {
    if (a.is_exact() && b.is_exact()) {
        int s = (*a.exact() - *b.exact()).sign();
        return s < 0 ? Ordering::Less : (s > 0 ? Ordering::Greater : Ordering::EqualCertified);
    }
    if (max_bits == 0) return Ordering::Inconclusive;
    Real diff = a - b;
    unsigned bits = std::min(max_bits, kInitialBits);
    while (true) {
        Interval d = diff.enclose(bits);
        if (d.positive()) return Ordering::Greater;
        if (d.negative()) return Ordering::Less;
        if (bits >= max_bits) return Ordering::Inconclusive;
        bits = std::min(max_bits, 2 * bits);
    }
}

}  // namespace kakeya
