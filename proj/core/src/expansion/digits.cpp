#include "kakeya/expansion/digits.hpp"

#include <cctype>

#include "kakeya/error.hpp"

namespace kakeya {

DigitWord::DigitWord(std::vector<std::uint8_t> digits) : digits_(std::move(digits)) {
    for (auto d : digits_) {
        if (d > 1) throw ValidationError("digits must be 0 or 1");
    }
}

void DigitWord::push_back(std::uint8_t d) {
    if (d > 1) throw ValidationError("digits must be 0 or 1");
    digits_.push_back(d);
}

DigitWord DigitWord::complement() const {
    DigitWord out;
    for (auto d : digits_) out.digits_.push_back(1 - d);
    return out;
}

std::string DigitWord::str() const {
    std::string s;
    for (auto d : digits_) s += static_cast<char>('0' + d);
    return s;
}

namespace {

class DigitParser {
public:
    explicit DigitParser(std::string_view text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool done() {
        skip_space();
        return pos_ >= text_.size();
    }

    bool peek(char c) {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(std::string_view token) {
        skip_space();
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    std::size_t count() {
        skip_space();
        std::size_t start = pos_;
        bool braced = accept("{");
        skip_space();
        std::size_t digits_start = pos_;
        std::size_t value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
            if (value > 1000000) throw ParseError(start, "repetition count too large");
            ++pos_;
        }
        if (pos_ == digits_start) throw ParseError(start, "expected a repetition count after '^'");
        if (braced && !accept("}")) throw ParseError(pos_, "expected '}'");
        return value;
    }

    // Digits with d^k runs until '(' , ')' or the end.
    DigitWord items() {
        std::vector<std::uint8_t> out;
        while (!done() && !peek('(') && !peek(')')) {
            char c = text_[pos_];
            if (c != '0' && c != '1') throw ParseError(pos_, std::string("unexpected character '") + c + "'");
            ++pos_;
            std::size_t reps = 1;
            if (accept("^")) reps = count();
            out.insert(out.end(), reps, static_cast<std::uint8_t>(c - '0'));
        }
        return DigitWord(std::move(out));
    }

    std::size_t pos() const { return pos_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

DigitWord DigitWord::parse(std::string_view text) {
    DigitParser p(text);
    DigitWord w = p.items();
    if (!p.done()) throw ParseError(p.pos(), "a digit word cannot contain a period");
    return w;
}

EventuallyPeriodicDigits::EventuallyPeriodicDigits(DigitWord preperiod, DigitWord period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
    if (period_.empty()) throw ValidationError("period must be nonempty");
    canonicalize();
}

EventuallyPeriodicDigits EventuallyPeriodicDigits::finite(const DigitWord& word) {
    return EventuallyPeriodicDigits(word, DigitWord({0}));
}

EventuallyPeriodicDigits EventuallyPeriodicDigits::zeros_then_ten(Index zeros) {
    return EventuallyPeriodicDigits(DigitWord(std::vector<std::uint8_t>(zeros, 0)), DigitWord({1, 0}));
}

EventuallyPeriodicDigits EventuallyPeriodicDigits::parse(std::string_view text) {
    DigitParser p(text);
    DigitWord pre = p.items();
    if (p.done()) return finite(pre);
    if (!p.accept("(")) throw ParseError(p.pos(), "expected '('");
    DigitWord period = p.items();
    if (period.empty()) throw ParseError(p.pos(), "empty period");
    if (!p.accept(")")) throw ParseError(p.pos(), "expected ')'");
    if (p.accept("^")) {
        if (!p.accept("inf") && !p.accept("∞")) throw ParseError(p.pos(), "expected 'inf' after ')^'");
    }
    if (!p.done()) throw ParseError(p.pos(), "trailing characters after the period");
    return EventuallyPeriodicDigits(std::move(pre), std::move(period));
}

void EventuallyPeriodicDigits::canonicalize() {
    std::vector<std::uint8_t> per = period_.digits();
    const std::size_t L = per.size();
    for (std::size_t d = 1; d <= L; ++d) {
        if (L % d != 0) continue;
        bool ok = true;
        for (std::size_t i = d; i < L && ok; ++i) ok = per[i] == per[i - d];
        if (ok) {
            per.resize(d);
            break;
        }
    }
    std::vector<std::uint8_t> pre = preperiod_.digits();
    // Absorb trailing preperiod digits into the period by rotation.
    while (!pre.empty() && pre.back() == per.back()) {
        per.insert(per.begin(), per.back());
        per.pop_back();
        pre.pop_back();
    }
    preperiod_ = DigitWord(std::move(pre));
    period_ = DigitWord(std::move(per));
}

std::uint8_t EventuallyPeriodicDigits::at(Index i) const {
    if (i == 0) throw ValidationError("digit positions are 1-based");
    if (i <= preperiod_.size()) return preperiod_[i - 1];
    return period_[(i - preperiod_.size() - 1) % period_.size()];
}

DigitWord EventuallyPeriodicDigits::prefix(Index n) const {
    DigitWord w;
    for (Index i = 1; i <= n; ++i) w.push_back(at(i));
    return w;
}

IndexPattern EventuallyPeriodicDigits::suffix_pattern(Index n) const {
    IndexPattern p;
    const Index K = preperiod_.size(), L = period_.size();
    for (Index i = n; i < K; ++i) p.prefix.push_back(preperiod_[i]);
    Index shift = n > K ? (n - K) % L : 0;
    for (Index j = 0; j < L; ++j) p.period.push_back(period_[(shift + j) % L]);
    return p;
}

EventuallyPeriodicDigits EventuallyPeriodicDigits::complement() const {
    return EventuallyPeriodicDigits(preperiod_.complement(), period_.complement());
}

std::string EventuallyPeriodicDigits::str() const {
    std::string out;
    const auto& d = preperiod_.digits();
    for (std::size_t i = 0; i < d.size();) {
        std::size_t j = i;
        while (j < d.size() && d[j] == d[i]) ++j;
        std::size_t run = j - i;
        char c = static_cast<char>('0' + d[i]);
        if (run >= 4) {
            out += c;
            out += j < d.size() ? "^{" + std::to_string(run) + "}" : "^" + std::to_string(run);
        } else {
            out.append(run, c);
        }
        i = j;
    }
    return out + "(" + period_.str() + ")";
}

}  // namespace kakeya
