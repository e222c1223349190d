#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kakeya/sequences/sequence.hpp"

namespace kakeya {

/// Finite word over {0,1}.
class DigitWord {
public:
    DigitWord() = default;
    explicit DigitWord(std::vector<std::uint8_t> digits);

    /// Accepts plain digits with optional d^k runs, e.g. "0^3 1".
    static DigitWord parse(std::string_view text);

    const std::vector<std::uint8_t>& digits() const { return digits_; }
    std::size_t size() const { return digits_.size(); }
    bool empty() const { return digits_.empty(); }
    std::uint8_t operator[](std::size_t i) const { return digits_[i]; }

    void push_back(std::uint8_t d);
    DigitWord complement() const;

    /// Literal digits, e.g. "01000".
    std::string str() const;

    friend bool operator==(const DigitWord&, const DigitWord&) = default;
    friend auto operator<=>(const DigitWord&, const DigitWord&) = default;

private:
    std::vector<std::uint8_t> digits_;
};

/// preperiod followed by period repeated forever. Construction canonicalizes
/// to the minimal period and then the minimal preperiod.
class EventuallyPeriodicDigits {
public:
    EventuallyPeriodicDigits() : EventuallyPeriodicDigits(DigitWord(), DigitWord({0})) {}
    EventuallyPeriodicDigits(DigitWord preperiod, DigitWord period);

    /// A finite word followed by (0).
    static EventuallyPeriodicDigits finite(const DigitWord& word);
    /// 0^zeros (10).
    static EventuallyPeriodicDigits zeros_then_ten(Index zeros);

    /// Grammar: items [ "(" items ")" [ "^inf" ] ], items := (digit [ "^" k | "^{" k "}" ])*.
    /// A word without a period means the finite expansion word (0).
    static EventuallyPeriodicDigits parse(std::string_view text);

    const DigitWord& preperiod() const { return preperiod_; }
    const DigitWord& period() const { return period_; }

    /// c_i, 1-based.
    std::uint8_t at(Index i) const;
    /// c_1 .. c_n.
    DigitWord prefix(Index n) const;
    /// The digits c_{n+1} c_{n+2} ... as a selector.
    IndexPattern suffix_pattern(Index n) const;
    IndexPattern pattern() const { return suffix_pattern(0); }

    /// Ends with (0) or (1).
    bool ends_constant() const { return period_.size() == 1; }
    bool is_all_zero() const { return preperiod_.empty() && period_ == DigitWord({0}); }
    bool is_all_one() const { return preperiod_.empty() && period_ == DigitWord({1}); }

    EventuallyPeriodicDigits complement() const;

    /// Canonical text; runs of four or more equal preperiod digits print as d^k
    /// (d^{k} when another digit follows), e.g. "0011(0)", "0^5(10)".
    std::string str() const;

    friend bool operator==(const EventuallyPeriodicDigits&, const EventuallyPeriodicDigits&) = default;

private:
    void canonicalize();

    DigitWord preperiod_;
    DigitWord period_;
};

}  // namespace kakeya
