#pragma once

#include "sdnum/bigint.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sdnum {

// One signed coefficient of a positional representation. For radix r every
// digit satisfies -(r-1) <= d <= r-1.
using digit_t = std::int8_t;

constexpr char kDefaultHatChar = '~';

// Thrown by SignedDigitNumber::parse; position() is the 0-based index of the
// offending character in the input text.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

// A radix-2 or radix-10 number whose digits may be negative:
//
//     value = sum over i of digits[i] * radix^i
//
// Digits are stored least-significant first. The most significant stored
// digit is nonzero; the zero value keeps an empty digit sequence. Text I/O is
// most-significant first with a hat marker ('~' by default) prefixing each
// negative digit, e.g. "110~1" == 8 + 4 - 1 == 11.
//
// Immutable after construction; all operations are pure.
class SignedDigitNumber {
  public:
    // Zero of the given radix.
    explicit SignedDigitNumber(int radix);

    // Takes digits least-significant first; strips leading (high) zeros.
    // Throws std::domain_error if the radix is unsupported or a digit is out
    // of the radix bound.
    SignedDigitNumber(int radix, std::vector<digit_t> digits);

    // Grammar: number := '-'? item+ ; item := hat? digitchar. A leading '-'
    // negates every digit (input convenience only). hat followed by '0' is
    // rejected. Leading zeros are accepted and stripped.
    static SignedDigitNumber parse(std::string_view text, int radix,
                                   char hat = kDefaultHatChar);

    // Standard (uniform-sign) encoding of v: every digit shares the sign of
    // v, |digit| <= radix-1.
    static SignedDigitNumber from_integer(const BigInt& v, int radix);

    // Most-significant-first text; hat before each negative digit; zero
    // renders "0". Never emits a '-' prefix.
    std::string render(char hat = kDefaultHatChar) const;

    // Exact value, sum of digits[i] * radix^i.
    BigInt value() const;

    int radix() const noexcept { return radix_; }
    const std::vector<digit_t>& digits() const noexcept { return digits_; }
    std::size_t size() const noexcept { return digits_.size(); }
    bool is_zero() const noexcept { return digits_.empty(); }

    // Digit at position i, zero beyond the stored length.
    int digit_at(std::size_t i) const noexcept {
        return i < digits_.size() ? digits_[i] : 0;
    }

    // Digitwise negation (the hat applied to every digit).
    SignedDigitNumber negated() const;

    bool operator==(const SignedDigitNumber&) const = default;

  private:
    int radix_ = 2;
    std::vector<digit_t> digits_;  // least-significant first, no high zeros
};

}  // namespace sdnum
