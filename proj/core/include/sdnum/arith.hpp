#pragma once

#include "sdnum/signed_digit.hpp"

#include <cstdint>
#include <vector>

namespace sdnum {

// Elementary-operation counters accumulated by the arithmetic routines.
// Additive under sequential composition.
struct OpStats {
    std::uint64_t digit_adds = 0;        // column sums computed
    std::uint64_t carries = 0;           // nonzero carries emitted
    std::uint64_t nonzero_partials = 0;  // partial products taken in mul
    std::uint64_t quotient_steps = 0;    // quotient digits selected in divide

    OpStats& operator+=(const OpStats& other) {
        digit_adds += other.digit_adds;
        carries += other.carries;
        nonzero_partials += other.nonzero_partials;
        quotient_steps += other.quotient_steps;
        return *this;
    }

    bool operator==(const OpStats&) const = default;
};

enum class DivMode {
    standard,      // classical long division, nonnegative quotient digits
    signed_digit,  // round-to-nearest quotient digits, overshoot allowed
};

struct DivResult {
    SignedDigitNumber quotient;
    BigInt remainder;
};

// One long-division step: the quotient digit chosen at `position` against the
// partial remainder `window`, subtracting quotient_digit * divisor.
struct DivStep {
    int position = 0;
    BigInt window;
    int quotient_digit = 0;
    BigInt subtracted;
};

// Columnwise sum. A column total t stays a digit while |t| < radix; otherwise
// one unit is carried (digit t - radix*sign(t)). Mixed-sign totals are kept
// as-is, which is what removes most carries on sparse operands.
// Throws std::domain_error on radix mismatch.
SignedDigitNumber add(const SignedDigitNumber& a, const SignedDigitNumber& b, OpStats& stats);

// a + digitwise negation of b.
SignedDigitNumber sub(const SignedDigitNumber& a, const SignedDigitNumber& b, OpStats& stats);

// Schoolbook sum of shifted partial products, one per nonzero digit of b.
// The result is not normalized or sparsified; compose with from_integer or
// sparsify explicitly when a canonical form is wanted.
SignedDigitNumber mul(const SignedDigitNumber& a, const SignedDigitNumber& b, OpStats& stats);

// Long division, most significant digit first.
//
// standard: classical digit choice, the largest d >= 0 leaving a nonnegative
// step remainder; operands are normalized to standard form first.
// signed_digit: digits are round-to-nearest of window/divisor (ties toward
// zero), so the step remainder may overshoot below zero and later digits may
// be negative. The quotient starts at the classical leading position.
//
// Either way the final remainder satisfies |r| < |divisor| and
// r * divisor >= 0, and value(quotient)*divisor + r == value(dividend).
// Throws std::domain_error on division by zero or radix mismatch.
DivResult divide(const SignedDigitNumber& dividend, const SignedDigitNumber& divisor,
                 DivMode mode, OpStats& stats);

// As above, also recording one DivStep per nonzero quotient digit.
DivResult divide(const SignedDigitNumber& dividend, const SignedDigitNumber& divisor,
                 DivMode mode, OpStats& stats, std::vector<DivStep>& steps);

// Count of nonzero digits.
std::size_t hamming_weight(const SignedDigitNumber& num);

}  // namespace sdnum
