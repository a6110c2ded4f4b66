#include "sdnum/arith.hpp"

#include <algorithm>
#include <utility>

namespace sdnum {

namespace {

void check_same_radix(const SignedDigitNumber& a, const SignedDigitNumber& b) {
    if (a.radix() != b.radix()) {
        throw std::domain_error("radix mismatch: " + std::to_string(a.radix()) + " vs " +
                                std::to_string(b.radix()));
    }
}

// a * d shifted left by `shift` positions. Column products carry by
// truncated division, keeping |digit| <= radix-1 with the sign of the total.
SignedDigitNumber scale_shift(const SignedDigitNumber& a, int d, int shift, OpStats& stats) {
    const int radix = a.radix();
    std::vector<digit_t> out(static_cast<std::size_t>(shift), 0);
    out.reserve(out.size() + a.size() + 1);
    int carry = 0;
    for (digit_t ad : a.digits()) {
        const int t = ad * d + carry;
        carry = t / radix;
        out.push_back(static_cast<digit_t>(t % radix));
        if (carry != 0) {
            ++stats.carries;
        }
    }
    if (carry != 0) {
        out.push_back(static_cast<digit_t>(carry));
    }
    return SignedDigitNumber(radix, std::move(out));
}

// Round-to-nearest of window/divisor with ties toward zero.
int nearest_digit(const BigInt& window, const BigInt& divisor) {
    const BigInt wa = boost::multiprecision::abs(window);
    const BigInt sa = boost::multiprecision::abs(divisor);
    const BigInt q = (2 * wa + sa - 1) / (2 * sa);
    const int magnitude = static_cast<int>(q);
    return window.sign() * divisor.sign() < 0 ? -magnitude : magnitude;
}

}  // namespace

SignedDigitNumber add(const SignedDigitNumber& a, const SignedDigitNumber& b, OpStats& stats) {
    check_same_radix(a, b);
    const int radix = a.radix();
    const std::size_t n = std::max(a.size(), b.size());
    std::vector<digit_t> out;
    out.reserve(n + 1);
    int carry = 0;
    for (std::size_t i = 0; i < n || carry != 0; ++i) {
        int t = a.digit_at(i) + b.digit_at(i) + carry;
        ++stats.digit_adds;
        carry = 0;
        if (t >= radix || t <= -radix) {
            carry = t > 0 ? 1 : -1;
            t -= radix * carry;
            ++stats.carries;
        }
        out.push_back(static_cast<digit_t>(t));
    }
    return SignedDigitNumber(radix, std::move(out));
}

SignedDigitNumber sub(const SignedDigitNumber& a, const SignedDigitNumber& b, OpStats& stats) {
    check_same_radix(a, b);
    return add(a, b.negated(), stats);
}

SignedDigitNumber mul(const SignedDigitNumber& a, const SignedDigitNumber& b, OpStats& stats) {
    check_same_radix(a, b);
    SignedDigitNumber acc(a.radix());
    const auto& multiplier = b.digits();
    for (std::size_t j = 0; j < multiplier.size(); ++j) {
        if (multiplier[j] == 0) {
            continue;
        }
        ++stats.nonzero_partials;
        acc = add(acc, scale_shift(a, multiplier[j], static_cast<int>(j), stats), stats);
    }
    return acc;
}

DivResult divide(const SignedDigitNumber& dividend, const SignedDigitNumber& divisor,
                 DivMode mode, OpStats& stats) {
    std::vector<DivStep> steps;
    return divide(dividend, divisor, mode, stats, steps);
}

DivResult divide(const SignedDigitNumber& dividend, const SignedDigitNumber& divisor,
                 DivMode mode, OpStats& stats, std::vector<DivStep>& steps) {
    check_same_radix(dividend, divisor);
    const int radix = dividend.radix();
    const BigInt divisor_value = divisor.value();
    if (divisor_value == 0) {
        throw std::domain_error("division by zero");
    }

    // standard mode walks the classical nonnegative rendering of |dividend|
    // against |divisor|; signed mode consumes the dividend digits as given.
    const BigInt dividend_value = dividend.value();
    const SignedDigitNumber source =
        mode == DivMode::standard
            ? SignedDigitNumber::from_integer(boost::multiprecision::abs(dividend_value), radix)
            : dividend;
    const BigInt step_divisor = mode == DivMode::standard
                                    ? BigInt(boost::multiprecision::abs(divisor_value))
                                    : divisor_value;

    BigInt window = 0;
    std::vector<int> quotient_msb;
    quotient_msb.reserve(source.size());
    bool started = false;
    for (std::size_t k = source.size(); k-- > 0;) {
        window = window * radix + source.digits()[k];
        int q = 0;
        if (mode == DivMode::standard) {
            q = static_cast<int>(BigInt(window / step_divisor));
        } else {
            if (!started && boost::multiprecision::abs(window) >=
                                boost::multiprecision::abs(step_divisor)) {
                started = true;
            }
            if (started) {
                q = nearest_digit(window, step_divisor);
            }
        }
        ++stats.quotient_steps;
        quotient_msb.push_back(q);
        if (q != 0) {
            const BigInt subtracted = q * step_divisor;
            steps.push_back({static_cast<int>(k), window, q, subtracted});
            window -= subtracted;
        }
    }

    SignedDigitNumber quotient(radix);
    BigInt remainder = 0;
    if (mode == DivMode::standard) {
        BigInt q_value = 0;
        for (int q : quotient_msb) {
            q_value = q_value * radix + q;
        }
        const int sign_fix = dividend_value.sign() * divisor_value.sign();
        q_value *= sign_fix;
        remainder = dividend_value.sign() < 0 ? BigInt(-window) : window;
        if (remainder != 0 && (remainder < 0) != (divisor_value < 0)) {
            q_value -= 1;
            remainder += divisor_value;
        }
        quotient = SignedDigitNumber::from_integer(q_value, radix);
    } else {
        std::vector<digit_t> lsb(quotient_msb.size());
        for (std::size_t i = 0; i < quotient_msb.size(); ++i) {
            lsb[i] = static_cast<digit_t>(quotient_msb[quotient_msb.size() - 1 - i]);
        }
        quotient = SignedDigitNumber(radix, std::move(lsb));
        remainder = window;
        if (remainder != 0 && (remainder < 0) != (divisor_value < 0)) {
            OpStats scratch;
            quotient = add(quotient, SignedDigitNumber::from_integer(-1, radix), scratch);
            remainder += divisor_value;
        }
    }
    return {std::move(quotient), std::move(remainder)};
}

std::size_t hamming_weight(const SignedDigitNumber& num) {
    return static_cast<std::size_t>(
        std::count_if(num.digits().begin(), num.digits().end(),
                      [](digit_t d) { return d != 0; }));
}

}  // namespace sdnum
