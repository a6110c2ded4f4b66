#include "sdnum/signed_digit.hpp"

#include <algorithm>
#include <utility>

namespace sdnum {

namespace {

void check_radix(int radix) {
    if (radix != 2 && radix != 10) {
        throw std::domain_error("unsupported radix " + std::to_string(radix) +
                                " (must be 2 or 10)");
    }
}

}  // namespace

SignedDigitNumber::SignedDigitNumber(int radix) : radix_(radix) {
    check_radix(radix);
}

SignedDigitNumber::SignedDigitNumber(int radix, std::vector<digit_t> digits)
    : radix_(radix), digits_(std::move(digits)) {
    check_radix(radix);
    for (digit_t d : digits_) {
        if (d <= -radix || d >= radix) {
            throw std::domain_error("digit " + std::to_string(int(d)) +
                                    " out of range for radix " + std::to_string(radix));
        }
    }
    while (!digits_.empty() && digits_.back() == 0) {
        digits_.pop_back();
    }
}

SignedDigitNumber SignedDigitNumber::parse(std::string_view text, int radix, char hat) {
    check_radix(radix);
    if (text.empty()) {
        throw ParseError("empty input", 0);
    }

    std::size_t pos = 0;
    bool negate_all = false;
    if (text[0] == '-') {
        negate_all = true;
        pos = 1;
        if (pos == text.size()) {
            throw ParseError("missing digits after '-'", pos);
        }
    }

    std::vector<digit_t> msb_first;
    msb_first.reserve(text.size() - pos);
    while (pos < text.size()) {
        const std::size_t item_pos = pos;
        bool hatted = false;
        if (text[pos] == hat) {
            hatted = true;
            ++pos;
            if (pos == text.size()) {
                throw ParseError("dangling hat marker", item_pos);
            }
        }
        const char c = text[pos];
        if (c < '0' || c > '9') {
            throw ParseError(std::string("malformed character '") + c + "'", pos);
        }
        const int d = c - '0';
        if (d >= radix) {
            throw ParseError("digit '" + std::string(1, c) + "' out of range for radix " +
                                 std::to_string(radix),
                             pos);
        }
        if (hatted && d == 0) {
            throw ParseError("hatted zero is not a digit", item_pos);
        }
        msb_first.push_back(static_cast<digit_t>(hatted ? -d : d));
        ++pos;
    }

    if (negate_all) {
        for (digit_t& d : msb_first) {
            d = static_cast<digit_t>(-d);
        }
    }
    std::reverse(msb_first.begin(), msb_first.end());
    return SignedDigitNumber(radix, std::move(msb_first));
}

SignedDigitNumber SignedDigitNumber::from_integer(const BigInt& v, int radix) {
    check_radix(radix);
    const bool negative = v < 0;
    BigInt m = boost::multiprecision::abs(v);
    std::vector<digit_t> out;
    while (m != 0) {
        const int d = static_cast<int>(m % radix);
        out.push_back(static_cast<digit_t>(negative ? -d : d));
        m /= radix;
    }
    return SignedDigitNumber(radix, std::move(out));
}

std::string SignedDigitNumber::render(char hat) const {
    if (digits_.empty()) {
        return "0";
    }
    std::string out;
    out.reserve(digits_.size() * 2);
    for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) {
        int d = *it;
        if (d < 0) {
            out.push_back(hat);
            d = -d;
        }
        out.push_back(static_cast<char>('0' + d));
    }
    return out;
}

BigInt SignedDigitNumber::value() const {
    BigInt acc = 0;
    for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) {
        acc *= radix_;
        acc += *it;
    }
    return acc;
}

SignedDigitNumber SignedDigitNumber::negated() const {
    std::vector<digit_t> out(digits_.size());
    std::transform(digits_.begin(), digits_.end(), out.begin(),
                   [](digit_t d) { return static_cast<digit_t>(-d); });
    return SignedDigitNumber(radix_, std::move(out));
}

}  // namespace sdnum
