#pragma once

#include "sdnum/arith.hpp"
#include "sdnum/signed_digit.hpp"

#include <string>
#include <vector>

namespace sdnum {

// One line of a vertical worked computation. `indent` is the character
// offset of `text` from the left edge of the block; rule_below draws a ruled
// line under the row.
struct TraceRow {
    int indent = 0;
    std::string text;
    bool rule_below = false;
};

// A plain-text vertical computation. Every digit column of the rendered
// block corresponds to one place value (2-character cells, hat marker in the
// leading cell character).
struct TraceDocument {
    std::vector<TraceRow> rows;
    std::string caption;
    int rule_indent = 0;  // left edge of ruled lines (past any gutter)
};

// Flattens to the displayable block, one '\n'-terminated line per row plus
// ruled lines. The caption is not part of the block.
std::string render(const TraceDocument& doc);

// Vertical multiplication: multiplicand, multiplier, one shifted partial
// product per nonzero multiplier digit, ruled sum row.
TraceDocument trace_mul(const SignedDigitNumber& a, const SignedDigitNumber& b);

// Vertical long division: quotient row on top, then the dividend behind the
// divisor gutter, alternating subtract and bring-down rows, final remainder.
TraceDocument trace_div(const SignedDigitNumber& dividend, const SignedDigitNumber& divisor,
                        DivMode mode);

}  // namespace sdnum
