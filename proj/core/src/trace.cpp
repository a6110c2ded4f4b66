#include "sdnum/trace.hpp"

#include <algorithm>

namespace sdnum {

namespace {

// One 2-character cell per place value, most significant first: ' ' or the
// hat marker, then the digit character.
std::string cells(const SignedDigitNumber& n) {
    if (n.is_zero()) {
        return " 0";
    }
    std::string out;
    out.reserve(n.size() * 2);
    const auto& d = n.digits();
    for (std::size_t i = d.size(); i-- > 0;) {
        out.push_back(d[i] < 0 ? '~' : ' ');
        out.push_back(static_cast<char>('0' + (d[i] < 0 ? -d[i] : d[i])));
    }
    return out;
}

int cell_count(const SignedDigitNumber& n) {
    return n.is_zero() ? 1 : static_cast<int>(n.size());
}

void rstrip(std::string& s) {
    while (!s.empty() && s.back() == ' ') {
        s.pop_back();
    }
}

}  // namespace

std::string render(const TraceDocument& doc) {
    std::size_t width = 0;
    for (const auto& row : doc.rows) {
        width = std::max(width, static_cast<std::size_t>(row.indent) + row.text.size());
    }
    std::string out;
    for (const auto& row : doc.rows) {
        std::string line(static_cast<std::size_t>(row.indent), ' ');
        line += row.text;
        rstrip(line);
        out += line;
        out.push_back('\n');
        if (row.rule_below) {
            std::string rule(static_cast<std::size_t>(doc.rule_indent), ' ');
            rule.append(width - doc.rule_indent, '-');
            out += rule;
            out.push_back('\n');
        }
    }
    return out;
}

TraceDocument trace_mul(const SignedDigitNumber& a, const SignedDigitNumber& b) {
    OpStats scratch;
    const SignedDigitNumber product = mul(a, b, scratch);

    // Partial products without their shifts; the shift becomes a cell offset.
    struct Partial {
        SignedDigitNumber row;
        int offset;
    };
    std::vector<Partial> partials;
    for (std::size_t j = 0; j < b.digits().size(); ++j) {
        const int d = b.digits()[j];
        if (d == 0) {
            continue;
        }
        OpStats ignore;
        partials.push_back({mul(a, SignedDigitNumber(a.radix(), {static_cast<digit_t>(d)}), ignore),
                            static_cast<int>(j)});
    }

    int grid = std::max(cell_count(a), cell_count(b));
    for (const auto& p : partials) {
        grid = std::max(grid, cell_count(p.row) + p.offset);
    }
    grid = std::max(grid, cell_count(product));

    constexpr int kGutter = 2;  // operator glyph column
    auto plain_row = [&](const SignedDigitNumber& n, int offset, bool rule) {
        const int indent = kGutter + (grid - cell_count(n) - offset) * 2;
        return TraceRow{indent, cells(n) + std::string(static_cast<std::size_t>(offset) * 2, ' '),
                        rule};
    };
    auto glyph_row = [&](char glyph, const SignedDigitNumber& n, int offset, bool rule) {
        std::string text(1, glyph);
        text += ' ';
        text.append(static_cast<std::size_t>((grid - cell_count(n) - offset) * 2), ' ');
        text += cells(n);
        text.append(static_cast<std::size_t>(offset) * 2, ' ');
        return TraceRow{0, std::move(text), rule};
    };

    TraceDocument doc;
    doc.caption = a.render() + " x " + b.render() + " = " + product.render();
    doc.rows.push_back(plain_row(a, 0, false));
    doc.rows.push_back(glyph_row('x', b, 0, true));
    for (std::size_t i = 0; i < partials.size(); ++i) {
        const bool last = i + 1 == partials.size();
        if (i == 0) {
            doc.rows.push_back(plain_row(partials[i].row, partials[i].offset, last));
        } else {
            doc.rows.push_back(glyph_row('+', partials[i].row, partials[i].offset, last));
        }
    }
    doc.rows.push_back(plain_row(product, 0, false));
    return doc;
}

TraceDocument trace_div(const SignedDigitNumber& dividend, const SignedDigitNumber& divisor,
                        DivMode mode) {
    OpStats scratch;
    std::vector<DivStep> steps;
    const DivResult result = divide(dividend, divisor, mode, scratch, steps);

    const int radix = dividend.radix();
    const SignedDigitNumber source =
        mode == DivMode::standard
            ? SignedDigitNumber::from_integer(boost::multiprecision::abs(dividend.value()), radix)
            : dividend;

    const std::string gutter = divisor.render() + " ) ";
    const int gutter_w = static_cast<int>(gutter.size());
    const int grid = cell_count(source);

    // Character offset of the cell at place value `pos`.
    auto cell_offset = [&](int pos) { return gutter_w + (grid - 1 - pos) * 2; };
    auto value_row = [&](const BigInt& v, int pos, int extra_left, bool rule) {
        const SignedDigitNumber n = SignedDigitNumber::from_integer(v, radix);
        const int left_pos = pos + cell_count(n) - 1;
        const int indent = std::max(0, cell_offset(left_pos) - extra_left);
        return std::pair<TraceRow, SignedDigitNumber>{TraceRow{indent, "", rule}, n};
    };

    TraceDocument doc;
    doc.rule_indent = gutter_w;
    doc.caption = dividend.render() + " / " + divisor.render() + " = " +
                  result.quotient.render() + " r " + result.remainder.str();

    {
        const int indent =
            std::max(0, gutter_w + (grid - cell_count(result.quotient)) * 2);
        doc.rows.push_back({indent, cells(result.quotient), true});
    }
    doc.rows.push_back({0, gutter + cells(source), false});

    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (i > 0) {
            auto [row, n] = value_row(steps[i].window, steps[i].position, 0, false);
            row.text = cells(n);
            doc.rows.push_back(std::move(row));
        }
        auto [row, n] = value_row(steps[i].subtracted, steps[i].position, 1, true);
        row.text = "-" + cells(n);
        doc.rows.push_back(std::move(row));
    }
    {
        auto [row, n] = value_row(result.remainder, 0, 0, false);
        row.text = cells(n);
        doc.rows.push_back(std::move(row));
    }
    return doc;
}

}  // namespace sdnum
