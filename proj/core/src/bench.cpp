#include "sdnum/bench.hpp"

#include "sdnum/sparse.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace sdnum {

std::uint64_t seeded_draw(std::uint64_t seed, std::uint64_t counter) {
    std::uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

namespace {

std::uint64_t force_bit_length(std::uint64_t r, int bits) {
    const std::uint64_t top = 1ull << (bits - 1);
    const std::uint64_t low_mask = top - 1;
    return (r & low_mask) | top;
}

struct StrategyStats {
    std::uint64_t weight = 0;
    OpStats ops;
};

// One shift-and-add product: for every nonzero multiplier digit, add the
// correspondingly shifted (and negated, for -1 digits) multiplicand into the
// accumulator.
StrategyStats shift_add_multiply(const SignedDigitNumber& multiplicand,
                                 const SignedDigitNumber& multiplier, bool resparsify,
                                 const BigInt& expected) {
    StrategyStats st;
    SignedDigitNumber acc(2);
    const auto& digits = multiplier.digits();
    for (std::size_t j = 0; j < digits.size(); ++j) {
        if (digits[j] == 0) {
            continue;
        }
        ++st.weight;
        std::vector<digit_t> shifted(j, 0);
        shifted.insert(shifted.end(), multiplicand.digits().begin(), multiplicand.digits().end());
        SignedDigitNumber partial(2, std::move(shifted));
        if (digits[j] < 0) {
            partial = partial.negated();
        }
        ++st.ops.nonzero_partials;
        acc = add(acc, partial, st.ops);
        if (resparsify) {
            acc = sparsify(acc).inner();
        }
    }
    if (acc.value() != expected) {
        throw std::logic_error("shift-and-add product mismatch");
    }
    return st;
}

}  // namespace

BenchReport run_bench(const BenchConfig& cfg) {
    if (cfg.bit_length < 2 || cfg.bit_length > 62) {
        throw std::invalid_argument("bit_length must be in [2, 62]");
    }
    if (cfg.samples < 1) {
        throw std::invalid_argument("samples must be at least 1");
    }

    BenchReport report;
    report.config = cfg;
    report.exhaustive = cfg.samples == (1ull << cfg.bit_length);

    std::uint64_t sum_w_std = 0, sum_w_sp = 0;
    std::uint64_t sum_adds_std = 0, sum_adds_sp = 0;
    std::uint64_t sum_carries_std = 0, sum_carries_sp = 0;
    double ns_std = 0.0, ns_sp = 0.0;

    using clock = std::chrono::steady_clock;
    for (std::uint64_t i = 0; i < cfg.samples; ++i) {
        const std::uint64_t x = force_bit_length(seeded_draw(cfg.seed, 2 * i), cfg.bit_length);
        const std::uint64_t y =
            report.exhaustive ? i
                              : force_bit_length(seeded_draw(cfg.seed, 2 * i + 1), cfg.bit_length);

        const SignedDigitNumber x_sd = SignedDigitNumber::from_integer(x, 2);
        const SignedDigitNumber y_std = SignedDigitNumber::from_integer(y, 2);
        const BigInt expected = BigInt(x) * y;

        const auto t0 = clock::now();
        const StrategyStats standard = shift_add_multiply(x_sd, y_std, false, expected);
        const auto t1 = clock::now();
        const SignedDigitNumber y_sparse = sparsify(y_std).inner();
        const StrategyStats sparse =
            shift_add_multiply(x_sd, y_sparse, cfg.resparsify_after_add, expected);
        const auto t2 = clock::now();

        ns_std += std::chrono::duration<double, std::nano>(t1 - t0).count();
        ns_sp += std::chrono::duration<double, std::nano>(t2 - t1).count();

        sum_w_std += standard.weight;
        sum_w_sp += sparse.weight;
        sum_adds_std += standard.ops.nonzero_partials;
        sum_adds_sp += sparse.ops.nonzero_partials;
        sum_carries_std += standard.ops.carries;
        sum_carries_sp += sparse.ops.carries;
        if (sparse.weight > standard.weight) {
            ++report.weight_violations;
        }
    }

    const double n = static_cast<double>(cfg.samples);
    report.mean_weight_standard = sum_w_std / n;
    report.mean_weight_sparse = sum_w_sp / n;
    report.weight_ratio =
        sum_w_std == 0 ? 1.0 : static_cast<double>(sum_w_sp) / static_cast<double>(sum_w_std);
    report.mean_adds_standard = sum_adds_std / n;
    report.mean_adds_sparse = sum_adds_sp / n;
    report.mean_carries_standard = sum_carries_std / n;
    report.mean_carries_sparse = sum_carries_sp / n;
    report.wall_ns_standard = ns_std / n;
    report.wall_ns_sparse = ns_sp / n;
    return report;
}

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

}  // namespace

std::string BenchReport::to_kv() const {
    std::ostringstream out;
    out << "bits=" << config.bit_length << "\n"
        << "samples=" << config.samples << "\n"
        << "seed=" << config.seed << "\n"
        << "resparsify=" << (config.resparsify_after_add ? 1 : 0) << "\n"
        << "exhaustive=" << (exhaustive ? 1 : 0) << "\n"
        << "mean_weight_standard=" << fmt(mean_weight_standard) << "\n"
        << "mean_weight_sparse=" << fmt(mean_weight_sparse) << "\n"
        << "weight_ratio=" << fmt(weight_ratio) << "\n"
        << "mean_adds_standard=" << fmt(mean_adds_standard) << "\n"
        << "mean_adds_sparse=" << fmt(mean_adds_sparse) << "\n"
        << "mean_carries_standard=" << fmt(mean_carries_standard) << "\n"
        << "mean_carries_sparse=" << fmt(mean_carries_sparse) << "\n"
        << "weight_violations=" << weight_violations << "\n"
        << "wall_ns_standard=" << fmt(wall_ns_standard) << "\n"
        << "wall_ns_sparse=" << fmt(wall_ns_sparse) << "\n";
    return out.str();
}

std::string BenchReport::summary() const {
    std::ostringstream out;
    out << "bits=" << config.bit_length << " samples=" << config.samples
        << " seed=" << config.seed << " weight " << fmt(mean_weight_sparse) << " vs "
        << fmt(mean_weight_standard) << " (ratio " << fmt(weight_ratio) << ") adds "
        << fmt(mean_adds_sparse) << " vs " << fmt(mean_adds_standard) << " carries "
        << fmt(mean_carries_sparse) << " vs " << fmt(mean_carries_standard);
    return out.str();
}

}  // namespace sdnum
