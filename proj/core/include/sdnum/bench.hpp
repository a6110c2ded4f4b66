#pragma once

#include "sdnum/arith.hpp"

#include <cstdint>
#include <string>

namespace sdnum {

// Counter-keyed SplitMix64 draw: sample i uses counters 2i and 2i+1, so the
// stream splits per sample index and parallel schedules cannot change it.
std::uint64_t seeded_draw(std::uint64_t seed, std::uint64_t counter);

struct BenchConfig {
    int bit_length = 64;
    std::uint64_t samples = 10000;
    std::uint64_t seed = 42;
    bool resparsify_after_add = false;
};

struct BenchReport {
    BenchConfig config;
    bool exhaustive = false;  // multipliers swept 0..2^bits-1 instead of sampled

    double mean_weight_standard = 0.0;
    double mean_weight_sparse = 0.0;
    double weight_ratio = 0.0;
    double mean_adds_standard = 0.0;
    double mean_adds_sparse = 0.0;
    double mean_carries_standard = 0.0;
    double mean_carries_sparse = 0.0;
    double wall_ns_standard = 0.0;  // mean per product, machine-dependent
    double wall_ns_sparse = 0.0;

    // Samples where the sparse recoding did not reduce the nonzero count.
    std::uint64_t weight_violations = 0;

    // key=value lines; identical across runs with the same config except for
    // the wall_ns_* lines.
    std::string to_kv() const;
    std::string summary() const;
};

// Shift-and-add multiplication on seeded random pairs drawn uniformly from
// [2^(bits-1), 2^bits), once per strategy: the multiplier's standard binary
// digits versus its sparse recoding (subtract on -1). Counts nonzero partial
// products, column additions and carries for each strategy.
//
// When samples == 2^bits the run is exhaustive: the multiplier sweeps every
// value in [0, 2^bits) while the multiplicand stays seeded-random.
BenchReport run_bench(const BenchConfig& cfg);

}  // namespace sdnum
