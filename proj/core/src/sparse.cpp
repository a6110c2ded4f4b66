#include "sdnum/sparse.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <thread>
#include <utility>

namespace sdnum {

SparseForm::SparseForm(SignedDigitNumber num) : inner_(std::move(num)) {
    if (inner_.radix() != 2) {
        throw std::domain_error("sparse form requires radix 2");
    }
    if (!is_sparse(inner_)) {
        throw std::domain_error("adjacent nonzero digits in \"" + inner_.render() + "\"");
    }
}

bool SparseForm::is_sparse(const SignedDigitNumber& num) noexcept {
    if (num.radix() != 2) {
        return false;
    }
    const auto& d = num.digits();
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
        if (d[i] != 0 && d[i + 1] != 0) {
            return false;
        }
    }
    return true;
}

SparseForm sparsify(const SignedDigitNumber& num) {
    if (num.radix() != 2) {
        throw std::domain_error("sparsify requires radix 2");
    }

    // Column rewrites, least significant pair first, with carry in {-1,0,1}.
    // With t the column total (digit + carry):
    //   t even           -> keep 0, carry t/2        (10 -> 01 when t == 2)
    //   t odd, next even -> keep t                   (already sparse here)
    //   t odd, next odd  -> keep the balanced residue of the two-column value
    //                       mod 4 and defer the rest  (11 -> 0~1 carry 1,
    //                       1~1 -> 01, ~11 -> 0~1, ~1~1 -> 01 carry -1)
    const auto& in = num.digits();
    std::vector<digit_t> out;
    out.reserve(in.size() + 2);
    int carry = 0;
    for (std::size_t i = 0; i < in.size(); ++i) {
        const int t = in[i] + carry;
        if (t % 2 == 0) {
            out.push_back(0);
            carry = t / 2;
            continue;
        }
        const int pair = t + 2 * num.digit_at(i + 1);
        const int keep = (((pair % 4) + 4) % 4 == 1) ? 1 : -1;
        out.push_back(static_cast<digit_t>(keep));
        carry = (t - keep) / 2;
    }
    while (carry != 0) {
        const int t = carry;
        if (t % 2 == 0) {
            out.push_back(0);
            carry = t / 2;
        } else {
            out.push_back(static_cast<digit_t>(t));
            carry = 0;
        }
    }
    return SparseForm(SignedDigitNumber(2, std::move(out)));
}

SparseForm naf_oracle(const BigInt& v) {
    std::vector<digit_t> out;
    BigInt rest = v;
    while (rest != 0) {
        int d = 0;
        if (rest % 2 != 0) {
            const int residue = static_cast<int>(((rest % 4) + 4) % 4);  // 1 or 3
            d = residue == 1 ? 1 : -1;
        }
        out.push_back(static_cast<digit_t>(d));
        rest = (rest - d) / 2;
    }
    return SparseForm(SignedDigitNumber(2, std::move(out)));
}

namespace {

// Depth-first enumeration over the low digit: a sequence for v must start
// with a digit d of v's parity, followed by a sequence for (v - d) / 2.
// Emits complete digit vectors (LSB first, nonzero top digit) to the sink.
template <typename Sink>
void enumerate_rec(std::int64_t v, int budget, std::vector<digit_t>& prefix, Sink&& emit) {
    if (v == 0) {
        emit(prefix);
        return;  // any continuation would add leading zeros
    }
    if (budget == 0) {
        return;
    }
    // |v| must fit the remaining positions: at most 2^budget - 1.
    if (std::abs(v) > (std::int64_t(1) << budget) - 1) {
        return;
    }
    const std::array<int, 2> choices = (v % 2 == 0) ? std::array<int, 2>{0, 0}
                                                    : std::array<int, 2>{-1, 1};
    const int count = (v % 2 == 0) ? 1 : 2;
    for (int k = 0; k < count; ++k) {
        const int d = choices[k];
        prefix.push_back(static_cast<digit_t>(d));
        enumerate_rec((v - d) / 2, budget - 1, prefix, emit);
        prefix.pop_back();
    }
}

bool digits_sparse(const std::vector<digit_t>& d) {
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
        if (d[i] != 0 && d[i + 1] != 0) {
            return false;
        }
    }
    return true;
}

void check_enumeration_bounds(int max_len, int max_len_guard) {
    if (max_len_guard > 62) {
        throw std::length_error("max_len guard above 62 is not supported");
    }
    if (max_len < 0 || max_len > max_len_guard) {
        throw std::length_error("max_len " + std::to_string(max_len) +
                                " exceeds guard " + std::to_string(max_len_guard));
    }
}

}  // namespace

std::vector<SignedDigitNumber> enumerate_representations(const BigInt& v, int max_len,
                                                         int max_len_guard) {
    check_enumeration_bounds(max_len, max_len_guard);
    if (bit_length(v) > static_cast<std::size_t>(max_len)) {
        return {};  // even all-ones cannot reach v
    }

    std::vector<SignedDigitNumber> out;
    std::vector<digit_t> prefix;
    enumerate_rec(static_cast<std::int64_t>(v), max_len, prefix,
                  [&](const std::vector<digit_t>& digits) {
                      out.emplace_back(2, digits);
                  });

    std::sort(out.begin(), out.end(), [](const SignedDigitNumber& a, const SignedDigitNumber& b) {
        if (a.size() != b.size()) {
            return a.size() < b.size();
        }
        return a.render() < b.render();
    });
    return out;
}

namespace {

struct RangeOutcome {
    std::uint64_t checked = 0;
    std::vector<VerificationReport::Failure> failures;
};

// Uniqueness check for every v in [lo, hi].
RangeOutcome check_range(std::int64_t lo, std::int64_t hi, int headroom) {
    RangeOutcome outcome;
    std::vector<digit_t> prefix;
    for (std::int64_t v = lo; v <= hi; ++v) {
        const int budget = static_cast<int>(bit_length(BigInt(v))) + headroom;
        std::uint64_t sparse_count = 0;
        std::vector<std::string> sparse_witnesses;
        prefix.clear();
        enumerate_rec(v, budget, prefix, [&](const std::vector<digit_t>& digits) {
            if (digits_sparse(digits)) {
                ++sparse_count;
                sparse_witnesses.push_back(SignedDigitNumber(2, digits).render());
            }
        });

        const std::string converted = sparsify(SignedDigitNumber::from_integer(v, 2)).render();
        const bool unique = sparse_count == 1;
        const bool matches = unique && sparse_witnesses.front() == converted;
        ++outcome.checked;
        if (!unique || !matches) {
            VerificationReport::Failure f;
            f.value = v;
            f.sparse_count = sparse_count;
            f.witnesses = std::move(sparse_witnesses);
            if (unique && !matches) {
                f.witnesses.push_back("sparsify=" + converted);
            }
            outcome.failures.push_back(std::move(f));
        }
    }
    return outcome;
}

}  // namespace

VerificationReport verify_uniqueness(const BigInt& range_max, int headroom, unsigned jobs,
                                     const BigInt& range_guard) {
    if (headroom < 1) {
        throw std::invalid_argument("headroom must be at least 1");
    }
    if (range_max > range_guard) {
        throw std::length_error("range_max exceeds guard " + range_guard.str());
    }
    if (jobs == 0) {
        jobs = 1;
    }

    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    const std::int64_t n = static_cast<std::int64_t>(range_max);
    if (n >= 1) {
        constexpr std::int64_t kChunk = 2048;
        const std::size_t num_chunks = static_cast<std::size_t>((n + kChunk - 1) / kChunk);
        std::vector<RangeOutcome> outcomes(num_chunks);
        std::atomic<std::size_t> next{0};

        auto worker = [&]() {
            for (std::size_t c = next.fetch_add(1); c < num_chunks; c = next.fetch_add(1)) {
                const std::int64_t lo = 1 + static_cast<std::int64_t>(c) * kChunk;
                const std::int64_t hi = std::min<std::int64_t>(n, lo + kChunk - 1);
                outcomes[c] = check_range(lo, hi, headroom);
            }
        };

        if (jobs == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            pool.reserve(jobs);
            for (unsigned t = 0; t < jobs; ++t) {
                pool.emplace_back(worker);
            }
            for (auto& t : pool) {
                t.join();
            }
        }

        for (auto& outcome : outcomes) {
            report.checked += outcome.checked;
            for (auto& f : outcome.failures) {
                report.failures.push_back(std::move(f));
            }
        }
    }

    const auto end = std::chrono::steady_clock::now();
    report.elapsed_ms = std::chrono::duration<double, std::milli>(end - start).count();
    return report;
}

std::string VerificationReport::to_text() const {
    std::ostringstream out;
    out << "checked=" << checked << " failures=" << failures.size() << "\n";
    for (const auto& f : failures) {
        out << "failure value=" << f.value.str() << " sparse_count=" << f.sparse_count
            << " witnesses=";
        for (std::size_t i = 0; i < f.witnesses.size(); ++i) {
            if (i != 0) {
                out << ",";
            }
            out << f.witnesses[i];
        }
        out << "\n";
    }
    out << "elapsed_ms=" << elapsed_ms << "\n";
    return out.str();
}

}  // namespace sdnum
