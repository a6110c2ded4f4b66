#pragma once

#include "sdnum/signed_digit.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sdnum {

// A radix-2 signed-digit number with digits in {-1,0,1} and no two adjacent
// nonzero positions. Exactly one such representation exists per integer; see
// verify_uniqueness for the exhaustive check.
class SparseForm {
  public:
    // Throws std::domain_error if num is not radix 2 or violates the
    // no-adjacent-nonzeros invariant.
    explicit SparseForm(SignedDigitNumber num);

    static bool is_sparse(const SignedDigitNumber& num) noexcept;

    const SignedDigitNumber& inner() const noexcept { return inner_; }
    std::string render(char hat = kDefaultHatChar) const { return inner_.render(hat); }
    BigInt value() const { return inner_.value(); }

    bool operator==(const SparseForm&) const = default;

  private:
    SignedDigitNumber inner_;
};

// Converts a radix-2 signed-digit number to sparse form with a single
// LSB-to-MSB pass over the digits, carrying at most one unit. Value is
// preserved; the result is deterministic and idempotent.
// Throws std::domain_error for radices other than 2.
SparseForm sparsify(const SignedDigitNumber& num);

// Independent value-based recoding used to cross-check sparsify: repeatedly
// peels the balanced residue of v mod 4. Kept free of any digit-rewriting
// logic so the two routes stay independent.
SparseForm naf_oracle(const BigInt& v);

// All radix-2 digit sequences (digits in {-1,0,1}, no leading zero, at most
// max_len positions) whose value is v. Ordered by digit count, then by
// rendered text. The zero value yields the single empty (zero) sequence.
// Throws std::length_error if max_len exceeds the guard.
std::vector<SignedDigitNumber> enumerate_representations(const BigInt& v, int max_len,
                                                         int max_len_guard = 24);

struct VerificationReport {
    struct Failure {
        BigInt value;
        std::uint64_t sparse_count = 0;
        std::vector<std::string> witnesses;  // rendered sparse members (and, on a
                                             // converter mismatch, the converter output)
    };

    std::uint64_t checked = 0;
    std::vector<Failure> failures;
    double elapsed_ms = 0.0;

    bool ok() const noexcept { return failures.empty(); }

    // First line "checked=N failures=K", one "failure ..." line per entry,
    // then "elapsed_ms=...".
    std::string to_text() const;
};

// For every integer v in [1, range_max], counts the sparse members among all
// signed-digit representations of v with bit_length(v) + headroom positions
// and checks that sparsify(from_integer(v, 2)) is the single one. Any v with
// a count other than one, or a converter mismatch, lands in failures.
//
// Partitioned across `jobs` worker threads; partial reports are merged in
// range order, so the result is identical for any job count.
VerificationReport verify_uniqueness(const BigInt& range_max, int headroom,
                                     unsigned jobs = 1,
                                     const BigInt& range_guard = BigInt(1) << 20);

}  // namespace sdnum
