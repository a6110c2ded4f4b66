#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>

namespace sdnum {

// Exact, unbounded signed integer used for value semantics throughout.
using BigInt = boost::multiprecision::cpp_int;

// Number of binary digits of |v|; bit_length(0) == 0.
inline std::size_t bit_length(const BigInt& v) {
    if (v == 0) {
        return 0;
    }
    const BigInt a = boost::multiprecision::abs(v);
    return boost::multiprecision::msb(a) + 1;
}

inline int sign_of(const BigInt& v) {
    return v.sign();
}

inline std::string to_string(const BigInt& v) {
    return v.str();
}

}  // namespace sdnum
