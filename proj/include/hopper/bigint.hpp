#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <stdexcept>

namespace hopper {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sign_of(const Int& x) { return x.sign(); }

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// Nearest integer to p/q for q > 0, ties rounded toward +infinity.
inline Int round_div(const Int& p, const Int& q) {
    if (q <= 0) throw std::invalid_argument("round_div: q must be positive");
    Int num = 2 * p + q;
    Int den = 2 * q;
    Int f = num / den;
    if (num < 0 && f * den != num) --f;  // floor for negatives
    return f;
}

inline Int isqrt_int(const Int& x) {
    if (x < 0) throw std::invalid_argument("isqrt of negative");
    return boost::multiprecision::sqrt(x);
}

inline unsigned bit_length(const Int& x) {
    if (x == 0) return 0;
    return boost::multiprecision::msb(abs_int(x)) + 1;
}

}  // namespace hopper
