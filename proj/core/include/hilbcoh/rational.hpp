#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace hilbcoh {

// Every coefficient in the library is an exact rational; no floating point
// enters any computation.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rat& x) { return x.str(); }

// x^e for integer e (negative allowed; x must be nonzero then).
inline Rat rat_pow(const Rat& x, long e) {
    if (e == 0) return Rat(1);
    Rat base = e > 0 ? x : Rat(1) / x;
    unsigned long k = e > 0 ? static_cast<unsigned long>(e)
                            : static_cast<unsigned long>(-e);
    Rat acc(1);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

} // namespace hilbcoh
