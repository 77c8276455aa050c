// Exact arithmetic carriers shared by every module: arbitrary-precision
// integers and rationals, plus the resource-cap error used by table builders.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace plethy {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown when a requested computation would exceed a configured table cap.
struct resource_cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// Converts an exact rational that is known to be integral; diagnostic on failure.
inline Integer require_integer(const Rational& r, const char* what) {
    if (!is_integer(r)) {
        throw std::logic_error(std::string(what) + ": expected an integer, got " +
                               r.str());
    }
    return numerator(r);
}

/// Checked narrowing for serialization boundaries (JSON, Python ints).
inline std::int64_t to_int64(const Integer& v, const char* what) {
    if (v > Integer(INT64_MAX) || v < Integer(INT64_MIN)) {
        throw std::overflow_error(std::string(what) + ": value " + v.str() +
                                  " does not fit in 64 bits");
    }
    return static_cast<std::int64_t>(v);
}

inline Integer factorial(int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

/// Binomial coefficient C(n, k) with C(n, k) = 0 for k < 0 or k > n.
inline Integer binomial(const Integer& n, int k) {
    if (k < 0 || n < k) return 0;
    Integer num = 1, den = 1;
    for (int i = 1; i <= k; ++i) {
        num *= n - (k - i);
        den *= i;
    }
    return num / den;
}

}  // namespace plethy
