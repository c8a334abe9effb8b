#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "spk/errors.hpp"

namespace spk::exact {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigRational& x) {
    return x.str();
}

// Accepts "p", "-p", "p/q"; normalization (sign, gcd) is handled by the type.
inline BigRational parse_rational(const std::string& s) {
    try {
        BigRational x(s);
        return x;
    } catch (const std::exception&) {
        throw ParseError("not a rational: '" + s + "'");
    }
}

inline BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

} // namespace spk::exact
