#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace hopfrg {

// Exact arbitrary-precision rational scalar used everywhere in the core.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline std::string render_rational(const Rational& r) { return r.str(); }

inline Rational factorial(int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return Rational(f);
}

} // namespace hopfrg
