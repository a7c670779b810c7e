#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace svol {

// Exact arbitrary-precision rational. cpp_rational keeps the value reduced
// with a positive denominator at all times.
using Rational = boost::multiprecision::cpp_rational;

// Renders as "p" or "p/q" with q > 1.
inline std::string render_rational(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

}  // namespace svol
