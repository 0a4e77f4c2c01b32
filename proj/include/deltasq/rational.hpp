#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace deltasq {

// Exact arbitrary-precision integers and rationals. cpp_rational keeps
// gcd(|num|, den) = 1 and den >= 1 as internal invariants.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

inline Rational rational_from_string(const std::string& s) {
    auto pos = s.find('/');
    if (pos == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, pos));
    BigInt den(s.substr(pos + 1));
    if (den == 0) throw std::domain_error("rational_from_string: zero denominator");
    return Rational(num, den);
}

} // namespace deltasq
