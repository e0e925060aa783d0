#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <string>

namespace perdet {

using Int = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always in lowest terms with positive
// denominator. All arithmetic is exact; nothing in this project touches
// floating point.
using Rational = boost::multiprecision::cpp_rational;

// boost's two-argument constructor rejects negative denominators, so build
// through exact division instead.
inline Rational make_rational(const Int& num, const Int& den) {
    return Rational(num) / Rational(den);
}

// "3", "-1/2"; integers print without a denominator.
inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline int sign_of(const Rational& r) { return r.sign(); }

inline Rational abs_value(const Rational& r) { return r < 0 ? Rational(-r) : r; }

} // namespace perdet
