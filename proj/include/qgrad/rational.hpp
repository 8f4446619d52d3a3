#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qgrad {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational arithmetic. cpp_rational keeps values in lowest terms with a
// positive denominator, which is exactly the invariant we need for the
// coefficient identities.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(unsigned n) {
    BigInt out = 1;
    for (unsigned i = 2; i <= n; ++i) out *= i;
    return out;
}

// q^k for non-negative integer k (0^0 = 1).
inline Rational rational_pow(const Rational& q, unsigned k) {
    using boost::multiprecision::pow;
    return Rational(pow(numerator(q), k)) / pow(denominator(q), k);
}

inline double to_double(const Rational& q) {
    return q.convert_to<double>();
}

inline Rational rational_abs(const Rational& q) {
    return q < 0 ? Rational(-q) : q;
}

}  // namespace qgrad
