#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>

namespace zetamoment {

using Integer  = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Integer factorial_z(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative integer");
    Integer r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Rational factorial_q(int n) { return Rational(factorial_z(n)); }

// 1/n! extended by 0 for negative n. This is the convention the moment
// polynomial formulas rely on at the branch seams.
inline Rational inv_factorial(int n) {
    if (n < 0) return Rational(0);
    return Rational(1, factorial_z(n));
}

inline Rational binomial_q(int n, int k) {
    if (k < 0 || k > n) return Rational(0);
    Integer num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= (n - i);
        den *= (i + 1);
    }
    return Rational(num, den);
}

} // namespace zetamoment
