#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include "zetamoment/rational.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace zetamoment {

// Arbitrary-precision real. Precision is controlled per value; newly
// constructed values pick up the thread's current working precision.
using BigReal = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                              boost::multiprecision::et_off>;

inline unsigned bits_to_digits10(unsigned bits) {
    return static_cast<unsigned>(std::ceil(bits * 0.30103)) + 2;
}

inline void set_working_precision_bits(unsigned bits) {
    BigReal::default_precision(bits_to_digits10(bits));
}

inline unsigned working_precision_bits() {
    return static_cast<unsigned>(BigReal::default_precision() / 0.30103);
}

// RAII scope for the thread-local working precision.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned bits) : saved_digits_(BigReal::default_precision()) {
        set_working_precision_bits(bits);
    }
    ~PrecisionGuard() { BigReal::default_precision(saved_digits_); }

    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_digits_;
};

inline BigReal to_bigreal(const Rational& q) {
    return BigReal(Integer(boost::multiprecision::numerator(q)).convert_to<BigReal>() /
                   Integer(boost::multiprecision::denominator(q)).convert_to<BigReal>());
}

inline BigReal pow2(long e) {
    BigReal r = 1;
    mpfr_mul_2si(r.backend().data(), r.backend().data(), e, MPFR_RNDN);
    return r;
}

inline BigReal const_pi() {
    BigReal r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

// Lossless round-trip serialization (hexadecimal mantissa).
// mpfr_get_str yields digits d with x = 0.d * 16^e; we store the integer
// mantissa with the exponent rebased accordingly.
inline std::string bigreal_to_hex(const BigReal& x) {
    if (mpfr_zero_p(x.backend().data())) return "0@0";
    mpfr_exp_t exp = 0;
    char* s = mpfr_get_str(nullptr, &exp, 16, 0, x.backend().data(), MPFR_RNDN);
    std::string mant(s);
    mpfr_free_str(s);
    long ndigits = static_cast<long>(mant.size()) - (mant[0] == '-' ? 1 : 0);
    std::string out = mant + "@" + std::to_string(static_cast<long>(exp) - ndigits);
    return out;
}

inline BigReal bigreal_from_hex(const std::string& text) {
    BigReal r;
    mpfr_set_str(r.backend().data(), text.c_str(), 16, MPFR_RNDN);
    return r;
}

} // namespace zetamoment
