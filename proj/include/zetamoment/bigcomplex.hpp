#pragma once

#include "zetamoment/bigfloat.hpp"

namespace zetamoment {

// Complex number over BigReal. std::complex is not usable with
// multiprecision types, so we carry our own minimal value type.
struct BigComplex {
    BigReal re;
    BigReal im;

    BigComplex() : re(0), im(0) {}
    BigComplex(BigReal r) : re(std::move(r)), im(0) {}
    BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}
    BigComplex(int r) : re(r), im(0) {}

    BigComplex& operator+=(const BigComplex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    BigComplex& operator-=(const BigComplex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    BigComplex& operator*=(const BigComplex& o) {
        BigReal r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
};

inline BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
inline BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
inline BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
inline BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }

inline BigComplex operator*(const BigReal& a, BigComplex b) {
    b.re *= a;
    b.im *= a;
    return b;
}
inline BigComplex operator*(BigComplex b, const BigReal& a) { return a * std::move(b); }

inline BigReal norm(const BigComplex& z) { return z.re * z.re + z.im * z.im; }
inline BigReal abs(const BigComplex& z) { return sqrt(norm(z)); }
inline BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }

inline BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigReal n = norm(b);
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}
inline BigComplex operator/(BigComplex a, const BigReal& b) {
    a.re /= b;
    a.im /= b;
    return a;
}

inline bool operator==(const BigComplex& a, const BigComplex& b) {
    return a.re == b.re && a.im == b.im;
}

BigComplex cis(const BigReal& t);

inline BigComplex exp(const BigComplex& z) {
    BigReal m = exp(z.re);
    BigComplex c = cis(z.im);
    return {m * c.re, m * c.im};
}

inline BigComplex log(const BigComplex& z) {
    return {BigReal(0.5) * log(norm(z)), atan2(z.im, z.re)};
}

// exp(i*t) for real t.
inline BigComplex cis(const BigReal& t) {
    BigComplex out; // components are born at the working precision
    mpfr_sin_cos(out.im.backend().data(), out.re.backend().data(), t.backend().data(), MPFR_RNDN);
    return out;
}

// base^z for positive real base.
inline BigComplex pow(const BigReal& base, const BigComplex& z) {
    return exp(z * BigComplex(log(base)));
}

inline BigComplex sin(const BigComplex& z) {
    return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)};
}

} // namespace zetamoment
