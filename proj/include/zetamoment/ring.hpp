#pragma once

#include "zetamoment/bigcomplex.hpp"
#include "zetamoment/bigfloat.hpp"
#include "zetamoment/exact_poly.hpp"
#include "zetamoment/rational.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace zetamoment {

// Coefficient-ring traits for the series engine. A ring is either exact
// (ExactPoly over Q) or numeric; the two never mix within one series, which
// the template parameterization enforces at compile time.
template <typename R>
struct ring_traits;

template <>
struct ring_traits<ExactPoly> {
    static constexpr bool exact = true;
    static bool is_zero(const ExactPoly& x) { return x.is_zero(); }
};

template <>
struct ring_traits<BigReal> {
    static constexpr bool exact = false;
    static bool is_zero(const BigReal& x) { return x == 0; }
};

template <>
struct ring_traits<BigComplex> {
    static constexpr bool exact = false;
    static bool is_zero(const BigComplex& x) { return x.re == 0 && x.im == 0; }
};

// Context for building series over the exact polynomial ring: the Stieltjes
// constants stay symbolic.
struct ExactContext {
    using Ring = ExactPoly;

    Ring zero() const { return ExactPoly(); }
    Ring one() const { return ExactPoly::constant(1); }
    Ring from_rational(const Rational& q) const { return ExactPoly::constant(q); }
    Ring gamma(int n) const { return ExactPoly::symbol(static_cast<unsigned>(n)); }

    Ring invert(const Ring& x) const {
        if (!x.is_rational() || x.is_zero())
            throw std::domain_error("ExactPoly inversion requires a nonzero rational constant");
        return ExactPoly::constant(Rational(1) / x.as_rational());
    }

    Ring scale(Ring x, const Rational& q) const { return x * q; }
};

// Context for building the same series numerically: the Stieltjes constants
// are supplied as arbitrary-precision reals at a fixed working precision.
struct RealContext {
    using Ring = BigReal;

    std::vector<BigReal> gamma_values;

    Ring zero() const { return BigReal(0); }
    Ring one() const { return BigReal(1); }
    Ring from_rational(const Rational& q) const { return to_bigreal(q); }

    Ring gamma(int n) const {
        if (n < 0 || static_cast<size_t>(n) >= gamma_values.size())
            throw std::out_of_range("RealContext: no value for gamma_" + std::to_string(n));
        return gamma_values[n];
    }

    Ring invert(const Ring& x) const {
        if (x == 0) throw std::domain_error("division by zero");
        return 1 / x;
    }

    Ring scale(Ring x, const Rational& q) const { return x * to_bigreal(q); }
};

} // namespace zetamoment
