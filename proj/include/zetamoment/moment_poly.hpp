#pragma once

#include "zetamoment/laurent.hpp"
#include "zetamoment/rational.hpp"
#include "zetamoment/ring.hpp"

#include <stdexcept>
#include <vector>

namespace zetamoment {

// Laurent coefficient families entering the moment polynomial:
//   kind c:  (zeta'/zeta)(s) zeta^(mu)(s) zeta^(k)(s) / s, pole order mu+k+3
//   kind d:  zeta^(nu)(s) zeta^(k)(s) / s,                 pole order nu+k+2
template <typename R>
struct CoefficientSet {
    enum class Kind { c, d };

    Kind kind;
    int order;                  // mu for kind c, nu for kind d
    int k;
    std::vector<R> values;      // index j

    const R& at(int j) const {
        if (j < 0 || static_cast<size_t>(j) >= values.size())
            throw std::invalid_argument("CoefficientSet: index j=" + std::to_string(j) +
                                        " outside computed range");
        return values[static_cast<size_t>(j)];
    }
};

// The degree mu+nu+2 polynomial in x = log(T/2pi) whose value, scaled by
// T/2pi, is the asymptotic of the discrete second moment.
template <typename R>
struct MomentPolynomial {
    int mu;
    int nu;
    std::vector<R> coeffs; // coeffs[m] multiplies x^m, m = 0..mu+nu+2

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

namespace detail {

// Shared guard policy: every series is built a few relative orders past what
// is consumed, and the first discarded coefficient must exist.
constexpr int kSeriesGuard = 4;

template <typename Ctx>
LaurentSeries<typename Ctx::Ring> zeta_deriv_series(const LaurentSeries<typename Ctx::Ring>& z,
                                                    int order, const Ctx& ctx) {
    return differentiate(z, order, ctx);
}

} // namespace detail

// Laurent coefficients c_j^(mu,k), j = 0..count-1, of
// (zeta'/zeta) zeta^(mu) zeta^(k) / s about s = 1.
template <typename Ctx>
CoefficientSet<typename Ctx::Ring> c_coefficients(int mu, int k, int count, const Ctx& ctx) {
    if (mu < 1 || k < 0) throw std::invalid_argument("c_coefficients: need mu >= 1, k >= 0");
    if (count < mu + k + 3)
        throw std::invalid_argument("c_coefficients: count must cover the full pole order");
    const int M = count + detail::kSeriesGuard;
    auto z = zeta_series(M, ctx);
    auto f = multiply(differentiate(z, 1, ctx), reciprocal(z, ctx), ctx);
    f = multiply(f, differentiate(z, mu, ctx), ctx);
    f = multiply(f, differentiate(z, k, ctx), ctx);
    f = multiply(f, inv_s_series(M, ctx), ctx);
    if (f.pole_order() != mu + k + 3)
        throw std::logic_error("c_coefficients: unexpected pole order");
    if (f.trunc_order() < count)
        throw std::invalid_argument("c_coefficients: insufficient truncation for requested count");
    CoefficientSet<typename Ctx::Ring> set{CoefficientSet<typename Ctx::Ring>::Kind::c, mu, k, {}};
    set.values.reserve(static_cast<size_t>(count));
    for (int j = 0; j < count; ++j) set.values.push_back(f.coeff(j));
    return set;
}

// Laurent coefficients d_j^(nu,k), j = 0..count-1, of zeta^(nu) zeta^(k) / s.
template <typename Ctx>
CoefficientSet<typename Ctx::Ring> d_coefficients(int nu, int k, int count, const Ctx& ctx) {
    if (nu < 1 || k < 0) throw std::invalid_argument("d_coefficients: need nu >= 1, k >= 0");
    if (count < nu + k + 2)
        throw std::invalid_argument("d_coefficients: count must cover the full pole order");
    const int M = count + detail::kSeriesGuard;
    auto z = zeta_series(M, ctx);
    auto f = multiply(differentiate(z, nu, ctx), differentiate(z, k, ctx), ctx);
    f = multiply(f, inv_s_series(M, ctx), ctx);
    if (f.pole_order() != nu + k + 2)
        throw std::logic_error("d_coefficients: unexpected pole order");
    if (f.trunc_order() < count)
        throw std::invalid_argument("d_coefficients: insufficient truncation for requested count");
    CoefficientSet<typename Ctx::Ring> set{CoefficientSet<typename Ctx::Ring>::Kind::d, nu, k, {}};
    set.values.reserve(static_cast<size_t>(count));
    for (int j = 0; j < count; ++j) set.values.push_back(f.coeff(j));
    return set;
}

// C1^(mu,nu)(m,k). Both branches are implemented as stated; 1/n! is taken
// to be zero for negative n, which makes the two branches agree at the seam
// m = nu-k-1 and empties the extra term where it does not apply.
template <typename R, typename Ctx>
R C1(int mu, int nu, int m, int k, const CoefficientSet<R>& c_set, const Ctx& ctx) {
    if (m < 0 || m > mu + nu + 2) throw std::invalid_argument("C1: m out of range");
    if (k < 0 || k > nu) throw std::invalid_argument("C1: k out of range");
    if (c_set.kind != CoefficientSet<R>::Kind::c || c_set.order != mu || c_set.k != k)
        throw std::invalid_argument("C1: coefficient set does not match (mu, k)");

    const bool upper_branch = (m >= nu - k);
    const int j_limit = upper_branch ? (mu + nu + 1 - m) : (mu + k + 2);

    R sum = ctx.zero();
    for (int j = 0; j <= j_limit; ++j) {
        Rational q = ((mu + nu - j) % 2 == 0 ? 1 : -1) * factorial_q(mu + nu + 1 - j) *
                     inv_factorial(mu + k + 2 - j);
        sum += ctx.scale(c_set.at(j), q);
    }
    Rational front = Rational((m % 2 == 0 ? 1 : -1) * (nu - k)) * inv_factorial(m);
    R result = ctx.scale(std::move(sum), front);
    if (upper_branch) {
        Rational extra = inv_factorial(k + m - nu);
        if (extra != 0) result += ctx.scale(c_set.at(mu + nu + 2 - m), extra);
    }
    return result;
}

// C2^(mu,nu)(m,k), same conventions as C1.
template <typename R, typename Ctx>
R C2(int mu, int nu, int m, int k, const CoefficientSet<R>& d_set, const Ctx& ctx) {
    if (m < 0 || m > mu + nu + 2) throw std::invalid_argument("C2: m out of range");
    if (k < 0 || k > mu) throw std::invalid_argument("C2: k out of range");
    if (d_set.kind != CoefficientSet<R>::Kind::d || d_set.order != nu || d_set.k != k)
        throw std::invalid_argument("C2: coefficient set does not match (nu, k)");

    const bool upper_branch = (m >= mu - k + 1);
    const int j_limit = upper_branch ? (mu + nu + 1 - m) : (nu + k + 1);

    R sum = ctx.zero();
    for (int j = 0; j <= j_limit; ++j) {
        Rational q = ((mu + nu - j) % 2 == 0 ? 1 : -1) * factorial_q(mu + nu + 1 - j) *
                     inv_factorial(nu + k + 1 - j);
        sum += ctx.scale(d_set.at(j), q);
    }
    Rational front = Rational((m % 2 == 0 ? 1 : -1) * (mu - k + 1)) * inv_factorial(m);
    R result = ctx.scale(std::move(sum), front);
    if (upper_branch) {
        Rational extra = inv_factorial(k + m - mu - 1);
        if (extra != 0) result += ctx.scale(d_set.at(mu + nu + 2 - m), extra);
    }
    return result;
}

// Exact leading coefficient (-1)^(mu+nu) (1/(mu+nu+1) - 1/((mu+1)(nu+1))).
inline Rational leading_coeff_closed_form(int mu, int nu) {
    if (mu < 1 || nu < 1) throw std::invalid_argument("leading_coeff_closed_form: mu, nu >= 1");
    Rational r = Rational(1, mu + nu + 1) - Rational(1, (mu + 1) * (nu + 1));
    return ((mu + nu) % 2 == 0) ? r : -r;
}

// Assemble the full polynomial:
//   A_m = sum_{k<=nu} (-1)^nu binom(nu,k) C1^(mu,nu)(m,k)
//       + sum_{k<=mu} (-1)^mu binom(mu,k) (C1^(nu,mu)(m,k) + C2^(mu,nu)(m,k)).
template <typename Ctx>
MomentPolynomial<typename Ctx::Ring> assemble_polynomial(int mu, int nu, const Ctx& ctx) {
    using R = typename Ctx::Ring;
    if (mu < 1 || nu < 1)
        throw std::invalid_argument("assemble_polynomial: requires mu, nu >= 1");

    const int deg = mu + nu + 2;
    std::vector<CoefficientSet<R>> c_mu, c_nu, d_nu;
    for (int k = 0; k <= nu; ++k) c_mu.push_back(c_coefficients(mu, k, mu + k + 3, ctx));
    for (int k = 0; k <= mu; ++k) {
        c_nu.push_back(c_coefficients(nu, k, nu + k + 3, ctx));
        d_nu.push_back(d_coefficients(nu, k, nu + k + 2, ctx));
    }

    MomentPolynomial<R> poly{mu, nu, {}};
    poly.coeffs.reserve(static_cast<size_t>(deg) + 1);
    const Rational sign_nu = (nu % 2 == 0) ? 1 : -1;
    const Rational sign_mu = (mu % 2 == 0) ? 1 : -1;
    for (int m = 0; m <= deg; ++m) {
        R a = ctx.zero();
        for (int k = 0; k <= nu; ++k)
            a += ctx.scale(C1(mu, nu, m, k, c_mu[static_cast<size_t>(k)], ctx),
                           sign_nu * binomial_q(nu, k));
        for (int k = 0; k <= mu; ++k) {
            R t = C1(nu, mu, m, k, c_nu[static_cast<size_t>(k)], ctx);
            t += C2(mu, nu, m, k, d_nu[static_cast<size_t>(k)], ctx);
            a += ctx.scale(std::move(t), sign_mu * binomial_q(mu, k));
        }
        poly.coeffs.push_back(std::move(a));
    }
    return poly;
}

// Residue-to-polynomial map shared by the c- and d-side lemmas: for a series
// with pole order P >= 1, Res_{s=1}(series * Y^s / ... ) = Y * sum_n b_n (log Y)^n
// with b_{P-1-j} = a_j / (P-1-j)!. Returns b_0..b_{P-1}.
template <typename R, typename Ctx>
std::vector<R> residue_log_polynomial(const LaurentSeries<R>& series, const Ctx& ctx) {
    const int P = series.pole_order();
    if (P < 1) return {};
    std::vector<R> b(static_cast<size_t>(P), ctx.zero());
    for (int j = 0; j < P; ++j) {
        if (j > series.trunc_order()) break;
        b[static_cast<size_t>(P - 1 - j)] = ctx.scale(series.coeff(j), inv_factorial(P - 1 - j));
    }
    return b;
}

} // namespace zetamoment
