#pragma once

#include "zetamoment/rational.hpp"
#include "zetamoment/ring.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace zetamoment {

// Truncated Laurent series about s = 1:
//
//   sum_{j=0}^{M} a_j (s-1)^{-P+j}
//
// P is the pole order (negative P means a zero of order -P at s = 1) and M
// is the truncation order, counted relative to the leading term. For exact
// coefficient rings the constructor strips exactly-zero leading coefficients
// so that a_0 != 0 unless the series is identically zero; numeric series
// keep their declared pole order, since numeric cancellation must never
// silently change it.
template <typename R>
class LaurentSeries {
public:
    LaurentSeries(int pole_order, std::vector<R> coeffs)
        : pole_order_(pole_order), coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("LaurentSeries: empty coefficient list");
        if constexpr (ring_traits<R>::exact) normalize();
    }

    int pole_order() const { return pole_order_; }
    int trunc_order() const { return static_cast<int>(coeffs_.size()) - 1; }

    // j-th coefficient relative to the leading term.
    const R& coeff(int j) const {
        if (j < 0 || j > trunc_order())
            throw std::out_of_range("LaurentSeries::coeff: index outside truncation");
        return coeffs_[static_cast<size_t>(j)];
    }

    // Coefficient of (s-1)^e. Exponents below the leading term are zero;
    // exponents beyond the valid truncation are an error.
    R coeff_of_power(int e) const {
        int j = e + pole_order_;
        if (j < 0) return R{};
        return coeff(j);
    }

    const std::vector<R>& coeffs() const { return coeffs_; }

    bool is_identically_zero() const {
        for (const auto& c : coeffs_)
            if (!ring_traits<R>::is_zero(c)) return false;
        return true;
    }

private:
    void normalize() {
        size_t lead = 0;
        while (lead < coeffs_.size() && ring_traits<R>::is_zero(coeffs_[lead])) ++lead;
        if (lead == coeffs_.size()) {
            // Identically zero: canonical form.
            pole_order_ = 0;
            return;
        }
        if (lead > 0) {
            coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
            pole_order_ -= static_cast<int>(lead);
        }
    }

    int pole_order_;
    std::vector<R> coeffs_;
};

// zeta(s) about s = 1:  1/(s-1) + sum_{n>=0} (-1)^n gamma_n/n! (s-1)^n,
// carried to relative truncation order trunc_order (so the highest stored
// power of (s-1) is trunc_order - 1).
template <typename Ctx>
LaurentSeries<typename Ctx::Ring> zeta_series(int trunc_order, const Ctx& ctx) {
    if (trunc_order < 1) throw std::invalid_argument("zeta_series: trunc_order must be >= 1");
    std::vector<typename Ctx::Ring> a;
    a.reserve(static_cast<size_t>(trunc_order) + 1);
    a.push_back(ctx.one());
    Rational inv_fact = 1;
    for (int n = 0; n < trunc_order; ++n) {
        if (n > 0) inv_fact /= n;
        Rational sign = (n % 2 == 0) ? 1 : -1;
        a.push_back(ctx.scale(ctx.gamma(n), sign * inv_fact));
    }
    return LaurentSeries<typename Ctx::Ring>(1, std::move(a));
}

// 1/s about s = 1: the geometric series sum (-1)^n (s-1)^n.
template <typename Ctx>
LaurentSeries<typename Ctx::Ring> inv_s_series(int trunc_order, const Ctx& ctx) {
    if (trunc_order < 0) throw std::invalid_argument("inv_s_series: trunc_order must be >= 0");
    std::vector<typename Ctx::Ring> a;
    a.reserve(static_cast<size_t>(trunc_order) + 1);
    for (int n = 0; n <= trunc_order; ++n)
        a.push_back(ctx.from_rational(n % 2 == 0 ? 1 : -1));
    return LaurentSeries<typename Ctx::Ring>(0, std::move(a));
}

template <typename R, typename Ctx>
LaurentSeries<R> differentiate(const LaurentSeries<R>& s, int times, const Ctx& ctx) {
    if (times < 0) throw std::invalid_argument("differentiate: times must be >= 0");
    LaurentSeries<R> cur = s;
    for (int t = 0; t < times; ++t) {
        int P = cur.pole_order();
        std::vector<R> b;
        b.reserve(cur.coeffs().size());
        for (int j = 0; j <= cur.trunc_order(); ++j)
            b.push_back(ctx.scale(cur.coeff(j), Rational(-P + j)));
        cur = LaurentSeries<R>(P + 1, std::move(b));
    }
    return cur;
}

template <typename R, typename Ctx>
LaurentSeries<R> multiply(const LaurentSeries<R>& a, const LaurentSeries<R>& b, const Ctx& ctx) {
    int M = std::min(a.trunc_order(), b.trunc_order());
    std::vector<R> r(static_cast<size_t>(M) + 1, ctx.zero());
    for (int i = 0; i <= std::min(a.trunc_order(), M); ++i) {
        if (ring_traits<R>::is_zero(a.coeff(i))) continue;
        for (int j = 0; i + j <= M && j <= b.trunc_order(); ++j)
            r[static_cast<size_t>(i + j)] += a.coeff(i) * b.coeff(j);
    }
    return LaurentSeries<R>(a.pole_order() + b.pole_order(), std::move(r));
}

// Reciprocal by Newton iteration on the coefficient list, x -> x(2 - ax),
// which doubles the valid order each step. The leading coefficient must be
// invertible in the ring; the pole order flips sign.
template <typename R, typename Ctx>
LaurentSeries<R> reciprocal(const LaurentSeries<R>& a, const Ctx& ctx) {
    if (a.is_identically_zero())
        throw std::domain_error("reciprocal: series is identically zero");
    const int M = a.trunc_order();
    const auto& c = a.coeffs();

    std::vector<R> x{ctx.invert(c[0])};
    int valid = 0;
    while (valid < M) {
        int next = std::min(2 * valid + 1, M);
        // t = a * x truncated to order `next`
        std::vector<R> t(static_cast<size_t>(next) + 1, ctx.zero());
        for (size_t i = 0; i < x.size(); ++i) {
            if (ring_traits<R>::is_zero(x[i])) continue;
            for (size_t j = 0; i + j <= static_cast<size_t>(next) && j < c.size(); ++j)
                t[i + j] += x[i] * c[j];
        }
        // x <- x(2 - t) truncated to order `next`
        std::vector<R> nx(static_cast<size_t>(next) + 1, ctx.zero());
        for (auto& v : t) v = ctx.scale(std::move(v), -1);
        t[0] += ctx.from_rational(2);
        for (size_t i = 0; i < x.size(); ++i) {
            if (ring_traits<R>::is_zero(x[i])) continue;
            for (size_t j = 0; i + j <= static_cast<size_t>(next) && j < t.size(); ++j)
                nx[i + j] += x[i] * t[j];
        }
        x = std::move(nx);
        valid = next;
    }
    return LaurentSeries<R>(-a.pole_order(), std::move(x));
}

} // namespace zetamoment
