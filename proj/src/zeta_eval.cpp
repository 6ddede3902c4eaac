#include "zetamoment/zeta_eval.hpp"

#include "zetamoment/bernoulli.hpp"
#include "zetamoment/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <stdexcept>

namespace zetamoment {

namespace {

constexpr unsigned kGuardBits = 32;

// Smallest-prime-factor sieve, grown on demand. Thread-local: the empirics
// layer parallelizes per zero, and each worker keeps its own tables.
std::vector<int>& spf_sieve(int n) {
    thread_local std::vector<int> spf{0, 1};
    int old = static_cast<int>(spf.size());
    if (old <= n) {
        int sz = std::max(n + 1, 2 * old);
        spf.resize(static_cast<size_t>(sz), 0);
        for (int i = 2; i < sz; ++i) spf[static_cast<size_t>(i)] = 0;
        for (int i = 2; i < sz; ++i) {
            if (spf[static_cast<size_t>(i)] == 0) {
                for (long j = i; j < sz; j += i)
                    if (spf[static_cast<size_t>(j)] == 0) spf[static_cast<size_t>(j)] = i;
            }
        }
    }
    return spf;
}

BernoulliWeights& thread_weights(unsigned bits) {
    thread_local std::map<unsigned, std::unique_ptr<BernoulliWeights>> cache;
    auto& slot = cache[bits];
    if (!slot) slot = std::make_unique<BernoulliWeights>(bits);
    return *slot;
}

// log n at the given working precision, cached: the evaluator is called for
// many nearby s with the same n range, and these logs dominate otherwise.
const std::vector<BigReal>& log_table(int n, unsigned bits) {
    thread_local std::map<unsigned, std::vector<BigReal>> cache;
    auto& logs = cache[bits];
    if (static_cast<int>(logs.size()) <= n) {
        PrecisionGuard guard(bits);
        size_t old = logs.size();
        logs.resize(static_cast<size_t>(n) + 1);
        for (size_t i = std::max<size_t>(old, 1); i <= static_cast<size_t>(n); ++i)
            logs[i] = log(BigReal(i));
    }
    return logs;
}

// n^-s for n = 1..N-1 using complete multiplicativity: one complex exp per
// prime, one complex multiplication per composite. `out` storage is reused
// across calls (same-precision mpfr assignment reuses allocated limbs).
void power_table(const BigComplex& s, int N, unsigned bits, std::vector<BigComplex>& out) {
    const auto& spf = spf_sieve(N);
    const auto& logs = log_table(N, bits);
    if (static_cast<int>(out.size()) < std::max(N, 2))
        out.resize(static_cast<size_t>(std::max(N, 2)));
    out[1] = BigComplex(BigReal(1));
    for (int n = 2; n < N; ++n) {
        int p = spf[static_cast<size_t>(n)];
        auto& o = out[static_cast<size_t>(n)];
        if (p == n) {
            const BigReal& ln = logs[static_cast<size_t>(n)];
            BigReal mag = exp(-s.re * ln);
            BigComplex dir = cis(-s.im * ln);
            o = BigComplex(mag * dir.re, mag * dir.im);
        } else {
            // In-place complex multiply via fused mpfr primitives: the
            // operator form allocates a fresh mpfr value per partial product,
            // which dominates the whole evaluation.
            const auto& a = out[static_cast<size_t>(p)];
            const auto& b = out[static_cast<size_t>(n / p)];
            mpfr_fmms(o.re.backend().data(), a.re.backend().data(), b.re.backend().data(),
                      a.im.backend().data(), b.im.backend().data(), MPFR_RNDN);
            mpfr_fmma(o.im.backend().data(), a.re.backend().data(), b.im.backend().data(),
                      a.im.backend().data(), b.re.backend().data(), MPFR_RNDN);
        }
    }
}

struct EmResult {
    BigComplex value;
    bool certified;
    double achieved_bits;
};

// Euler-Maclaurin evaluation for Re(s) > -1 (analytic continuation through
// the Bernoulli tail). Valid for any s != 1 given enough tail terms; we use
// it for Re(s) >= 0 and reflect otherwise.
EmResult zeta_em(const BigComplex& s, unsigned pb, int em_terms, int bern_cap) {
    const unsigned wb = pb + kGuardBits;
    PrecisionGuard guard(wb);
    BernoulliWeights& weights = thread_weights(wb);

    const double t_abs = std::abs(s.im.convert_to<double>());
    // N ~ t/4.5 keeps the Bernoulli tail ratio (t/2piN)^2 ~ 0.5, trading a
    // longer (cheap) tail for a ~30% shorter (expensive) main sum.
    int N = em_terms > 0
                ? em_terms
                : std::max({20, static_cast<int>(0.13 * (pb + kGuardBits)),
                            static_cast<int>(t_abs / 4.5) + 1});
    const BigReal eps = pow2(-static_cast<long>(pb) - 20);
    const int max_tail = bern_cap > 0 ? bern_cap : 4 * static_cast<int>(pb);

    // Reused across evaluations; keyed by precision because the in-place
    // mpfr writes in power_table round to the destination's precision.
    thread_local std::map<unsigned, std::vector<BigComplex>> npow_cache;
    std::vector<BigComplex>& npow = npow_cache[wb];
    BigComplex direct;
    int have = 1; // direct covers n < have
    double achieved = 0;

    for (int attempt = 0; attempt < 6; ++attempt) {
        if (have < N) {
            power_table(s, N, wb, npow);
            direct = BigComplex();
            for (int n = 1; n < N; ++n) direct += npow[static_cast<size_t>(n)];
            have = N;
        }

        // Tail at N: N^(1-s)/(s-1) + N^-s/2 + sum_j w_j poch(s,2j-1) N^(1-s-2j)
        BigReal lnN = log(BigReal(N));
        BigComplex Npow_s = exp(BigComplex(-s.re * lnN, -s.im * lnN)); // N^-s
        BigComplex tail = Npow_s * BigReal(N) / (s - BigComplex(BigReal(1)));
        tail += Npow_s * BigReal(0.5);

        BigComplex poch = s;                                   // s(s+1)...(s+2j-2)
        BigReal invN2 = BigReal(1) / (BigReal(N) * BigReal(N));
        BigComplex scale = Npow_s / BigReal(N);                // N^(-s-2j+1) at j=1
        BigReal prev_mag = -1;
        bool certified = false;
        for (int j = 1; j <= max_tail; ++j) {
            BigComplex term = weights.weight(j) * poch * scale;
            BigReal mag = abs(term);
            // Rigorous remainder bound carries the factor |s+2j+1|/(sigma+2j+1).
            BigReal bound = mag * (abs(s.im) + 2 * j + 2) / (s.re + 2 * j + 2);
            if (prev_mag >= 0 && mag > prev_mag) {
                certified = bound < eps;
                achieved = std::max(achieved, -static_cast<double>(mpfr_get_exp(bound.backend().data())));
                break;
            }
            tail += term;
            prev_mag = mag;
            if (bound < eps) {
                certified = true;
                break;
            }
            poch *= (s + BigComplex(BigReal(2 * j - 1))) * (s + BigComplex(BigReal(2 * j)));
            scale = scale * invN2;
        }
        if (certified) return {direct + tail, true, static_cast<double>(pb)};
        N *= 2;
    }
    return {BigComplex(), false, achieved};
}

// chi(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1-s), via logs.
BigComplex chi_factor(const BigComplex& s, unsigned pb) {
    PrecisionGuard guard(pb + kGuardBits);
    BigReal pi = const_pi();
    BigComplex one(BigReal(1));
    BigComplex lg = log_gamma(one - s, pb + kGuardBits);
    BigComplex log2s = s * BigComplex(log(BigReal(2)));
    BigComplex logpi = (s - one) * BigComplex(log(pi));
    BigComplex sin_term = sin(s * BigComplex(pi / 2));
    return exp(log2s + logpi + lg) * sin_term;
}

} // namespace

BigComplex log_gamma(const BigComplex& z, unsigned precision_bits) {
    PrecisionGuard guard(precision_bits + kGuardBits);
    BernoulliWeights& weights = thread_weights(precision_bits + kGuardBits);

    const double sigma0 = 0.12 * (precision_bits + 24) + 8.0;
    BigComplex w = z;
    BigComplex shift_log;
    // lnGamma(z) = lnGamma(z+m) - sum_{i<m} log(z+i)
    while (w.re.convert_to<double>() < sigma0 &&
           std::abs(w.im.convert_to<double>()) < sigma0) {
        shift_log += log(w);
        w += BigComplex(BigReal(1));
    }

    BigReal half(0.5);
    BigComplex logw = log(w);
    BigComplex acc = (w - BigComplex(half)) * logw - w;
    acc += BigComplex(half * log(2 * const_pi()));

    // Stirling tail: B_2j / ((2j)(2j-1) w^(2j-1)); weights hold B_2j/(2j)!.
    BigComplex invw = BigComplex(BigReal(1)) / w;
    BigComplex invw2 = invw * invw;
    BigComplex wpow = invw;
    const BigReal eps = pow2(-static_cast<long>(precision_bits) - 16);
    BigReal prev_mag = -1;
    for (int j = 1; j < 2000; ++j) {
        Rational factor = factorial_q(2 * j) / Rational((2 * j) * (2 * j - 1));
        BigComplex term = (weights.weight(j) * to_bigreal(factor)) * wpow;
        BigReal mag = abs(term);
        if (prev_mag >= 0 && mag > prev_mag) break;
        acc += term;
        prev_mag = mag;
        if (mag < eps) break;
        wpow *= invw2;
    }
    return acc - shift_log;
}

BigComplex zeta(const BigComplex& s, const EvalConfig& cfg) {
    if (s.im == 0 && s.re == 1) throw std::domain_error("zeta: pole at s = 1");
    if (s.re < 0) {
        BigComplex one_minus_s = BigComplex(BigReal(1)) - s;
        EmResult r = zeta_em(one_minus_s, cfg.precision_bits, cfg.em_terms, cfg.bernoulli_terms);
        if (!r.certified)
            throw precision_error("zeta: Euler-Maclaurin tail did not certify", r.achieved_bits);
        return chi_factor(s, cfg.precision_bits) * r.value;
    }
    EmResult r = zeta_em(s, cfg.precision_bits, cfg.em_terms, cfg.bernoulli_terms);
    if (!r.certified)
        throw precision_error("zeta: Euler-Maclaurin tail did not certify", r.achieved_bits);
    return r.value;
}

std::vector<BigComplex> zeta_derivs(const BigComplex& s, std::span<const int> orders,
                                    const EvalConfig& cfg) {
    for (int o : orders)
        if (o < 0) throw std::invalid_argument("zeta_derivs: order must be >= 0");
    const unsigned pb = cfg.precision_bits;
    PrecisionGuard guard(pb + kGuardBits);

    int n = cfg.deriv_nodes;
    if (n < 16 || (n & (n - 1)) != 0)
        throw std::invalid_argument("deriv_nodes must be a power of two >= 16");

    const BigReal r(cfg.deriv_circle_radius);
    if (!(r > 0)) throw std::invalid_argument("deriv_circle_radius must be positive");
    BigComplex from_pole = s - BigComplex(BigReal(1));
    if (!(abs(from_pole) > r))
        throw std::invalid_argument(
            "deriv_circle_radius: circle around s contains the pole at 1; shrink the radius");

    const BigReal eps = pow2(-(static_cast<long>(pb) - 16));

    // values[k] = zeta(s + r e^{2 pi i k / n}); on doubling, old index k
    // becomes 2k.
    std::vector<BigComplex> values;
    auto eval_nodes = [&](int count) {
        std::vector<BigComplex> nv(static_cast<size_t>(count));
        BigReal two_pi = 2 * const_pi();
        for (int k = 0; k < count; ++k) {
            if (k % 2 == 0 && !values.empty()) {
                nv[static_cast<size_t>(k)] = values[static_cast<size_t>(k / 2)];
                continue;
            }
            BigReal angle = two_pi * BigReal(k) / BigReal(count);
            BigComplex node = s + r * cis(angle);
            EmResult res = zeta_em(node, pb, cfg.em_terms, cfg.bernoulli_terms);
            if (!res.certified)
                throw precision_error("zeta_derivs: node evaluation failed", res.achieved_bits);
            nv[static_cast<size_t>(k)] = res.value;
        }
        values = std::move(nv);
    };

    auto extract = [&](int order, int count) {
        BigReal two_pi = 2 * const_pi();
        BigComplex acc;
        for (int k = 0; k < count; ++k) {
            BigReal angle = -two_pi * BigReal(order) * BigReal(k) / BigReal(count);
            acc += values[static_cast<size_t>(k)] * cis(angle);
        }
        BigReal r_pow = 1;
        for (int i = 0; i < order; ++i) r_pow *= r;
        return acc * to_bigreal(factorial_q(order)) / (r_pow * BigReal(count));
    };

    eval_nodes(n);
    std::vector<BigComplex> prev;
    for (int o : orders) prev.push_back(extract(o, n));

    while (true) {
        int n2 = 2 * n;
        if (n2 > cfg.max_deriv_nodes)
            throw precision_error("zeta_derivs: node cap reached without convergence",
                                  static_cast<double>(pb));
        eval_nodes(n2);
        std::vector<BigComplex> cur;
        bool ok = true;
        for (size_t i = 0; i < orders.size(); ++i) {
            cur.push_back(extract(orders[i], n2));
            BigReal diff = abs(cur[i] - prev[i]);
            BigReal scale = std::max(BigReal(1), abs(cur[i]));
            if (diff > eps * scale) ok = false;
        }
        if (ok) return cur;
        prev = std::move(cur);
        n = n2;
    }
}

BigComplex zeta_deriv(const BigComplex& s, int order, const EvalConfig& cfg) {
    if (order == 0) return zeta(s, cfg);
    int orders[1] = {order};
    return zeta_derivs(s, orders, cfg)[0];
}

bool conjugate_reflection_check(const BigComplex& s, int order, const EvalConfig& cfg) {
    BigComplex a = order == 0 ? zeta(conj(s), cfg) : zeta_deriv(conj(s), order, cfg);
    BigComplex b = conj(order == 0 ? zeta(s, cfg) : zeta_deriv(s, order, cfg));
    PrecisionGuard guard(cfg.precision_bits + kGuardBits);
    BigReal eps = pow2(-(static_cast<long>(cfg.precision_bits) - 20));
    BigReal scale = std::max(BigReal(1), abs(b));
    return abs(a - b) <= eps * scale;
}

} // namespace zetamoment
