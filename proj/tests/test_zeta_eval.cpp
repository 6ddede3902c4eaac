#include "zetamoment/zeta_eval.hpp"
#include "zetamoment/errors.hpp"

#include <doctest.h>

#include <random>

using namespace zetamoment;

TEST_CASE("classical values to 60+ digits at 256 bits") {
    EvalConfig cfg;
    cfg.precision_bits = 256;
    PrecisionGuard guard(cfg.precision_bits + 32);
    BigReal tol = BigReal("1e-60");

    BigComplex z2 = zeta(BigComplex(BigReal(2)), cfg);
    BigReal pi = const_pi();
    CHECK(abs(z2.re - pi * pi / 6) < tol);
    CHECK(abs(z2.im) == 0);

    // zeta'(0) = -log(2 pi)/2, via the Cauchy-circle derivative.
    BigComplex zp0 = zeta_deriv(BigComplex(BigReal(0)), 1, cfg);
    CHECK(abs(zp0.re + log(2 * pi) / 2) < tol);
    CHECK(abs(zp0.im) < tol);

    // zeta(-1) = -1/12 exercises the functional-equation reflection.
    BigComplex zm1 = zeta(BigComplex(BigReal(-1)), cfg);
    CHECK(abs(zm1.re + BigReal(1) / 12) < tol);
    CHECK(abs(zm1.im) < tol);

    // zeta(1/2) = -1.4603545088095868...
    BigComplex zh = zeta(BigComplex(BigReal(0.5)), cfg);
    CHECK(abs(zh.re + BigReal("1.460354508809586812889499152515298012467229331012581490542886087825530529474500625")) <
          tol);
}

TEST_CASE("vanishes at the first zero ordinate") {
    EvalConfig cfg;
    cfg.precision_bits = 128;
    PrecisionGuard guard(cfg.precision_bits + 32);
    BigComplex z = zeta(BigComplex(BigReal(0.5), BigReal("14.134725141734693")), cfg);
    CHECK(abs(z) < BigReal("1e-9"));
}

TEST_CASE("pole and argument validation") {
    EvalConfig cfg;
    CHECK_THROWS_AS(zeta(BigComplex(BigReal(1)), cfg), std::domain_error);
    // Derivative circle around s=1 must not contain the pole.
    CHECK_THROWS_AS(zeta_deriv(BigComplex(BigReal(1.1)), 1, cfg), std::invalid_argument);
    EvalConfig bad = cfg;
    bad.deriv_nodes = 24; // not a power of two
    CHECK_THROWS_AS(zeta_deriv(BigComplex(BigReal(3)), 1, bad), std::invalid_argument);
}

TEST_CASE("node cap failure raises precision_error with diagnostics") {
    EvalConfig cfg;
    cfg.precision_bits = 256;
    cfg.deriv_nodes = 16;
    cfg.max_deriv_nodes = 16; // cannot even run the doubling check
    try {
        zeta_deriv(BigComplex(BigReal(0.5), BigReal(25)), 2, cfg);
        FAIL("expected precision_error");
    } catch (const precision_error& e) {
        CHECK(e.achieved_bits() <= 256);
    }
}

TEST_CASE("conjugate reflection holds on the critical line") {
    EvalConfig cfg;
    cfg.precision_bits = 128;
    for (double t : {17.5, 31.0, 52.25}) {
        CHECK(conjugate_reflection_check(BigComplex(BigReal(0.5), BigReal(t)), 0, cfg));
        CHECK(conjugate_reflection_check(BigComplex(BigReal(0.5), BigReal(t)), 1, cfg));
    }
}

TEST_CASE("Cauchy derivatives agree with O(h^2) central differences") {
    EvalConfig cfg;
    cfg.precision_bits = 256;
    PrecisionGuard guard(cfg.precision_bits + 32);

    std::mt19937 rng(20260826);
    std::uniform_real_distribution<double> dist(10.0, 90.0);
    const BigReal h = BigReal("1e-12"); // h^2 = 1e-24 >> 2^-256
    for (int i = 0; i < 20; ++i) {
        BigReal t(dist(rng));
        BigComplex s(BigReal(0.5), t);
        BigComplex exact = zeta_deriv(s, 1, cfg);
        BigComplex fd =
            (zeta(BigComplex(s.re, t + h), cfg) - zeta(BigComplex(s.re, t - h), cfg)) /
            BigComplex(BigReal(0), 2 * h);
        // |zeta'''| stays below ~1e3 on this range; allow slack on top.
        CHECK(abs(exact - fd) < BigReal("1e-19"));
    }
}

TEST_CASE("derivative orders come back in request order") {
    EvalConfig cfg;
    cfg.precision_bits = 128;
    PrecisionGuard guard(cfg.precision_bits + 32);
    BigComplex s(BigReal(0.5), BigReal(21.5));
    const int orders[] = {2, 0, 1};
    auto v = zeta_derivs(s, orders, cfg);
    REQUIRE(v.size() == 3);
    CHECK(abs(v[1] - zeta(s, cfg)) < pow2(-90));
    CHECK(abs(v[2] - zeta_deriv(s, 1, cfg)) < pow2(-90));
    CHECK(abs(v[0] - zeta_deriv(s, 2, cfg)) < pow2(-90));
}
