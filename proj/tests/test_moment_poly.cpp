#include "zetamoment/moment_poly.hpp"
#include "zetamoment/ring.hpp"
#include "zetamoment/stieltjes.hpp"
#include "zetamoment/zeta_eval.hpp"

#include "published_tables.hpp"

#include <doctest.h>

using namespace zetamoment;

using published::q;

TEST_CASE("leading Laurent coefficients match the closed forms") {
    ExactContext ctx;
    for (int mu = 1; mu <= 5; ++mu)
        for (int k = 0; k <= 5; ++k) {
            auto c = c_coefficients(mu, k, mu + k + 3, ctx);
            Rational expect = ((mu + k + 1) % 2 == 0 ? 1 : -1) * factorial_q(mu) * factorial_q(k);
            CHECK(c.at(0) == ExactPoly::constant(expect));
        }
    for (int nu = 1; nu <= 5; ++nu)
        for (int k = 0; k <= 5; ++k) {
            auto d = d_coefficients(nu, k, nu + k + 2, ctx);
            Rational expect = ((nu + k) % 2 == 0 ? 1 : -1) * factorial_q(nu) * factorial_q(k);
            CHECK(d.at(0) == ExactPoly::constant(expect));
        }
}

TEST_CASE("coefficient sets enforce their contracts") {
    ExactContext ctx;
    CHECK_THROWS_AS(c_coefficients(0, 0, 3, ctx), std::invalid_argument);
    CHECK_THROWS_AS(c_coefficients(1, 0, 3, ctx), std::invalid_argument); // < pole order
    CHECK_THROWS_AS(d_coefficients(1, 0, 2, ctx), std::invalid_argument);
    auto c = c_coefficients(1, 0, 4, ctx);
    CHECK_THROWS_AS(c.at(4), std::invalid_argument);
    CHECK_THROWS_AS(C1(1, 1, 0, 1, c, ctx), std::invalid_argument); // k mismatch
    auto d = d_coefficients(1, 0, 3, ctx);
    CHECK_THROWS_AS(C1(1, 1, 0, 0, d, ctx), std::invalid_argument); // wrong kind
}

TEST_CASE("assembled P(1,1) equals the published degree-4 polynomial") {
    ExactContext ctx;
    auto poly = assemble_polynomial(1, 1, ctx);
    auto expect = published::p11();
    REQUIRE(poly.coeffs.size() == expect.size());
    for (size_t m = 0; m < expect.size(); ++m)
        CHECK(poly.coeffs[m] == expect[m]);
}

TEST_CASE("assembled P(2,2) equals the published degree-6 table") {
    ExactContext ctx;
    auto poly = assemble_polynomial(2, 2, ctx);
    auto expect = published::p22();
    REQUIRE(poly.coeffs.size() == expect.size());
    for (size_t m = 0; m < expect.size(); ++m)
        CHECK(poly.coeffs[m] == expect[m]);
}

TEST_CASE("assembled P(1,2) equals the published degree-5 table") {
    ExactContext ctx;
    auto poly = assemble_polynomial(1, 2, ctx);
    auto expect = published::p12();
    REQUIRE(poly.coeffs.size() == expect.size());
    for (size_t m = 0; m < expect.size(); ++m)
        CHECK(poly.coeffs[m] == expect[m]);
}

TEST_CASE("polynomial is symmetric in (mu, nu)") {
    ExactContext ctx;
    for (auto [mu, nu] : {std::pair{1, 2}, {1, 3}, {2, 3}, {1, 4}}) {
        auto a = assemble_polynomial(mu, nu, ctx);
        auto b = assemble_polynomial(nu, mu, ctx);
        REQUIRE(a.coeffs.size() == b.coeffs.size());
        for (size_t m = 0; m < a.coeffs.size(); ++m)
            CHECK(a.coeffs[m] == b.coeffs[m]);
    }
}

TEST_CASE("leading coefficient matches the closed form") {
    ExactContext ctx;
    for (int mu = 1; mu <= 5; ++mu)
        for (int nu = 1; nu <= 5; ++nu) {
            auto poly = assemble_polynomial(mu, nu, ctx);
            CHECK(poly.coeffs.back() == ExactPoly::constant(leading_coeff_closed_form(mu, nu)));
        }
    // mu = nu special form: nu^2 / ((2nu+1)(nu+1)^2).
    for (int nu = 1; nu <= 5; ++nu)
        CHECK(leading_coeff_closed_form(nu, nu) ==
              Rational(nu * nu, (2 * nu + 1) * (nu + 1) * (nu + 1)));
    CHECK_THROWS_AS(assemble_polynomial(0, 1, ctx), std::invalid_argument);
    CHECK_THROWS_AS(assemble_polynomial(1, 0, ctx), std::invalid_argument);
}

TEST_CASE("exact and numeric assemblies agree") {
    const unsigned bits = 192;
    PrecisionGuard guard(bits + 32);
    StieltjesTable st = load_bundled(12);

    ExactContext ectx;
    RealContext rctx;
    rctx.gamma_values = st.values;

    for (auto [mu, nu] : {std::pair{1, 1}, {1, 2}, {2, 2}}) {
        auto exact = assemble_polynomial(mu, nu, ectx);
        auto numeric = assemble_polynomial(mu, nu, rctx);
        REQUIRE(exact.coeffs.size() == numeric.coeffs.size());
        for (size_t m = 0; m < exact.coeffs.size(); ++m) {
            BigReal via_exact = exact.coeffs[m].evaluate(st.values);
            CHECK(abs(via_exact - numeric.coeffs[m]) <
                  pow2(-static_cast<long>(bits) + 30) * (BigReal(1) + abs(via_exact)));
        }
    }
}

TEST_CASE("residue map turns Laurent coefficients into log-polynomials") {
    ExactContext ctx;
    // 1/(s-1)^3 + 2/(s-1): residue of F(s) Y^{s-1} is sum a_j (log Y)^{P-1-j}/(P-1-j)!
    LaurentSeries<ExactPoly> f(3, {q(1), q(0), q(2), q(0)});
    auto b = residue_log_polynomial(f, ctx);
    REQUIRE(b.size() == 3);
    CHECK(b[2] == q(1, 2)); // a_0 / 2!
    CHECK(b[1] == q(0));
    CHECK(b[0] == q(2)); // a_2 / 0!

    LaurentSeries<ExactPoly> entire(0, {q(5)});
    CHECK(residue_log_polynomial(entire, ctx).empty());
}

TEST_CASE("c-coefficients agree with a contour-integral oracle") {
    // Independent numeric check of c_1^{(1,0)}: integrate
    // (zeta'/zeta) zeta' zeta / s around s = 1 and pick off the Laurent
    // coefficient of (s-1)^{-3} (pole order is 4).
    const unsigned bits = 128;
    EvalConfig cfg;
    cfg.precision_bits = bits;
    cfg.deriv_circle_radius = 0.0625; // keep node circles clear of the pole
    PrecisionGuard guard(bits + 32);

    const int n = 64;
    const BigReal r(0.25);
    BigReal two_pi = 2 * const_pi();
    BigComplex acc;
    const int orders[] = {0, 1};
    for (int k = 0; k < n; ++k) {
        BigReal angle = two_pi * BigReal(k) / BigReal(n);
        BigComplex s = BigComplex(BigReal(1)) + r * cis(angle);
        auto z = zeta_derivs(s, orders, cfg);
        BigComplex f = (z[1] / z[0]) * z[1] * z[0] / s; // (zeta'/zeta) zeta' zeta / s
        // Multiply by (s-1)^{3} = r^3 e^{3 i angle} and average.
        acc += f * pow(r, 3u) * cis(3 * angle);
    }
    BigComplex oracle = acc / BigReal(n);

    ExactContext ctx;
    StieltjesTable st = load_bundled(12);
    auto c = c_coefficients(1, 0, 4, ctx);
    BigReal expect = c.at(1).evaluate(st.values);
    CHECK(abs(oracle.re - expect) < BigReal("1e-25"));
    CHECK(abs(oracle.im) < BigReal("1e-25"));
}
