#pragma once

#include "zetamoment/bigcomplex.hpp"

#include <span>
#include <vector>

namespace zetamoment {

struct EvalConfig {
    unsigned precision_bits = 128;
    int em_terms = 0;        // Euler-Maclaurin direct-sum length; 0 = auto
    int bernoulli_terms = 0; // tail length cap; 0 = auto
    double deriv_circle_radius = 0.5;
    int deriv_nodes = 64;    // starting node count, power of two >= 16
    int max_deriv_nodes = 1024;
};

// zeta(s) by Euler-Maclaurin summation, certified to an absolute error of
// 2^-(precision_bits-16) relative to the scale of the partial sums. For
// Re(s) < 0 the functional equation zeta(s) = chi(s) zeta(1-s) is used.
BigComplex zeta(const BigComplex& s, const EvalConfig& cfg);

// nu-th derivative by Cauchy-circle differentiation around s, trapezoid rule
// on equispaced nodes, node count doubled until two successive results agree.
BigComplex zeta_deriv(const BigComplex& s, int order, const EvalConfig& cfg);

// Several derivative orders from one shared circle of zeta evaluations.
std::vector<BigComplex> zeta_derivs(const BigComplex& s, std::span<const int> orders,
                                    const EvalConfig& cfg);

// Verifies the Schwarz reflection zeta^(nu)(conj s) == conj(zeta^(nu)(s)).
bool conjugate_reflection_check(const BigComplex& s, int order, const EvalConfig& cfg);

// Principal-branch log Gamma by Stirling's series with argument shifting.
BigComplex log_gamma(const BigComplex& z, unsigned precision_bits);

} // namespace zetamoment
