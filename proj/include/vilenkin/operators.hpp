#pragma once

#include <utility>

#include "vilenkin/radial_function.hpp"

namespace vilenkin {

// Cumulative shell sums, the primitive under every operator here.
//   cum_upper(f, tau, strict)(k) = sum_{j >= k (+1 if strict)} f(j) base^(-j tau) mu(j)
//   cum_lower(f, tau, strict)(k) = sum_{j <= k (-1 if strict)} f(j) base^(-j tau) mu(j)
// mu is the shell measure. Results are exact window+tail functions; a tail
// whose series diverges raises DivergentOperator.
RadialFunction cum_upper(const RadialFunction& f, const Real& tau, bool strict);
RadialFunction cum_lower(const RadialFunction& f, const Real& tau, bool strict);

// Fractional Hardy operator: H_delta f(k) = base^(k(Q-delta)) sum_{j>=k} f(j) mu(j).
RadialFunction hardy(const RadialFunction& f, const Real& delta);

// Adjoint: H*_delta f(k) = sum_{j<k} f(j) base^(j(Q-delta)) mu(j).
RadialFunction adjoint_hardy(const RadialFunction& f, const Real& delta);

// Hardy-Littlewood-Polya: T f(k) = sum_j f(j) mu(j) / max(radius k, radius j)^Q.
// Pointwise T = H_0 + H*_0.
RadialFunction hlp(const RadialFunction& f);

// Convolution of radial functions via the three-part shell split
// (|y| < |x|, |y| > |x|, |y| = |x|). Requires base^Q >= 2 (the equal-shell
// same-norm mass (1 - 2 base^-Q) must be nonnegative).
RadialFunction radial_convolve(const RadialFunction& f, const RadialFunction& g);

// Riesz potential I_lambda f = f * |.|^(-lambda), 0 < lambda < Q.
RadialFunction riesz_potential(const RadialFunction& f, const Real& lambda);

// Vladimirov-Taibleson operator of order a > 0.
RadialFunction vt_apply(const RadialFunction& f, const Real& a);
// c_a = (1 - base^a) / (1 - base^-(a+Q)); negative for a > 0.
Real vt_normalizing_constant(const ShellGeometry& g, const Real& a);

// Both sides of the radial change-of-variable identity, computed by
// independent shell sums. `ball` direction:
//   (1/|x|) int_{B(e,|x|)} f  vs  int_{B(e,1)} f(|x| |t|) dt,
// complement direction uses |y| > |x| and |y| > 1. Requires Q = 1.
enum class ChangeOfVariableDirection { Ball, Complement };
std::pair<Real, Real> change_of_variable_check(const RadialFunction& f, ShellIndex k,
                                               ChangeOfVariableDirection dir);

}  // namespace vilenkin
