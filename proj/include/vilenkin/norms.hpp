#pragma once

#include "vilenkin/radial_function.hpp"

namespace vilenkin {

// ||f||_{L^r_alpha}^r = sum_k |f(k)|^r base^(-k(alpha+Q)) (1 - base^-Q).
// Window part is summed directly; each tail is summed in closed form where
// one exists (pure powers; integer r), by a binomial-series acceleration for
// two-power tails with real r, or by adaptive summation with a certified
// geometric remainder bound. Divergence is decided from the tail exponents
// before any summation. Requires r >= 1.
Real lr_norm_pow(const RadialFunction& f, const Real& r, const Real& alpha);
Real lr_norm(const RadialFunction& f, const Real& r, const Real& alpha);

// Weak norm sup_{v>0} v * w({|f| >= v})^{1/s} with w the |x|^gamma-weighted
// measure. Level sets of |f| are unions of shells; the sup is computed over
// the exact candidate set {values of |f|} with closed-form level-set
// measures. Tails must be empty or a single pure power (degree 0).
Real weak_norm(const RadialFunction& f, const Real& s, const Real& gamma);

}  // namespace vilenkin
