#pragma once

#include <string>

#include "vilenkin/params.hpp"
#include "vilenkin/shell_geometry.hpp"

namespace vilenkin {

// A catalog entry: the closed-form constant of one theorem, with a sharpness
// flag (true exactly where the paper exhibits an extremal family).
struct ConstantResult {
    Real value;
    bool is_sharp = false;
    std::string formula_id;
    bool has_gamma = false;
    Real gamma{0};
};

// ||H_delta||: (1 - B^-Q) / (1 - B^(alpha/r - Q/r' + delta))
ConstantResult hardy_strong_constant(const ShellGeometry& g, const Real& r,
                                     const Real& alpha, const Real& delta);

// ||H*_delta||: (1 - B^-Q) / (B^((alpha+Q)/r) - 1); delta-free.
ConstantResult adjoint_strong_constant(const ShellGeometry& g, const Real& r,
                                       const Real& alpha, const Real& delta);

// Weak-type (r > 1): returns gamma from the balance relation.
ConstantResult hardy_weak_constant(const ShellGeometry& g, const Real& r, const Real& s,
                                   const Real& beta, const Real& delta);

// Weak-type, r = 1 bound; sharp only at beta = 0.
ConstantResult hardy_weak_L1_bound(const ShellGeometry& g, const Real& s, const Real& beta,
                                   const Real& delta);

ConstantResult adjoint_weak_constant(const ShellGeometry& g, const Real& r, const Real& s,
                                     const Real& beta, const Real& delta);

ConstantResult adjoint_weak_L1_bound(const ShellGeometry& g, const Real& s, const Real& beta,
                                     const Real& delta);

// ||T||: (1-B^-Q) [ 1/(1 - B^(alpha/r - Q/r')) + B^(-(alpha+Q)/r)/(1 - B^(-(alpha+Q)/r)) ]
ConstantResult hlp_constant(const ShellGeometry& g, const Real& r, const Real& alpha);

// Dispatch by theorem tag (used by the CLI and sweeps).
ConstantResult constant_for(Theorem t, const ShellGeometry& g, const InequalityParams& p);

}  // namespace vilenkin
