#pragma once

#include <string>

#include "vilenkin/shell_geometry.hpp"

namespace vilenkin {

// The exponent tuple appearing in theorem hypotheses. Each theorem reads the
// subset it needs; validate() checks the exact hypothesis set of the named
// theorem in unified (base, Q) form and throws HypothesisViolation naming
// the violated inequality.
struct InequalityParams {
    Real r{2};
    Real s{2};
    Real alpha{0};
    Real beta{0};
    Real delta{0};
    Real lambda{0};
    Real a{0};
    Real b_weight{0};

    Real r_conj() const;  // r' with 1/r + 1/r' = 1
};

enum class Theorem {
    HardyStrong,
    AdjointStrong,
    HardyWeak,
    HardyWeakL1,
    AdjointWeak,
    AdjointWeakL1,
    HLP,
};

std::string theorem_name(Theorem t);
Theorem theorem_from_name(const std::string& name);

void validate(Theorem t, const ShellGeometry& g, const InequalityParams& p);

// The output weight gamma determined by the weak-type balance relation
// (beta+Q)/r - delta = (gamma+Q)/s (with r = 1 for the L1 variants).
Real weak_gamma(Theorem t, const ShellGeometry& g, const InequalityParams& p);

}  // namespace vilenkin
