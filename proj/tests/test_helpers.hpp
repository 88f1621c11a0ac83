#pragma once

#include "vilenkin/real.hpp"

namespace vilenkin::testing {

// Tolerance comparison that ignores exactness flags: for checking exact
// results against truncated brute-force oracles.
inline bool close(const Real& a, const Real& b, const Real& tol) {
    return approx_equal(a.to_float(), b.to_float(), tol);
}

inline bool close(const Real& a, const Real& b) {
    return close(a, b, Real::parse("1e-40"));
}

}  // namespace vilenkin::testing
