#pragma once

#include "vilenkin/real.hpp"

namespace vilenkin {

// Shell index k: the shell G_k \ G_{k+1}, radius base^(-k). Any integer is
// valid; larger k means smaller radius.
using ShellIndex = long;

// The pair (base, homogeneous dimension) that determines all radii and Haar
// shell measures of a constant-order filtration. For a plain Vilenkin group
// base = kappa and Q = 1; for a graded group base = q and Q is the
// homogeneous dimension. Haar measure is normalized so |G_0| = 1.
class ShellGeometry {
   public:
    ShellGeometry(Real base, long hom_dim);

    const Real& base() const { return base_; }
    long hom_dim() const { return hom_dim_; }

    // base^e
    Real bpow(const Real& e) const { return Real::pow(base_, e); }
    Real bpow(long e) const { return Real::pow_int(base_, e); }

    Real radius(ShellIndex k) const { return bpow(-k); }
    // |G_k| = base^(-kQ)
    Real ball_measure(ShellIndex k) const { return bpow(-k * hom_dim_); }
    // |G_k \ G_{k+1}| = base^(-kQ) (1 - base^-Q)
    Real shell_measure(ShellIndex k) const;
    // integral of |x|^gamma over the shell: base^(-k(gamma+Q)) (1 - base^-Q)
    Real weighted_shell_measure(ShellIndex k, const Real& gamma) const;
    // 1 - base^-Q
    Real sphere_mass() const { return sphere_mass_; }

    bool operator==(const ShellGeometry& o) const {
        return base_ == o.base_ && hom_dim_ == o.hom_dim_;
    }

   private:
    Real base_;
    long hom_dim_;
    Real sphere_mass_;
};

// Plain-Vilenkin parameters under which every graded closed-form constant
// coincides with the corresponding Vilenkin constant:
// kappa = q^Q, alpha = Q * alpha_v, delta = Q * delta_v.
struct VilenkinReparam {
    Real kappa;
    Real alpha_v;
    Real delta_v;
};
VilenkinReparam vilenkin_graded_reparam(const Real& q, long Q, const Real& alpha,
                                        const Real& delta);

}  // namespace vilenkin
