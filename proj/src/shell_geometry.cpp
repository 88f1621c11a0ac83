#include "vilenkin/shell_geometry.hpp"

#include "vilenkin/errors.hpp"

namespace vilenkin {

ShellGeometry::ShellGeometry(Real base, long hom_dim)
    : base_(std::move(base)), hom_dim_(hom_dim), sphere_mass_(0) {
    if (base_ <= Real(1)) throw InvalidGeometry("base must be > 1");
    if (hom_dim_ < 1) throw InvalidGeometry("homogeneous dimension must be >= 1");
    sphere_mass_ = Real(1) - bpow(-hom_dim_);
}

Real ShellGeometry::shell_measure(ShellIndex k) const {
    return ball_measure(k) * sphere_mass_;
}

Real ShellGeometry::weighted_shell_measure(ShellIndex k, const Real& gamma) const {
    // |x|^gamma is constant on the shell: radius(k)^gamma * shell_measure(k)
    return bpow(Real(-k) * (gamma + Real(hom_dim_))) * sphere_mass_;
}

VilenkinReparam vilenkin_graded_reparam(const Real& q, long Q, const Real& alpha,
                                        const Real& delta) {
    if (Q < 1) throw InvalidGeometry("homogeneous dimension must be >= 1");
    Real rq(Q);
    return VilenkinReparam{Real::pow_int(q, Q), alpha / rq, delta / rq};
}

}  // namespace vilenkin
