#include "vilenkin/constants.hpp"

#include "vilenkin/errors.hpp"

namespace vilenkin {

namespace {
Real checked_denominator(const Real& d, const char* which) {
    if (d.is_zero()) throw PoleAtUnitRatio(std::string("zero denominator in ") + which);
    return d;
}
}  // namespace

ConstantResult hardy_strong_constant(const ShellGeometry& g, const Real& r,
                                     const Real& alpha, const Real& delta) {
    InequalityParams p;
    p.r = r;
    p.alpha = alpha;
    p.delta = delta;
    validate(Theorem::HardyStrong, g, p);
    const Real Q(g.hom_dim());
    Real expo = alpha / r - Q / p.r_conj() + delta;
    Real den = checked_denominator(Real(1) - g.bpow(expo), "hardy-strong");
    return ConstantResult{g.sphere_mass() / den, true, "hardy-strong"};
}

ConstantResult adjoint_strong_constant(const ShellGeometry& g, const Real& r,
                                       const Real& alpha, const Real& delta) {
    InequalityParams p;
    p.r = r;
    p.alpha = alpha;
    p.delta = delta;
    validate(Theorem::AdjointStrong, g, p);
    const Real Q(g.hom_dim());
    Real den = checked_denominator(g.bpow((alpha + Q) / r) - Real(1), "adjoint-strong");
    return ConstantResult{g.sphere_mass() / den, true, "adjoint-strong"};
}

ConstantResult hardy_weak_constant(const ShellGeometry& g, const Real& r, const Real& s,
                                   const Real& beta, const Real& delta) {
    InequalityParams p;
    p.r = r;
    p.s = s;
    p.beta = beta;
    p.delta = delta;
    validate(Theorem::HardyWeak, g, p);
    const Real Q(g.hom_dim());
    Real gamma = weak_gamma(Theorem::HardyWeak, g, p);
    Real mbar = g.sphere_mass();
    Real d1 = checked_denominator(Real(1) - g.bpow(-(gamma + Q)), "hardy-weak (gamma)");
    Real d2 = checked_denominator(Real(1) - g.bpow(beta / (r - Real(1)) - Q),
                                  "hardy-weak (beta)");
    Real value = Real::pow(mbar / d1, Real(1) / s) *
                 Real::pow(mbar / d2, Real(1) / p.r_conj());
    ConstantResult res{value, true, "hardy-weak"};
    res.has_gamma = true;
    res.gamma = gamma;
    return res;
}

ConstantResult hardy_weak_L1_bound(const ShellGeometry& g, const Real& s, const Real& beta,
                                   const Real& delta) {
    InequalityParams p;
    p.s = s;
    p.beta = beta;
    p.delta = delta;
    p.r = Real(1);
    validate(Theorem::HardyWeakL1, g, p);
    const Real Q(g.hom_dim());
    Real gamma = weak_gamma(Theorem::HardyWeakL1, g, p);
    Real den = checked_denominator(Real(1) - g.bpow(-s * (Q - delta - beta)),
                                   "hardy-weak-l1");
    ConstantResult res{Real::pow(g.sphere_mass() / den, Real(1) / s), beta.is_zero(),
                       "hardy-weak-l1"};
    res.has_gamma = true;
    res.gamma = gamma;
    return res;
}

ConstantResult adjoint_weak_constant(const ShellGeometry& g, const Real& r, const Real& s,
                                     const Real& beta, const Real& delta) {
    InequalityParams p;
    p.r = r;
    p.s = s;
    p.beta = beta;
    p.delta = delta;
    validate(Theorem::AdjointWeak, g, p);
    const Real Q(g.hom_dim());
    Real gamma = weak_gamma(Theorem::AdjointWeak, g, p);
    Real mbar = g.sphere_mass();
    Real d1 = checked_denominator(Real(1) - g.bpow(-(gamma + Q)), "adjoint-weak (gamma)");
    Real d2 = checked_denominator(
        g.bpow(((beta + Q) / r - delta) * p.r_conj()) - Real(1), "adjoint-weak (beta)");
    Real value = Real::pow(mbar / d1, Real(1) / s) *
                 Real::pow(mbar / d2, Real(1) / p.r_conj());
    ConstantResult res{value, true, "adjoint-weak"};
    res.has_gamma = true;
    res.gamma = gamma;
    return res;
}

ConstantResult adjoint_weak_L1_bound(const ShellGeometry& g, const Real& s, const Real& beta,
                                     const Real& delta) {
    InequalityParams p;
    p.s = s;
    p.beta = beta;
    p.delta = delta;
    p.r = Real(1);
    validate(Theorem::AdjointWeakL1, g, p);
    const Real Q(g.hom_dim());
    Real gamma = weak_gamma(Theorem::AdjointWeakL1, g, p);
    Real den = checked_denominator(Real(1) - g.bpow(-s * (Q - delta + beta)),
                                   "adjoint-weak-l1");
    ConstantResult res{Real::pow(g.sphere_mass() / den, Real(1) / s), false,
                       "adjoint-weak-l1"};
    res.has_gamma = true;
    res.gamma = gamma;
    return res;
}

ConstantResult hlp_constant(const ShellGeometry& g, const Real& r, const Real& alpha) {
    InequalityParams p;
    p.r = r;
    p.alpha = alpha;
    validate(Theorem::HLP, g, p);
    const Real Q(g.hom_dim());
    Real d1 = checked_denominator(Real(1) - g.bpow(alpha / r - Q / p.r_conj()),
                                  "hlp (hardy part)");
    Real x = g.bpow(-(alpha + Q) / r);
    Real d2 = checked_denominator(Real(1) - x, "hlp (adjoint part)");
    return ConstantResult{g.sphere_mass() * (Real(1) / d1 + x / d2), true, "hlp"};
}

ConstantResult constant_for(Theorem t, const ShellGeometry& g, const InequalityParams& p) {
    switch (t) {
        case Theorem::HardyStrong:
            return hardy_strong_constant(g, p.r, p.alpha, p.delta);
        case Theorem::AdjointStrong:
            return adjoint_strong_constant(g, p.r, p.alpha, p.delta);
        case Theorem::HardyWeak:
            return hardy_weak_constant(g, p.r, p.s, p.beta, p.delta);
        case Theorem::HardyWeakL1:
            return hardy_weak_L1_bound(g, p.s, p.beta, p.delta);
        case Theorem::AdjointWeak:
            return adjoint_weak_constant(g, p.r, p.s, p.beta, p.delta);
        case Theorem::AdjointWeakL1:
            return adjoint_weak_L1_bound(g, p.s, p.beta, p.delta);
        case Theorem::HLP:
            return hlp_constant(g, p.r, p.alpha);
    }
    throw InvalidParams("unknown theorem");
}

}  // namespace vilenkin
