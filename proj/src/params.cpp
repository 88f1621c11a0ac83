#include "vilenkin/params.hpp"

#include "vilenkin/errors.hpp"

namespace vilenkin {

Real InequalityParams::r_conj() const {
    if (!(r > Real(1))) throw HypothesisViolation("1 < r", "r' undefined at r <= 1");
    return r / (r - Real(1));
}

std::string theorem_name(Theorem t) {
    switch (t) {
        case Theorem::HardyStrong: return "hardy-strong";
        case Theorem::AdjointStrong: return "adjoint-strong";
        case Theorem::HardyWeak: return "hardy-weak";
        case Theorem::HardyWeakL1: return "hardy-weak-l1";
        case Theorem::AdjointWeak: return "adjoint-weak";
        case Theorem::AdjointWeakL1: return "adjoint-weak-l1";
        case Theorem::HLP: return "hlp";
    }
    return "?";
}

Theorem theorem_from_name(const std::string& name) {
    for (Theorem t : {Theorem::HardyStrong, Theorem::AdjointStrong, Theorem::HardyWeak,
                      Theorem::HardyWeakL1, Theorem::AdjointWeak, Theorem::AdjointWeakL1,
                      Theorem::HLP}) {
        if (theorem_name(t) == name) return t;
    }
    throw InvalidParams("unknown theorem: " + name);
}

namespace {
void require(bool ok, const std::string& hypothesis, const std::string& detail) {
    if (!ok) throw HypothesisViolation(hypothesis, detail);
}
}  // namespace

void validate(Theorem t, const ShellGeometry& g, const InequalityParams& p) {
    const Real Q(g.hom_dim());
    switch (t) {
        case Theorem::HardyStrong:
            require(p.r > Real(1), "1 < r < infinity", "");
            require(p.delta >= Real(0) && p.delta < Q, "0 <= delta < Q", "");
            require(p.alpha < (p.r - Real(1)) * Q - p.delta * p.r,
                    "alpha < r(1-delta)-1 (Q-scaled: alpha < (r-1)Q - delta r)", "");
            break;
        case Theorem::AdjointStrong:
            require(p.r > Real(1), "1 < r < infinity", "");
            require(p.delta >= Real(0) && p.delta < Q, "0 <= delta < Q", "");
            require(p.alpha > -Q, "-1 < alpha (Q-scaled: -Q < alpha)", "");
            break;
        case Theorem::HardyWeak:
            require(p.r > Real(1), "1 < r < infinity", "");
            require(p.s >= Real(1), "1 <= s < infinity", "");
            require(p.beta < (p.r - Real(1)) * Q,
                    "beta < r-1 (Q-scaled: beta < (r-1)Q)", "");
            require(p.delta >= Real(0) && p.delta < (p.beta + Q) / p.r,
                    "0 <= delta < (beta+1)/r (Q-scaled: delta < (beta+Q)/r)", "");
            break;
        case Theorem::HardyWeakL1:
            require(p.s >= Real(1), "1 <= s < infinity", "");
            require(p.delta >= Real(0) && p.delta < Q, "0 <= delta < Q", "");
            require(p.beta < Q - p.delta,
                    "beta < 1-delta (Q-scaled: beta < Q - delta)", "");
            break;
        case Theorem::AdjointWeak:
            require(p.r > Real(1), "1 < r < infinity", "");
            require(p.s >= Real(1), "1 <= s < infinity", "");
            require(p.delta < Q, "delta < 1 (Q-scaled: delta < Q)", "");
            require(p.beta > p.delta * p.r - Q,
                    "delta r - 1 < beta (Q-scaled: delta r - Q < beta)", "");
            break;
        case Theorem::AdjointWeakL1:
            require(p.s >= Real(1), "1 <= s < infinity", "");
            require(p.delta < Q, "delta < 1 (Q-scaled: delta < Q)", "");
            require(p.beta > -(Q - p.delta),
                    "-(1-delta) < beta (Q-scaled: -(Q-delta) < beta)", "");
            break;
        case Theorem::HLP:
            require(p.r > Real(1), "1 < r < infinity", "");
            require(p.alpha < (p.r - Real(1)) * Q,
                    "alpha < r-1 (Q-scaled: alpha < (r-1)Q)", "");
            // needed by the second geometric series; see module notes
            require(p.alpha > -Q, "alpha > -Q (series convergence)", "");
            break;
    }
}

Real weak_gamma(Theorem t, const ShellGeometry& g, const InequalityParams& p) {
    const Real Q(g.hom_dim());
    switch (t) {
        case Theorem::HardyWeak:
        case Theorem::AdjointWeak:
            return p.s * ((p.beta + Q) / p.r - p.delta) - Q;
        case Theorem::HardyWeakL1:
            return p.s * (Q - p.delta - p.beta) - Q;
        case Theorem::AdjointWeakL1:
            return p.s * (Q - p.delta + p.beta) - Q;
        default:
            throw InvalidParams("gamma is defined only for the weak-type theorems");
    }
}

}  // namespace vilenkin
