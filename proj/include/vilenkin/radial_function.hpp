#pragma once

#include <vector>

#include "vilenkin/series.hpp"
#include "vilenkin/shell_geometry.hpp"

namespace vilenkin {

// One closed-form tail term: coeff * k^degree * base^(-k*sigma).
// degree <= 2; the algebra is closed under all operators on their
// admissible inputs (an HLP image of an indicator needs degree 1).
struct TailTerm {
    Real coeff;
    Real sigma;
    int degree = 0;

    Real eval(const ShellGeometry& g, ShellIndex k) const {
        return coeff * Real::pow_int(Real(k), degree) * g.bpow(Real(-k) * sigma);
    }
};

// A radial function: explicit values on a finite shell window plus exact
// closed-form tails on both sides. The universal operand of every operator
// in this library. Value semantics throughout; all operations are pure.
class RadialFunction {
   public:
    static RadialFunction zero(const ShellGeometry& g);
    // values on [k_min, k_min + values.size() - 1], tails outside
    static RadialFunction from_window(const ShellGeometry& g, ShellIndex k_min,
                                      std::vector<Real> values,
                                      std::vector<TailTerm> inner = {},
                                      std::vector<TailTerm> outer = {});
    // indicator of the ball G_{k0} (shells k >= k0)
    static RadialFunction indicator_ball(const ShellGeometry& g, ShellIndex k0);
    // indicator of shells k in [k_lo, k_hi]
    static RadialFunction indicator_shells(const ShellGeometry& g, ShellIndex k_lo,
                                           ShellIndex k_hi);
    // |x|^t on all of G \ {e}
    static RadialFunction power(const ShellGeometry& g, const Real& t);
    // |x|^t restricted to the ball G_{k0}, zero outside
    static RadialFunction power_on_ball(const ShellGeometry& g, const Real& t, ShellIndex k0);
    // |x|^t restricted to |x| > base^(-k0) (shells k < k0), zero elsewhere
    static RadialFunction power_on_complement(const ShellGeometry& g, const Real& t,
                                              ShellIndex k0);

    const ShellGeometry& geom() const { return geom_; }
    bool window_empty() const { return values_.empty(); }
    ShellIndex k_min() const { return k_min_; }
    ShellIndex k_max() const { return k_min_ + static_cast<ShellIndex>(values_.size()) - 1; }
    const std::vector<Real>& window_values() const { return values_; }
    const std::vector<TailTerm>& inner_tail() const { return inner_; }
    const std::vector<TailTerm>& outer_tail() const { return outer_; }

    Real evaluate(ShellIndex k) const;
    bool is_zero() const;

    // pointwise algebra (exact)
    RadialFunction operator+(const RadialFunction& o) const;
    RadialFunction operator-(const RadialFunction& o) const;
    RadialFunction operator*(const RadialFunction& o) const;  // pointwise product
    RadialFunction scaled(const Real& s) const;
    // g(k) = f(k) * base^(-k*e), i.e. multiplication by |x|^e
    RadialFunction scaled_by_power(const Real& e) const;
    // g(k) = f(k + s)
    RadialFunction shifted_arg(ShellIndex s) const;
    // extend the window to cover [lo, hi] by materializing tail values
    RadialFunction widened(ShellIndex lo, ShellIndex hi) const;

   private:
    explicit RadialFunction(const ShellGeometry& g) : geom_(g), k_min_(0) {}

    ShellGeometry geom_;
    ShellIndex k_min_;
    std::vector<Real> values_;
    std::vector<TailTerm> inner_;  // applies for k > k_max()
    std::vector<TailTerm> outer_;  // applies for k < k_min()

    static void merge_terms(std::vector<TailTerm>& terms);
    Real tail_eval(const std::vector<TailTerm>& terms, ShellIndex k) const;
};

// Converts symbolic geometric terms to tail terms (throws
// UnrepresentableResult past degree 2).
std::vector<TailTerm> tail_terms_from_symsum(const SymSum& s);

}  // namespace vilenkin
