#include "vilenkin/operators.hpp"

#include "vilenkin/errors.hpp"

namespace vilenkin {

namespace {

// Weight exponent of the summand f(j) base^(-j tau) mu(j) for a tail term
// (c, sigma, m): summand = c (1-B^-Q) j^m B^(-jE) with E = sigma + tau + Q.
Real summand_exponent(const ShellGeometry& g, const TailTerm& t, const Real& tau) {
    return t.sigma + tau + Real(g.hom_dim());
}

}  // namespace

RadialFunction cum_upper(const RadialFunction& f, const Real& tau, bool strict) {
    const ShellGeometry& g = f.geom();
    if (f.is_zero()) return RadialFunction::zero(g);
    const long st = strict ? 1 : 0;
    const Real mbar = g.sphere_mass();

    // inner tails must be summable toward e
    for (const auto& t : f.inner_tail()) {
        Real E = summand_exponent(g, t, tau);
        if (!(E > Real(0)))
            throw DivergentOperator(
                "ball integral diverges: inner tail exponent sigma + tau + Q <= 0");
    }

    // symbolic sum over the inner tail: I(K) = sum_{j>=K} (valid K >= k_max+1)
    SymSum inner_sym;
    for (const auto& t : f.inner_tail()) {
        GeomTerm gt = series_upper_inf(g, t.coeff * mbar, t.degree,
                                       summand_exponent(g, t, tau));
        inner_sym.add_term(gt);
    }
    auto inner_at = [&](long K) { return inner_sym.eval(g, K); };

    // window of the result: [k_min-1, k_max+1]
    ShellIndex lo = f.k_min() - 1, hi = f.k_max() + 1;
    std::vector<Real> vals(static_cast<size_t>(hi - lo + 1), Real(0));
    auto summand = [&](ShellIndex j) {
        return f.evaluate(j) * g.bpow(Real(-j) * tau) * g.shell_measure(j);
    };
    // R(hi) needs sum_{j >= hi+st}: explicit over [hi+st, k_max] (empty) + inner tail
    Real acc = inner_at(std::max(hi + st, f.k_max() + 1));
    for (ShellIndex j = f.k_max(); j >= hi + st; --j) acc = acc + summand(j);
    vals[static_cast<size_t>(hi - lo)] = acc;
    for (ShellIndex k = hi - 1; k >= lo; --k) {
        acc = acc + summand(k + st);
        vals[static_cast<size_t>(k - lo)] = acc;
    }

    // result inner tail, valid k > hi: R(k) = sum_{j >= k+st} over f's inner tail
    SymSum res_inner = inner_sym.shifted(g, st);
    std::vector<TailTerm> inner_terms = tail_terms_from_symsum(res_inner);

    // result outer tail, valid k < lo:
    // R(k) = R(lo) + sum_{j=k+st}^{lo+st-1} f(j) B^(-j tau) mu(j), outer region only
    SymSum outer_sym;
    outer_sym.constant = vals[0];
    for (const auto& t : f.outer_tail()) {
        SymSum s = series_range_upper(g, t.coeff * mbar, t.degree,
                                      summand_exponent(g, t, tau), lo + st - 1);
        s = s.shifted(g, st);
        outer_sym.constant = outer_sym.constant + s.constant;
        for (auto& gt : s.terms) outer_sym.add_term(std::move(gt));
    }
    std::vector<TailTerm> outer_terms = tail_terms_from_symsum(outer_sym);

    return RadialFunction::from_window(g, lo, std::move(vals), std::move(inner_terms),
                                       std::move(outer_terms));
}

RadialFunction cum_lower(const RadialFunction& f, const Real& tau, bool strict) {
    const ShellGeometry& g = f.geom();
    if (f.is_zero()) return RadialFunction::zero(g);
    const long st = strict ? 1 : 0;
    const Real mbar = g.sphere_mass();

    for (const auto& t : f.outer_tail()) {
        Real E = summand_exponent(g, t, tau);
        if (!(E < Real(0)))
            throw DivergentOperator(
                "outer integral diverges: outer tail exponent sigma + tau + Q >= 0");
    }

    SymSum outer_sym;  // O(K) = sum_{j<=K}, valid K <= k_min-1
    for (const auto& t : f.outer_tail()) {
        GeomTerm gt = series_lower_inf(g, t.coeff * mbar, t.degree,
                                       summand_exponent(g, t, tau));
        outer_sym.add_term(gt);
    }
    auto outer_at = [&](long K) { return outer_sym.eval(g, K); };

    ShellIndex lo = f.k_min() - 1, hi = f.k_max() + 1;
    std::vector<Real> vals(static_cast<size_t>(hi - lo + 1), Real(0));
    auto summand = [&](ShellIndex j) {
        return f.evaluate(j) * g.bpow(Real(-j) * tau) * g.shell_measure(j);
    };
    // C(lo) = sum_{j <= lo-st}: outer tail symbolic + explicit (empty here since lo-st < k_min)
    Real acc = outer_at(std::min(lo - st, f.k_min() - 1));
    for (ShellIndex j = f.k_min(); j <= lo - st; ++j) acc = acc + summand(j);
    vals[0] = acc;
    for (ShellIndex k = lo + 1; k <= hi; ++k) {
        acc = acc + summand(k - st);
        vals[static_cast<size_t>(k - lo)] = acc;
    }

    // result outer tail, valid k < lo: C(k) = sum_{j <= k-st}
    SymSum res_outer = outer_sym.shifted(g, -st);
    std::vector<TailTerm> outer_terms = tail_terms_from_symsum(res_outer);

    // result inner tail, valid k > hi:
    // C(k) = C(hi) + sum_{j=hi-st+1}^{k-st} f(j) B^(-j tau) mu(j), inner region only;
    // rewrite as sum_{j=a}^{K-1} with a = hi-st+1, K = k-st+1 (shift by 1-st).
    SymSum inner_sym2;
    inner_sym2.constant = vals.back();
    for (const auto& t : f.inner_tail()) {
        SymSum s = series_range_lower(g, t.coeff * mbar, t.degree,
                                      summand_exponent(g, t, tau), hi - st + 1);
        s = s.shifted(g, 1 - st);
        inner_sym2.constant = inner_sym2.constant + s.constant;
        for (auto& gt : s.terms) inner_sym2.add_term(std::move(gt));
    }
    std::vector<TailTerm> inner_terms = tail_terms_from_symsum(inner_sym2);

    return RadialFunction::from_window(g, lo, std::move(vals), std::move(inner_terms),
                                       std::move(outer_terms));
}

RadialFunction hardy(const RadialFunction& f, const Real& delta) {
    const ShellGeometry& g = f.geom();
    // B^(k(Q-delta)) sum_{j>=k} f mu = cum_upper(f, 0) scaled by |x|^(delta - Q)
    return cum_upper(f, Real(0), false).scaled_by_power(delta - Real(g.hom_dim()));
}

RadialFunction adjoint_hardy(const RadialFunction& f, const Real& delta) {
    const ShellGeometry& g = f.geom();
    // summand weight B^(j(Q-delta)) = B^(-j tau) with tau = delta - Q
    return cum_lower(f, delta - Real(g.hom_dim()), true);
}

RadialFunction hlp(const RadialFunction& f) {
    return hardy(f, Real(0)) + adjoint_hardy(f, Real(0));
}

RadialFunction radial_convolve(const RadialFunction& f, const RadialFunction& g) {
    const ShellGeometry& geo = f.geom();
    const Real Q(geo.hom_dim());
    const Real same_shell_mass = Real(1) - Real(2) * geo.bpow(-geo.hom_dim());
    if (same_shell_mass.is_negative())
        throw InvalidGeometry("radial convolution requires base^Q >= 2");
    if (f.is_zero() || g.is_zero()) return RadialFunction::zero(geo);
    // (f*g)(k) = g(k) sum_{j>k} f mu  +  sum_{j<k} f g mu
    //          + f(k) [ g(k) B^(-kQ) (1 - 2 B^-Q) + sum_{l>k} g(l) mu(l) ]
    RadialFunction part1 = g * cum_upper(f, Real(0), true);
    RadialFunction part2 = cum_lower(f * g, Real(0), true);
    RadialFunction equal_shell =
        (g.scaled_by_power(Q).scaled(same_shell_mass) + cum_upper(g, Real(0), true)) * f;
    return part1 + part2 + equal_shell;
}

RadialFunction riesz_potential(const RadialFunction& f, const Real& lambda) {
    const ShellGeometry& g = f.geom();
    if (!(lambda > Real(0)) || !(lambda < Real(g.hom_dim())))
        throw InvalidParams("riesz potential requires 0 < lambda < Q");
    return radial_convolve(f, RadialFunction::power(g, -lambda));
}

Real vt_normalizing_constant(const ShellGeometry& g, const Real& a) {
    Real denom = Real(1) - g.bpow(-(a + Real(g.hom_dim())));
    return (Real(1) - g.bpow(a)) / denom;
}

RadialFunction vt_apply(const RadialFunction& f, const Real& a) {
    const ShellGeometry& g = f.geom();
    if (!(a > Real(0))) throw InvalidParams("VT operator requires order a > 0");
    if (f.is_zero()) return RadialFunction::zero(g);
    const Real Q(g.hom_dim());
    const Real tau = -(a + Q);  // weight B^(j(a+Q))
    // region |y| > |x| (shells j < k): sum_{j<k} (f(j) - f(k)) B^(j(a+Q)) mu(j)
    RadialFunction one = RadialFunction::power(g, Real(0));
    RadialFunction region_far = cum_lower(f, tau, true) - f * cum_lower(one, tau, true);
    // region |y| = |x|: B^(k(a+Q)) sum_{l>k} (f(l) - f(k)) mu(l)
    RadialFunction ball_next = RadialFunction::power(g, Q).scaled(g.bpow(-g.hom_dim()));
    RadialFunction region_same =
        (cum_upper(f, Real(0), true) - f * ball_next).scaled_by_power(tau);
    return (region_far + region_same).scaled(vt_normalizing_constant(g, a));
}

std::pair<Real, Real> change_of_variable_check(const RadialFunction& f, ShellIndex k,
                                               ChangeOfVariableDirection dir) {
    const ShellGeometry& g = f.geom();
    if (g.hom_dim() != 1)
        throw InvalidParams("change-of-variable identity is stated for Q = 1");
    if (f.is_zero()) return {Real(0), Real(0)};
    if (dir == ChangeOfVariableDirection::Ball) {
        // lhs: (1/|x|) sum_{j>=k} f(j) mu(j); rhs: sum_{l>=0} f(k+l) mu(l)
        Real lhs = cum_upper(f, Real(0), false).evaluate(k) / g.radius(k);
        Real rhs = cum_upper(f.shifted_arg(k), Real(0), false).evaluate(0);
        return {lhs, rhs};
    }
    // complement: (1/|x|) sum_{j<k} f(j) mu(j); rhs: sum_{l<0} f(k+l) mu(l)
    Real lhs = cum_lower(f, Real(0), true).evaluate(k) / g.radius(k);
    Real rhs = cum_lower(f.shifted_arg(k), Real(0), true).evaluate(0);
    return {lhs, rhs};
}

}  // namespace vilenkin
