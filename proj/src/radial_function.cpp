#include "vilenkin/radial_function.hpp"

#include <algorithm>

#include "vilenkin/errors.hpp"

namespace vilenkin {

void RadialFunction::merge_terms(std::vector<TailTerm>& terms) {
    std::vector<TailTerm> out;
    for (auto& t : terms) {
        if (t.coeff.is_zero()) continue;
        bool merged = false;
        for (auto& u : out) {
            if (u.degree == t.degree && u.sigma == t.sigma) {
                u.coeff = u.coeff + t.coeff;
                merged = true;
                break;
            }
        }
        if (!merged) out.push_back(t);
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const TailTerm& t) { return t.coeff.is_zero(); }),
              out.end());
    terms = std::move(out);
}

RadialFunction RadialFunction::zero(const ShellGeometry& g) { return RadialFunction(g); }

RadialFunction RadialFunction::from_window(const ShellGeometry& g, ShellIndex k_min,
                                           std::vector<Real> values,
                                           std::vector<TailTerm> inner,
                                           std::vector<TailTerm> outer) {
    RadialFunction f(g);
    f.k_min_ = k_min;
    f.values_ = std::move(values);
    f.inner_ = std::move(inner);
    f.outer_ = std::move(outer);
    merge_terms(f.inner_);
    merge_terms(f.outer_);
    if (f.values_.empty() && (!f.inner_.empty() || !f.outer_.empty()))
        throw InvalidParams("radial function with tails requires a nonempty window");
    for (const auto& t : f.inner_)
        if (t.degree < 0 || t.degree > 2)
            throw UnrepresentableResult("tail degree must be in {0,1,2}");
    for (const auto& t : f.outer_)
        if (t.degree < 0 || t.degree > 2)
            throw UnrepresentableResult("tail degree must be in {0,1,2}");
    return f;
}

RadialFunction RadialFunction::indicator_ball(const ShellGeometry& g, ShellIndex k0) {
    return from_window(g, k0, {Real(1)}, {TailTerm{Real(1), Real(0), 0}}, {});
}

RadialFunction RadialFunction::indicator_shells(const ShellGeometry& g, ShellIndex k_lo,
                                                ShellIndex k_hi) {
    if (k_lo > k_hi) return zero(g);
    std::vector<Real> v(static_cast<size_t>(k_hi - k_lo + 1), Real(1));
    return from_window(g, k_lo, std::move(v));
}

RadialFunction RadialFunction::power(const ShellGeometry& g, const Real& t) {
    return from_window(g, 0, {Real(1)}, {TailTerm{Real(1), t, 0}}, {TailTerm{Real(1), t, 0}});
}

RadialFunction RadialFunction::power_on_ball(const ShellGeometry& g, const Real& t,
                                             ShellIndex k0) {
    return from_window(g, k0, {g.bpow(Real(-k0) * t)}, {TailTerm{Real(1), t, 0}}, {});
}

RadialFunction RadialFunction::power_on_complement(const ShellGeometry& g, const Real& t,
                                                   ShellIndex k0) {
    return from_window(g, k0 - 1, {g.bpow(Real(-(k0 - 1)) * t)}, {},
                       {TailTerm{Real(1), t, 0}});
}

Real RadialFunction::tail_eval(const std::vector<TailTerm>& terms, ShellIndex k) const {
    Real acc(0);
    for (const auto& t : terms) acc = acc + t.eval(geom_, k);
    return acc;
}

Real RadialFunction::evaluate(ShellIndex k) const {
    if (values_.empty()) return Real(0);
    if (k < k_min_) return tail_eval(outer_, k);
    if (k > k_max()) return tail_eval(inner_, k);
    return values_[static_cast<size_t>(k - k_min_)];
}

bool RadialFunction::is_zero() const {
    if (!inner_.empty() || !outer_.empty()) return false;
    for (const auto& v : values_)
        if (!v.is_zero()) return false;
    return true;
}

RadialFunction RadialFunction::widened(ShellIndex lo, ShellIndex hi) const {
    if (values_.empty()) {
        // zero function: materialize an explicit zero window
        RadialFunction f(geom_);
        f.k_min_ = lo;
        f.values_.assign(static_cast<size_t>(std::max<ShellIndex>(hi - lo + 1, 1)), Real(0));
        return f;
    }
    ShellIndex nlo = std::min(lo, k_min_), nhi = std::max(hi, k_max());
    RadialFunction f(geom_);
    f.k_min_ = nlo;
    f.values_.reserve(static_cast<size_t>(nhi - nlo + 1));
    for (ShellIndex k = nlo; k <= nhi; ++k) f.values_.push_back(evaluate(k));
    f.inner_ = inner_;
    f.outer_ = outer_;
    return f;
}

RadialFunction RadialFunction::operator+(const RadialFunction& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    ShellIndex lo = std::min(k_min_, o.k_min_), hi = std::max(k_max(), o.k_max());
    RadialFunction a = widened(lo, hi), b = o.widened(lo, hi);
    for (size_t i = 0; i < a.values_.size(); ++i) a.values_[i] = a.values_[i] + b.values_[i];
    a.inner_.insert(a.inner_.end(), b.inner_.begin(), b.inner_.end());
    a.outer_.insert(a.outer_.end(), b.outer_.begin(), b.outer_.end());
    merge_terms(a.inner_);
    merge_terms(a.outer_);
    return a;
}

RadialFunction RadialFunction::operator-(const RadialFunction& o) const {
    return *this + o.scaled(Real(-1));
}

RadialFunction RadialFunction::operator*(const RadialFunction& o) const {
    if (is_zero() || o.is_zero()) return zero(geom_);
    ShellIndex lo = std::min(k_min_, o.k_min_), hi = std::max(k_max(), o.k_max());
    RadialFunction a = widened(lo, hi), b = o.widened(lo, hi);
    RadialFunction r(geom_);
    r.k_min_ = lo;
    r.values_.reserve(a.values_.size());
    for (size_t i = 0; i < a.values_.size(); ++i) r.values_.push_back(a.values_[i] * b.values_[i]);
    auto cross = [](const std::vector<TailTerm>& s, const std::vector<TailTerm>& t) {
        std::vector<TailTerm> out;
        for (const auto& x : s)
            for (const auto& y : t) {
                int deg = x.degree + y.degree;
                if (deg > 2)
                    throw UnrepresentableResult(
                        "pointwise product exceeds tail degree 2");
                out.push_back(TailTerm{x.coeff * y.coeff, x.sigma + y.sigma, deg});
            }
        return out;
    };
    r.inner_ = cross(a.inner_, b.inner_);
    r.outer_ = cross(a.outer_, b.outer_);
    merge_terms(r.inner_);
    merge_terms(r.outer_);
    return r;
}

RadialFunction RadialFunction::scaled(const Real& s) const {
    if (s.is_zero()) return zero(geom_);
    RadialFunction r(*this);
    for (auto& v : r.values_) v = v * s;
    for (auto& t : r.inner_) t.coeff = t.coeff * s;
    for (auto& t : r.outer_) t.coeff = t.coeff * s;
    return r;
}

RadialFunction RadialFunction::scaled_by_power(const Real& e) const {
    RadialFunction r(*this);
    for (size_t i = 0; i < r.values_.size(); ++i) {
        ShellIndex k = r.k_min_ + static_cast<ShellIndex>(i);
        r.values_[i] = r.values_[i] * geom_.bpow(Real(-k) * e);
    }
    for (auto& t : r.inner_) t.sigma = t.sigma + e;
    for (auto& t : r.outer_) t.sigma = t.sigma + e;
    return r;
}

RadialFunction RadialFunction::shifted_arg(ShellIndex s) const {
    if (values_.empty() || s == 0) return *this;
    RadialFunction r(geom_);
    r.k_min_ = k_min_ - s;
    r.values_ = values_;
    auto shift_terms = [&](const std::vector<TailTerm>& terms) {
        // t(k+s) = c (k+s)^m B^{-(k+s) sigma}
        std::vector<TailTerm> out;
        for (const auto& t : terms) {
            Real scale = t.coeff * geom_.bpow(Real(-s) * t.sigma);
            KPoly p = KPoly({Real(0), Real(0), Real(0)});
            p.c.assign(static_cast<size_t>(t.degree) + 1, Real(0));
            p.c.back() = Real(1);
            KPoly q = p.compose_affine(Real(s), Real(1)).scaled(scale);
            for (int d = 0; d <= q.degree(); ++d)
                out.push_back(TailTerm{q.c[static_cast<size_t>(d)], t.sigma, d});
        }
        return out;
    };
    r.inner_ = shift_terms(inner_);
    r.outer_ = shift_terms(outer_);
    merge_terms(r.inner_);
    merge_terms(r.outer_);
    return r;
}

std::vector<TailTerm> tail_terms_from_symsum(const SymSum& s) {
    std::vector<TailTerm> out;
    if (!s.constant.is_zero()) out.push_back(TailTerm{s.constant, Real(0), 0});
    for (const auto& g : s.terms) {
        if (g.poly.degree() > 2)
            throw UnrepresentableResult("symbolic sum exceeds tail degree 2");
        for (int d = 0; d <= g.poly.degree(); ++d) {
            const Real& c = g.poly.c[static_cast<size_t>(d)];
            if (!c.is_zero()) out.push_back(TailTerm{c, g.E, d});
        }
    }
    return out;
}

}  // namespace vilenkin
