#include "vilenkin/series.hpp"

#include "vilenkin/errors.hpp"

namespace vilenkin {

void KPoly::trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Real KPoly::eval(long k) const { return eval(Real(k)); }

Real KPoly::eval(const Real& k) const {
    Real acc(0);
    for (size_t i = c.size(); i-- > 0;) acc = acc * k + c[i];
    return acc;
}

KPoly KPoly::operator+(const KPoly& o) const {
    KPoly r;
    size_t n = std::max(c.size(), o.c.size());
    r.c.assign(n, Real(0));
    for (size_t i = 0; i < c.size(); ++i) r.c[i] = r.c[i] + c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r.c[i] = r.c[i] + o.c[i];
    r.trim();
    return r;
}

KPoly KPoly::operator-() const {
    KPoly r(*this);
    for (auto& v : r.c) v = -v;
    return r;
}

KPoly KPoly::scaled(const Real& s) const {
    KPoly r(*this);
    for (auto& v : r.c) v = v * s;
    r.trim();
    return r;
}

KPoly KPoly::operator*(const KPoly& o) const {
    if (c.empty() || o.c.empty()) return KPoly();
    KPoly r;
    r.c.assign(c.size() + o.c.size() - 1, Real(0));
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] = r.c[i + j] + c[i] * o.c[j];
    r.trim();
    return r;
}

KPoly KPoly::compose_affine(const Real& a, const Real& b) const {
    // Horner in (a + b k)
    KPoly acc;
    KPoly lin({a, b});
    for (size_t i = c.size(); i-- > 0;) {
        acc = acc * lin;
        acc = acc + KPoly::constant(c[i]);
    }
    return acc;
}

KPoly KPoly::pow(long n) const {
    KPoly r = KPoly::constant(Real(1));
    for (long i = 0; i < n; ++i) r = r * (*this);
    return r;
}

GeomTerm GeomTerm::shifted(const ShellGeometry& g, long s) const {
    // B^{-(k+s)E} poly(k+s) = B^{-sE} B^{-kE} poly(k+s)
    GeomTerm r;
    r.E = E;
    r.poly = poly.compose_affine(Real(s), Real(1)).scaled(g.bpow(Real(-s) * E));
    return r;
}

Real SymSum::eval(const ShellGeometry& g, long k) const {
    Real acc = constant;
    for (const auto& t : terms) acc = acc + t.eval(g, k);
    return acc;
}

SymSum SymSum::shifted(const ShellGeometry& g, long s) const {
    SymSum r;
    r.constant = constant;
    for (const auto& t : terms) r.add_term(t.shifted(g, s));
    return r;
}

void SymSum::add_term(GeomTerm t) {
    t.poly.trim();
    if (t.poly.is_zero()) return;
    for (auto& u : terms) {
        if (u.E == t.E) {
            u.poly = u.poly + t.poly;
            return;
        }
    }
    terms.push_back(std::move(t));
}

namespace {
void check_m(int m) {
    if (m < 0 || m > 2) throw UnrepresentableResult("series degree must be in {0,1,2}");
}
}  // namespace

GeomTerm series_upper_inf(const ShellGeometry& g, const Real& c, int m, const Real& E) {
    check_m(m);
    if (!(E > Real(0)))
        throw DivergentOperator("shell series sum_{j>=k} diverges: exponent <= 0");
    Real y = g.bpow(-E);
    Real d = Real(1) - y;  // > 0
    GeomTerm r;
    r.E = E;
    switch (m) {
        case 0:
            r.poly = KPoly({c / d});
            break;
        case 1:
            r.poly = KPoly({c * y / (d * d), c / d});
            break;
        default:
            r.poly = KPoly({c * y * (Real(1) + y) / (d * d * d),
                            Real(2) * c * y / (d * d), c / d});
    }
    return r;
}

GeomTerm series_lower_inf(const ShellGeometry& g, const Real& c, int m, const Real& E) {
    check_m(m);
    if (!(E < Real(0)))
        throw DivergentOperator("shell series sum_{j<=k} diverges: exponent >= 0");
    // substitute j -> -j: sum_{i>=-k} c (-1)^m i^m z^i with z = B^{E} < 1
    GeomTerm up = series_upper_inf(g, (m % 2 == 0) ? c : -c, m, -E);
    GeomTerm r;
    r.E = E;  // value carries B^{-kE}
    r.poly = up.poly.compose_affine(Real(0), Real(-1));
    return r;
}

SymSum series_range_upper(const ShellGeometry& g, const Real& c, int m, const Real& E, long b) {
    check_m(m);
    SymSum s;
    if (c.is_zero()) return s;
    if (E > Real(0)) {
        GeomTerm whole = series_upper_inf(g, c, m, E);
        s.constant = -whole.eval(g, b + 1);
        s.add_term(whole);
    } else if (E < Real(0)) {
        GeomTerm low = series_lower_inf(g, c, m, E);
        s.constant = low.eval(g, b);
        s.add_term(GeomTerm{E, (-low.poly).compose_affine(Real(-1), Real(1))
                                   .scaled(g.bpow(E))});
    } else {
        // critical ratio: Faulhaber polynomials, degree m+1
        KPoly Q = faulhaber(m);
        s.constant = c * Q.eval(b);
        s.add_term(GeomTerm{Real(0), (-Q.compose_affine(Real(-1), Real(1))).scaled(c)});
    }
    return s;
}

SymSum series_range_lower(const ShellGeometry& g, const Real& c, int m, const Real& E, long a) {
    check_m(m);
    SymSum s;
    if (c.is_zero()) return s;
    if (E > Real(0)) {
        GeomTerm whole = series_upper_inf(g, c, m, E);
        s.constant = whole.eval(g, a);
        s.add_term(GeomTerm{E, -whole.poly});
    } else if (E < Real(0)) {
        GeomTerm low = series_lower_inf(g, c, m, E);
        s.constant = -low.eval(g, a - 1);
        s.add_term(GeomTerm{E, low.poly.compose_affine(Real(-1), Real(1)).scaled(g.bpow(E))});
    } else {
        KPoly Q = faulhaber(m);
        s.constant = -c * Q.eval(a - 1);
        s.add_term(GeomTerm{Real(0), Q.compose_affine(Real(-1), Real(1)).scaled(c)});
    }
    return s;
}

KPoly faulhaber(int m) {
    switch (m) {
        case 0:
            return KPoly({Real(1), Real(1)});  // n + 1
        case 1:
            return KPoly({Real(0), Real::rational(1, 2), Real::rational(1, 2)});
        case 2:
            return KPoly({Real(0), Real::rational(1, 6), Real::rational(1, 2),
                          Real::rational(1, 3)});
        default:
            throw UnrepresentableResult("faulhaber degree must be in {0,1,2}");
    }
}

Real polylog_sum_geq(const Real& x, int M, long k0) {
    if (!(x > Real(0) && x < Real(1)))
        throw DivergentOperator("polylog sum requires 0 < x < 1");
    if (M < 0) throw InvalidParams("polylog power must be >= 0");
    // T_i(x) = sum_{j>=0} j^i x^j = N_i(x)/(1-x)^{i+1}, N_0 = 1,
    // N_i = x (N_{i-1}' (1-x) + i N_{i-1}).
    std::vector<KPoly> N(static_cast<size_t>(M) + 1);
    N[0] = KPoly::constant(Real(1));
    for (int i = 1; i <= M; ++i) {
        const KPoly& prev = N[static_cast<size_t>(i - 1)];
        KPoly deriv;
        if (prev.degree() >= 1) {
            deriv.c.assign(static_cast<size_t>(prev.degree()), Real(0));
            for (int d = 1; d <= prev.degree(); ++d)
                deriv.c[static_cast<size_t>(d - 1)] = prev.c[static_cast<size_t>(d)] * Real(d);
        }
        KPoly one_minus_x({Real(1), Real(-1)});
        KPoly xpoly({Real(0), Real(1)});
        N[static_cast<size_t>(i)] = xpoly * (deriv * one_minus_x + prev.scaled(Real(i)));
    }
    // sum_{j>=k0} j^M x^j = x^{k0} sum_{i=0}^{M} C(M,i) k0^{M-i} T_i(x)
    Real one_minus = Real(1) - x;
    std::vector<Real> T(static_cast<size_t>(M) + 1, Real(0));
    Real denom = one_minus;
    for (int i = 0; i <= M; ++i) {
        T[static_cast<size_t>(i)] = N[static_cast<size_t>(i)].eval(x) / denom;
        denom = denom * one_minus;
    }
    // binomials
    Real acc(0);
    Real binom(1);
    Real k0r(k0);
    for (int i = 0; i <= M; ++i) {
        Real term = binom * Real::pow_int(k0r, M - i) * T[static_cast<size_t>(i)];
        acc = acc + term;
        binom = binom * Real(M - i) / Real(i + 1);
    }
    return Real::pow_int(x, k0) * acc;
}

}  // namespace vilenkin
