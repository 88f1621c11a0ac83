#pragma once

#include <vector>

#include "vilenkin/shell_geometry.hpp"

namespace vilenkin {

// Polynomial in the shell index k with Real coefficients: sum_m c[m] * k^m.
struct KPoly {
    std::vector<Real> c;

    KPoly() = default;
    explicit KPoly(std::vector<Real> coeffs) : c(std::move(coeffs)) { trim(); }
    static KPoly constant(Real v) { return KPoly({std::move(v)}); }

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    void trim();
    Real eval(long k) const;
    Real eval(const Real& k) const;

    KPoly operator+(const KPoly& o) const;
    KPoly operator-() const;
    KPoly scaled(const Real& s) const;
    KPoly operator*(const KPoly& o) const;
    // p(a + b*k)
    KPoly compose_affine(const Real& a, const Real& b) const;
    // p^n for small integer n >= 0
    KPoly pow(long n) const;
};

// B^(-kE) * poly(k), the symbolic value of a geometric/polylog shell series
// as a function of the free index k. The ratio is kept as the exponent E so
// convergence decisions stay exact in rational mode.
struct GeomTerm {
    Real E;
    KPoly poly;

    Real eval(const ShellGeometry& g, long k) const {
        return g.bpow(Real(-k) * E) * poly.eval(k);
    }
    // term'(k) = term(k + s)
    GeomTerm shifted(const ShellGeometry& g, long s) const;
};

// constant + sum of geometric terms, as a function of k.
struct SymSum {
    Real constant;
    std::vector<GeomTerm> terms;

    SymSum() : constant(0) {}
    Real eval(const ShellGeometry& g, long k) const;
    SymSum shifted(const ShellGeometry& g, long s) const;
    void add_term(GeomTerm t);
};

// All series below sum the summand c * j^m * base^(-jE) over a range of j,
// with m in {0,1,2}. Results are symbolic in the free endpoint k.

// sum_{j>=k}; requires E > 0.
GeomTerm series_upper_inf(const ShellGeometry& g, const Real& c, int m, const Real& E);
// sum_{j<=k}; requires E < 0.
GeomTerm series_lower_inf(const ShellGeometry& g, const Real& c, int m, const Real& E);
// sum_{j=k}^{b}, valid for k <= b+1 (empty at k = b+1); any sign of E.
SymSum series_range_upper(const ShellGeometry& g, const Real& c, int m, const Real& E, long b);
// sum_{j=a}^{k-1}, valid for k >= a (empty at k = a); any sign of E.
SymSum series_range_lower(const ShellGeometry& g, const Real& c, int m, const Real& E, long a);

// Faulhaber: sum_{j=0}^{n} j^m as a polynomial in n (valid for all integers
// by telescoping).
KPoly faulhaber(int m);

// Numeric: sum_{j>=k0} j^M x^j for integer M >= 0 and 0 < x < 1, via the
// rational-function recurrence T_i = x T_{i-1}'. Exact for exact inputs.
Real polylog_sum_geq(const Real& x, int M, long k0);

}  // namespace vilenkin
