#include <doctest.h>

#include "vilenkin/errors.hpp"
#include "vilenkin/series.hpp"

#include "test_helpers.hpp"

using namespace vilenkin;

namespace {

const ShellGeometry g3(Real(3), 1);

// brute-force oracle: sum_{j=a}^{b} c j^m B^{-jE}
Real brute(const ShellGeometry& g, const Real& c, int m, const Real& E, long a, long b) {
    Real acc(0);
    for (long j = a; j <= b; ++j)
        acc = acc + c * Real::pow_int(Real(j), m) * g.bpow(Real(-j) * E);
    return acc;
}

}  // namespace

TEST_CASE("KPoly basics") {
    KPoly p({Real(1), Real(2), Real(3)});  // 1 + 2k + 3k^2
    CHECK(p.eval(2L) == Real(17));
    KPoly q = p.compose_affine(Real(1), Real(1));  // p(k+1)
    CHECK(q.eval(1L) == p.eval(2L));
    KPoly r = p.compose_affine(Real(0), Real(-1));  // p(-k)
    CHECK(r.eval(2L) == p.eval(-2L));
    CHECK((p * KPoly::constant(Real(2))).eval(3L) == Real(2) * p.eval(3L));
}

TEST_CASE("upper infinite sums match truncated brute force") {
    for (int m = 0; m <= 2; ++m) {
        for (const Real& E : {Real(1), Real::rational(1, 2), Real(3)}) {
            GeomTerm t = series_upper_inf(g3, Real::rational(7, 5), m, E);
            for (long k : {-3L, 0L, 2L}) {
                // truncate far enough that the remainder is below the check tol
                Real full = brute(g3, Real::rational(7, 5), m, E, k, k + 300);
                CHECK(vilenkin::testing::close(t.eval(g3, k), full));
            }
        }
    }
    CHECK_THROWS_AS(series_upper_inf(g3, Real(1), 0, Real(0)), DivergentOperator);
    CHECK_THROWS_AS(series_upper_inf(g3, Real(1), 1, Real(-1)), DivergentOperator);
}

TEST_CASE("lower infinite sums match truncated brute force") {
    for (int m = 0; m <= 2; ++m) {
        for (const Real& E : {Real(-1), Real::rational(-1, 2)}) {
            GeomTerm t = series_lower_inf(g3, Real(2), m, E);
            for (long k : {-2L, 0L, 3L}) {
                Real full = brute(g3, Real(2), m, E, k - 300, k);
                CHECK(vilenkin::testing::close(t.eval(g3, k), full));
            }
        }
    }
    CHECK_THROWS_AS(series_lower_inf(g3, Real(1), 0, Real(0)), DivergentOperator);
}

TEST_CASE("finite range sums are exact in rational mode, all ratio signs") {
    for (int m = 0; m <= 2; ++m) {
        for (const Real& E : {Real(2), Real(0), Real(-1)}) {
            SymSum up = series_range_upper(g3, Real(3), m, E, 5);
            for (long k = -4; k <= 6; ++k) {
                Real expect = brute(g3, Real(3), m, E, k, 5);
                Real got = up.eval(g3, k);
                CHECK(got.exact());
                CHECK(got == expect);
            }
            SymSum low = series_range_lower(g3, Real(3), m, E, -2);
            for (long k = -2; k <= 7; ++k) {
                Real expect = brute(g3, Real(3), m, E, -2, k - 1);
                Real got = low.eval(g3, k);
                CHECK(got.exact());
                CHECK(got == expect);
            }
        }
    }
}

TEST_CASE("critical ratio produces polynomial terms of one higher degree") {
    SymSum s = series_range_lower(g3, Real(1), 1, Real(0), 0);  // sum_{j=0}^{k-1} j
    REQUIRE(s.terms.size() == 1);
    CHECK(s.terms[0].E == Real(0));
    CHECK(s.terms[0].poly.degree() == 2);
    CHECK(s.eval(g3, 5) == Real(10));
}

TEST_CASE("faulhaber identities") {
    for (int m = 0; m <= 2; ++m) {
        KPoly Q = faulhaber(m);
        Real acc(0);
        for (long n = 0; n <= 9; ++n) {
            acc = acc + Real::pow_int(Real(n), m);
            CHECK(Q.eval(n) == acc);
        }
        // polynomial telescoping extends to negative arguments
        CHECK(Q.eval(-1L) == Real(0));
    }
}

TEST_CASE("polylog closed form for high integer powers") {
    Real x = Real::rational(2, 5);
    for (int M : {0, 1, 2, 3, 5, 8}) {
        for (long k0 : {-2L, 0L, 4L}) {
            Real got = polylog_sum_geq(x, M, k0);
            Real expect(0);
            for (long j = k0; j <= k0 + 400; ++j)
                expect = expect + Real::pow_int(Real(j), M) * Real::pow_int(x, j);
            CHECK(vilenkin::testing::close(got, expect));
        }
    }
    CHECK_THROWS_AS(polylog_sum_geq(Real(1), 2, 0), DivergentOperator);
}
