#include <doctest.h>

#include "vilenkin/errors.hpp"
#include "vilenkin/radial_function.hpp"

using namespace vilenkin;

namespace {
const ShellGeometry g2(Real(2), 1);
}

TEST_CASE("indicator evaluation: window value, tail value, outside") {
    RadialFunction f = RadialFunction::indicator_ball(g2, 0);
    CHECK(f.evaluate(5) == Real(1));
    CHECK(f.evaluate(0) == Real(1));
    CHECK(f.evaluate(-1) == Real(0));
}

TEST_CASE("tail formula evaluation") {
    // f(k) = 2 k 2^{-k}
    RadialFunction f = RadialFunction::from_window(
        g2, 0, {Real(0)}, {TailTerm{Real(2), Real(1), 1}}, {TailTerm{Real(2), Real(1), 1}});
    CHECK(f.evaluate(3) == Real::rational(6, 8));
    CHECK(f.evaluate(-2) == Real(-16));
}

TEST_CASE("zero function") {
    RadialFunction z = RadialFunction::zero(g2);
    CHECK(z.is_zero());
    CHECK(z.evaluate(7) == Real(0));
    RadialFunction explicit_zero = RadialFunction::from_window(g2, 0, {Real(0), Real(0)});
    CHECK(explicit_zero.is_zero());
    // tails without a window are rejected
    CHECK_THROWS_AS(
        RadialFunction::from_window(g2, 0, {}, {TailTerm{Real(1), Real(0), 0}}, {}),
        InvalidParams);
}

TEST_CASE("power functions") {
    RadialFunction p = RadialFunction::power(g2, Real(2));  // |x|^2
    CHECK(p.evaluate(3) == Real::rational(1, 64));
    CHECK(p.evaluate(-2) == Real(16));
    RadialFunction pb = RadialFunction::power_on_ball(g2, Real(-1), 1);
    CHECK(pb.evaluate(1) == Real(2));
    CHECK(pb.evaluate(4) == Real(16));
    CHECK(pb.evaluate(0) == Real(0));
    RadialFunction pc = RadialFunction::power_on_complement(g2, Real(1), 0);
    CHECK(pc.evaluate(-1) == Real(2));
    CHECK(pc.evaluate(-3) == Real(8));
    CHECK(pc.evaluate(0) == Real(0));
}

TEST_CASE("linear algebra of radial functions") {
    RadialFunction f = RadialFunction::indicator_ball(g2, 0);
    RadialFunction p = RadialFunction::power_on_ball(g2, Real(1), -2);
    RadialFunction sum = f + p;
    for (long k = -4; k <= 4; ++k) CHECK(sum.evaluate(k) == f.evaluate(k) + p.evaluate(k));
    RadialFunction diff = sum - p;
    for (long k = -4; k <= 4; ++k) CHECK(diff.evaluate(k) == f.evaluate(k));
    RadialFunction sc = f.scaled(Real::rational(3, 7));
    CHECK(sc.evaluate(2) == Real::rational(3, 7));
}

TEST_CASE("pointwise product multiplies tails") {
    RadialFunction p1 = RadialFunction::power(g2, Real(1));
    RadialFunction p2 = RadialFunction::power(g2, Real(-3));
    RadialFunction prod = p1 * p2;
    for (long k = -5; k <= 5; ++k) CHECK(prod.evaluate(k) == g2.bpow(Real(2) * Real(k)));
    // degree overflow raises
    RadialFunction lin = RadialFunction::from_window(
        g2, 0, {Real(0)}, {TailTerm{Real(1), Real(0), 2}}, {});
    CHECK_THROWS_AS(lin * lin, UnrepresentableResult);
}

TEST_CASE("scaled_by_power shifts tail exponents") {
    RadialFunction f = RadialFunction::indicator_ball(g2, 0);
    RadialFunction h = f.scaled_by_power(Real(2));  // f * |x|^2
    CHECK(h.evaluate(3) == Real::rational(1, 64));
    CHECK(h.evaluate(-1) == Real(0));
}

TEST_CASE("shifted_arg reindexes window and tails") {
    RadialFunction f = RadialFunction::from_window(
        g2, 0, {Real(5)}, {TailTerm{Real(1), Real(1), 1}}, {});
    RadialFunction s = f.shifted_arg(2);  // s(k) = f(k+2)
    for (long k = -3; k <= 6; ++k) CHECK(s.evaluate(k) == f.evaluate(k + 2));
}

TEST_CASE("widening preserves values") {
    RadialFunction f = RadialFunction::power_on_ball(g2, Real(-1), 0);
    RadialFunction w = f.widened(-3, 5);
    CHECK(w.k_min() == -3);
    CHECK(w.k_max() >= 5);
    for (long k = -6; k <= 8; ++k) CHECK(w.evaluate(k) == f.evaluate(k));
}
