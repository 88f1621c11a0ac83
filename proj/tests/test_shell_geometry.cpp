#include <doctest.h>

#include "vilenkin/errors.hpp"
#include "vilenkin/shell_geometry.hpp"

using namespace vilenkin;

TEST_CASE("shell and ball measures") {
    ShellGeometry g2(Real(2), 1);
    CHECK(g2.shell_measure(0) == Real::rational(1, 2));
    CHECK(g2.ball_measure(0) == Real(1));

    ShellGeometry g3(Real(3), 1);
    CHECK(g3.shell_measure(1) == Real::rational(2, 9));
    CHECK(g3.ball_measure(2) == Real::rational(1, 9));

    // Heisenberg d=1 over Q_2: Q = 2d+2 = 4, |G_0 \ G_1| = 1 - 2^-4
    ShellGeometry gh(Real(2), 4);
    CHECK(gh.shell_measure(0) == Real::rational(15, 16));

    // Engel: Q = 7
    ShellGeometry ge(Real(3), 7);
    CHECK(ge.ball_measure(1) == Real::pow_int(Real(3), -7));
}

TEST_CASE("weighted shell measures") {
    ShellGeometry g2(Real(2), 1);
    // |x| = 1 on shell 0, any weight
    CHECK(g2.weighted_shell_measure(0, Real(5)) == Real::rational(1, 2));
    CHECK(g2.weighted_shell_measure(1, Real(1)) == Real::rational(1, 8));

    ShellGeometry g32(Real(3), 2);
    CHECK(g32.weighted_shell_measure(-1, Real(1)) == Real(24));
    CHECK(g32.weighted_shell_measure(3, Real(0)) == g32.shell_measure(3));
}

TEST_CASE("measure identities") {
    ShellGeometry g(Real(5), 3);
    for (long k = -4; k <= 4; ++k) {
        CHECK(g.shell_measure(k) == g.ball_measure(k) - g.ball_measure(k + 1));
        CHECK(g.ball_measure(k + 2) == g.ball_measure(k) * g.bpow(-2 * g.hom_dim()));
        CHECK(g.shell_measure(k) > Real(0));
    }
    // radii strictly decreasing
    CHECK(g.radius(1) < g.radius(0));
    // telescoping: sum of shells from k0 equals the ball measure; check a few
    Real acc(0);
    for (long k = 2; k <= 40; ++k) acc = acc + g.shell_measure(k);
    CHECK(g.ball_measure(2) - acc == g.ball_measure(41));
}

TEST_CASE("non-integer base is allowed, bad geometry rejected") {
    ShellGeometry g(Real::rational(5, 2), 1);
    CHECK(g.shell_measure(0) == Real::rational(3, 5));
    CHECK_THROWS_AS(ShellGeometry(Real(1), 1), InvalidGeometry);
    CHECK_THROWS_AS(ShellGeometry(Real::rational(1, 2), 1), InvalidGeometry);
    CHECK_THROWS_AS(ShellGeometry(Real(2), 0), InvalidGeometry);
}

TEST_CASE("graded reparametrization") {
    auto rp = vilenkin_graded_reparam(Real(3), 4, Real(4), Real(0));
    CHECK(rp.kappa == Real(81));
    CHECK(rp.alpha_v == Real(1));
    CHECK(rp.delta_v == Real(0));

    auto rp2 = vilenkin_graded_reparam(Real(2), 7, Real(0), Real::rational(7, 2));
    CHECK(rp2.kappa == Real(128));
    CHECK(rp2.alpha_v == Real(0));
    CHECK(rp2.delta_v == Real::rational(1, 2));
}
