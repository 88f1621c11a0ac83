#include <doctest.h>

#include "vilenkin/errors.hpp"
#include "vilenkin/real.hpp"

using namespace vilenkin;

TEST_CASE("exact rational arithmetic stays exact") {
    Real a = Real::rational(1, 3);
    Real b = Real::rational(1, 6);
    Real c = a + b;
    CHECK(c.exact());
    CHECK(c == Real::rational(1, 2));
    CHECK((a * b).exact());
    CHECK(a * b == Real::rational(1, 18));
    CHECK((a / b) == Real(2));
    CHECK((a - a).is_zero());
}

TEST_CASE("integer powers keep exactness, fractional powers promote") {
    Real two(2);
    Real p = Real::pow_int(two, -3);
    CHECK(p.exact());
    CHECK(p == Real::rational(1, 8));

    Real q = Real::pow(two, Real::rational(1, 2));
    CHECK(!q.exact());
    CHECK(approx_equal(q * q, two, Real::parse("1e-55")));

    // integer-valued Real exponent routes through the exact path
    Real r = Real::pow(Real::rational(3, 2), Real(2));
    CHECK(r.exact());
    CHECK(r == Real::rational(9, 4));
}

TEST_CASE("parse handles integers, fractions, decimals, exponents") {
    CHECK(Real::parse("42") == Real(42));
    CHECK(Real::parse("-7/2") == Real::rational(-7, 2));
    CHECK(Real::parse("0.25") == Real::rational(1, 4));
    CHECK(Real::parse("-1.5") == Real::rational(-3, 2));
    CHECK(Real::parse("1e-3") == Real::rational(1, 1000));
    CHECK(Real::parse("2.5e2") == Real(250));
    CHECK_THROWS_AS(Real::parse("abc"), InvalidParams);
}

TEST_CASE("comparisons across exact/float representations") {
    Real a = Real::rational(1, 3);
    Real b = a.to_float();
    CHECK(a != b);  // 1/3 is not representable in binary
    CHECK((a - b).abs() < Real::parse("1e-59"));
    CHECK(Real(2) < Real(3));
    CHECK(Real::pow(Real(2), Real::rational(1, 2)) > Real(1));
}

TEST_CASE("floor and integer detection") {
    CHECK(Real::rational(7, 2).floor_long() == 3);
    CHECK(Real::rational(-7, 2).floor_long() == -4);
    CHECK(Real(5).is_integer());
    CHECK(!Real::rational(5, 3).is_integer());
    CHECK(Real(5).to_long() == 5);
    Real f = Real(3).to_float();
    CHECK(f.is_integer());
    CHECK(f.to_long() == 3);
}

TEST_CASE("decimal string output") {
    CHECK(Real::rational(1, 4).str() == "0.25");
    CHECK(Real(-3).str() == "-3");
    CHECK(Real::rational(1, 2).str() == "0.5");
    std::string s = Real::rational(1, 3).str(10);
    CHECK(s.substr(0, 6) == "0.3333");
}

TEST_CASE("precision is configurable") {
    mpfr_prec_t before = Real::default_prec();
    CHECK(before == 200);
    Real::set_default_prec(320);
    Real q = Real::pow(Real(2), Real::rational(1, 2));
    CHECK(q.prec() == 320);
    CHECK(approx_equal(q * q, Real(2), Real::parse("1e-90")));
    Real::set_default_prec(before);
}

TEST_CASE("division by zero and bad pow throw") {
    CHECK_THROWS_AS(Real(1) / Real(0), InvalidParams);
    CHECK_THROWS_AS(Real::pow(Real(-2), Real::rational(1, 2)), InvalidParams);
    CHECK_THROWS_AS(Real::pow_int(Real(0), -1), InvalidParams);
}
