#pragma once

#include <gmp.h>
#include <mpfr.h>

#include <cstdint>
#include <string>
#include <utility>

namespace vilenkin {

// Arbitrary-precision real with an exact-rational fast path.
//
// A Real is either an exact GMP rational or an MPFR float at a fixed bit
// precision. Field operations and integer powers keep exact operands exact;
// any operation without a rational closed form (non-integer powers, roots)
// promotes to float at the working precision. This gives "rational mode"
// automatically whenever every exponent in a computation is an integer.
class Real {
   public:
    // Default working precision for float results, in bits.
    static void set_default_prec(mpfr_prec_t bits);
    static mpfr_prec_t default_prec();

    Real();  // exact 0
    Real(long v);
    Real(int v) : Real(static_cast<long>(v)) {}
    ~Real();
    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;

    static Real rational(long num, long den);
    // Parses "123", "-4/7", or a decimal string; decimals become exact
    // rationals (e.g. "0.25" -> 1/4).
    static Real parse(const std::string& s);
    static Real from_double(double d);  // exact (doubles are dyadic rationals)
    // Float at given precision (default: default_prec()).
    Real to_float(mpfr_prec_t bits = 0) const;

    bool exact() const { return exact_; }
    mpfr_prec_t prec() const;  // meaningful for float values

    bool is_zero() const;
    bool is_negative() const;
    int sgn() const;
    bool is_integer() const;
    // Requires is_integer() and magnitude < 2^62.
    long to_long() const;
    long floor_long() const;
    double to_double() const;
    // Full-precision decimal string (exact values render exactly when the
    // expansion terminates, otherwise at `digits` places).
    std::string str(size_t digits = 0) const;

    Real operator-() const;
    Real abs() const;

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);
    Real& operator+=(const Real& b) { return *this = *this + b; }
    Real& operator-=(const Real& b) { return *this = *this - b; }
    Real& operator*=(const Real& b) { return *this = *this * b; }
    Real& operator/=(const Real& b) { return *this = *this / b; }

    // a^e for integer e; exact when a is exact.
    static Real pow_int(const Real& a, long e);
    // a^e; routes through pow_int when e is an integer, else MPFR (a > 0).
    static Real pow(const Real& a, const Real& e);
    static Real root(const Real& a, const Real& r);  // a^(1/r)
    static Real exp(const Real& a);
    static Real log(const Real& a);

    static int cmp(const Real& a, const Real& b);
    friend bool operator==(const Real& a, const Real& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const Real& a, const Real& b) { return cmp(a, b) != 0; }
    friend bool operator<(const Real& a, const Real& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const Real& a, const Real& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const Real& a, const Real& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const Real& a, const Real& b) { return cmp(a, b) >= 0; }

    static Real min(const Real& a, const Real& b) { return a <= b ? a : b; }
    static Real max(const Real& a, const Real& b) { return a >= b ? a : b; }

   private:
    bool exact_;
    mpq_t q_;   // active iff exact_
    mpfr_t f_;  // active iff !exact_

    void init_exact();
    void init_float(mpfr_prec_t bits);
    void destroy();
};

// |a - b| <= rel_tol * max(|a|, |b|), with exact equality for exact pairs.
bool approx_equal(const Real& a, const Real& b, const Real& rel_tol);

}  // namespace vilenkin
