#include "vilenkin/real.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <vector>

#include "vilenkin/errors.hpp"

namespace vilenkin {

namespace {
std::atomic<mpfr_prec_t> g_default_prec{200};

mpfr_prec_t result_prec(const Real& a, const Real& b) {
    mpfr_prec_t p = 0;
    if (!a.exact()) p = std::max(p, a.prec());
    if (!b.exact()) p = std::max(p, b.prec());
    return p == 0 ? Real::default_prec() : p;
}
}  // namespace

void Real::set_default_prec(mpfr_prec_t bits) {
    if (bits < 16) throw InvalidParams("precision must be at least 16 bits");
    g_default_prec.store(bits);
}

mpfr_prec_t Real::default_prec() { return g_default_prec.load(); }

void Real::init_exact() {
    exact_ = true;
    mpq_init(q_);
}

void Real::init_float(mpfr_prec_t bits) {
    exact_ = false;
    mpfr_init2(f_, bits);
}

void Real::destroy() {
    if (exact_)
        mpq_clear(q_);
    else
        mpfr_clear(f_);
}

Real::Real() { init_exact(); }

Real::Real(long v) {
    init_exact();
    mpq_set_si(q_, v, 1);
}

Real::~Real() { destroy(); }

Real::Real(const Real& o) {
    if (o.exact_) {
        init_exact();
        mpq_set(q_, o.q_);
    } else {
        init_float(mpfr_get_prec(o.f_));
        mpfr_set(f_, o.f_, MPFR_RNDN);
    }
}

Real::Real(Real&& o) noexcept {
    exact_ = o.exact_;
    if (exact_) {
        q_[0] = o.q_[0];
        o.init_exact();  // leave o valid
    } else {
        f_[0] = o.f_[0];
        o.init_exact();
    }
}

Real& Real::operator=(const Real& o) {
    if (this == &o) return *this;
    destroy();
    if (o.exact_) {
        init_exact();
        mpq_set(q_, o.q_);
    } else {
        init_float(mpfr_get_prec(o.f_));
        mpfr_set(f_, o.f_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& o) noexcept {
    if (this == &o) return *this;
    destroy();
    exact_ = o.exact_;
    if (exact_) {
        q_[0] = o.q_[0];
    } else {
        f_[0] = o.f_[0];
    }
    o.init_exact();
    return *this;
}

Real Real::rational(long num, long den) {
    if (den == 0) throw InvalidParams("rational with zero denominator");
    Real r;
    if (den < 0) {
        num = -num;
        den = -den;
    }
    mpq_set_si(r.q_, num, static_cast<unsigned long>(den));
    mpq_canonicalize(r.q_);
    return r;
}

Real Real::parse(const std::string& s) {
    std::string t = s;
    long exp10 = 0;
    auto epos = t.find_first_of("eE");
    if (epos != std::string::npos && t.find('/') == std::string::npos) {
        try {
            exp10 = std::stol(t.substr(epos + 1));
        } catch (...) {
            throw InvalidParams("cannot parse number: " + s);
        }
        t = t.substr(0, epos);
    }
    if (exp10 != 0) {
        Real mant = parse(t);
        Real scale = Real::pow_int(Real(10), exp10);
        return mant * scale;
    }
    auto dot = t.find('.');
    if (dot == std::string::npos) {
        // integer or num/den
        Real r;
        if (mpq_set_str(r.q_, t.c_str(), 10) != 0)
            throw InvalidParams("cannot parse number: " + s);
        mpq_canonicalize(r.q_);
        return r;
    }
    // decimal: strip the point, divide by 10^frac_digits
    std::string digits = t.substr(0, dot) + t.substr(dot + 1);
    size_t frac = t.size() - dot - 1;
    Real r;
    if (mpq_set_str(r.q_, digits.c_str(), 10) != 0)
        throw InvalidParams("cannot parse number: " + s);
    mpz_t p;
    mpz_init(p);
    mpz_ui_pow_ui(p, 10, frac);
    mpz_mul(mpq_denref(r.q_), mpq_denref(r.q_), p);
    mpz_clear(p);
    mpq_canonicalize(r.q_);
    return r;
}

Real Real::from_double(double d) {
    if (!std::isfinite(d)) throw InvalidParams("non-finite double");
    Real r;
    mpq_set_d(r.q_, d);
    return r;
}

Real Real::to_float(mpfr_prec_t bits) const {
    if (bits == 0) bits = exact_ ? default_prec() : mpfr_get_prec(f_);
    Real r;
    r.destroy();
    r.init_float(bits);
    if (exact_)
        mpfr_set_q(r.f_, q_, MPFR_RNDN);
    else
        mpfr_set(r.f_, f_, MPFR_RNDN);
    return r;
}

mpfr_prec_t Real::prec() const { return exact_ ? default_prec() : mpfr_get_prec(f_); }

bool Real::is_zero() const { return exact_ ? mpq_sgn(q_) == 0 : mpfr_zero_p(f_); }

bool Real::is_negative() const { return sgn() < 0; }

int Real::sgn() const { return exact_ ? mpq_sgn(q_) : mpfr_sgn(f_); }

bool Real::is_integer() const {
    return exact_ ? mpz_cmp_ui(mpq_denref(q_), 1) == 0 : mpfr_integer_p(f_) != 0;
}

long Real::to_long() const {
    if (!is_integer()) throw InvalidParams("to_long on non-integer");
    if (exact_) {
        if (!mpz_fits_slong_p(mpq_numref(q_))) throw InvalidParams("integer too large");
        return mpz_get_si(mpq_numref(q_));
    }
    if (!mpfr_fits_slong_p(f_, MPFR_RNDN)) throw InvalidParams("integer too large");
    return mpfr_get_si(f_, MPFR_RNDN);
}

long Real::floor_long() const {
    if (exact_) {
        mpz_t fl;
        mpz_init(fl);
        mpz_fdiv_q(fl, mpq_numref(q_), mpq_denref(q_));
        if (!mpz_fits_slong_p(fl)) {
            mpz_clear(fl);
            throw InvalidParams("floor too large");
        }
        long v = mpz_get_si(fl);
        mpz_clear(fl);
        return v;
    }
    mpfr_t fl;
    mpfr_init2(fl, mpfr_get_prec(f_));
    mpfr_floor(fl, f_);
    if (!mpfr_fits_slong_p(fl, MPFR_RNDN)) {
        mpfr_clear(fl);
        throw InvalidParams("floor too large");
    }
    long v = mpfr_get_si(fl, MPFR_RNDN);
    mpfr_clear(fl);
    return v;
}

double Real::to_double() const {
    return exact_ ? mpq_get_d(q_) : mpfr_get_d(f_, MPFR_RNDN);
}

std::string Real::str(size_t digits) const {
    if (digits == 0)
        digits = static_cast<size_t>(static_cast<double>(prec()) * 0.30103) + 2;
    if (exact_) {
        // Exact decimal if the denominator is 2^a * 5^b, else rounded.
        mpz_t den;
        mpz_init_set(den, mpq_denref(q_));
        while (mpz_divisible_ui_p(den, 2)) mpz_divexact_ui(den, den, 2);
        while (mpz_divisible_ui_p(den, 5)) mpz_divexact_ui(den, den, 5);
        bool terminating = mpz_cmp_ui(den, 1) == 0;
        mpz_clear(den);
        if (mpz_cmp_ui(mpq_denref(q_), 1) == 0) {
            char* cs = mpz_get_str(nullptr, 10, mpq_numref(q_));
            std::string out(cs);
            std::free(cs);
            return out;
        }
        if (!terminating) {
            return to_float(default_prec()).str(digits);
        }
        // terminating decimal: scale till integral
        mpq_t tmp;
        mpq_init(tmp);
        mpq_set(tmp, q_);
        size_t shift = 0;
        while (mpz_cmp_ui(mpq_denref(tmp), 1) != 0) {
            mpz_mul_ui(mpq_numref(tmp), mpq_numref(tmp), 10);
            mpq_canonicalize(tmp);
            ++shift;
        }
        char* cs = mpz_get_str(nullptr, 10, mpq_numref(tmp));
        std::string s(cs);
        std::free(cs);
        mpq_clear(tmp);
        bool neg = !s.empty() && s[0] == '-';
        std::string mag = neg ? s.substr(1) : s;
        if (mag.size() <= shift) mag.insert(0, shift - mag.size() + 1, '0');
        mag.insert(mag.size() - shift, ".");
        return (neg ? "-" : "") + mag;
    }
    mpfr_exp_t e;
    char* cs = mpfr_get_str(nullptr, &e, 10, digits, f_, MPFR_RNDN);
    std::string m(cs);
    mpfr_free_str(cs);
    bool neg = !m.empty() && m[0] == '-';
    std::string mag = neg ? m.substr(1) : m;
    if (mag.empty() || mag.find_first_not_of('0') == std::string::npos) return "0";
    std::string out;
    if (e <= 0) {
        out = "0." + std::string(static_cast<size_t>(-e), '0') + mag;
    } else if (static_cast<size_t>(e) >= mag.size()) {
        out = mag + std::string(static_cast<size_t>(e) - mag.size(), '0');
    } else {
        out = mag.substr(0, static_cast<size_t>(e)) + "." + mag.substr(static_cast<size_t>(e));
    }
    // trim trailing zeros after a decimal point
    if (out.find('.') != std::string::npos) {
        size_t last = out.find_last_not_of('0');
        if (out[last] == '.') --last;
        out = out.substr(0, last + 1);
    }
    return (neg ? "-" : "") + out;
}

Real Real::operator-() const {
    Real r(*this);
    if (r.exact_)
        mpq_neg(r.q_, r.q_);
    else
        mpfr_neg(r.f_, r.f_, MPFR_RNDN);
    return r;
}

Real Real::abs() const { return is_negative() ? -*this : *this; }

Real operator+(const Real& a, const Real& b) {
    if (a.exact_ && b.exact_) {
        Real r;
        mpq_add(r.q_, a.q_, b.q_);
        return r;
    }
    mpfr_prec_t p = result_prec(a, b);
    Real fa = a.to_float(p), fb = b.to_float(p), r = fa;
    mpfr_add(r.f_, fa.f_, fb.f_, MPFR_RNDN);
    return r;
}

Real operator-(const Real& a, const Real& b) {
    if (a.exact_ && b.exact_) {
        Real r;
        mpq_sub(r.q_, a.q_, b.q_);
        return r;
    }
    mpfr_prec_t p = result_prec(a, b);
    Real fa = a.to_float(p), fb = b.to_float(p), r = fa;
    mpfr_sub(r.f_, fa.f_, fb.f_, MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, const Real& b) {
    if (a.exact_ && b.exact_) {
        Real r;
        mpq_mul(r.q_, a.q_, b.q_);
        return r;
    }
    mpfr_prec_t p = result_prec(a, b);
    Real fa = a.to_float(p), fb = b.to_float(p), r = fa;
    mpfr_mul(r.f_, fa.f_, fb.f_, MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, const Real& b) {
    if (b.is_zero()) throw InvalidParams("division by zero");
    if (a.exact_ && b.exact_) {
        Real r;
        mpq_div(r.q_, a.q_, b.q_);
        return r;
    }
    mpfr_prec_t p = result_prec(a, b);
    Real fa = a.to_float(p), fb = b.to_float(p), r = fa;
    mpfr_div(r.f_, fa.f_, fb.f_, MPFR_RNDN);
    return r;
}

Real Real::pow_int(const Real& a, long e) {
    if (e == 0) return Real(1);
    if (a.is_zero()) {
        if (e < 0) throw InvalidParams("0 raised to negative power");
        return Real(0);
    }
    if (a.exact_) {
        Real r;
        unsigned long ue = static_cast<unsigned long>(e < 0 ? -e : e);
        mpz_pow_ui(mpq_numref(r.q_), mpq_numref(a.q_), ue);
        mpz_pow_ui(mpq_denref(r.q_), mpq_denref(a.q_), ue);
        if (e < 0) mpq_inv(r.q_, r.q_);
        mpq_canonicalize(r.q_);
        return r;
    }
    Real r = a;  // same precision
    mpfr_pow_si(r.f_, a.f_, e, MPFR_RNDN);
    return r;
}

Real Real::pow(const Real& a, const Real& e) {
    if (e.is_integer()) {
        bool fits = true;
        long el = 0;
        try {
            el = e.to_long();
        } catch (const InvalidParams&) {
            fits = false;
        }
        if (fits) return pow_int(a, el);
    }
    if (a.sgn() < 0) throw InvalidParams("pow of negative base with non-integer exponent");
    if (a.is_zero()) {
        if (e.sgn() <= 0) throw InvalidParams("0 raised to non-positive power");
        return Real(0);
    }
    mpfr_prec_t p = result_prec(a, e);
    Real fa = a.to_float(p), fe = e.to_float(p), r = fa;
    mpfr_pow(r.f_, fa.f_, fe.f_, MPFR_RNDN);
    return r;
}

Real Real::root(const Real& a, const Real& r) { return pow(a, Real(1) / r); }

Real Real::exp(const Real& a) {
    mpfr_prec_t p = a.exact() ? default_prec() : a.prec();
    Real fa = a.to_float(p), r = fa;
    mpfr_exp(r.f_, fa.f_, MPFR_RNDN);
    return r;
}

Real Real::log(const Real& a) {
    if (a.sgn() <= 0) throw InvalidParams("log of non-positive value");
    mpfr_prec_t p = a.exact() ? default_prec() : a.prec();
    Real fa = a.to_float(p), r = fa;
    mpfr_log(r.f_, fa.f_, MPFR_RNDN);
    return r;
}

int Real::cmp(const Real& a, const Real& b) {
    if (a.exact_ && b.exact_) return mpq_cmp(a.q_, b.q_);
    if (!a.exact_ && b.exact_) return mpfr_cmp_q(a.f_, b.q_);
    if (a.exact_ && !b.exact_) return -mpfr_cmp_q(b.f_, a.q_);
    return mpfr_cmp(a.f_, b.f_);
}

bool approx_equal(const Real& a, const Real& b, const Real& rel_tol) {
    if (a.exact() && b.exact()) return a == b;
    Real diff = (a - b).abs();
    Real scale = Real::max(a.abs(), b.abs());
    if (scale.is_zero()) return diff.is_zero();
    return diff <= rel_tol * scale;
}

}  // namespace vilenkin
