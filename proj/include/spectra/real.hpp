#pragma once

#include <mpfr.h>

#include <string>

#include "spectra/rational.hpp"

namespace spectra {

// RAII value wrapper around one mpfr_t. Immutable from the outside; all
// arithmetic goes through Interval, which controls rounding directions.
class Real {
  public:
    explicit Real(mpfr_prec_t prec = 256) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, 2); mpfr_swap(v_, o.v_); }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    static Real of_long(long x, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_si(r.v_, x, MPFR_RNDN);
        return r;
    }
    static Real of_rat(const Rat& q, mpfr_prec_t prec, mpfr_rnd_t rnd) {
        Real r(prec);
        mpfr_set_q(r.v_, q.get_mpq_t(), rnd);
        return r;
    }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sgn() const { return mpfr_sgn(v_); }

    // Exact rational value (finite mpfr values are dyadic rationals).
    Rat to_rat() const;

    // Fixed-point decimal with the given number of fractional digits,
    // rounded to nearest; deterministic.
    std::string decimal(int digits) const;

    friend int cmp(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_); }
    bool operator<(const Real& o) const { return cmp(*this, o) < 0; }
    bool operator<=(const Real& o) const { return cmp(*this, o) <= 0; }
    bool operator>(const Real& o) const { return cmp(*this, o) > 0; }
    bool operator>=(const Real& o) const { return cmp(*this, o) >= 0; }

  private:
    mpfr_t v_;
};

// Closed interval [lo, hi] with outward rounding; the basic certified
// enclosure all floating outputs are made of.
class Interval {
  public:
    Interval() = default;
    Interval(Real lo, Real hi);

    static Interval of_long(long x, mpfr_prec_t prec);
    static Interval of_rat(const Rat& q, mpfr_prec_t prec);
    static Interval hull(const Interval& a, const Interval& b);
    // sqrt of a nonnegative integer
    static Interval sqrt_int(const Int& n, mpfr_prec_t prec);

    const Real& lo() const { return lo_; }
    const Real& hi() const { return hi_; }
    mpfr_prec_t prec() const { return lo_.prec(); }

    Rat lo_rat() const { return lo_.to_rat(); }
    Rat hi_rat() const { return hi_.to_rat(); }
    double mid_double() const { return (lo_.to_double() + hi_.to_double()) / 2; }
    Real width() const;

    bool contains_zero() const { return lo_.sgn() <= 0 && hi_.sgn() >= 0; }
    // -1 / +1 when the sign is certain, 0 when the interval straddles zero
    int sign() const {
        if (hi_.sgn() < 0) return -1;
        if (lo_.sgn() > 0) return 1;
        return 0;
    }
    bool strictly_less(const Interval& o) const { return hi_ < o.lo_; }

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    // requires a denominator of certain sign
    friend Interval operator/(const Interval& a, const Interval& b);
    Interval operator-() const;

    friend Interval log(const Interval& a);   // requires lo > 0
    friend Interval exp(const Interval& a);
    friend Interval sqrt(const Interval& a);  // requires lo >= 0

    Interval scaled(const Rat& c) const;  // exact scalar multiply, outward
    Interval shifted_long(long c) const;

  private:
    Real lo_, hi_;
};

// q^s for exact rational q > 0, outward rounded.
Interval rat_pow(const Rat& q, const Interval& s, mpfr_prec_t prec);

// Round-to-nearest scalar arithmetic for iteration interiors (secant steps
// and the like); certification happens separately through Interval.
Real rn_add(const Real& a, const Real& b);
Real rn_sub(const Real& a, const Real& b);
Real rn_mul(const Real& a, const Real& b);
Real rn_div(const Real& a, const Real& b);
Real rn_abs(const Real& a);

inline Interval point_interval(const Real& x) { return Interval(x, x); }

}  // namespace spectra
