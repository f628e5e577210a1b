#include "spectra/real.hpp"

#include <stdexcept>
#include <vector>

namespace spectra {

Rat Real::to_rat() const {
    if (!is_finite()) throw std::domain_error("Real::to_rat: non-finite value");
    Rat q;
    mpfr_get_q(q.get_mpq_t(), v_);
    return q;
}

std::string Real::decimal(int digits) const {
    std::vector<char> buf(static_cast<size_t>(digits) + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rf", digits, v_);
    return std::string(buf.data());
}

Interval::Interval(Real lo, Real hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (cmp(lo_, hi_) > 0) throw std::invalid_argument("Interval: lo > hi");
}

Interval Interval::of_long(long x, mpfr_prec_t prec) {
    Real v = Real::of_long(x, prec);
    return Interval(v, v);
}

Interval Interval::of_rat(const Rat& q, mpfr_prec_t prec) {
    return Interval(Real::of_rat(q, prec, MPFR_RNDD), Real::of_rat(q, prec, MPFR_RNDU));
}

Interval Interval::hull(const Interval& a, const Interval& b) {
    return Interval(cmp(a.lo_, b.lo_) <= 0 ? a.lo_ : b.lo_,
                    cmp(a.hi_, b.hi_) >= 0 ? a.hi_ : b.hi_);
}

Interval Interval::sqrt_int(const Int& n, mpfr_prec_t prec) {
    if (n < 0) throw std::domain_error("sqrt_int: negative argument");
    Real lo(prec), hi(prec);
    mpfr_set_z(lo.get(), n.get_mpz_t(), MPFR_RNDD);
    mpfr_sqrt(lo.get(), lo.get(), MPFR_RNDD);
    mpfr_set_z(hi.get(), n.get_mpz_t(), MPFR_RNDU);
    mpfr_sqrt(hi.get(), hi.get(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Real Interval::width() const {
    Real w(prec());
    mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
    return w;
}

Interval operator+(const Interval& a, const Interval& b) {
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    Real lo(p), hi(p);
    mpfr_add(lo.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
    mpfr_add(hi.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval operator-(const Interval& a, const Interval& b) {
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    Real lo(p), hi(p);
    mpfr_sub(lo.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
    mpfr_sub(hi.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval operator*(const Interval& a, const Interval& b) {
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    mpfr_srcptr as[2] = {a.lo_.get(), a.hi_.get()};
    mpfr_srcptr bs[2] = {b.lo_.get(), b.hi_.get()};
    Real lo(p), hi(p), t(p);
    bool first = true;
    for (auto x : as)
        for (auto y : bs) {
            mpfr_mul(t.get(), x, y, MPFR_RNDD);
            if (first || cmp(t, lo) < 0) lo = t;
            mpfr_mul(t.get(), x, y, MPFR_RNDU);
            if (first || cmp(t, hi) > 0) hi = t;
            first = false;
        }
    return Interval(std::move(lo), std::move(hi));
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) throw std::domain_error("Interval division by zero-straddling interval");
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    mpfr_srcptr as[2] = {a.lo_.get(), a.hi_.get()};
    mpfr_srcptr bs[2] = {b.lo_.get(), b.hi_.get()};
    Real lo(p), hi(p), t(p);
    bool first = true;
    for (auto x : as)
        for (auto y : bs) {
            mpfr_div(t.get(), x, y, MPFR_RNDD);
            if (first || cmp(t, lo) < 0) lo = t;
            mpfr_div(t.get(), x, y, MPFR_RNDU);
            if (first || cmp(t, hi) > 0) hi = t;
            first = false;
        }
    return Interval(std::move(lo), std::move(hi));
}

Interval Interval::operator-() const {
    Interval r;
    Real lo(prec()), hi(prec());
    mpfr_neg(lo.get(), hi_.get(), MPFR_RNDD);
    mpfr_neg(hi.get(), lo_.get(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval log(const Interval& a) {
    if (a.lo_.sgn() <= 0) throw std::domain_error("Interval log: nonpositive argument");
    Real lo(a.prec()), hi(a.prec());
    mpfr_log(lo.get(), a.lo_.get(), MPFR_RNDD);
    mpfr_log(hi.get(), a.hi_.get(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval exp(const Interval& a) {
    Real lo(a.prec()), hi(a.prec());
    mpfr_exp(lo.get(), a.lo_.get(), MPFR_RNDD);
    mpfr_exp(hi.get(), a.hi_.get(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval sqrt(const Interval& a) {
    if (a.lo_.sgn() < 0) throw std::domain_error("Interval sqrt: negative argument");
    Real lo(a.prec()), hi(a.prec());
    mpfr_sqrt(lo.get(), a.lo_.get(), MPFR_RNDD);
    mpfr_sqrt(hi.get(), a.hi_.get(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval Interval::scaled(const Rat& c) const {
    Real lo(prec()), hi(prec());
    const int s = sgn(c);
    if (s == 0) return Interval::of_long(0, prec());
    mpfr_srcptr a = s > 0 ? lo_.get() : hi_.get();
    mpfr_srcptr b = s > 0 ? hi_.get() : lo_.get();
    mpfr_mul_q(lo.get(), a, c.get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(hi.get(), b, c.get_mpq_t(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval Interval::shifted_long(long c) const {
    Real lo(prec()), hi(prec());
    mpfr_add_si(lo.get(), lo_.get(), c, MPFR_RNDD);
    mpfr_add_si(hi.get(), hi_.get(), c, MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval rat_pow(const Rat& q, const Interval& s, mpfr_prec_t prec) {
    if (q <= 0) throw std::domain_error("rat_pow: base must be positive");
    return exp(log(Interval::of_rat(q, prec)) * s);
}

namespace {
template <typename F>
Real rn_bin(const Real& a, const Real& b, F f) {
    Real r(std::max(a.prec(), b.prec()));
    f(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}
}  // namespace

Real rn_add(const Real& a, const Real& b) { return rn_bin(a, b, mpfr_add); }
Real rn_sub(const Real& a, const Real& b) { return rn_bin(a, b, mpfr_sub); }
Real rn_mul(const Real& a, const Real& b) { return rn_bin(a, b, mpfr_mul); }
Real rn_div(const Real& a, const Real& b) { return rn_bin(a, b, mpfr_div); }

Real rn_abs(const Real& a) {
    Real r(a.prec());
    mpfr_abs(r.get(), a.get(), MPFR_RNDN);
    return r;
}

}  // namespace spectra
