#include "spectra/quadratic_surd.hpp"

#include <algorithm>
#include <stdexcept>

namespace spectra {

QuadraticSurd::QuadraticSurd(const Rat& q) : a_(q.get_num()), b_(0), d_(2), r_(q.get_den()) {}

QuadraticSurd QuadraticSurd::make(Int a, Int b, Int d, Int r) {
    if (r == 0) throw std::invalid_argument("QuadraticSurd: zero denominator");
    if (b != 0) {
        if (d <= 0) throw std::invalid_argument("QuadraticSurd: d must be positive");
        auto [sq, free] = squarefree_split(d);
        b *= sq;
        d = free;
        if (d == 1) {  // d was a perfect square: the value is rational
            a += b;
            b = 0;
        }
    }
    if (b == 0) d = 2;
    QuadraticSurd s;
    s.d_ = d;
    return s.with(std::move(a), std::move(b), std::move(r));
}

QuadraticSurd QuadraticSurd::sqrt_of(const Int& n) {
    if (n < 0) throw std::domain_error("sqrt_of: negative argument");
    if (n == 0) return QuadraticSurd();
    return make(0, 1, n, 1);
}

QuadraticSurd QuadraticSurd::with(Int a, Int b, Int r) const {
    QuadraticSurd s;
    if (r < 0) {
        a = -a;
        b = -b;
        r = -r;
    }
    Int g = gcd(gcd(a, b), r);
    s.a_ = a / g;
    s.b_ = b / g;
    s.r_ = r / g;
    s.d_ = b == 0 ? Int(2) : d_;
    return s;
}

Rat QuadraticSurd::rational_value() const {
    if (!is_rational()) throw std::domain_error("rational_value: irrational surd");
    return make_rat(a_, r_);
}

namespace {
// Common field for a binary operation; rational operands adapt.
Int common_d(const QuadraticSurd& x, const QuadraticSurd& y) {
    if (x.is_rational()) return y.d();
    if (y.is_rational()) return x.d();
    if (x.d() != y.d())
        throw std::domain_error("QuadraticSurd: mixed radicands (use SurdSum)");
    return x.d();
}
}  // namespace

QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y) {
    Int d = common_d(x, y);
    return QuadraticSurd::make(x.a() * y.r() + y.a() * x.r(), x.b() * y.r() + y.b() * x.r(), d,
                               x.r() * y.r());
}

QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y) { return x + (-y); }

QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y) {
    Int d = common_d(x, y);
    return QuadraticSurd::make(x.a() * y.a() + x.b() * y.b() * d, x.a() * y.b() + x.b() * y.a(),
                               d, x.r() * y.r());
}

QuadraticSurd operator/(const QuadraticSurd& x, const QuadraticSurd& y) {
    if (y.is_zero()) throw std::domain_error("QuadraticSurd: division by zero");
    Int d = common_d(x, y);
    // multiply by the conjugate: norm = a^2 - b^2 d (nonzero for y != 0)
    Int norm = y.a() * y.a() - y.b() * y.b() * d;
    return QuadraticSurd::make((x.a() * y.a() - x.b() * y.b() * d) * y.r(),
                               (x.b() * y.a() - x.a() * y.b()) * y.r(), d, x.r() * norm);
}

int QuadraticSurd::sign() const {
    if (b_ == 0) return sgn(a_);
    if (a_ == 0) return sgn(b_);
    int sa = sgn(a_), sb = sgn(b_);
    if (sa == sb) return sa;
    // |a| vs |b| sqrt(d): compare squares
    return cmp(a_ * a_, b_ * b_ * d_) > 0 ? sa : sb;
}

bool QuadraticSurd::operator==(const QuadraticSurd& y) const {
    return a_ == y.a_ && b_ == y.b_ && r_ == y.r_ && (b_ == 0 || d_ == y.d_);
}

bool QuadraticSurd::operator<(const QuadraticSurd& y) const { return compare(*this, y) < 0; }

int compare(const QuadraticSurd& x, const QuadraticSurd& y) {
    if (x.is_rational() || y.is_rational() || x.d() == y.d()) {
        Int d = x.is_rational() ? y.d() : x.d();
        // (a1 r2 - a2 r1) + (b1 r2 - b2 r1) sqrt(d), both r > 0
        return QuadraticSurd::make(x.a() * y.r() - y.a() * x.r(),
                                   x.b() * y.r() - y.b() * x.r(), d, x.r() * y.r())
            .sign();
    }
    return (SurdSum(x) - SurdSum(y)).sign();
}

Interval QuadraticSurd::enclosure(mpfr_prec_t prec) const {
    Interval v = Interval::of_rat(make_rat(a_, r_), prec);
    if (b_ != 0) v = v + Interval::sqrt_int(d_, prec).scaled(make_rat(b_, r_));
    return v;
}

std::string QuadraticSurd::decimal(int digits) const { return SurdSum(*this).decimal(digits); }

SurdSum::SurdSum(const QuadraticSurd& s) {
    rat_ = make_rat(s.a(), s.r());
    if (s.b() != 0) add_term(make_rat(s.b(), s.r()), s.d());
}

void SurdSum::add_term(const Rat& coef, const Int& d) {
    if (coef == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), d,
                               [](const Term& t, const Int& v) { return t.d < v; });
    if (it != terms_.end() && it->d == d) {
        it->coef += coef;
        if (it->coef == 0) terms_.erase(it);
    } else {
        terms_.insert(it, Term{coef, d});
    }
}

SurdSum operator+(const SurdSum& x, const SurdSum& y) {
    SurdSum s = x;
    s.rat_ += y.rat_;
    for (const auto& t : y.terms_) s.add_term(t.coef, t.d);
    return s;
}

SurdSum operator-(const SurdSum& x, const SurdSum& y) { return x + (-y); }

SurdSum operator-(const SurdSum& x) {
    SurdSum s = x;
    s.rat_ = -s.rat_;
    for (auto& t : s.terms_) t.coef = -t.coef;
    return s;
}

SurdSum SurdSum::scaled(const Rat& c) const {
    if (c == 0) return SurdSum();
    SurdSum s = *this;
    s.rat_ *= c;
    for (auto& t : s.terms_) t.coef *= c;
    return s;
}

int SurdSum::sign() const {
    if (terms_.empty()) return sgn(rat_);
    // Nonzero by linear independence of distinct squarefree roots over Q;
    // refine the enclosure until zero is excluded.
    for (mpfr_prec_t prec = 128; prec <= (mpfr_prec_t{1} << 20); prec *= 2) {
        int s = enclosure(prec).sign();
        if (s != 0) return s;
    }
    throw std::runtime_error("SurdSum::sign: refinement failed to separate from zero");
}

Interval SurdSum::enclosure(mpfr_prec_t prec) const {
    Interval v = Interval::of_rat(rat_, prec);
    for (const auto& t : terms_) v = v + Interval::sqrt_int(t.d, prec).scaled(t.coef);
    return v;
}

std::string SurdSum::decimal(int digits) const {
    // enough working precision that the midpoint rounding is stable
    mpfr_prec_t prec = 64 + static_cast<mpfr_prec_t>(4 * (digits + 4));
    return enclosure(prec).lo().decimal(digits);
}

}  // namespace spectra
