#pragma once

#include <string>
#include <vector>

#include "spectra/rational.hpp"
#include "spectra/real.hpp"

namespace spectra {

// Exact value (a + b*sqrt(d)) / r. Canonical form: d squarefree (after trial
// division), gcd(a, b, r) = 1, r > 0; rational values are stored with b = 0,
// d = 2. Field arithmetic is closed within one Q(sqrt(d)); mixing distinct
// irrational d's throws (use SurdSum for sums across fields).
class QuadraticSurd {
  public:
    QuadraticSurd() : a_(0), b_(0), d_(2), r_(1) {}
    QuadraticSurd(const Rat& q);  // implicit: rationals embed
    QuadraticSurd(long v) : QuadraticSurd(Rat(v)) {}
    static QuadraticSurd make(Int a, Int b, Int d, Int r);
    static QuadraticSurd sqrt_of(const Int& n);  // sqrt(n), n >= 0

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& d() const { return d_; }
    const Int& r() const { return r_; }

    bool is_rational() const { return b_ == 0; }
    Rat rational_value() const;  // throws unless rational

    QuadraticSurd conj() const { return with(a_, -b_, r_); }
    friend QuadraticSurd operator-(const QuadraticSurd& x) { return x.with(-x.a_, -x.b_, x.r_); }
    friend QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y);
    friend QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y);
    friend QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y);
    friend QuadraticSurd operator/(const QuadraticSurd& x, const QuadraticSurd& y);

    int sign() const;
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool operator==(const QuadraticSurd& y) const;
    bool operator<(const QuadraticSurd& y) const;

    Interval enclosure(mpfr_prec_t prec) const;
    std::string decimal(int digits) const;

  private:
    QuadraticSurd with(Int a, Int b, Int r) const;  // same d, re-normalized
    Int a_, b_, d_, r_;
};

// Exact finite sum  rat + sum_i coef_i * sqrt(d_i)  with distinct squarefree
// d_i. Distinct square roots are linearly independent over Q, so a merged
// nonzero form is a nonzero number; sign() exploits that: structural zero is
// decided exactly, anything else by interval refinement, which terminates.
class SurdSum {
  public:
    struct Term {
        Rat coef;  // nonzero
        Int d;     // squarefree, >= 2, strictly increasing across terms
    };

    SurdSum() = default;
    SurdSum(const Rat& q) : rat_(q) {}
    SurdSum(long v) : rat_(Rat(v)) {}
    SurdSum(const QuadraticSurd& s);

    const Rat& rational_part() const { return rat_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_rational() const { return terms_.empty(); }

    friend SurdSum operator+(const SurdSum& x, const SurdSum& y);
    friend SurdSum operator-(const SurdSum& x, const SurdSum& y);
    friend SurdSum operator-(const SurdSum& x);
    SurdSum scaled(const Rat& c) const;

    bool is_zero() const { return terms_.empty() && rat_ == 0; }
    int sign() const;
    bool operator==(const SurdSum& y) const { return (*this - y).is_zero(); }
    bool operator<(const SurdSum& y) const { return (*this - y).sign() < 0; }
    bool operator<=(const SurdSum& y) const { return (*this - y).sign() <= 0; }

    Interval enclosure(mpfr_prec_t prec) const;
    std::string decimal(int digits) const;

  private:
    void add_term(const Rat& coef, const Int& d);
    Rat rat_;
    std::vector<Term> terms_;
};

int compare(const QuadraticSurd& x, const QuadraticSurd& y);  // works across fields

}  // namespace spectra
