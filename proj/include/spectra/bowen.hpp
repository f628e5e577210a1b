#pragma once

#include <string>
#include <vector>

#include "spectra/config.hpp"
#include "spectra/gauss_cantor.hpp"
#include "spectra/quadratic_surd.hpp"
#include "spectra/real.hpp"
#include "spectra/word.hpp"

namespace spectra {

// Fixed point of psi^n indexed by a block word w = beta_1...beta_n: the
// purely periodic point x = [0; w~] with multiplier
// D = (psi^n)'(x) = (-1)^{|w|} (q_n + q_{n-1} x)^2, both exact surds.
struct PeriodicOrbit {
    Word block_word;            // concatenated digits
    int blocks;                 // period in blocks
    QuadraticSurd fixed_point;  // [0; w~]
    QuadraticSurd abs_multiplier;
    int sign;  // (-1)^{total digit length}
};

std::vector<PeriodicOrbit> enumerate_periodic(const WordSet& b, int n, const RunConfig& cfg = {});

PeriodicOrbit make_orbit(const Word& block_word, int blocks);

// signed multiplier as a certified enclosure
Interval multiplier_value(const PeriodicOrbit& orbit, mpfr_prec_t prec);

// Orbit data for tr(L_s^n), n = 1..max_period, evaluable at any s:
// tr = sum_p mult_p * |D_p|^{-s} / (1 - D_p^{-1}).
class TraceTable {
  public:
    // Gauss-Cantor branch system over the block set b
    TraceTable(const WordSet& b, int max_period, mpfr_prec_t prec, const RunConfig& cfg = {});
    // affine k-branch constant-slope system
    TraceTable(const AffineSystem& sys, int max_period, mpfr_prec_t prec);

    int max_period() const { return static_cast<int>(periods_.size()); }
    mpfr_prec_t prec() const { return prec_; }
    long orbit_count(int n) const;  // number of fixed points of psi^n

    Interval trace(const Interval& s, int n) const;

  private:
    struct Entry {
        Interval log_abs_d;
        Interval denom;  // 1/(1 - D^{-1})
        long multiplicity;
    };
    std::vector<std::vector<Entry>> periods_;
    std::vector<long> counts_;
    mpfr_prec_t prec_;
};

Interval trace(const TraceTable& table, const Interval& s, int n);

// d_0 = 1, d_n = -(1/n) sum_{k=1..n} tr(L_s^k) d_{n-k}; returns d_1..d_M.
std::vector<Interval> fredholm_coefficients(const TraceTable& table, const Interval& s, int M);

// thrown when the truncated determinant has no bracketed root in (0,1)
class DimensionError : public std::runtime_error {
  public:
    explicit DimensionError(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionReport {
    int order = 0;
    long precision_bits = 0;
    std::string s_decimal;            // root of the order-M truncation
    double s_value = 0;
    double residual = 0;              // certified bound on |1 + sum d_n(s_M)|
    std::vector<double> s_by_order;   // s_m for m = 2..M
    std::vector<long> orbit_counts;   // fixed points per period 1..M
};

DimensionReport solve_dimension(const WordSet& b, int M, long precision_bits = 256,
                                const RunConfig& cfg = {});
DimensionReport solve_dimension(const AffineSystem& sys, int M, long precision_bits = 256);

std::string format_report(const DimensionReport& rep);  // JSON text

}  // namespace spectra
