#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "spectra/config.hpp"
#include "spectra/periodic.hpp"
#include "spectra/quadratic_surd.hpp"
#include "spectra/word.hpp"

namespace spectra {

struct NamedConstants {
    QuadraticSurd freiman;       // c_F = 4 + (253589820 + 283798 sqrt(462))/491993569
    QuadraticSurd sqrt12;
    QuadraticSurd sqrt13;
    QuadraticSurd perron_third;  // (9 sqrt(3) + 65)/22
    Rat zagier_c;                // 0.180717104711507
};
NamedConstants constants();

// Certified bounds on the centered height f over all bi-infinite extensions
// of the window w (|w| = 2N+1, centered) by digits <= alphabet. Width is at
// most 2^-(N-3) plus the evaluation radius.
Interval cylinder_markov_bounds(const Word& w, int alphabet, mpfr_prec_t prec = 128);

struct InnerPoint {
    SurdSum value;
    Word period;  // realizing periodic word; markov = lagrange = value
};

struct SpectrumApproximation {
    long Q = 0;
    int alphabet = 0;
    int window_n = 0;   // outer windows have length 2N+1
    Rat slack;          // 2^-(N-2): outer interval tops are fattened by this
    Rat range_lo, range_hi;
    std::vector<std::pair<Rat, Rat>> outer;  // sorted, disjoint
    std::vector<InnerPoint> inner;           // sorted by value
};

// Inner/outer 1/Q-resolution approximation of M (inner points are also
// Lagrange values: they come from purely periodic sequences). Every Markov
// value in [a,b] lies in `outer`; every inner point is a true spectrum
// element. Requires b <= alphabet + 1.
SpectrumApproximation approximate_spectra(const Rat& a, const Rat& b, long Q, int alphabet,
                                          const RunConfig& cfg = {});

struct GapReport {
    std::vector<std::pair<Rat, Rat>> gaps;  // maximal open intervals missing the cover
};
GapReport detect_gaps(const SpectrumApproximation& approx, const Rat& lo, const Rat& hi);

struct HallRealization {
    int c0 = 0;
    Word x_digits;  // [0; x_digits...] in C(4)
    Word y_digits;
    EventuallyPeriodicSeq seq;  // periodic word (y_n..y_1, c0, x_1..x_n)
};

// Hall-ray realization: c0 + [0;x...] + [0;y...] = target within eps, digits
// in {1..4}; the returned periodic sequence has markov = lagrange value
// within eps + 2^-(n-2) of the target.
HallRealization hall_realize(const SurdSum& target, const Rat& eps, const RunConfig& cfg = {});
HallRealization hall_realize(const Rat& target, const Rat& eps, const RunConfig& cfg = {});

void write_approx_csv(std::ostream& os, const SpectrumApproximation& approx);
void write_gaps_csv(std::ostream& os, const GapReport& gaps);
// strip plot: outer cover as bars, inner points as ticks
void write_approx_svg(std::ostream& os, const SpectrumApproximation& approx);

}  // namespace spectra
