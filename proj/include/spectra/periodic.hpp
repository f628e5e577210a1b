#pragma once

#include <string>
#include <vector>

#include "spectra/continued_fraction.hpp"
#include "spectra/quadratic_surd.hpp"
#include "spectra/word.hpp"

namespace spectra {

// Exact value of [a0; pre..., period, period, ...]. The purely periodic tail
// T = [p1; p2, ..., pk, T] is the root > 1 of its Moebius fixed-point
// equation; the preperiod then acts as a Moebius map on T. Both steps are
// verified by exact back-substitution.
QuadraticSurd eval_periodic(const Word& pre, const Word& period);

// Bi-infinite eventually periodic sequence
//   ... (L)^inf  left_pre  center  right_pre  (R)^inf ...
// with the origin at the first digit of center; shifts act by index
// translation. Periods nonempty, center nonempty, all digits >= 1.
class EventuallyPeriodicSeq {
  public:
    EventuallyPeriodicSeq(Word left_period, Word left_pre, Word center, Word right_pre,
                          Word right_period);

    static EventuallyPeriodicSeq periodic(const Word& w);  // ...www|www...

    int digit(long i) const;
    const Word& left_period() const { return left_period_; }
    const Word& left_pre() const { return left_pre_; }
    const Word& center() const { return center_; }
    const Word& right_pre() const { return right_pre_; }
    const Word& right_period() const { return right_period_; }

    long periodic_start_right() const;  // smallest index where the pure R-period begins
    long periodic_start_left() const;   // indices < this are pure L-period

    EventuallyPeriodicSeq shifted(long k) const;

    // "((L))l|c|r((R))" with comma-separated digits inside each part.
    static EventuallyPeriodicSeq parse(const std::string& s);
    std::string to_string() const;

  private:
    Word left_period_, left_pre_, center_, right_pre_, right_period_;
};

// f(sigma^k s) = [s_k; s_{k+1}, ...] + [0; s_{k-1}, s_{k-2}, ...], exact.
SurdSum perron_height_exact(const EventuallyPeriodicSeq& s, long k);

// Same value as a certified enclosure at the requested precision.
Interval perron_height(const EventuallyPeriodicSeq& s, long k, mpfr_prec_t prec);

struct HeightRecord {
    SurdSum value;
    long shift = 0;          // attaining shift, or the periodic phase if at_infinity
    bool at_infinity = false;  // supremum only approached along a periodic tail
};

// sup over all shifts, exact. Finitely many candidates suffice: heights at
// every shift within two periods of the non-periodic block, plus the heights
// of the two purely periodic limits (Moebius iterates toward a fixed point
// are monotone after one step, so deeper shifts never beat these).
HeightRecord markov_value(const EventuallyPeriodicSeq& s);

// limsup as the shift goes to +infinity = markov value of the right period.
HeightRecord lagrange_value(const EventuallyPeriodicSeq& s);

}  // namespace spectra
