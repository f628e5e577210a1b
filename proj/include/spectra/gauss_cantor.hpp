#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "spectra/config.hpp"
#include "spectra/continued_fraction.hpp"
#include "spectra/rational.hpp"
#include "spectra/real.hpp"
#include "spectra/word.hpp"

namespace spectra {

// Primitive finite set of finite words (no element a prefix of another).
class WordSet {
  public:
    explicit WordSet(std::vector<Word> words);
    const std::vector<Word>& words() const { return words_; }
    size_t size() const { return words_.size(); }

  private:
    std::vector<Word> words_;
};

WordSet transpose(const WordSet& b);

// K(prefix, B); the prefix relabels cylinders without changing the dimension.
struct GaussCantorSpec {
    Word prefix;  // possibly empty, headless
    WordSet blocks;

    explicit GaussCantorSpec(WordSet b) : blocks(std::move(b)) {}
    GaussCantorSpec(Word gamma, WordSet b);
};

// Cylinder I(word) = { [0; word, anything] }: endpoints p_n/q_n and
// (p_n + p_{n-1})/(q_n + q_{n-1}), so |I| = 1/(q_n (q_n + q_{n-1})).
// lambda/Lambda are min/max of |(psi^m)'| on the cylinder, where psi is the
// block map; they come from the block part alone (q_n^2 and (q_n+q_{n-1})^2
// at the endpoints), so a prefix only relabels the interval.
struct CylinderInterval {
    Word word;
    Rat lo, hi;
    int level;
    Rat lambda, Lambda;

    Rat length() const { return hi - lo; }
};

CylinderInterval cylinder_interval(const Word& beta);

// All |B|^m level-m cylinders of K(spec), disjoint, sorted by lo.
std::vector<CylinderInterval> cover(const GaussCantorSpec& spec, int m,
                                    const RunConfig& cfg = {});

struct DimBounds {
    double alpha, beta;
    int level;
};

// Covering bounds alpha_m <= dim K <= beta_m from
//   sum 1/lambda(J)^beta = 1,  sum 1/Lambda(J)^alpha = max|(psi^{n0-1})'|,
// each solved by bisection on (0,1) to 1e-12.
DimBounds palis_takens_bounds(const GaussCantorSpec& spec, int m, int n0 = 1,
                              const RunConfig& cfg = {});

// Affine test system: k full branches of constant slope.
struct AffineSystem {
    int branches;
    Rat slope;  // |psi'|, > 1
};
DimBounds palis_takens_bounds(const AffineSystem& sys, int m, int n0 = 1,
                              const RunConfig& cfg = {});

struct EulerCheck {
    Int q_word, q_transpose;
    bool equal;
};
// Euler: [0; beta] and [0; beta^T] have the same reduced denominator.
EulerCheck euler_denominator_check(const Word& beta);

// Outer cover of K(A) + K(B) at depth m: union of pairwise Minkowski sums of
// the two covers, merged into maximal disjoint intervals.
std::vector<std::pair<Rat, Rat>> sum_cover(const GaussCantorSpec& a, const GaussCantorSpec& b,
                                           int m, const RunConfig& cfg = {});

struct GapExponentReport {
    bool pass;
    double worst_margin;      // min over words of (|I(w)|^s0 - children sum), >= 0 iff pass
    Word worst_word;
    long words_checked;
};

// Checks |I(w,1,1,2)|^s0 + |I(w,2,2,1)|^s0 <= |I(w)|^s0 for all words w over
// {1,2} with |w| <= n_max.
GapExponentReport gap_exponent_check(const Rat& s0, int n_max);

void write_cover_csv(std::ostream& os, const std::vector<CylinderInterval>& cov);

}  // namespace spectra
