#include "spectra/gauss_cantor.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <stdexcept>

namespace spectra {

namespace {

bool is_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() > b.size()) return false;
    return std::equal(a.begin(), a.end(), b.begin());
}

// endpoints of the cylinder described by the continuant matrix
// [[p, p'], [q, q']]: p/q and (p+p')/(q+q')
std::pair<Rat, Rat> endpoints_of(const Mat2& m) {
    Rat e1 = make_rat(m.a, m.c);
    Rat e2 = make_rat(m.a + m.b, m.c + m.d);
    if (e1 > e2) std::swap(e1, e2);
    return {e1, e2};
}

Mat2 headless_matrix(const std::vector<int>& digits) {
    return Mat2{0, 1, 1, 0} * digit_product(digits);
}

}  // namespace

WordSet::WordSet(std::vector<Word> words) : words_(std::move(words)) {
    if (words_.empty()) throw std::invalid_argument("WordSet: empty set");
    for (const auto& w : words_) {
        if (w.head) throw std::invalid_argument("WordSet: words must be headless");
        if (w.digits.empty()) throw std::invalid_argument("WordSet: empty word");
        validate_digits(w);
    }
    for (size_t i = 0; i < words_.size(); ++i)
        for (size_t j = 0; j < words_.size(); ++j)
            if (i != j && is_prefix(words_[i].digits, words_[j].digits))
                throw std::invalid_argument("WordSet: not primitive (" +
                                            format_word(words_[i]) + " prefixes " +
                                            format_word(words_[j]) + ")");
}

WordSet transpose(const WordSet& b) {
    std::vector<Word> out;
    out.reserve(b.size());
    for (const auto& w : b.words()) out.push_back(reversed(w));
    return WordSet(std::move(out));
}

GaussCantorSpec::GaussCantorSpec(Word gamma, WordSet b) : prefix(std::move(gamma)), blocks(std::move(b)) {
    if (prefix.head) throw std::invalid_argument("GaussCantorSpec: prefix must be headless");
    validate_digits(prefix);
}

CylinderInterval cylinder_interval(const Word& beta) {
    if (beta.digits.empty()) throw std::invalid_argument("cylinder_interval: empty word");
    if (beta.head) throw std::invalid_argument("cylinder_interval: word must be headless");
    validate_digits(beta);
    Mat2 m = headless_matrix(beta.digits);
    auto [lo, hi] = endpoints_of(m);
    CylinderInterval ci;
    ci.word = beta;
    ci.lo = lo;
    ci.hi = hi;
    ci.level = static_cast<int>(beta.digits.size());
    ci.lambda = Rat(m.c * m.c);              // q_n^2
    ci.Lambda = Rat((m.c + m.d) * (m.c + m.d));  // (q_n + q_{n-1})^2
    return ci;
}

std::vector<CylinderInterval> cover(const GaussCantorSpec& spec, int m, const RunConfig& cfg) {
    if (m < 1) throw std::invalid_argument("cover: level must be >= 1");
    const size_t k = spec.blocks.size();
    double count = 1;
    for (int i = 0; i < m; ++i) {
        count *= static_cast<double>(k);
        if (count > static_cast<double>(cfg.max_cover_intervals))
            throw BudgetError("cover: |B|^m exceeds the interval budget");
    }
    Mat2 prefix_m = digit_product(spec.prefix.digits);

    std::vector<CylinderInterval> out;
    std::vector<size_t> choice(static_cast<size_t>(m), 0);
    while (true) {
        Word blockw;
        Mat2 bm;
        for (size_t i = 0; i < choice.size(); ++i) {
            const Word& b = spec.blocks.words()[choice[i]];
            blockw = concat(blockw, b);
            bm = bm * digit_product(b.digits);
        }
        CylinderInterval ci;
        ci.word = concat(spec.prefix, blockw);
        auto [lo, hi] = endpoints_of(Mat2{0, 1, 1, 0} * prefix_m * bm);
        ci.lo = lo;
        ci.hi = hi;
        ci.level = m;
        // contraction data from the block part alone: the prefix is a fixed
        // bi-Lipschitz relabeling and does not enter the branch derivative
        Mat2 h = Mat2{0, 1, 1, 0} * bm;
        ci.lambda = Rat(h.c * h.c);
        ci.Lambda = Rat((h.c + h.d) * (h.c + h.d));
        out.push_back(std::move(ci));

        size_t pos = choice.size();
        while (pos > 0 && choice[pos - 1] == k - 1) choice[--pos] = 0;
        if (pos == 0) break;
        ++choice[pos - 1];
    }
    std::sort(out.begin(), out.end(),
              [](const CylinderInterval& a, const CylinderInterval& b) { return a.lo < b.lo; });
    for (size_t i = 1; i < out.size(); ++i)
        if (out[i - 1].hi > out[i].lo) throw std::logic_error("cover: intervals overlap");
    return out;
}

namespace {

// Bisection to 1e-12 on sum_J w_J^{-s} = rhs, strictly decreasing in s.
double solve_pressure(const std::vector<Rat>& weights, const Rat& rhs, mpfr_prec_t prec) {
    std::vector<Interval> logs;
    logs.reserve(weights.size());
    for (const auto& w : weights) {
        if (w <= 1) throw std::domain_error("pressure equation: weights must exceed 1");
        logs.push_back(log(Interval::of_rat(w, prec)));
    }
    auto H = [&](const Rat& s) {
        Interval acc = Interval::of_rat(-rhs, prec);
        Interval si = Interval::of_rat(s, prec);
        for (const auto& lg : logs) acc = acc + exp(-(si * lg));
        return acc;
    };
    if (static_cast<long>(weights.size()) == 0) throw std::invalid_argument("empty cover");
    // count == rhs means the root sits at s = 0 (single-point degenerate set)
    if (Rat(static_cast<long>(weights.size())) == rhs) return 0.0;
    int s_lo = H(Rat(0)).sign(), s_hi = H(Rat(1)).sign();
    if (s_lo <= 0 || s_hi >= 0)
        throw std::domain_error("pressure equation: no root bracketed in (0,1)");
    Rat lo(0), hi(1);
    for (int it = 0; it < 60; ++it) {
        Rat mid = (lo + hi) / 2;
        int s = H(mid).sign();
        if (s == 0) return mid.get_d();  // |H| below precision: mid is the root
        (s > 0 ? lo : hi) = mid;
        if (hi - lo < make_rat(1, Int("10000000000000"))) break;
    }
    return Rat((lo + hi) / 2).get_d();
}

}  // namespace

DimBounds palis_takens_bounds(const GaussCantorSpec& spec, int m, int n0, const RunConfig& cfg) {
    if (n0 < 1) throw std::invalid_argument("palis_takens_bounds: n0 must be >= 1");
    auto cov = cover(spec, m, cfg);
    std::vector<Rat> lam, Lam;
    lam.reserve(cov.size());
    Lam.reserve(cov.size());
    for (const auto& ci : cov) {
        lam.push_back(ci.lambda);
        Lam.push_back(ci.Lambda);
    }
    Rat rhs(1);
    if (n0 > 1) {
        Rat mx(0);
        for (const auto& ci : cover(spec, n0 - 1, cfg)) mx = std::max(mx, ci.Lambda);
        rhs = mx;
    }
    DimBounds b;
    b.level = m;
    b.beta = solve_pressure(lam, Rat(1), cfg.bits);
    b.alpha = solve_pressure(Lam, rhs, cfg.bits);
    if (b.alpha > b.beta) throw std::logic_error("palis_takens_bounds: alpha > beta");
    return b;
}

DimBounds palis_takens_bounds(const AffineSystem& sys, int m, int n0, const RunConfig& cfg) {
    if (sys.branches < 1 || sys.slope <= 1)
        throw std::invalid_argument("AffineSystem: need branches >= 1 and slope > 1");
    if (m < 1 || n0 < 1) throw std::invalid_argument("palis_takens_bounds: bad level");
    Rat sm(1);
    for (int i = 0; i < m; ++i) sm *= sys.slope;
    double nweights = std::pow(static_cast<double>(sys.branches), m);
    if (nweights > static_cast<double>(cfg.max_cover_intervals))
        throw BudgetError("palis_takens_bounds: affine cover exceeds budget");
    std::vector<Rat> w(static_cast<size_t>(nweights), sm);
    Rat rhs(1);
    for (int i = 0; i < n0 - 1; ++i) rhs *= sys.slope;
    DimBounds b;
    b.level = m;
    b.beta = solve_pressure(w, Rat(1), cfg.bits);
    b.alpha = solve_pressure(w, rhs, cfg.bits);
    return b;
}

EulerCheck euler_denominator_check(const Word& beta) {
    if (beta.digits.empty() || beta.head)
        throw std::invalid_argument("euler_denominator_check: need a nonempty headless word");
    Word b0 = beta;
    b0.head = 0;
    Word bt = reversed(beta);
    bt.head = 0;
    Int q1 = convergents(b0).back().q;
    Int q2 = convergents(bt).back().q;
    return {q1, q2, q1 == q2};
}

namespace {

// Disjoint interval union keyed by left endpoint.
class IntervalUnion {
  public:
    bool covers(const Rat& lo, const Rat& hi) const {
        auto it = set_.upper_bound(lo);
        if (it == set_.begin()) return false;
        --it;
        return it->second >= hi;
    }
    void insert(Rat lo, Rat hi) {
        auto it = set_.upper_bound(lo);
        if (it != set_.begin()) {
            auto prev = std::prev(it);
            if (prev->second >= lo) {  // merge into predecessor
                it = prev;
                lo = it->first;
                hi = std::max(hi, it->second);
            }
        }
        while (it != set_.end() && it->first <= hi) {
            hi = std::max(hi, it->second);
            it = set_.erase(it);
        }
        set_.emplace(std::move(lo), std::move(hi));
    }
    std::vector<std::pair<Rat, Rat>> to_vector() const {
        return {set_.begin(), set_.end()};
    }

  private:
    std::map<Rat, Rat> set_;
};

struct SumNode {
    Mat2 m;     // headless continuant matrix of prefix+blocks so far
    int depth;  // blocks used
    Rat lo, hi;
};

SumNode make_node(const Mat2& m, int depth) {
    auto [lo, hi] = endpoints_of(m);
    return {m, depth, lo, hi};
}

class SumCoverRun {
  public:
    SumCoverRun(const GaussCantorSpec& a, const GaussCantorSpec& b, int m, const RunConfig& cfg)
        : a_(a), b_(b), m_(m), budget_(cfg.max_sum_nodes) {}

    std::vector<std::pair<Rat, Rat>> run() {
        SumNode ra = make_node(Mat2{0, 1, 1, 0} * digit_product(a_.prefix.digits), 0);
        SumNode rb = make_node(Mat2{0, 1, 1, 0} * digit_product(b_.prefix.digits), 0);
        rec(ra, rb);
        return result_.to_vector();
    }

  private:
    void rec(const SumNode& na, const SumNode& nb) {
        if (--budget_ < 0) throw BudgetError("sum_cover: node budget exhausted");
        Rat lo = na.lo + nb.lo, hi = na.hi + nb.hi;
        if (result_.covers(lo, hi)) return;
        const bool a_done = na.depth == m_, b_done = nb.depth == m_;
        if (a_done && b_done) {
            result_.insert(std::move(lo), std::move(hi));
            return;
        }
        const bool split_a = !a_done && (b_done || na.hi - na.lo >= nb.hi - nb.lo);
        const GaussCantorSpec& spec = split_a ? a_ : b_;
        const SumNode& splitting = split_a ? na : nb;
        std::vector<SumNode> children;
        children.reserve(spec.blocks.size());
        for (const auto& w : spec.blocks.words())
            children.push_back(make_node(splitting.m * digit_product(w.digits), splitting.depth + 1));
        std::sort(children.begin(), children.end(),
                  [](const SumNode& x, const SumNode& y) { return x.lo < y.lo; });
        for (const auto& c : children)
            split_a ? rec(c, nb) : rec(na, c);
    }

    const GaussCantorSpec& a_;
    const GaussCantorSpec& b_;
    int m_;
    long budget_;
    IntervalUnion result_;
};

}  // namespace

std::vector<std::pair<Rat, Rat>> sum_cover(const GaussCantorSpec& a, const GaussCantorSpec& b,
                                           int m, const RunConfig& cfg) {
    if (m < 1) throw std::invalid_argument("sum_cover: depth must be >= 1");
    return SumCoverRun(a, b, m, cfg).run();
}

GapExponentReport gap_exponent_check(const Rat& s0, int n_max) {
    if (s0 <= 0 || s0 >= 1) throw std::invalid_argument("gap_exponent_check: s0 must be in (0,1)");
    if (n_max < 0) throw std::invalid_argument("gap_exponent_check: n_max must be >= 0");
    GapExponentReport rep{true, 0.0, Word{}, 0};
    bool have_worst = false;

    auto cyl_len = [](const Mat2& m) {
        return make_rat(1, m.c * (m.c + m.d));  // 1/(q_n (q_n + q_{n-1}))
    };
    const std::vector<int> tail1{1, 1, 2}, tail2{2, 2, 1};

    // DFS over words; matrices extended incrementally
    struct Frame {
        Mat2 m;
        Word w;
    };
    std::vector<Frame> stack{{Mat2{0, 1, 1, 0}, Word{}}};
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        ++rep.words_checked;

        Rat len = cyl_len(f.m);
        Rat len1 = cyl_len(f.m * digit_product(tail1));
        Rat len2 = cyl_len(f.m * digit_product(tail2));
        double margin = 0;  // relative: (rhs - lhs)/rhs
        int verdict = 0;
        for (mpfr_prec_t prec = 192; prec <= 4096 && verdict == 0; prec *= 2) {
            Interval s = Interval::of_rat(s0, prec);
            Interval lhs = exp(s * log(Interval::of_rat(len1, prec))) +
                           exp(s * log(Interval::of_rat(len2, prec)));
            Interval rhs = exp(s * log(Interval::of_rat(len, prec)));
            Interval diff = rhs - lhs;
            verdict = diff.sign();
            margin = diff.mid_double() / rhs.mid_double();
        }
        if (verdict == 0)
            throw std::runtime_error("gap_exponent_check: could not resolve the margin sign");
        if (!have_worst || margin < rep.worst_margin) {
            rep.worst_margin = margin;
            rep.worst_word = f.w;
            have_worst = true;
        }
        if (verdict < 0) {
            rep.pass = false;
            rep.worst_margin = margin;
            rep.worst_word = f.w;
            return rep;
        }
        if (static_cast<int>(f.w.digits.size()) < n_max) {
            for (int d : {2, 1}) {
                Frame child{f.m * digit_matrix(d), f.w};
                child.w.digits.push_back(d);
                stack.push_back(std::move(child));
            }
        }
    }
    return rep;
}

void write_cover_csv(std::ostream& os, const std::vector<CylinderInterval>& cov) {
    os << "level,word,lo_num,lo_den,hi_num,hi_den\n";
    for (const auto& ci : cov)
        os << ci.level << "," << format_word_compact(ci.word) << "," << ci.lo.get_num().get_str()
           << "," << ci.lo.get_den().get_str() << "," << ci.hi.get_num().get_str() << ","
           << ci.hi.get_den().get_str() << "\n";
}

}  // namespace spectra
