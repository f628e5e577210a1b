#include "spectra/spectra_approx.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <ostream>
#include <stdexcept>
#include <mutex>
#include <thread>

namespace spectra {

NamedConstants constants() {
    NamedConstants c;
    c.freiman = QuadraticSurd::make(Int("2221564096"), 283748, 462, Int("491993569"));
    c.sqrt12 = QuadraticSurd::sqrt_of(12);
    c.sqrt13 = QuadraticSurd::sqrt_of(13);
    c.perron_third = QuadraticSurd::make(65, 9, 3, 22);
    c.zagier_c = make_rat(Int("180717104711507"), Int("1000000000000000"));
    return c;
}

namespace {

// [0; tail] over all tails with digits <= A: extremes [0;(A,1)~], [0;(1,A)~]
Interval free_fraction_bounds(int alphabet, mpfr_prec_t prec) {
    if (alphabet < 1) throw std::invalid_argument("alphabet must be >= 1");
    Word zero(0, {});
    if (alphabet == 1) return eval_periodic(zero, Word({1})).enclosure(prec);
    QuadraticSurd lo = eval_periodic(zero, Word({alphabet, 1}));
    QuadraticSurd hi = eval_periodic(zero, Word({1, alphabet}));
    return Interval::hull(lo.enclosure(prec), hi.enclosure(prec));
}

Interval recip_shift(int digit, const Interval& x, mpfr_prec_t prec) {
    return Interval::of_long(1, prec) / (x.shifted_long(digit));
}

// x - y > margin, certified (difference rounded down)
bool exceeds_by(const Real& x, const Real& y, const Real& margin_up) {
    Real diff(std::max(x.prec(), y.prec()));
    mpfr_sub(diff.get(), x.get(), y.get(), MPFR_RNDD);
    return cmp(diff, margin_up) > 0;
}

// Window digits around the origin with chain evaluation of every in-window
// height. Positions are filled outward: 0, +1, -1, +2, -2, ...
class WindowEval {
  public:
    WindowEval(int n, int alphabet, mpfr_prec_t prec)
        : n_(n), prec_(prec), free_(free_fraction_bounds(alphabet, prec)) {}

    static long position(int depth) {  // depth 0 -> 0, 1 -> +1, 2 -> -1, ...
        return depth % 2 ? (depth + 1) / 2 : -(depth / 2);
    }

    // digits for positions -kl..kr; kl = filled left count, kr = right
    struct Heights {
        Interval center;        // f_0 over all extensions
        Real max_side_lo;       // max over filled j != 0 of lower bound of f_j
        bool has_side = false;
    };

    Heights evaluate(const std::vector<int>& left, int center, const std::vector<int>& right) const {
        const long kl = static_cast<long>(left.size());
        const long kr = static_cast<long>(right.size());
        auto digit = [&](long p) { return p == 0 ? center
                                        : p > 0 ? right[static_cast<size_t>(p - 1)]
                                                : left[static_cast<size_t>(-p - 1)]; };
        // L[p] = [0; w_{p-1}, ..., w_{-kl}, free],  R[p] = [0; w_{p+1}, ..., w_{kr}, free]
        std::vector<Interval> L(static_cast<size_t>(kl + kr + 1));
        std::vector<Interval> R(static_cast<size_t>(kl + kr + 1));
        auto ix = [&](long p) { return static_cast<size_t>(p + kl); };
        L[ix(-kl)] = free_;
        for (long p = -kl + 1; p <= kr; ++p) L[ix(p)] = recip_shift(digit(p - 1), L[ix(p - 1)], prec_);
        R[ix(kr)] = free_;
        for (long p = kr - 1; p >= -kl; --p) R[ix(p)] = recip_shift(digit(p + 1), R[ix(p + 1)], prec_);

        Heights h;
        h.center = (L[ix(0)] + R[ix(0)]).shifted_long(center);
        for (long p = -kl; p <= kr; ++p) {
            if (p == 0) continue;
            Interval f = (L[ix(p)] + R[ix(p)]).shifted_long(digit(p));
            if (!h.has_side || cmp(f.lo(), h.max_side_lo) > 0) {
                h.max_side_lo = f.lo();
                h.has_side = true;
            }
        }
        return h;
    }

    int window_length() const { return 2 * n_ + 1; }

  private:
    int n_;
    mpfr_prec_t prec_;
    Interval free_;
};

struct WindowLeaf {
    Rat lo, hi;
};

// Double-precision screening twin of WindowEval. Chains carry a relative
// error well below kCushion per evaluation (values stay in [0, alphabet+2],
// depth stays below 64), so screening verdicts padded by kCushion are sound;
// they only discard subtrees a certified evaluation would also discard.
class WindowEvalD {
  public:
    static constexpr double kCushion = 1e-9;

    WindowEvalD(int alphabet, mpfr_prec_t prec) {
        Interval f = free_fraction_bounds(alphabet, prec);
        free_lo_ = f.lo().to_double() - 1e-15;
        free_hi_ = f.hi().to_double() + 1e-15;
    }

    struct Screen {
        double center_lo, center_hi;  // f_0 bounds (to cushion accuracy)
        double max_side_lo;
        bool has_side;
    };

    Screen evaluate(const std::vector<int>& left, int center, const std::vector<int>& right) const {
        const long kl = static_cast<long>(left.size());
        const long kr = static_cast<long>(right.size());
        auto digit = [&](long p) { return p == 0 ? center
                                        : p > 0 ? right[static_cast<size_t>(p - 1)]
                                                : left[static_cast<size_t>(-p - 1)]; };
        const size_t len = static_cast<size_t>(kl + kr + 1);
        std::vector<double> Llo(len), Lhi(len), Rlo(len), Rhi(len);
        auto ix = [&](long p) { return static_cast<size_t>(p + kl); };
        Llo[ix(-kl)] = free_lo_;
        Lhi[ix(-kl)] = free_hi_;
        for (long p = -kl + 1; p <= kr; ++p) {
            int d = digit(p - 1);
            Llo[ix(p)] = 1.0 / (d + Lhi[ix(p - 1)]);
            Lhi[ix(p)] = 1.0 / (d + Llo[ix(p - 1)]);
        }
        Rlo[ix(kr)] = free_lo_;
        Rhi[ix(kr)] = free_hi_;
        for (long p = kr - 1; p >= -kl; --p) {
            int d = digit(p + 1);
            Rlo[ix(p)] = 1.0 / (d + Rhi[ix(p + 1)]);
            Rhi[ix(p)] = 1.0 / (d + Rlo[ix(p + 1)]);
        }
        Screen s{center + Llo[ix(0)] + Rlo[ix(0)], center + Lhi[ix(0)] + Rhi[ix(0)], 0.0, false};
        for (long p = -kl; p <= kr; ++p) {
            if (p == 0) continue;
            double flo = digit(p) + Llo[ix(p)] + Rlo[ix(p)];
            if (!s.has_side || flo > s.max_side_lo) {
                s.max_side_lo = flo;
                s.has_side = true;
            }
        }
        return s;
    }

  private:
    double free_lo_, free_hi_;
};

// Branch-and-bound enumeration of windows whose centered-height interval can
// meet [a,b] and whose center can host the height record: a window dies when
// some in-window shift certifiably exceeds the center by more than the
// fattening slack (then no extension attains, or approaches, its supremum at
// the center). Interior nodes are screened in double with a sound cushion;
// surviving leaves are re-evaluated and re-checked in certified arithmetic,
// which reproduces exactly the cover a fully certified search would emit.
class WindowSearch {
  public:
    WindowSearch(const Rat& a, const Rat& b, int n, int alphabet, const Rat& slack,
                 mpfr_prec_t prec, long budget)
        : eval_(n, alphabet, prec),
          screen_(alphabet, prec),
          n_(n),
          alphabet_(alphabet),
          budget_(budget) {
        b_up_ = Real::of_rat(b, prec, MPFR_RNDU);
        a_minus_slack_down_ = Real::of_rat(a - slack, prec, MPFR_RNDD);
        slack_up_ = Real::of_rat(slack, prec, MPFR_RNDU);
        b_d_ = b.get_d();
        a_minus_slack_d_ = Rat(a - slack).get_d();
        slack_d_ = slack.get_d();
    }

    // prefix: first two digits (center, +1) when window length allows
    void run(const std::vector<int>& prefix, std::vector<WindowLeaf>& out) {
        left_.clear();
        right_.clear();
        center_ = 0;
        descend(0, prefix, out);
    }

  private:
    void descend(int depth, const std::vector<int>& prefix, std::vector<WindowLeaf>& out) {
        if (depth == eval_.window_length()) {
            auto h = eval_.evaluate(left_, center_, right_);
            bool dead = cmp(h.center.lo(), b_up_) > 0 ||
                        cmp(h.center.hi(), a_minus_slack_down_) < 0 ||
                        (h.has_side && exceeds_by(h.max_side_lo, h.center.hi(), slack_up_));
            if (!dead) out.push_back({h.center.lo_rat(), h.center.hi_rat()});
            return;
        }
        const bool fixed = depth < static_cast<int>(prefix.size());
        const int first = fixed ? prefix[static_cast<size_t>(depth)] : 1;
        const int last = fixed ? prefix[static_cast<size_t>(depth)] : alphabet_;
        const double pad = WindowEvalD::kCushion;
        for (int d = first; d <= last; ++d) {
            place(depth, d);
            if (++nodes_ > budget_) throw BudgetError("approximate_spectra: window budget exhausted");
            auto s = screen_.evaluate(left_, center_, right_);
            bool dead = s.center_lo - pad > b_d_ || s.center_hi + pad < a_minus_slack_d_ ||
                        (s.has_side && s.max_side_lo - s.center_hi - 2 * pad > slack_d_);
            if (!dead) descend(depth + 1, prefix, out);
            unplace(depth);
        }
    }

    void place(int depth, int digit) {
        long p = WindowEval::position(depth);
        if (p == 0)
            center_ = digit;
        else if (p > 0)
            right_.push_back(digit);
        else
            left_.push_back(digit);
    }
    void unplace(int depth) {
        long p = WindowEval::position(depth);
        if (p > 0)
            right_.pop_back();
        else if (p < 0)
            left_.pop_back();
    }

    WindowEval eval_;
    WindowEvalD screen_;
    int n_, alphabet_;
    long budget_;
    long nodes_ = 0;
    Real b_up_, a_minus_slack_down_, slack_up_;
    double b_d_, a_minus_slack_d_, slack_d_;
    std::vector<int> left_, right_;
    int center_ = 0;
};

class IntervalUnion {
  public:
    void insert(Rat lo, Rat hi) {
        auto it = set_.upper_bound(lo);
        if (it != set_.begin()) {
            auto prev = std::prev(it);
            if (prev->second >= lo) {
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
    bool contains(const Rat& x) const {
        auto it = set_.upper_bound(x);
        if (it == set_.begin()) return false;
        --it;
        return it->second >= x;
    }
    std::vector<std::pair<Rat, Rat>> to_vector() const { return {set_.begin(), set_.end()}; }

  private:
    std::map<Rat, Rat> set_;
};

bool is_necklace_representative(const std::vector<int>& w) {
    const size_t n = w.size();
    for (size_t r = 1; r < n; ++r)
        for (size_t i = 0; i < n; ++i) {
            int a = w[(r + i) % n], b = w[i];
            if (a < b) return false;  // a smaller rotation exists
            if (a > b) break;
            if (i + 1 == n) return false;  // proper rotation equal: w is a power
        }
    return true;
}

std::vector<InnerPoint> inner_points(const Rat& a, const Rat& b, int alphabet, int period_cap) {
    std::vector<InnerPoint> pts;
    SurdSum alo{a}, bhi{b};
    for (int n = 1; n <= period_cap; ++n) {
        std::vector<int> w(static_cast<size_t>(n), 1);
        while (true) {
            if (is_necklace_representative(w)) {
                Word word(w);
                auto rec = markov_value(EventuallyPeriodicSeq::periodic(word));
                if (!(rec.value < alo) && !(bhi < rec.value))
                    pts.push_back({std::move(rec.value), std::move(word)});
            }
            size_t pos = w.size();
            while (pos > 0 && w[pos - 1] == alphabet) w[--pos] = 1;
            if (pos == 0) break;
            ++w[pos - 1];
        }
    }
    std::sort(pts.begin(), pts.end(), [](const InnerPoint& x, const InnerPoint& y) {
        if (x.value < y.value) return true;
        if (y.value < x.value) return false;
        return x.period.digits.size() < y.period.digits.size();
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const InnerPoint& x, const InnerPoint& y) { return x.value == y.value; }),
              pts.end());
    return pts;
}

}  // namespace

Interval cylinder_markov_bounds(const Word& w, int alphabet, mpfr_prec_t prec) {
    if (w.head || w.digits.empty() || w.digits.size() % 2 == 0)
        throw std::invalid_argument("cylinder_markov_bounds: need a headless window of odd length");
    validate_digits(w);
    for (int d : w.digits)
        if (d > alphabet) throw std::invalid_argument("cylinder_markov_bounds: digit exceeds alphabet");
    const int n = static_cast<int>(w.digits.size() / 2);
    WindowEval eval(n, alphabet, prec);
    std::vector<int> left, right;
    for (int i = 1; i <= n; ++i) {
        right.push_back(w.digits[static_cast<size_t>(n + i)]);
        left.push_back(w.digits[static_cast<size_t>(n - i)]);
    }
    return eval.evaluate(left, w.digits[static_cast<size_t>(n)], right).center;
}

SpectrumApproximation approximate_spectra(const Rat& a, const Rat& b, long Q, int alphabet,
                                          const RunConfig& cfg) {
    cfg.validate();
    if (Q < 1) throw std::invalid_argument("approximate_spectra: Q must be >= 1");
    if (alphabet < 1) throw std::invalid_argument("approximate_spectra: alphabet must be >= 1");
    if (a >= b) throw std::invalid_argument("approximate_spectra: empty range");
    // For b <= alphabet+1 the outer cover is complete for M in [a,b]: any
    // digit d forces a height record above d, so in-range sequences use
    // digits <= alphabet. Larger b still yields the certified cover of the
    // digit-restricted subshift (Perron's sup <= sqrt(12) world for A = 2).

    // resolution: window radius N with 2^-(N-3) < 1/(2Q)
    int n = 4;
    while (Rat(2) * Q * make_rat(1, Int(1) << (n - 3)) >= 1) ++n;
    const Rat slack = make_rat(1, Int(1) << (n - 2));
    const mpfr_prec_t prec = 128;

    SpectrumApproximation approx;
    approx.Q = Q;
    approx.alphabet = alphabet;
    approx.window_n = n;
    approx.slack = slack;
    approx.range_lo = a;
    approx.range_hi = b;

    // branch over the first one or two digits; merge in fixed task order
    std::vector<std::vector<int>> prefixes;
    for (int c = 1; c <= alphabet; ++c)
        for (int r = 1; r <= alphabet; ++r) prefixes.push_back({c, r});

    std::vector<std::vector<WindowLeaf>> results(prefixes.size());
    const long per_task_budget = cfg.max_window_nodes / static_cast<long>(prefixes.size()) + 1;
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    auto worker = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= prefixes.size()) return;
            try {
                WindowSearch search(a, b, n, alphabet, slack, prec, per_task_budget);
                search.run(prefixes[i], results[i]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    if (cfg.threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < cfg.threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (error) std::rethrow_exception(error);

    IntervalUnion uni;
    for (const auto& leaves : results)
        for (const auto& leaf : leaves) uni.insert(leaf.lo, leaf.hi + slack);
    for (auto& [lo, hi] : uni.to_vector())
        if (hi >= a && lo <= b) approx.outer.emplace_back(lo, hi);

    approx.inner = inner_points(a, b, alphabet, std::min(2 * n + 2, cfg.inner_period_cap));

    // soundness cross-check: inner points are Markov values in range, so the
    // certified outer cover must contain them
    IntervalUnion outer_check;
    for (const auto& [lo, hi] : approx.outer) outer_check.insert(lo, hi);
    for (const auto& pt : approx.inner) {
        Interval e = pt.value.enclosure(256);
        if (!outer_check.contains(e.lo_rat()) && !outer_check.contains(e.hi_rat()))
            throw std::logic_error("approximate_spectra: inner point escaped the outer cover");
    }
    return approx;
}

GapReport detect_gaps(const SpectrumApproximation& approx, const Rat& lo, const Rat& hi) {
    if (lo >= hi) throw std::invalid_argument("detect_gaps: empty scan range");
    GapReport rep;
    Rat cursor = lo;
    for (const auto& [ilo, ihi] : approx.outer) {
        if (ihi < cursor) continue;
        if (ilo > hi) break;
        if (ilo > cursor) rep.gaps.emplace_back(cursor, std::min(ilo, hi));
        cursor = std::max(cursor, ihi);
        if (cursor >= hi) break;
    }
    if (cursor < hi) rep.gaps.emplace_back(cursor, hi);
    return rep;
}

namespace {

struct HallNode {
    Mat2 ma, mb;  // headless continuant matrices of the two C(4) prefixes
    Word wa, wb;
};

std::pair<Rat, Rat> node_interval(const Mat2& m) {
    Rat e1 = make_rat(m.a, m.c), e2 = make_rat(m.a + m.b, m.c + m.d);
    if (e1 > e2) std::swap(e1, e2);
    return {e1, e2};
}

}  // namespace

HallRealization hall_realize(const SurdSum& target, const Rat& eps, const RunConfig& cfg) {
    if (eps <= 0) throw std::invalid_argument("hall_realize: eps must be positive");
    SurdSum lo_b = SurdSum(QuadraticSurd::sqrt_of(2)) - SurdSum(1);           // sqrt(2)-1
    SurdSum hi_b = SurdSum(QuadraticSurd::sqrt_of(2)).scaled(4) - SurdSum(4);  // 4(sqrt(2)-1)

    // smallest admissible c0 >= 5 with target - c0 in [sqrt(2)-1, 4(sqrt(2)-1)]
    int c0 = 0;
    SurdSum sigma;
    for (int c = 5; c <= 9; ++c) {
        SurdSum rem = target - SurdSum(c);
        if (!(rem < lo_b) && !(hi_b < rem)) {
            c0 = c;
            sigma = std::move(rem);
            break;
        }
    }
    if (c0 == 0)
        throw std::invalid_argument("hall_realize: no admissible c0 (target outside the Hall range)");

    // nested refinement of C(4) cylinder pairs keeping sigma inside the sum
    const Mat2 root{0, 1, 1, 0};
    struct Frame {
        HallNode node;
        std::vector<HallNode> children;  // margin-sorted, tried from the back
    };
    auto make_children = [&](const HallNode& nd) {
        std::vector<HallNode> kids;
        double sv = sigma.enclosure(96).mid_double();
        std::vector<std::pair<double, HallNode>> scored;
        for (int da = 1; da <= 4; ++da)
            for (int db = 1; db <= 4; ++db) {
                HallNode k = nd;
                k.ma = nd.ma * digit_matrix(da);
                k.mb = nd.mb * digit_matrix(db);
                k.wa.digits.push_back(da);
                k.wb.digits.push_back(db);
                auto [alo, ahi] = node_interval(k.ma);
                auto [blo, bhi] = node_interval(k.mb);
                Rat slo = alo + blo, shi = ahi + bhi;
                if ((sigma < SurdSum(slo)) || (SurdSum(shi) < sigma)) continue;  // exact containment
                double width = Rat(shi - slo).get_d();
                double margin = std::min(sv - slo.get_d(), shi.get_d() - sv) / width;
                scored.emplace_back(margin, std::move(k));
            }
        std::sort(scored.begin(), scored.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        for (auto& [m, k] : scored) kids.push_back(std::move(k));
        return kids;  // best margin last (tried first)
    };

    long budget = cfg.max_sum_nodes;
    std::vector<Frame> stack;
    stack.push_back({HallNode{root, root, Word{}, Word{}}, {}});
    stack.back().children = make_children(stack.back().node);
    while (!stack.empty()) {
        if (--budget < 0) throw BudgetError("hall_realize: refinement budget exhausted");
        auto [alo, ahi] = node_interval(stack.back().node.ma);
        auto [blo, bhi] = node_interval(stack.back().node.mb);
        if (!stack.back().node.wa.digits.empty() && (ahi - alo) + (bhi - blo) <= eps) {
            const HallNode& nd = stack.back().node;
            Word period = reversed(nd.wb);
            period.digits.push_back(c0);
            period.digits.insert(period.digits.end(), nd.wa.digits.begin(), nd.wa.digits.end());
            HallRealization r{c0, nd.wa, nd.wb, EventuallyPeriodicSeq::periodic(period)};
            return r;
        }
        if (stack.back().children.empty()) {  // dead end: sigma fell in a gap
            stack.pop_back();
            continue;
        }
        HallNode next = std::move(stack.back().children.back());
        stack.back().children.pop_back();
        stack.push_back({std::move(next), {}});
        stack.back().children = make_children(stack.back().node);
    }
    throw std::logic_error("hall_realize: search exhausted (sigma not in C(4)+C(4)?)");
}

HallRealization hall_realize(const Rat& target, const Rat& eps, const RunConfig& cfg) {
    return hall_realize(SurdSum(target), eps, cfg);
}

void write_approx_csv(std::ostream& os, const SpectrumApproximation& approx) {
    os << "kind,lo,hi,value,word\n";
    for (const auto& [lo, hi] : approx.outer)
        os << "outer," << rat_to_decimal(lo, 30) << "," << rat_to_decimal(hi, 30) << ",,\n";
    for (const auto& pt : approx.inner)
        os << "inner,,," << pt.value.decimal(30) << "," << format_word_compact(pt.period) << "\n";
}

void write_gaps_csv(std::ostream& os, const GapReport& gaps) {
    os << "lo,hi\n";
    for (const auto& [lo, hi] : gaps.gaps)
        os << rat_to_decimal(lo, 30) << "," << rat_to_decimal(hi, 30) << "\n";
}

void write_approx_svg(std::ostream& os, const SpectrumApproximation& approx) {
    const double W = 1000, H = 180, x0 = 60, x1 = W - 60;
    const double lo = approx.range_lo.get_d(), hi = approx.range_hi.get_d();
    auto X = [&](double v) { return x0 + (v - lo) / (hi - lo) * (x1 - x0); };
    char buf[128];
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
       << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    os << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
    os << "<line x1=\"" << x0 << "\" y1=\"140\" x2=\"" << x1
       << "\" y2=\"140\" stroke=\"black\" stroke-width=\"1\"/>\n";
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%.1f\" y=\"158\" font-size=\"12\" text-anchor=\"middle\">%.6f</text>\n",
                  x0, lo);
    os << buf;
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%.1f\" y=\"158\" font-size=\"12\" text-anchor=\"middle\">%.6f</text>\n",
                  x1, hi);
    os << buf;
    os << "<text x=\"" << x0 << "\" y=\"30\" font-size=\"12\">outer cover (Q=" << approx.Q
       << ", alphabet " << approx.alphabet << ")</text>\n";
    for (const auto& [ilo, ihi] : approx.outer) {
        double xa = X(std::max(ilo.get_d(), lo)), xb = X(std::min(ihi.get_d(), hi));
        std::snprintf(buf, sizeof buf,
                      "<rect x=\"%.2f\" y=\"40\" width=\"%.2f\" height=\"28\" fill=\"#4878a8\"/>\n",
                      xa, std::max(xb - xa, 0.8));
        os << buf;
    }
    os << "<text x=\"" << x0 << "\" y=\"92\" font-size=\"12\">inner points</text>\n";
    for (const auto& pt : approx.inner) {
        double x = X(pt.value.enclosure(96).mid_double());
        if (x < x0 - 1 || x > x1 + 1) continue;
        std::snprintf(
            buf, sizeof buf,
            "<line x1=\"%.2f\" y1=\"100\" x2=\"%.2f\" y2=\"124\" stroke=\"#a83838\" stroke-width=\"1\"/>\n",
            x, x);
        os << buf;
    }
    os << "</svg>\n";
}

}  // namespace spectra
