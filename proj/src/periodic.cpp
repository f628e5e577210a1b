#include "spectra/periodic.hpp"

#include <algorithm>
#include <stdexcept>

namespace spectra {

namespace {

// Moebius image (m.a x + m.b) / (m.c x + m.d)
QuadraticSurd moebius(const Mat2& m, const QuadraticSurd& x) {
    QuadraticSurd num = x * QuadraticSurd(Rat(m.a)) + QuadraticSurd(Rat(m.b));
    QuadraticSurd den = x * QuadraticSurd(Rat(m.c)) + QuadraticSurd(Rat(m.d));
    return num / den;
}

}  // namespace

QuadraticSurd eval_periodic(const Word& pre, const Word& period) {
    if (period.digits.empty()) throw std::invalid_argument("eval_periodic: empty period");
    if (period.head) throw std::invalid_argument("eval_periodic: period must be headless");
    validate_digits(pre);
    validate_digits(period);

    // T = [p1; p2, ..., pk, T]: Q T^2 + (Q' - P) T - P' = 0 with
    // [[P, P'], [Q, Q']] the digit-matrix product of the period.
    Mat2 m = digit_product(period.digits);
    if (m.c == 0) throw std::invalid_argument("eval_periodic: degenerate Moebius map");
    Int disc = (m.a - m.d) * (m.a - m.d) + 4 * m.b * m.c;
    QuadraticSurd tail =
        QuadraticSurd::make(m.a - m.d, 1, disc, 2 * m.c);  // the root > 1

    // exact back-substitution of the fixed point
    if (moebius(m, tail) != tail) throw std::logic_error("eval_periodic: fixed point check failed");

    QuadraticSurd value = moebius(word_matrix(pre), tail);
    return value;
}

EventuallyPeriodicSeq::EventuallyPeriodicSeq(Word left_period, Word left_pre, Word center,
                                             Word right_pre, Word right_period)
    : left_period_(std::move(left_period)),
      left_pre_(std::move(left_pre)),
      center_(std::move(center)),
      right_pre_(std::move(right_pre)),
      right_period_(std::move(right_period)) {
    for (const Word* w : {&left_period_, &left_pre_, &center_, &right_pre_, &right_period_}) {
        if (w->head) throw std::invalid_argument("sequence parts must be headless");
        validate_digits(*w);
    }
    if (left_period_.digits.empty() || right_period_.digits.empty())
        throw std::invalid_argument("sequence periods must be nonempty");
    if (center_.digits.empty()) throw std::invalid_argument("sequence center must be nonempty");
}

EventuallyPeriodicSeq EventuallyPeriodicSeq::periodic(const Word& w) {
    return EventuallyPeriodicSeq(w, Word{}, w, Word{}, w);
}

long EventuallyPeriodicSeq::periodic_start_right() const {
    return static_cast<long>(center_.digits.size() + right_pre_.digits.size());
}

long EventuallyPeriodicSeq::periodic_start_left() const {
    return -static_cast<long>(left_pre_.digits.size());
}

int EventuallyPeriodicSeq::digit(long i) const {
    const long lstart = periodic_start_left();
    const long rstart = periodic_start_right();
    if (i >= rstart) {
        const long n = static_cast<long>(right_period_.digits.size());
        return right_period_.digits[static_cast<size_t>((i - rstart) % n)];
    }
    if (i >= static_cast<long>(center_.digits.size()))
        return right_pre_.digits[static_cast<size_t>(i - center_.digits.size())];
    if (i >= 0) return center_.digits[static_cast<size_t>(i)];
    if (i >= lstart) return left_pre_.digits[static_cast<size_t>(i - lstart)];
    const long n = static_cast<long>(left_period_.digits.size());
    long k = (i - lstart) % n;  // negative or zero
    if (k < 0) k += n;
    return left_period_.digits[static_cast<size_t>(k)];
}

EventuallyPeriodicSeq EventuallyPeriodicSeq::shifted(long k) const {
    // Rebuild the five parts with the origin moved to index k: the
    // non-periodic span (extended to include the new origin) becomes
    // left_pre + center + right_pre again.
    const long lstart = periodic_start_left();
    const long rstart = periodic_start_right();
    long lo = std::min(lstart, k);
    long hi = std::max(rstart, k + 1);
    // align the periodic boundaries so the periods keep phase 0
    const long nl = static_cast<long>(left_period_.digits.size());
    const long nr = static_cast<long>(right_period_.digits.size());
    while ((lstart - lo) % nl != 0) --lo;
    while ((hi - rstart) % nr != 0) ++hi;

    Word lpre, c, rpre;
    for (long i = lo; i < k; ++i) lpre.digits.push_back(digit(i));
    c.digits.push_back(digit(k));
    for (long i = k + 1; i < hi; ++i) rpre.digits.push_back(digit(i));
    return EventuallyPeriodicSeq(left_period_, std::move(lpre), std::move(c), std::move(rpre),
                                 right_period_);
}

EventuallyPeriodicSeq EventuallyPeriodicSeq::parse(const std::string& s) {
    auto fail = [&] { throw std::invalid_argument("malformed sequence '" + s + "'"); };
    auto take_period = [&](std::string& str, bool front) {
        if (front) {
            if (str.rfind("((", 0) != 0) fail();
            size_t close = str.find("))");
            if (close == std::string::npos) fail();
            std::string inner = str.substr(2, close - 2);
            str = str.substr(close + 2);
            return inner;
        }
        size_t open = str.rfind("((");
        if (open == std::string::npos || str.size() < 2 || str.substr(str.size() - 2) != "))")
            fail();
        std::string inner = str.substr(open + 2, str.size() - open - 4);
        str = str.substr(0, open);
        return inner;
    };
    std::string rest = s;
    std::string lper = take_period(rest, true);
    std::string rper = take_period(rest, false);
    size_t b1 = rest.find('|');
    size_t b2 = rest.rfind('|');
    if (b1 == std::string::npos || b2 == b1) fail();
    auto part = [](const std::string& t) {
        Word w;
        if (!t.empty()) w = parse_word(t);
        return w;
    };
    return EventuallyPeriodicSeq(part(lper), part(rest.substr(0, b1)),
                                 part(rest.substr(b1 + 1, b2 - b1 - 1)), part(rest.substr(b2 + 1)),
                                 part(rper));
}

std::string EventuallyPeriodicSeq::to_string() const {
    return "((" + format_word(left_period_) + "))" + format_word(left_pre_) + "|" +
           format_word(center_) + "|" + format_word(right_pre_) + "((" + format_word(right_period_) +
           "))";
}

namespace {

Word rotate(const Word& w, long k) {
    const long n = static_cast<long>(w.digits.size());
    Word r;
    r.digits.reserve(w.digits.size());
    for (long i = 0; i < n; ++i) r.digits.push_back(w.digits[static_cast<size_t>((k + i) % n)]);
    return r;
}

// [s_k; s_{k+1}, ...] as an exact surd
QuadraticSurd right_tail_surd(const EventuallyPeriodicSeq& s, long k) {
    const long rstart = s.periodic_start_right();
    Word pre;
    pre.head = s.digit(k);
    long i = k + 1;
    for (; i < rstart; ++i) pre.digits.push_back(s.digit(i));
    const long nr = static_cast<long>(s.right_period().digits.size());
    long phase = i >= rstart ? (i - rstart) % nr : 0;
    return eval_periodic(pre, rotate(s.right_period(), phase));
}

// [0; s_{k-1}, s_{k-2}, ...] as an exact surd
QuadraticSurd left_tail_surd(const EventuallyPeriodicSeq& s, long k) {
    const long lstart = s.periodic_start_left();
    Word pre;
    pre.head = 0;
    long i = k - 1;
    for (; i >= lstart; --i) pre.digits.push_back(s.digit(i));
    // remaining digits, read leftward from index i, follow reversed(L)
    const long nl = static_cast<long>(s.left_period().digits.size());
    Word revL = reversed(s.left_period());
    long phase = ((lstart - 1 - i) % nl + nl) % nl;
    return eval_periodic(pre, rotate(revL, phase));
}

}  // namespace

SurdSum perron_height_exact(const EventuallyPeriodicSeq& s, long k) {
    return SurdSum(right_tail_surd(s, k)) + SurdSum(left_tail_surd(s, k));
}

Interval perron_height(const EventuallyPeriodicSeq& s, long k, mpfr_prec_t prec) {
    return perron_height_exact(s, k).enclosure(prec);
}

namespace {

HeightRecord max_height_over(const EventuallyPeriodicSeq& s, long lo, long hi) {
    HeightRecord best;
    bool first = true;
    for (long k = lo; k <= hi; ++k) {
        SurdSum v = perron_height_exact(s, k);
        if (first || (best.value < v)) {
            best.value = std::move(v);
            best.shift = k;
            first = false;
        }
    }
    return best;
}

}  // namespace

HeightRecord markov_value(const EventuallyPeriodicSeq& s) {
    const long nl = static_cast<long>(s.left_period().digits.size());
    const long nr = static_cast<long>(s.right_period().digits.size());
    // purely periodic: every shift repeats with the period, one period suffices
    if (s.left_pre().digits.empty() && s.right_pre().digits.empty() &&
        s.left_period() == s.center() && s.right_period() == s.center())
        return max_height_over(s, 0, nr - 1);
    const long lo = s.periodic_start_left() - 2 * nl;
    const long hi = s.periodic_start_right() + 2 * nr - 1;
    HeightRecord best = max_height_over(s, lo, hi);

    // limits along the two periodic tails
    for (bool right : {false, true}) {
        const Word& period = right ? s.right_period() : s.left_period();
        EventuallyPeriodicSeq limit = EventuallyPeriodicSeq::periodic(period);
        long n = static_cast<long>(period.digits.size());
        for (long k = 0; k < n; ++k) {
            SurdSum v = perron_height_exact(limit, k);
            if (best.value < v) {
                best.value = std::move(v);
                best.shift = k;
                best.at_infinity = true;
            }
        }
    }
    return best;
}

HeightRecord lagrange_value(const EventuallyPeriodicSeq& s) {
    EventuallyPeriodicSeq limit = EventuallyPeriodicSeq::periodic(s.right_period());
    long n = static_cast<long>(s.right_period().digits.size());
    HeightRecord best = max_height_over(limit, 0, n - 1);
    best.at_infinity = true;
    return best;
}

}  // namespace spectra
