#include "spectra/continued_fraction.hpp"

#include <stdexcept>

namespace spectra {

Mat2 digit_product(const std::vector<int>& digits) {
    Mat2 m;
    for (int d : digits) {
        if (d < 1) throw std::invalid_argument("digit must be >= 1");
        m = m * digit_matrix(d);
    }
    return m;
}

Mat2 word_matrix(const Word& w) {
    return digit_matrix(w.head.value_or(0)) * digit_product(w.digits);
}

std::vector<Convergent> convergents(const Word& w) {
    if (w.empty()) throw std::invalid_argument("convergents: empty word has no expansion");
    validate_digits(w);
    std::vector<Convergent> out;
    out.reserve(w.digits.size() + 1);
    Int p_prev = 1, q_prev = 0;               // p_{-1}, q_{-1}
    Int p = w.head.value_or(0), q = 1;        // p_0, q_0
    out.push_back({p, q});
    for (int a : w.digits) {
        Int pn = a * p + p_prev, qn = a * q + q_prev;
        p_prev = p;
        q_prev = q;
        p = pn;
        q = qn;
        out.push_back({p, q});
    }
    return out;
}

Word expand_rational(const Int& num, const Int& den) {
    if (den < 1) throw std::invalid_argument("expand_rational: denominator must be positive");
    Word w;
    Int a = floor_div(num, den);
    w.head = [&] {
        if (!a.fits_slong_p()) throw std::invalid_argument("expand_rational: head out of range");
        return a.get_si();
    }();
    Int r = num - a * den;  // 0 <= r < den
    Int x = den, y = r;     // invariant: remaining value is y/x reciprocal-style Euclid
    while (y != 0) {
        Int q = floor_div(x, y);
        if (!q.fits_sint_p()) throw std::invalid_argument("expand_rational: digit out of range");
        w.digits.push_back(static_cast<int>(q.get_si()));
        Int t = x - q * y;
        x = y;
        y = t;
    }
    return w;
}

Rat eval_finite(const Word& w) {
    if (w.empty()) throw std::invalid_argument("eval_finite: empty word");
    auto cs = convergents(w);
    return make_rat(cs.back().p, cs.back().q);
}

}  // namespace spectra
