#pragma once

#include <vector>

#include "spectra/rational.hpp"
#include "spectra/word.hpp"

namespace spectra {

struct Convergent {
    Int p;
    Int q;
    bool operator==(const Convergent&) const = default;
};

// 2x2 integer matrix [[a,b],[c,d]]; continued-fraction words act as products
// of digit matrices [[d,1],[1,0]].
struct Mat2 {
    Int a{1}, b{0}, c{0}, d{1};

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    Int det() const { return a * d - b * c; }
};

inline Mat2 digit_matrix(long d) { return {Int(d), 1, 1, 0}; }

// Product of digit matrices over the digit part only (no head):
// [[p_n, p_{n-1}], [q_n, q_{n-1}]] for the word read as [d1; d2, ..., dn].
Mat2 digit_product(const std::vector<int>& digits);

// Continuant matrix of the full word [a0; a1, ..., an] (head defaults to 0).
Mat2 word_matrix(const Word& w);

// Convergents p0/q0, ..., pn/qn of [a0; a1, ..., an]; headless words are
// read as [0; digits]. Throws on the empty word.
std::vector<Convergent> convergents(const Word& w);

// Euclidean expansion; canonical (last digit >= 2), integers give an empty
// digit part.
Word expand_rational(const Int& num, const Int& den);

Rat eval_finite(const Word& w);

}  // namespace spectra
