#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

namespace spectra {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(Int num, Int den) {
    Rat q;
    q.get_num() = std::move(num);
    q.get_den() = std::move(den);
    q.canonicalize();
    return q;
}

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

// n = square * free with "free" squarefree up to prime factors beyond the
// trial bound (those stay in the free part). Radicand normalization only has
// to be consistent: surds arising from one periodic sequence share their raw
// discriminant, and the named constants factor completely below the default.
std::pair<Int, Int> squarefree_split(Int n, unsigned long trial_bound = 1000);

bool is_prime(unsigned long n);

// Decimal digits of a rational, truncated toward zero: "3.1415".
std::string rat_to_decimal(const Rat& q, int digits);

}  // namespace spectra
