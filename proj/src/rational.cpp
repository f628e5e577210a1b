#include "spectra/rational.hpp"

#include <stdexcept>

namespace spectra {

std::pair<Int, Int> squarefree_split(Int n, unsigned long trial_bound) {
    if (n <= 0) throw std::invalid_argument("squarefree_split: n must be positive");
    Int square = 1, free = 1;
    for (unsigned long p = 2; p <= trial_bound && n > 1; p += (p == 2 ? 1 : 2)) {
        Int pp(p);
        if (pp * pp > n) break;
        if (n % pp != 0) continue;
        int e = 0;
        while (n % pp == 0) {
            n /= pp;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) square *= pp;
        if (e % 2) free *= pp;
    }
    if (n > 1) {
        if (is_perfect_square(n)) {
            square *= isqrt(n);
        } else {
            free *= n;
        }
    }
    return {square, free};
}

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::string rat_to_decimal(const Rat& q, int digits) {
    if (digits < 0) throw std::invalid_argument("rat_to_decimal: digits < 0");
    const bool neg = q < 0;
    Rat a = neg ? Rat(-q) : q;
    Int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Int scaled = floor_div(a.get_num() * scale, a.get_den());
    Int ip = scaled / scale, fp = scaled % scale;
    std::string out = (neg ? "-" : "") + ip.get_str();
    if (digits > 0) {
        std::string f = fp.get_str();
        out += "." + std::string(digits - f.size(), '0') + f;
    }
    return out;
}

}  // namespace spectra
