#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "spectra/quadratic_surd.hpp"
#include "spectra/rational.hpp"

namespace spectra {

// Ordered solution x <= y <= z of x^2 + y^2 + z^2 = 3xyz, checked on
// construction.
struct MarkovTriple {
    Int x, y, z;

    MarkovTriple(Int x_, Int y_, Int z_);
    std::array<Int, 3> tuple() const { return {x, y, z}; }
    bool operator==(const MarkovTriple& o) const { return x == o.x && y == o.y && z == o.z; }
    auto operator<=>(const MarkovTriple& o) const {
        if (auto c = cmp(z, o.z); c != 0) return c < 0 ? std::strong_ordering::less
                                                       : std::strong_ordering::greater;
        if (auto c = cmp(y, o.y); c != 0) return c < 0 ? std::strong_ordering::less
                                                       : std::strong_ordering::greater;
        auto c = cmp(x, o.x);
        return c < 0    ? std::strong_ordering::less
               : c == 0 ? std::strong_ordering::equal
                        : std::strong_ordering::greater;
    }
};

bool is_markov_solution(const Int& x, const Int& y, const Int& z);  // unordered

// Vieta involution on the chosen coordinate (1-based); input must solve the
// equation.
std::array<Int, 3> vieta(const std::array<Int, 3>& t, int coord);

struct DescentMove {
    enum class Kind { Vieta, Sort } kind;
    int coord = 0;  // for Vieta
};

struct DescentPath {
    std::vector<DescentMove> moves;
    std::vector<MarkovTriple> states;  // source first, (1,1,1) last
};

// Vieta descent to the fundamental solution; every Vieta step strictly
// decreases the maximal coordinate (verified).
DescentPath descend(const MarkovTriple& t);

// All ordered triples with z <= bound, breadth-first over the Markov tree
// rooted at (1,1,1); children of (x,y,z) are sort(y,z,3yz-x) and
// sort(x,z,3xz-y).
std::vector<MarkovTriple> enumerate_triples(const Int& bound);

// Distinct Markov numbers (largest coordinates), increasing.
std::vector<Int> markov_numbers(const Int& bound);

// sqrt(9 - 4/z^2) for the first n Markov numbers z, increasing, all < 3.
std::vector<QuadraticSurd> spectrum_points(int n);

struct ZagierCount {
    unsigned long count;   // M(x): Markov numbers <= x
    double reference;      // c * log(3x)^2 with Zagier's constant
};
ZagierCount zagier_count(const Int& x);

extern const char* const kZagierConstantDigits;  // "0.180717104711507"

// Vieta/permutation graph on the nonzero solutions of the equation over F_p.
struct ModPGraph {
    long p;
    long num_vertices;
    std::vector<long> component_sizes;  // descending
    long num_components() const { return static_cast<long>(component_sizes.size()); }
    bool connected() const { return component_sizes.size() == 1; }
};
ModPGraph mod_p_graph(long p);  // p prime, p >= 3

// every z value appears for exactly one ordered triple (Frobenius uniqueness,
// reported not assumed)
bool frobenius_unique(const std::vector<MarkovTriple>& triples);

void write_triples_csv(std::ostream& os, const std::vector<MarkovTriple>& triples);
void write_modp_csv_row(std::ostream& os, const ModPGraph& g);

}  // namespace spectra
