#include "spectra/markov_triples.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>

namespace spectra {

MarkovTriple::MarkovTriple(Int x_, Int y_, Int z_) : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {
    if (x > y || y > z) throw std::invalid_argument("MarkovTriple: coordinates not ordered");
    if (x < 1) throw std::invalid_argument("MarkovTriple: coordinates must be positive");
    if (!is_markov_solution(x, y, z))
        throw std::invalid_argument("MarkovTriple: not a solution of the Markov equation");
}

bool is_markov_solution(const Int& x, const Int& y, const Int& z) {
    return x * x + y * y + z * z == 3 * x * y * z;
}

std::array<Int, 3> vieta(const std::array<Int, 3>& t, int coord) {
    if (coord < 1 || coord > 3) throw std::invalid_argument("vieta: coord must be 1, 2 or 3");
    if (!is_markov_solution(t[0], t[1], t[2]))
        throw std::invalid_argument("vieta: input is not a solution");
    std::array<Int, 3> r = t;
    int i = coord - 1, j = (i + 1) % 3, k = (i + 2) % 3;
    r[i] = 3 * t[j] * t[k] - t[i];
    return r;
}

namespace {
MarkovTriple sorted_triple(std::array<Int, 3> t) {
    std::sort(t.begin(), t.end());
    return MarkovTriple(std::move(t[0]), std::move(t[1]), std::move(t[2]));
}
}  // namespace

DescentPath descend(const MarkovTriple& t) {
    DescentPath path;
    path.states.push_back(t);
    MarkovTriple cur = t;
    while (!(cur.x == 1 && cur.y == 1 && cur.z == 1)) {
        // replace the largest coordinate: z' = 3xy - z < y on non-base triples
        std::array<Int, 3> moved = vieta(cur.tuple(), 3);
        path.moves.push_back({DescentMove::Kind::Vieta, 3});
        MarkovTriple next = sorted_triple(moved);
        if (next.z >= cur.z)
            throw std::logic_error("descend: Vieta step failed to decrease the maximum");
        if (!(moved[0] <= moved[1] && moved[1] <= moved[2]))
            path.moves.push_back({DescentMove::Kind::Sort, 0});
        path.states.push_back(next);
        cur = next;
    }
    return path;
}

std::vector<MarkovTriple> enumerate_triples(const Int& bound) {
    if (bound < 1) throw std::invalid_argument("enumerate_triples: bound must be >= 1");
    std::set<std::array<Int, 3>> seen;
    std::vector<MarkovTriple> out;
    std::deque<MarkovTriple> queue;
    queue.emplace_back(1, 1, 1);
    seen.insert({1, 1, 1});
    while (!queue.empty()) {
        MarkovTriple cur = queue.front();
        queue.pop_front();
        out.push_back(cur);
        for (int child = 0; child < 2; ++child) {
            std::array<Int, 3> next =
                child == 0 ? std::array<Int, 3>{cur.y, cur.z, 3 * cur.y * cur.z - cur.x}
                           : std::array<Int, 3>{cur.x, cur.z, 3 * cur.x * cur.z - cur.y};
            std::sort(next.begin(), next.end());
            if (next[2] > bound) continue;
            if (seen.insert(next).second)
                queue.push_back(MarkovTriple(next[0], next[1], next[2]));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Int> markov_numbers(const Int& bound) {
    std::set<Int> zs;
    for (const auto& t : enumerate_triples(bound)) zs.insert(t.z);
    return {zs.begin(), zs.end()};
}

std::vector<QuadraticSurd> spectrum_points(int n) {
    if (n < 1) throw std::invalid_argument("spectrum_points: n must be >= 1");
    // grow the bound until n distinct Markov numbers are available
    Int bound = 1000;
    std::vector<Int> zs = markov_numbers(bound);
    while (static_cast<int>(zs.size()) < n) {
        bound *= bound;
        zs = markov_numbers(bound);
    }
    std::vector<QuadraticSurd> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        const Int& z = zs[static_cast<size_t>(i)];
        out.push_back(QuadraticSurd::make(0, 1, 9 * z * z - 4, z));  // sqrt(9 - 4/z^2)
    }
    return out;
}

const char* const kZagierConstantDigits = "0.180717104711507";

ZagierCount zagier_count(const Int& x) {
    if (x < 1) throw std::invalid_argument("zagier_count: x must be >= 1");
    ZagierCount zc{};
    zc.count = static_cast<unsigned long>(markov_numbers(x).size());
    const mpfr_prec_t prec = 128;
    Real t(prec);
    mpfr_set_z(t.get(), Int(3 * x).get_mpz_t(), MPFR_RNDN);
    mpfr_log(t.get(), t.get(), MPFR_RNDN);
    mpfr_sqr(t.get(), t.get(), MPFR_RNDN);
    Rat c = make_rat(Int("180717104711507"), Int("1000000000000000"));
    Real cr = Real::of_rat(c, prec, MPFR_RNDN);
    mpfr_mul(t.get(), t.get(), cr.get(), MPFR_RNDN);
    zc.reference = t.to_double();
    return zc;
}

ModPGraph mod_p_graph(long p) {
    if (p < 3 || !is_prime(static_cast<unsigned long>(p)))
        throw std::invalid_argument("mod_p_graph: p must be an odd prime >= 3");
    const long p2 = p * p;
    auto pack = [p, p2](long x, long y, long z) { return x * p2 + y * p + z; };

    // vertex set by brute force over F_p^3 minus the origin
    std::vector<int> index(static_cast<size_t>(p * p2), -1);
    std::vector<std::array<long, 3>> verts;
    for (long x = 0; x < p; ++x)
        for (long y = 0; y < p; ++y) {
            long xy = (x * x + y * y) % p;
            long xyq = (3 * x * y) % p;
            for (long z = 0; z < p; ++z) {
                if (x == 0 && y == 0 && z == 0) continue;
                if ((xy + z * z) % p == (xyq * z) % p) {
                    index[static_cast<size_t>(pack(x, y, z))] =
                        static_cast<int>(verts.size());
                    verts.push_back({x, y, z});
                }
            }
        }

    // union-find over Vieta involutions and coordinate transpositions
    std::vector<int> parent(verts.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[static_cast<size_t>(a)] != a) {
            parent[static_cast<size_t>(a)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
            a = parent[static_cast<size_t>(a)];
        }
        return a;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<size_t>(a)] = b;
    };

    for (size_t vi = 0; vi < verts.size(); ++vi) {
        auto [x, y, z] = verts[vi];
        const std::array<long, 3> v{x, y, z};
        for (int c = 0; c < 3; ++c) {
            std::array<long, 3> w = v;
            long prod = (3 * v[(c + 1) % 3] * v[(c + 2) % 3] - v[c]) % p;
            w[c] = (prod % p + p) % p;
            int wi = index[static_cast<size_t>(pack(w[0], w[1], w[2]))];
            if (wi < 0) throw std::logic_error("mod_p_graph: Vieta image left the variety");
            unite(static_cast<int>(vi), wi);
        }
        int sw1 = index[static_cast<size_t>(pack(y, x, z))];
        int sw2 = index[static_cast<size_t>(pack(x, z, y))];
        unite(static_cast<int>(vi), sw1);
        unite(static_cast<int>(vi), sw2);
    }

    std::vector<long> size_by_root(verts.size(), 0);
    for (size_t vi = 0; vi < verts.size(); ++vi)
        ++size_by_root[static_cast<size_t>(find(static_cast<int>(vi)))];
    ModPGraph g;
    g.p = p;
    g.num_vertices = static_cast<long>(verts.size());
    for (long s : size_by_root)
        if (s > 0) g.component_sizes.push_back(s);
    std::sort(g.component_sizes.rbegin(), g.component_sizes.rend());
    return g;
}

bool frobenius_unique(const std::vector<MarkovTriple>& triples) {
    std::set<Int> zs;
    for (const auto& t : triples)
        if (!zs.insert(t.z).second) return false;
    return true;
}

void write_triples_csv(std::ostream& os, const std::vector<MarkovTriple>& triples) {
    for (const auto& t : triples)
        os << t.x.get_str() << "," << t.y.get_str() << "," << t.z.get_str() << "\n";
}

void write_modp_csv_row(std::ostream& os, const ModPGraph& g) {
    os << g.p << "," << g.num_vertices << "," << g.num_components() << ","
       << (g.component_sizes.empty() ? 0 : g.component_sizes.front()) << "\n";
}

}  // namespace spectra
