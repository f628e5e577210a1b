#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "spectra/markov_triples.hpp"

using namespace spectra;

namespace {

// independent oracle: solve the equation as a quadratic in z for x <= y
std::set<std::array<Int, 3>> brute_force_triples(long bound) {
    std::set<std::array<Int, 3>> out;
    for (long x = 1; x <= bound; ++x)
        for (long y = x; y <= bound; ++y) {
            Int disc = Int(9) * x * x * y * y - 4 * (Int(x) * x + Int(y) * y);
            if (disc < 0 || !is_perfect_square(disc)) continue;
            Int r = isqrt(disc);
            for (Int z : {(Int(3) * x * y + r) / 2, (Int(3) * x * y - r) / 2}) {
                if (z < y || z > bound) continue;
                if (is_markov_solution(x, y, z)) out.insert({Int(x), Int(y), z});
            }
        }
    return out;
}

Int fib(int n) {
    Int a = 0, b = 1;
    for (int i = 0; i < n; ++i) {
        Int t = a + b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

TEST_CASE("vieta moves") {
    CHECK(vieta({1, 2, 5}, 3) == std::array<Int, 3>{1, 2, 1});
    CHECK(vieta({1, 1, 1}, 3) == std::array<Int, 3>{1, 1, 2});
    CHECK_THROWS_AS(vieta({1, 2, 3}, 1), std::invalid_argument);
    CHECK_THROWS_AS(vieta({1, 1, 1}, 4), std::invalid_argument);
}

TEST_CASE("vieta involution and equation preservation on random tree nodes") {
    auto triples = enumerate_triples(Int("100000000000000"));
    std::mt19937_64 rng(5);
    for (int i = 0; i < 10000; ++i) {
        const auto& t = triples[rng() % triples.size()].tuple();
        for (int c = 1; c <= 3; ++c) {
            auto u = vieta(t, c);
            CHECK(is_markov_solution(u[0], u[1], u[2]));
            CHECK(vieta(u, c) == t);
            std::array<Int, 3> perm{u[1], u[2], u[0]};
            CHECK(is_markov_solution(perm[0], perm[1], perm[2]));
        }
    }
}

TEST_CASE("descend examples") {
    auto p0 = descend(MarkovTriple(1, 1, 1));
    CHECK(p0.moves.empty());

    auto p1 = descend(MarkovTriple(1, 1, 2));
    CHECK(p1.states.back() == MarkovTriple(1, 1, 1));
    CHECK(p1.moves.size() == 1);

    auto p2 = descend(MarkovTriple(2, 5, 29));
    CHECK(p2.states.back() == MarkovTriple(1, 1, 1));
    long vieta_steps = 0;
    for (const auto& m : p2.moves)
        if (m.kind == DescentMove::Kind::Vieta) ++vieta_steps;
    CHECK(vieta_steps >= 2);
    CHECK_THROWS_AS(MarkovTriple(2, 3, 7), std::invalid_argument);
}

TEST_CASE("descent monotonicity along the whole tree") {
    for (const auto& t : enumerate_triples(1000000)) {
        auto path = descend(t);
        CHECK(path.states.back() == MarkovTriple(1, 1, 1));
        for (size_t i = 1; i < path.states.size(); ++i)
            CHECK(path.states[i].z < path.states[i - 1].z);
    }
}

TEST_CASE("enumerate_triples matches the quadratic-formula brute force") {
    auto tree = enumerate_triples(1000);
    std::set<std::array<Int, 3>> tree_set;
    for (const auto& t : tree) tree_set.insert(t.tuple());
    CHECK(tree_set == brute_force_triples(1000));
    CHECK(tree_set.size() == tree.size());  // duplicate-free
}

TEST_CASE("first triples and bounds") {
    auto ts = enumerate_triples(30);
    REQUIRE(ts.size() == 5);
    CHECK(ts[0] == MarkovTriple(1, 1, 1));
    CHECK(ts[1] == MarkovTriple(1, 1, 2));
    CHECK(ts[2] == MarkovTriple(1, 2, 5));
    CHECK(ts[3] == MarkovTriple(1, 5, 13));
    CHECK(ts[4] == MarkovTriple(2, 5, 29));
    CHECK(enumerate_triples(1).size() == 1);
}

TEST_CASE("Fibonacci family (1, F_{2m-1}, F_{2m+1})") {
    for (int m = 1; m <= 30; ++m)
        CHECK(is_markov_solution(1, fib(2 * m - 1), fib(2 * m + 1)));
}

TEST_CASE("spectrum points") {
    auto pts = spectrum_points(5);
    REQUIRE(pts.size() == 5);
    CHECK(pts[0] == QuadraticSurd::sqrt_of(5));
    CHECK(pts[1] == QuadraticSurd::sqrt_of(8));
    CHECK(pts[2] == QuadraticSurd::make(0, 1, 221, 5));
    CHECK(pts[3] == QuadraticSurd::make(0, 1, 1517, 13));
    CHECK(pts[4] == QuadraticSurd::make(0, 1, 7565, 29));
    for (size_t i = 0; i < pts.size(); ++i) {
        CHECK(compare(pts[i], QuadraticSurd(Rat(3))) < 0);
        if (i) CHECK(compare(pts[i - 1], pts[i]) < 0);
    }
    CHECK(spectrum_points(1).front() == QuadraticSurd::sqrt_of(5));
}

TEST_CASE("zagier counts") {
    CHECK(zagier_count(2).count == 2);
    CHECK(zagier_count(30).count == 5);
    auto zc = zagier_count(Int("1000000000000"));
    double ratio = static_cast<double>(zc.count) / zc.reference;
    CHECK(ratio > 0.8);
    CHECK(ratio < 1.2);
}

TEST_CASE("mod p graph: brute force oracle at p = 3") {
    long n_oracle = 0;
    for (long x = 0; x < 3; ++x)
        for (long y = 0; y < 3; ++y)
            for (long z = 0; z < 3; ++z) {
                if (x == 0 && y == 0 && z == 0) continue;
                if ((x * x + y * y + z * z) % 3 == (3 * x * y * z) % 3) ++n_oracle;
            }
    auto g = mod_p_graph(3);
    CHECK(g.num_vertices == n_oracle);
    long total = 0;
    for (long s : g.component_sizes) total += s;
    CHECK(total == g.num_vertices);
    CHECK_THROWS_AS(mod_p_graph(9), std::invalid_argument);
}

TEST_CASE("mod p graphs are connected for small primes") {
    for (long p : {3, 5, 7, 11, 13, 17, 19, 23}) {
        auto g = mod_p_graph(p);
        CHECK(g.connected());
        CHECK(g.num_vertices > 0);
    }
}

TEST_CASE("frobenius uniqueness report and CSV output") {
    auto ts = enumerate_triples(Int("100000000"));
    CHECK(frobenius_unique(ts));
    std::ostringstream os;
    write_triples_csv(os, enumerate_triples(30));
    CHECK(os.str() == "1,1,1\n1,1,2\n1,2,5\n1,5,13\n2,5,29\n");
    std::ostringstream om;
    write_modp_csv_row(om, mod_p_graph(3));
    CHECK(om.str().substr(0, 2) == "3,");
}
