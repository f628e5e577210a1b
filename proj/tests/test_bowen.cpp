#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "spectra/bowen.hpp"
#include "spectra/periodic.hpp"

using namespace spectra;

namespace {

WordSet c2() { return WordSet({Word({1}), Word({2})}); }

const double kReference = 0.531280506277205141624468647368;  // dim C(2), 30 digits

}  // namespace

TEST_CASE("period-1 orbits of C(2)") {
    auto orbits = enumerate_periodic(c2(), 1);
    REQUIRE(orbits.size() == 2);
    CHECK(orbits[0].fixed_point == QuadraticSurd::make(-1, 1, 5, 2));  // [0;1~]
    CHECK(orbits[1].fixed_point == QuadraticSurd::make(-1, 1, 2, 1));  // [0;2~]
    // |D| = phi^2 = (3+sqrt5)/2 and (1+sqrt2)^2 = 3+2sqrt2, both negative
    CHECK(orbits[0].abs_multiplier == QuadraticSurd::make(3, 1, 5, 2));
    CHECK(orbits[1].abs_multiplier == QuadraticSurd::make(3, 2, 2, 1));
    CHECK(orbits[0].sign == -1);
    CHECK(orbits[1].sign == -1);
    CHECK(multiplier_value(orbits[0], 128).mid_double() == doctest::Approx(-2.618033988).epsilon(1e-8));
}

TEST_CASE("period-2 orbits include the period-1 fixed points") {
    auto orbits = enumerate_periodic(c2(), 2);
    REQUIRE(orbits.size() == 4);
    int fixed_seen = 0;
    for (const auto& o : orbits) {
        CHECK(o.sign == 1);
        // psi^2(x) = x by exact evaluation: [0; w~] reproduces itself
        CHECK(eval_periodic(Word(0, {}), o.block_word) == o.fixed_point);
        if (o.fixed_point == QuadraticSurd::make(-1, 1, 5, 2) ||
            o.fixed_point == QuadraticSurd::make(-1, 1, 2, 1))
            ++fixed_seen;
    }
    CHECK(fixed_seen == 2);
}

TEST_CASE("doubling a word squares the multiplier") {
    for (std::vector<int> w : {std::vector<int>{1, 2}, {2, 2, 1}, {1}}) {
        Word word(w), doubled(w);
        doubled.digits.insert(doubled.digits.end(), w.begin(), w.end());
        auto a = make_orbit(word, 1), b = make_orbit(doubled, 2);
        CHECK(b.abs_multiplier == a.abs_multiplier * a.abs_multiplier);
        CHECK(b.sign == a.sign * a.sign);
    }
}

TEST_CASE("trace closed forms") {
    TraceTable table(c2(), 2, 256);
    // n=1, s=1/2: sum of x^(2s)/(1+x^2) = x/(1+x^2) over the two fixed points
    Interval tr = table.trace(Interval::of_rat(make_rat(1, 2), 256), 1);
    auto term = [](const QuadraticSurd& x) {
        Interval xi = x.enclosure(256);
        return xi / (Interval::of_long(1, 256) + xi * xi);
    };
    Interval expect = term(QuadraticSurd::make(-1, 1, 5, 2)) + term(QuadraticSurd::make(-1, 1, 2, 1));
    CHECK(std::abs(tr.mid_double() - expect.mid_double()) < 1e-60);

    // s = 0: pure orbit-count statistic sum 1/(1 - D^{-1})
    Interval tr0 = table.trace(Interval::of_long(0, 256), 1);
    auto stat = [](const QuadraticSurd& absd) {
        Interval di = absd.enclosure(256);
        return di / (di + Interval::of_long(1, 256));  // D negative: 1/(1+1/|D|)
    };
    Interval expect0 =
        stat(QuadraticSurd::make(3, 1, 5, 2)) + stat(QuadraticSurd::make(3, 2, 2, 1));
    CHECK(std::abs(tr0.mid_double() - expect0.mid_double()) < 1e-60);
}

TEST_CASE("affine traces match the geometric closed form") {
    TraceTable table(AffineSystem{2, Rat(3)}, 6, 256);
    for (int n = 1; n <= 6; ++n) {
        for (double s : {0.2, 0.5, 0.9}) {
            Interval tr = table.trace(Interval::of_rat(make_rat(static_cast<long>(s * 10), 10), 256), n);
            double expect = std::pow(2.0, n) * std::pow(3.0, -n * (s * 10) / 10.0) /
                            (1.0 - std::pow(3.0, -n));
            CHECK(tr.mid_double() == doctest::Approx(expect).epsilon(1e-12));
        }
    }
}

TEST_CASE("fredholm coefficients: first and second order identities") {
    TraceTable table(c2(), 4, 256);
    Interval s = Interval::of_rat(make_rat(1, 2), 256);
    auto d = fredholm_coefficients(table, s, 4);
    Interval t1 = table.trace(s, 1), t2 = table.trace(s, 2);
    CHECK(std::abs((d[0] + t1).mid_double()) < 1e-60);                       // d1 = -tr
    CHECK(std::abs((d[1] - (t1 * t1 - t2).scaled(make_rat(1, 2))).mid_double()) < 1e-60);
}

TEST_CASE("affine system: bowen root equals log2/log3") {
    auto rep = solve_dimension(AffineSystem{2, Rat(3)}, 12, 256);
    const double expect = std::log(2.0) / std::log(3.0);
    CHECK(std::abs(rep.s_value - expect) < 1e-12);
    CHECK(rep.residual < 1e-38);
    // 1 + sum d_n(log2/log3) -> 0 as the order grows
    TraceTable table(AffineSystem{2, Rat(3)}, 12, 256);
    Interval root = Interval::of_rat(make_rat(63093, 100000), 256);
    double prev = 1;
    for (int M : {4, 8, 12}) {
        Interval acc = Interval::of_long(1, 256);
        for (auto& dn : fredholm_coefficients(table, root, M)) acc = acc + dn;
        CHECK(std::abs(acc.mid_double()) < prev);
        prev = std::abs(acc.mid_double());
    }
}

TEST_CASE("C(2) dimension matches the reference digits") {
    auto rep = solve_dimension(c2(), 10, 256);
    CHECK(std::abs(rep.s_value - kReference) < 1e-14);
    CHECK(rep.s_decimal.substr(0, 25) == "0.531280506277205141624468647368".substr(0, 25));
    // superexponential shrinking of successive truncation roots
    double prev = 1;
    for (size_t i = 3; i + 1 < rep.s_by_order.size(); ++i) {
        double diff = std::abs(rep.s_by_order[i + 1] - rep.s_by_order[i]);
        CHECK(diff < prev);
        prev = diff;
    }
    CHECK(prev < 1e-10);
}

TEST_CASE("bowen root lies inside the covering bracket") {
    auto rep = solve_dimension(c2(), 8, 256);
    auto bounds = palis_takens_bounds(GaussCantorSpec(c2()), 8, 1);
    CHECK(bounds.alpha <= rep.s_value);
    CHECK(rep.s_value <= bounds.beta);
}

TEST_CASE("transpose agreement for a non-symmetric block set") {
    WordSet b({Word({1, 2}), Word({2})});
    auto r1 = solve_dimension(b, 8, 256);
    auto r2 = solve_dimension(transpose(b), 8, 256);
    CHECK(std::abs(r1.s_value - r2.s_value) < 1e-12);
}

TEST_CASE("degenerate single-word set has no root") {
    CHECK_THROWS_AS(solve_dimension(WordSet({Word({2})}), 6, 256), DimensionError);
}

TEST_CASE("report format carries the headline fields") {
    auto rep = solve_dimension(c2(), 4, 256);
    std::string text = format_report(rep);
    CHECK(text.find("\"order\": 4") != std::string::npos);
    CHECK(text.find("\"s_M\"") != std::string::npos);
    CHECK(text.find("\"orbit_count\"") != std::string::npos);
    CHECK(text.find("\"residual\"") != std::string::npos);
}
