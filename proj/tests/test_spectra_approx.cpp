#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "spectra/spectra_approx.hpp"

using namespace spectra;

namespace {

bool in_outer(const SpectrumApproximation& ap, const SurdSum& v) {
    for (const auto& [lo, hi] : ap.outer)
        if (SurdSum(lo) <= v && v <= SurdSum(hi)) return true;
    return false;
}

}  // namespace

TEST_CASE("named constants") {
    auto c = constants();
    CHECK(c.freiman.decimal(12).substr(0, 11) == "4.527829566");
    CHECK(c.perron_third.decimal(6).substr(0, 6) == "3.6631");
    CHECK(compare(c.sqrt12, c.sqrt13) < 0);
    CHECK(compare(c.sqrt13, c.perron_third) < 0);
    CHECK(compare(c.perron_third, c.freiman) < 0);
    CHECK(c.sqrt12 == QuadraticSurd::make(0, 2, 3, 1));
    CHECK(rat_to_decimal(c.zagier_c, 15) == "0.180717104711507");
}

TEST_CASE("cylinder_markov_bounds shrinks onto constant-sequence values") {
    for (int digit : {1, 2}) {
        double expect = digit == 1 ? std::sqrt(5.0) : std::sqrt(8.0);
        double prev_width = 1;
        for (int n : {4, 6, 8, 10}) {
            Word w(std::vector<int>(static_cast<size_t>(2 * n + 1), digit));
            Interval iv = cylinder_markov_bounds(w, 2);
            CHECK(iv.lo().to_double() <= expect);
            CHECK(expect <= iv.hi().to_double());
            double width = iv.width().to_double();
            CHECK(width < prev_width);
            CHECK(width <= std::ldexp(1.0, -(n - 3)) + 1e-20);
            prev_width = width;
        }
    }
}

TEST_CASE("cylinder_markov_bounds width bound for random windows") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 3 + static_cast<int>(rng() % 8);
        int alphabet = 2 + static_cast<int>(rng() % 3);
        Word w;
        for (int i = 0; i < 2 * n + 1; ++i)
            w.digits.push_back(static_cast<int>(rng() % alphabet) + 1);
        Interval iv = cylinder_markov_bounds(w, alphabet);
        CHECK(iv.width().to_double() <= std::ldexp(1.0, -(n - 3)) + 1e-20);
    }
    CHECK_THROWS_AS(cylinder_markov_bounds(Word({1, 2}), 2), std::invalid_argument);
}

TEST_CASE("approximate_spectra on [2.2, 3]: the discrete beginning") {
    auto ap = approximate_spectra(make_rat(22, 10), Rat(3), 100, 2);
    CHECK(ap.window_n == 11);

    // inner points reproduce the first spectrum values exactly
    REQUIRE(ap.inner.size() >= 3);
    CHECK(ap.inner[0].value == SurdSum(QuadraticSurd::sqrt_of(5)));
    CHECK(ap.inner[1].value == SurdSum(QuadraticSurd::sqrt_of(8)));
    CHECK(ap.inner[2].value == SurdSum(QuadraticSurd::make(0, 1, 221, 5)));

    // outer intervals are sorted, disjoint, and of width <= 1/Q
    for (size_t i = 0; i < ap.outer.size(); ++i) {
        CHECK(ap.outer[i].second - ap.outer[i].first <= make_rat(1, 100));
        if (i) CHECK(ap.outer[i - 1].second < ap.outer[i].first);
    }

    // gaps isolate the spectrum points in the scan range
    auto gaps = detect_gaps(ap, make_rat(223, 100), make_rat(29, 10));
    REQUIRE(gaps.gaps.size() == 3);
    CHECK(gaps.gaps[0].second.get_d() == doctest::Approx(2.23606).epsilon(1e-4));
    CHECK(gaps.gaps[1].first.get_d() == doctest::Approx(2.23804).epsilon(1e-3));
    CHECK(gaps.gaps[1].second.get_d() == doctest::Approx(2.82842).epsilon(1e-4));

    // below sqrt5 - 1e-3 everything is gap
    auto low = detect_gaps(ap, make_rat(21, 10), make_rat(2235, 1000));
    REQUIRE(low.gaps.size() == 1);
    CHECK(low.gaps[0].first == make_rat(21, 10));
}

TEST_CASE("outer cover soundness: random periodic sequences land inside") {
    auto ap = approximate_spectra(make_rat(22, 10), Rat(3), 100, 2);
    std::mt19937_64 rng(37);
    int in_range = 0;
    for (int trial = 0; trial < 100 || in_range < 20; ++trial) {
        Word w;
        size_t n = 1 + rng() % 8;
        for (size_t i = 0; i < n; ++i) w.digits.push_back(static_cast<int>(rng() % 2) + 1);
        auto mv = markov_value(EventuallyPeriodicSeq::periodic(w));
        if (mv.value < SurdSum(make_rat(22, 10)) || SurdSum(Rat(3)) < mv.value) continue;
        ++in_range;
        CHECK(in_outer(ap, mv.value));
        if (trial > 3000) break;
    }
    CHECK(in_range >= 20);
}

TEST_CASE("monotone refinement: doubling Q shrinks the outer cover") {
    auto coarse = approximate_spectra(make_rat(22, 10), Rat(3), 50, 2);
    auto fine = approximate_spectra(make_rat(22, 10), Rat(3), 100, 2);
    for (const auto& [lo, hi] : fine.outer) {
        bool inside = false;
        for (const auto& [clo, chi] : coarse.outer)
            inside = inside || (clo <= lo && hi <= chi);
        CHECK(inside);
    }
}

TEST_CASE("alphabet 2 cover tops out at sqrt12") {
    auto ap = approximate_spectra(Rat(3), make_rat(35, 10), 200, 2);
    SurdSum sqrt12(QuadraticSurd::sqrt_of(12));
    for (const auto& [lo, hi] : ap.outer) {
        CHECK(SurdSum(lo) <= sqrt12 + SurdSum(ap.slack));
    }
    // and the top outer interval reaches sqrt12 itself
    REQUIRE(!ap.outer.empty());
    CHECK(sqrt12 <= SurdSum(ap.outer.back().second));
}

TEST_CASE("completeness holds exactly when b <= alphabet + 1") {
    // above alphabet+1 the cover describes the digit-restricted subshift
    // only; sequences with a larger digit have records beyond b anyway when
    // b <= alphabet + 1, which is what the certification leans on
    auto ap = approximate_spectra(Rat(3), Rat(4), 20, 3);
    CHECK(ap.alphabet == 3);
    CHECK_THROWS_AS(approximate_spectra(Rat(3), Rat(2), 10, 2), std::invalid_argument);
}

TEST_CASE("hall realization at 6 and 6.5") {
    auto r6 = hall_realize(Rat(6), make_rat(1, 100000000));
    CHECK(r6.c0 == 5);
    for (int d : r6.x_digits.digits) CHECK((1 <= d && d <= 4));
    for (int d : r6.y_digits.digits) CHECK((1 <= d && d <= 4));
    auto mv = markov_value(r6.seq);
    CHECK(std::abs(mv.value.enclosure(192).mid_double() - 6.0) < 1e-8);
    auto lv = lagrange_value(r6.seq);
    CHECK(lv.value == mv.value);  // purely periodic realizer

    auto r65 = hall_realize(make_rat(65, 10), make_rat(1, 100000000));
    auto mv65 = markov_value(r65.seq);
    CHECK(std::abs(mv65.value.enclosure(192).mid_double() - 6.5) < 1e-8);
}

TEST_CASE("hall endpoint symmetry: 5 + 2(sqrt2 - 1) forces x = y = [0;2~]") {
    SurdSum target = SurdSum(QuadraticSurd::sqrt_of(2)).scaled(2) + SurdSum(3);  // 5 + 2(sqrt2-1)
    auto r = hall_realize(target, make_rat(1, 1000000));
    CHECK(r.c0 == 5);
    for (int d : r.x_digits.digits) CHECK(d == 2);
    for (int d : r.y_digits.digits) CHECK(d == 2);
}

TEST_CASE("hall realization over sampled targets") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        Rat target = Rat(6) + make_rat(static_cast<long>(rng() % 500), 1000);  // [6, 6.5)
        auto r = hall_realize(target, make_rat(1, 100000000));
        auto mv = markov_value(r.seq);
        double err = std::abs((mv.value - SurdSum(target)).enclosure(192).mid_double());
        CHECK(err < 1e-8 + std::ldexp(1.0, -static_cast<int>(r.x_digits.digits.size()) + 2));
    }
}

TEST_CASE("the third Perron point is an inner limit value") {
    // (9 sqrt3 + 65)/22 is a Lagrange/Markov value; search small periods for
    // the realizing word and check the exact equality
    auto c = constants();
    SurdSum target(c.perron_third);
    bool found = false;
    Word witness;
    for (int n = 1; n <= 7 && !found; ++n) {
        std::vector<int> w(static_cast<size_t>(n), 1);
        while (true) {
            auto mv = markov_value(EventuallyPeriodicSeq::periodic(Word(w)));
            if (mv.value == target) {
                found = true;
                witness = Word(w);
                break;
            }
            size_t pos = w.size();
            while (pos > 0 && w[pos - 1] == 3) w[--pos] = 1;
            if (pos == 0) break;
            ++w[pos - 1];
        }
    }
    CHECK(found);
    if (found) {
        auto mv = markov_value(EventuallyPeriodicSeq::periodic(witness));
        CHECK(mv.value == target);
    }
}

TEST_CASE("CSV and SVG outputs are deterministic") {
    auto ap = approximate_spectra(make_rat(22, 10), make_rat(25, 10), 50, 2);
    std::ostringstream a1, a2, svg;
    write_approx_csv(a1, ap);
    write_approx_csv(a2, ap);
    CHECK(a1.str() == a2.str());
    CHECK(a1.str().substr(0, 22) == "kind,lo,hi,value,word\n");
    write_approx_svg(svg, ap);
    CHECK(svg.str().find("<svg") == 0);
    CHECK(svg.str().find("</svg>") != std::string::npos);
}
