#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "spectra/gauss_cantor.hpp"
#include "spectra/periodic.hpp"

using namespace spectra;

namespace {

WordSet digit_set(std::initializer_list<int> digits) {
    std::vector<Word> ws;
    for (int d : digits) ws.push_back(Word({d}));
    return WordSet(std::move(ws));
}

Word random_word(std::mt19937_64& rng, size_t max_len, int max_digit) {
    Word w;
    size_t n = 1 + rng() % max_len;
    for (size_t i = 0; i < n; ++i) w.digits.push_back(static_cast<int>(rng() % max_digit) + 1);
    return w;
}

}  // namespace

TEST_CASE("cylinder interval basics") {
    auto c1 = cylinder_interval(Word({1}));
    CHECK(c1.lo == make_rat(1, 2));
    CHECK(c1.hi == Rat(1));
    CHECK(c1.length() == make_rat(1, 2));

    auto c22 = cylinder_interval(Word({2, 2}));
    CHECK(c22.length() == make_rat(1, 35));  // q=5, q'=2: 1/(5*7)

    CHECK_THROWS_AS(cylinder_interval(Word{}), std::invalid_argument);

    // any continuation of the word stays inside the cylinder
    auto v = eval_periodic(Word(0, {2, 2}), Word({3, 1}));
    auto iv = v.enclosure(128);
    CHECK(iv.lo_rat() >= c22.lo);
    CHECK(iv.hi_rat() <= c22.hi);
}

TEST_CASE("interval length formula |I| q (q + q') = 1") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        Word beta = random_word(rng, 12, 4);
        auto ci = cylinder_interval(beta);
        Word b0 = beta;
        b0.head = 0;
        auto cs = convergents(b0);
        Int q = cs.back().q, qp = cs[cs.size() - 2].q;
        CHECK(ci.length() * q * (q + qp) == 1);
    }
}

TEST_CASE("covers: counts, disjointness, nesting") {
    GaussCantorSpec c2(digit_set({1, 2}));
    auto lvl1 = cover(c2, 1);
    CHECK(lvl1.size() == 2);
    auto lvl2 = cover(c2, 2);
    auto lvl3 = cover(c2, 3);
    CHECK(lvl3.size() == 8);
    for (size_t i = 1; i < lvl3.size(); ++i) CHECK(lvl3[i - 1].hi <= lvl3[i].lo);
    // nesting: every level-3 cylinder lies inside its level-2 parent
    for (const auto& child : lvl3) {
        Word parent_word(std::vector<int>(child.word.digits.begin(), child.word.digits.end() - 1));
        bool found = false;
        for (const auto& p : lvl2)
            if (p.word == parent_word) {
                CHECK(p.lo <= child.lo);
                CHECK(child.hi <= p.hi);
                found = true;
            }
        CHECK(found);
    }
}

TEST_CASE("primitivity is enforced") {
    CHECK_THROWS_AS(WordSet({Word({1}), Word({1, 2})}), std::invalid_argument);
    CHECK_NOTHROW(WordSet({Word({1, 1}), Word({1, 2}), Word({2})}));
    CHECK_THROWS_AS(WordSet({}), std::invalid_argument);
}

TEST_CASE("palis-takens: middle-third analogue is exact") {
    auto b = palis_takens_bounds(AffineSystem{2, Rat(3)}, 1, 1);
    const double expect = std::log(2.0) / std::log(3.0);
    CHECK(b.alpha == b.beta);  // identical defining equations, identical bisection
    CHECK(std::abs(b.beta - expect) < 1e-12);
    auto b4 = palis_takens_bounds(AffineSystem{2, Rat(3)}, 4, 1);
    CHECK(std::abs(b4.beta - expect) < 1e-12);
    CHECK(std::abs(b4.alpha - expect) < 1e-12);
}

TEST_CASE("palis-takens bounds for C(2) bracket the reference digits") {
    GaussCantorSpec c2(digit_set({1, 2}));
    const double reference = 0.531280506277205141624468647368;
    double prev_gap = 1;
    for (int m = 2; m <= 10; ++m) {
        auto b = palis_takens_bounds(c2, m, 1);
        CHECK(b.alpha <= reference);
        CHECK(reference <= b.beta);
        double gap = b.beta - b.alpha;
        CHECK(gap < prev_gap);  // tightening, consistent with O(1/m)
        prev_gap = gap;
    }
}

TEST_CASE("prefix relabeling leaves the bounds unchanged") {
    GaussCantorSpec plain(digit_set({1, 2}));
    GaussCantorSpec prefixed(Word({3, 1}), digit_set({1, 2}));
    auto b1 = palis_takens_bounds(plain, 6, 1);
    auto b2 = palis_takens_bounds(prefixed, 6, 1);
    CHECK(b1.alpha == b2.alpha);
    CHECK(b1.beta == b2.beta);
    // but the intervals themselves live inside I(prefix)
    auto pc = cylinder_interval(Word({3, 1}));
    for (const auto& ci : cover(prefixed, 3)) {
        CHECK(ci.lo >= pc.lo);
        CHECK(ci.hi <= pc.hi);
    }
}

TEST_CASE("transpose") {
    WordSet b({Word({1, 2}), Word({2, 2})});
    auto bt = transpose(b);
    CHECK(bt.words()[0] == Word({2, 1}));
    CHECK(bt.words()[1] == Word({2, 2}));
    auto btt = transpose(bt);
    CHECK(btt.words()[0] == b.words()[0]);
    CHECK(btt.words()[1] == b.words()[1]);
    // palindromic words are fixed
    auto p = transpose(WordSet({Word({1, 2, 1})}));
    CHECK(p.words()[0] == Word({1, 2, 1}));
}

TEST_CASE("transposition symmetry of the dimension bounds") {
    std::mt19937_64 rng(9);
    int tested = 0;
    while (tested < 8) {
        std::vector<Word> ws;
        size_t k = 2 + rng() % 2;
        for (size_t i = 0; i < k; ++i) ws.push_back(random_word(rng, 3, 4));
        try {
            WordSet probe(ws);
        } catch (const std::invalid_argument&) {
            continue;  // drew a non-primitive set
        }
        WordSet b(ws);
        auto bounds = palis_takens_bounds(GaussCantorSpec(b), 6, 1);
        auto tbounds = palis_takens_bounds(GaussCantorSpec(transpose(b)), 6, 1);
        // the two rigorous intervals must overlap (equal dimensions)
        CHECK(bounds.alpha <= tbounds.beta);
        CHECK(tbounds.alpha <= bounds.beta);
        ++tested;
    }
}

TEST_CASE("euler denominator symmetry") {
    auto e = euler_denominator_check(Word({1, 2, 3}));
    CHECK(e.equal);
    CHECK(e.q_word == 10);  // [0;1,2,3] = 7/10, [0;3,2,1] = 3/10
    CHECK(euler_denominator_check(Word({2})).equal);
    // exhaustive over {1,2} words of length <= 10
    for (int len = 1; len <= 10; ++len) {
        for (long mask = 0; mask < (1L << len); ++mask) {
            Word w;
            for (int i = 0; i < len; ++i) w.digits.push_back((mask >> i & 1) + 1);
            CHECK(euler_denominator_check(w).equal);
        }
    }
}

TEST_CASE("sum_cover: singletons add to a point") {
    GaussCantorSpec a(WordSet({Word({1})})), b(WordSet({Word({2})}));
    auto sc = sum_cover(a, b, 16);
    REQUIRE(sc.size() == 1);
    // (sqrt5-1)/2 + (sqrt2-1)
    SurdSum point = SurdSum(eval_periodic(Word(0, {}), Word({1}))) +
                    SurdSum(eval_periodic(Word(0, {}), Word({2})));
    auto iv = point.enclosure(128);
    CHECK(SurdSum(sc.front().first) <= point);
    CHECK(point <= SurdSum(sc.front().second));
    CHECK(sc.front().second - sc.front().first < make_rat(1, 1000000));
}

TEST_CASE("sum_cover: C(4)+C(4) converges onto the Hall interval") {
    GaussCantorSpec c4(digit_set({1, 2, 3, 4}));
    auto sc = sum_cover(c4, c4, 6);
    REQUIRE(sc.size() == 1);
    // endpoints approach sqrt2-1 and 4(sqrt2-1) from outside
    SurdSum lo_expect = SurdSum(QuadraticSurd::sqrt_of(2)) - SurdSum(1);
    SurdSum hi_expect = SurdSum(QuadraticSurd::sqrt_of(2)).scaled(4) - SurdSum(4);
    CHECK(SurdSum(sc.front().first) <= lo_expect);
    CHECK(hi_expect <= SurdSum(sc.front().second));
    CHECK((lo_expect - SurdSum(sc.front().first)).enclosure(128).mid_double() < 1e-3);
    CHECK((SurdSum(sc.front().second) - hi_expect).enclosure(128).mid_double() < 1e-3);
}

TEST_CASE("sum_cover: C(2)+C(2) nearly fills its hull") {
    GaussCantorSpec c2(digit_set({1, 2}));
    auto sc = sum_cover(c2, c2, 6);
    REQUIRE(!sc.empty());
    Rat measure(0);
    for (const auto& [lo, hi] : sc) measure += hi - lo;
    Rat hull = sc.back().second - sc.front().first;
    CHECK(measure > hull * make_rat(9, 10));
}

TEST_CASE("gap exponent check") {
    auto rep = gap_exponent_check(make_rat(174813, 1000000), 8);
    CHECK(rep.pass);
    CHECK(rep.worst_margin > 0);
    // tiny exponents fail: children lengths^s -> 1 each, parent -> 1
    auto fail = gap_exponent_check(make_rat(1, 100), 2);
    CHECK(!fail.pass);
    // the failure certificate names a word whose children overshoot
    CHECK(fail.worst_margin < 0);
}

TEST_CASE("cover CSV dump") {
    GaussCantorSpec c2(digit_set({1, 2}));
    std::ostringstream os;
    write_cover_csv(os, cover(c2, 1));
    CHECK(os.str() ==
          "level,word,lo_num,lo_den,hi_num,hi_den\n"
          "1,2,1,3,1,2\n"
          "1,1,1,2,1,1\n");
}
