#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "cuboid/realroots.hpp"
#include "test_util.hpp"

using cuboid::Bracket;
using cuboid::ExtendedPoint;
using cuboid::Int;
using cuboid::Rat;
using cuboid::SturmChain;
using cuboid::UPolyQ;
using cuboid::UPolyZ;

namespace {

UPolyZ from_longs(std::initializer_list<long> cs, const std::string& var = "x") {
    std::vector<Int> c;
    for (long v : cs) c.emplace_back(v);
    return UPolyZ(std::move(c), var);
}

UPolyZ p6() {
    return UPolyZ({Int(1), Int(15), Int(-1585), Int(3052), Int(-1585), Int(15), Int(1)}, "s");
}

const ExtendedPoint NEG = ExtendedPoint::minus_infinity();
const ExtendedPoint POS = ExtendedPoint::plus_infinity();
ExtendedPoint fin(long n, long d = 1) { return ExtendedPoint::finite(Rat(Int(n), Int(d))); }

}  // namespace

TEST_CASE("chain construction") {
    SturmChain c(from_longs({-2, 0, 1}));
    CHECK(c.size() == 3);
    CHECK(cuboid::sign_variations(c, NEG) == 2);
    CHECK(cuboid::sign_variations(c, POS) == 0);

    SturmChain p6c(p6());
    CHECK(p6c.size() == 7);  // squarefree: full length deg+1
    CHECK(p6c.polys().back().deg() == 0);

    // non-squarefree: the chain ends at (a multiple of) gcd(p, p')
    SturmChain sq(from_longs({1, -2, 1}));
    CHECK(sq.polys().back().deg() == 1);

    CHECK_THROWS_AS(SturmChain(UPolyZ("x")), cuboid::ZeroPolynomial);
}

TEST_CASE("no real roots for x^2 + 1") {
    SturmChain c(from_longs({1, 0, 1}));
    CHECK(cuboid::sign_variations(c, NEG) == cuboid::sign_variations(c, POS));
    CHECK(cuboid::count_real_roots(from_longs({1, 0, 1}), NEG, POS) == 0);
}

TEST_CASE("counting with known roots") {
    CHECK(cuboid::count_real_roots(p6(), fin(0), POS) == 2);
    CHECK(cuboid::count_real_roots(from_longs({-2, 0, 1}), NEG, POS) == 2);
    CHECK(cuboid::count_real_roots(from_longs({-2, 0, 1}), fin(1), fin(2)) == 1);
    // multiple roots are counted once
    CHECK(cuboid::count_real_roots(from_longs({1, -2, 1}), NEG, POS) == 1);
    CHECK_THROWS_AS(cuboid::count_real_roots(from_longs({-1, 1}), fin(1), fin(2)),
                    cuboid::EndpointIsRoot);
    CHECK_THROWS_AS(cuboid::count_real_roots(from_longs({-1, 1}), fin(2), fin(1)), cuboid::Error);
}

TEST_CASE("random split polynomials match the known-root oracle") {
    int done = 0;
    while (done < 200) {
        std::set<long> roots;
        long n = testutil::rand_long(1, 6);
        while (static_cast<long>(roots.size()) < n) roots.insert(testutil::rand_long(-20, 20));
        UPolyZ p = UPolyZ::constant(testutil::rand_int(1, 3));
        for (long r : roots) p = p * from_longs({-r, 1});

        CHECK(cuboid::count_real_roots(p, NEG, POS) == roots.size());

        // random rational non-root window
        Rat a(testutil::rand_int(-50, 50), testutil::rand_int(1, 7));
        Rat b(testutil::rand_int(-50, 50), testutil::rand_int(1, 7));
        if (!(a < b)) std::swap(a, b);
        if (a == b || cuboid::eval_sign(p, a) == 0 || cuboid::eval_sign(p, b) == 0) continue;
        std::size_t expected = 0;
        for (long r : roots)
            if (a < Rat(Int(r)) && Rat(Int(r)) < b) ++expected;
        CHECK(cuboid::count_real_roots(p, ExtendedPoint::finite(a), ExtendedPoint::finite(b)) ==
              expected);
        ++done;
    }
}

TEST_CASE("interval additivity at non-root cuts") {
    for (int it = 0; it < 50; ++it) {
        UPolyZ p = testutil::rand_upoly(testutil::rand_long(1, 6));
        Rat cut(testutil::rand_int(-20, 20), testutil::rand_int(1, 9));
        if (cuboid::eval_sign(p, cut) == 0) continue;
        auto mid = ExtendedPoint::finite(cut);
        CHECK(cuboid::count_real_roots(p, NEG, mid) + cuboid::count_real_roots(p, mid, POS) ==
              cuboid::count_real_roots(p, NEG, POS));
    }
}

TEST_CASE("positive scaling leaves counts unchanged") {
    for (int it = 0; it < 50; ++it) {
        UPolyZ p = testutil::rand_upoly(testutil::rand_long(1, 5));
        UPolyZ q = p * Int(testutil::rand_long(1, 60));
        CHECK(cuboid::count_real_roots(p, NEG, POS) == cuboid::count_real_roots(q, NEG, POS));
    }
}

TEST_CASE("rational-coefficient input is cleared exactly") {
    UPolyQ q({Rat(Int(-2), Int(3)), Rat(0), Rat(Int(1), Int(3))}, "x");  // (x^2 - 2)/3
    CHECK(cuboid::count_real_roots(q, NEG, POS) == 2);
}

TEST_CASE("cauchy bound") {
    CHECK(cuboid::cauchy_bound(from_longs({-2, 0, 1})) == Rat(3));
    CHECK(cuboid::cauchy_bound(from_longs({-10, 1})) == Rat(11));
    CHECK_THROWS_AS(cuboid::cauchy_bound(UPolyZ("x")), cuboid::ZeroPolynomial);
}

TEST_CASE("isolating positive roots") {
    auto br = cuboid::isolate_positive_roots(from_longs({-2, 0, 1}));
    REQUIRE(br.size() == 1);
    CHECK(br[0].root_count == 1);
    CHECK(br[0].lo < br[0].hi);
    // sqrt(2) inside
    CHECK(cuboid::eval_sign(from_longs({-2, 0, 1}), br[0].lo) *
              cuboid::eval_sign(from_longs({-2, 0, 1}), br[0].hi) == -1);

    auto b6 = cuboid::isolate_positive_roots(p6());
    REQUIRE(b6.size() == 2);
    for (const auto& b : b6) CHECK(cuboid::count_real_roots(p6(), ExtendedPoint::finite(b.lo),
                                                            ExtendedPoint::finite(b.hi)) == 1);
    CHECK(b6[0].hi <= b6[1].lo);

    CHECK_THROWS_AS(cuboid::isolate_positive_roots(from_longs({1, -2, 1})), cuboid::NotSquarefree);
    CHECK_THROWS_AS(cuboid::isolate_positive_roots(from_longs({0, -1, 0, 1})), cuboid::ZeroIsRoot);
}

TEST_CASE("isolated brackets partition the positive counts") {
    int done = 0;
    while (done < 60) {
        std::set<long> roots;
        long n = testutil::rand_long(1, 5);
        while (static_cast<long>(roots.size()) < n) roots.insert(testutil::rand_long(-15, 15));
        if (roots.count(0)) continue;
        UPolyZ p = UPolyZ::constant(Int(1));
        for (long r : roots) p = p * from_longs({-r, 1});
        auto brackets = cuboid::isolate_positive_roots(p);
        std::size_t positive = 0;
        for (long r : roots)
            if (r > 0) ++positive;
        CHECK(brackets.size() == positive);
        for (std::size_t i = 0; i + 1 < brackets.size(); ++i)
            CHECK(brackets[i].hi <= brackets[i + 1].lo);
        ++done;
    }
}
