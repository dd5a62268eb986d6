#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "cuboid/upoly.hpp"
#include "test_util.hpp"

using cuboid::Int;
using cuboid::Rat;
using cuboid::UPolyQ;
using cuboid::UPolyZ;

namespace {

// s^6 + 15 s^5 - 1585 s^4 + 3052 s^3 - 1585 s^2 + 15 s + 1
UPolyZ p6() {
    return UPolyZ({Int(1), Int(15), Int(-1585), Int(3052), Int(-1585), Int(15), Int(1)}, "s");
}

UPolyZ from_longs(std::initializer_list<long> cs, const std::string& var = "x") {
    std::vector<Int> c;
    for (long v : cs) c.emplace_back(v);
    return UPolyZ(std::move(c), var);
}

}  // namespace

TEST_CASE("evaluation") {
    CHECK(cuboid::eval(p6(), Rat(1)) == Rat(-86));
    CHECK(cuboid::eval(p6(), Rat(-1)) == Rat(-6250));
    CHECK(cuboid::eval(p6(), Rat(0)) == Rat(1));
    CHECK(cuboid::eval(from_longs({-2, 0, 1}), Rat(Int(3), Int(2))) == Rat(Int(1), Int(4)));
    CHECK(cuboid::eval_sign(p6(), Rat(Int(31), Int(1000))) == 1);
    CHECK(cuboid::eval_sign(p6(), Rat(Int(32), Int(1000))) == -1);
}

TEST_CASE("derivative") {
    CHECK(cuboid::derivative(from_longs({-2, 0, 1})) == from_longs({0, 2}));
    CHECK(cuboid::derivative(from_longs({5})).is_zero());
    // d/ds (s^6 + 15 s^5) = 6 s^5 + 75 s^4
    UPolyZ p({Int(0), Int(0), Int(0), Int(0), Int(0), Int(15), Int(1)}, "s");
    UPolyZ dp({Int(0), Int(0), Int(0), Int(0), Int(75), Int(6)}, "s");
    CHECK(cuboid::derivative(p) == dp);
    CHECK(!cuboid::derivative(p6()).is_zero());
}

TEST_CASE("degree sentinel") {
    CHECK(!UPolyZ("x").degree().has_value());
    CHECK(UPolyZ::constant(Int(3)).degree() == 0u);
    CHECK(p6().degree() == 6u);
}

TEST_CASE("exact division") {
    CHECK(cuboid::exact_div(from_longs({-1, 0, 1}), from_longs({-1, 1})) == from_longs({1, 1}));
    CHECK_THROWS_AS(cuboid::exact_div(from_longs({1, 0, 1}), from_longs({0, 1})),
                    cuboid::NotDivisible);
    try {
        cuboid::exact_div(from_longs({1, 0, 1}), from_longs({0, 1}));
    } catch (const cuboid::NotDivisible& e) {
        CHECK(e.remainder_degree == 0u);  // remainder is the constant 1
    }
    for (int it = 0; it < 200; ++it) {
        UPolyZ f = testutil::rand_upoly(testutil::rand_long(0, 5));
        UPolyZ g = testutil::rand_upoly(testutil::rand_long(0, 5));
        CHECK(cuboid::exact_div(f * g, g) == f);
    }
}

TEST_CASE("content and primitive part") {
    auto [c1, p1] = cuboid::content_primitive(from_longs({4, 6}));
    CHECK(c1 == Int(2));
    CHECK(p1 == from_longs({2, 3}));
    auto [c2, p2] = cuboid::content_primitive(from_longs({-8, 0, -4}));
    CHECK(c2 == Int(4));
    CHECK(p2 == from_longs({-2, 0, -1}));  // sign stays on the primitive part
    CHECK_THROWS_AS(cuboid::content_primitive(UPolyZ("x")), cuboid::ZeroPolynomial);
    // Gauss: content is multiplicative.
    for (int it = 0; it < 200; ++it) {
        UPolyZ f = testutil::rand_upoly(testutil::rand_long(0, 4));
        UPolyZ g = testutil::rand_upoly(testutil::rand_long(0, 4));
        CHECK(cuboid::content_primitive(f * g).first ==
              cuboid::content_primitive(f).first * cuboid::content_primitive(g).first);
    }
}

TEST_CASE("gcd") {
    CHECK(cuboid::gcd(from_longs({-1, 0, 1}), from_longs({1, -2, 1})) == from_longs({-1, 1}));
    CHECK(cuboid::gcd(p6(), cuboid::derivative(p6())) == UPolyZ::constant(Int(1), "s"));
    CHECK(cuboid::gcd(UPolyZ("x"), from_longs({0, 0, 0, 1})) == from_longs({0, 0, 0, 1}));
    CHECK_THROWS_AS(cuboid::gcd(UPolyZ("x"), UPolyZ("x")), cuboid::ZeroPolynomial);
    // gcd divides both arguments
    for (int it = 0; it < 100; ++it) {
        UPolyZ f = testutil::rand_upoly(testutil::rand_long(1, 4));
        UPolyZ g = testutil::rand_upoly(testutil::rand_long(1, 4));
        UPolyZ h = testutil::rand_upoly(testutil::rand_long(0, 3));
        UPolyZ d = cuboid::gcd(f * h, g * h);
        CHECK_NOTHROW(cuboid::exact_div(cuboid::primitive_part(f * h), d));
        CHECK_NOTHROW(cuboid::exact_div(cuboid::primitive_part(g * h), d));
    }
}

TEST_CASE("squarefree part") {
    UPolyZ f = from_longs({-1, 1}) * from_longs({-1, 1}) * from_longs({2, 1});
    CHECK(cuboid::squarefree_part(f) == from_longs({-1, 1}) * from_longs({2, 1}));
    CHECK(cuboid::squarefree_part(from_longs({1, 0, 1})) == from_longs({1, 0, 1}));
    for (int it = 0; it < 100; ++it) {
        UPolyZ p = testutil::rand_upoly(testutil::rand_long(1, 3));
        UPolyZ sf = cuboid::squarefree_part(p);
        CHECK(cuboid::squarefree_part(p * p) == sf);
        CHECK(cuboid::squarefree_part(p * p * p) == sf);
    }
}

TEST_CASE("rational roots") {
    // 2x^2 - x - 1 = (x - 1)(2x + 1)
    auto roots = cuboid::rational_roots(from_longs({-1, -1, 2}));
    CHECK(roots == std::vector<Rat>{Rat(Int(-1), Int(2)), Rat(1)});
    CHECK(cuboid::rational_roots(p6()).empty());
    // zero root reported iff the trailing coefficient vanishes
    auto with_zero = cuboid::rational_roots(from_longs({0, 0, -1, 1}));
    CHECK(with_zero == std::vector<Rat>{Rat(0), Rat(1)});
    CHECK_THROWS_AS(cuboid::rational_roots(UPolyZ("x")), cuboid::ZeroPolynomial);
}

TEST_CASE("rational roots match known linear factors") {
    for (int it = 0; it < 200; ++it) {
        std::set<Rat> expected;
        UPolyZ p = UPolyZ::constant(testutil::rand_int(1, 5));
        long nfac = testutil::rand_long(1, 4);
        for (long i = 0; i < nfac; ++i) {
            Int a = testutil::rand_int(1, 9);
            Int b = testutil::rand_int(-9, 9);
            p = p * UPolyZ({b, a}, "x");
            expected.insert(Rat(-b, a));
        }
        if (testutil::rand_long(0, 3) == 0) {
            p = p.shifted(1);
            expected.insert(Rat(0));
        }
        auto got = cuboid::rational_roots(p);
        CHECK(std::set<Rat>(got.begin(), got.end()) == expected);
    }
}

TEST_CASE("clearing denominators preserves structure") {
    UPolyQ q({Rat(Int(1), Int(2)), Rat(Int(-1), Int(3)), Rat(1)}, "x");
    UPolyZ z = cuboid::clear_denominators(q);
    CHECK(z == from_longs({3, -2, 6}));
    CHECK(cuboid::exact_div(q, UPolyQ::constant(Rat(2))).coeffs()[0] == Rat(Int(1), Int(4)));
    CHECK_THROWS_AS(cuboid::exact_div(cuboid::to_upoly_q(from_longs({1, 0, 1})),
                                      cuboid::to_upoly_q(from_longs({0, 1}))),
                    cuboid::NotDivisible);
}
