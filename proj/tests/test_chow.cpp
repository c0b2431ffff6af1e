#include "sheafreg/chow.hpp"

#include <doctest.h>

using namespace sheafreg;

namespace {

const IntPoly kT = IntPoly::variable();

} // namespace

TEST_CASE("cotangent Chern classes from the twisted Euler expansion") {
    BundleChernData omega5 = chern_of_omega(5);
    CHECK(omega5.rank == 5);
    // independent expansion of (1-h)^6
    for (int i = 0; i <= 5; ++i) {
        Int expected = binomial(6, i) * ((i % 2 == 0) ? 1 : -1);
        CHECK(omega5.chern(i) == IntPoly::constant(expected));
    }
    CHECK(omega5.chern(1) == IntPoly::constant(-6));
    CHECK(omega5.chern(2) == IntPoly::constant(15));
    CHECK(chern_of_omega(1).chern(1) == IntPoly::constant(-2));
}

TEST_CASE("twist formula on the scroll family") {
    BundleChernData twisted = chern_twist(chern_of_omega(5), IntPoly({2, 1})); // by 2 + t
    CHECK(twisted.chern(1) == IntPoly({4, 5}));      // 4 + 5t
    CHECK(twisted.chern(2) == IntPoly({7, 16, 10})); // 10t^2 + 16t + 7
    BundleChernData same = chern_twist(chern_of_omega(5), 0);
    CHECK(same.total == chern_of_omega(5).total);
}

TEST_CASE("twists compose additively") {
    BundleChernData base = chern_of_omega(4);
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b) {
            BundleChernData two_steps = chern_twist(chern_twist(base, a), b);
            BundleChernData one_step = chern_twist(base, a + b);
            CHECK(two_steps.total == one_step.total);
        }
}

TEST_CASE("twisting a split bundle matches retwisting its summands") {
    const std::vector<std::vector<long>> samples = {
        {0}, {-3, -2, -1, 0}, {1, 1, -4}, {2, -2}, {4, 3, 2, 1, 0}, {-4, -4, -4},
    };
    for (const auto& degrees : samples)
        for (long L = -4; L <= 4; ++L) {
            BundleChernData twisted = chern_twist(split_bundle_const(5, degrees), L);
            std::vector<long> shifted = degrees;
            for (auto& d : shifted)
                d += L;
            CHECK(twisted.total == split_bundle_const(5, shifted).total);
        }
}

TEST_CASE("Whitney sum and duals") {
    BundleChernData sum = split_bundle_const(5, {-3, -2, -1, 0});
    CHECK(sum.chern(1) == IntPoly::constant(-6));
    CHECK(sum.total == whitney_sum({split_bundle_const(5, {-3, -2}), split_bundle_const(5, {-1, 0})}).total);

    BundleChernData omega5 = chern_of_omega(5);
    BundleChernData dual5 = dual(omega5);
    CHECK(dual5.chern(1) == IntPoly::constant(6));
    CHECK(dual5.chern(2) == IntPoly::constant(15));

    BundleChernData pair = whitney_sum({split_bundle_const(5, {3}), split_bundle_const(5, {-3})});
    CHECK(pair.rank == 2);
    CHECK(pair.chern(1).is_zero());

    // Whitney against the twist rule across all small twists
    for (long a = -5; a <= 5; ++a) {
        BundleChernData left = split_bundle_const(5, {a, a - 1});
        BundleChernData right = split_bundle_const(5, {-a, 2});
        CHECK(whitney_sum({left, right}).total == split_bundle_const(5, {a, a - 1, -a, 2}).total);
        CHECK(chern_twist(whitney_sum({left, right}), a).total ==
              whitney_sum({chern_twist(left, a), chern_twist(right, a)}).total);
    }
}

TEST_CASE("dependency locus degree of the scroll family") {
    BundleChernData twisted = chern_twist(chern_of_omega(5), IntPoly({2, 1}));
    IntPoly degree = dependency_locus_degree(twisted);
    CHECK(degree == IntPoly({7, 16, 10}));
    CHECK(degree.eval(0) == 7);
    CHECK(degree.eval(1) == 33);
    CHECK_THROWS_AS(dependency_locus_degree(split_bundle_const(5, {0, 0})), domain_error);
}
