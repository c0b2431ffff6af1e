#include "sheafreg/quadric.hpp"

#include "sheafreg/bott.hpp"
#include "sheafreg/les.hpp"

#include <doctest.h>

using namespace sheafreg;

TEST_CASE("divisor class validation") {
    CHECK_THROWS_AS(QuadricDivisorSpec::rank4(3, 4, 2), domain_error);
    CHECK_THROWS_AS(QuadricDivisorSpec::rank4(1, 2, 1), domain_error);
    CHECK_THROWS_AS(QuadricDivisorSpec::rank4(3, 0, 0), domain_error);
    CHECK_THROWS_AS(QuadricDivisorSpec::rank3(3, 0), domain_error);
    // order of the pair does not matter
    CHECK(QuadricDivisorSpec::rank4(3, 2, 3).degree() == 5);
}

TEST_CASE("classification by parity of the degree") {
    Classification ci = classify(QuadricDivisorSpec::rank4(3, 3, 3));
    CHECK(ci.kind == Classification::Kind::CompleteIntersection);
    CHECK(ci.hypersurface_degree == 3);
    CHECK(QuadricDivisorSpec::rank4(3, 3, 3).degree() == 6);

    Classification linked = classify(QuadricDivisorSpec::rank4(3, 3, 2));
    CHECK(linked.kind == Classification::Kind::LinkedToLinear);
    CHECK(linked.hypersurface_degree == 3);
    CHECK(QuadricDivisorSpec::rank4(3, 3, 2).degree() == 5);

    Classification rank3 = classify(QuadricDivisorSpec::rank3(2, 5));
    CHECK(rank3.kind == Classification::Kind::LinkedToLinear);
    CHECK(rank3.hypersurface_degree == 3);
}

TEST_CASE("pushforward series values") {
    for (int n = 2; n <= 4; ++n)
        for (int a = 2; a <= 6; ++a) {
            QuadricDivisorSpec linked = QuadricDivisorSpec::rank4(n, a, a - 1);
            CHECK(series_coh(linked, 0, a) == 2);
            CHECK(series_coh(linked, 0, a + 1) == 2 * n + 4);
            for (int k = 2; k < a; ++k)
                CHECK(series_coh(linked, 0, k) == 0);

            QuadricDivisorSpec ci = QuadricDivisorSpec::rank4(n, a, a);
            CHECK(series_coh(ci, 0, a) == 1);

            QuadricDivisorSpec odd = QuadricDivisorSpec::rank3(n, 2 * a - 1);
            CHECK(series_coh(odd, 0, a) == 2);
            CHECK(series_coh(odd, 0, a + 1) == 2 * n + 4);

            QuadricDivisorSpec even = QuadricDivisorSpec::rank3(n, 2 * a);
            CHECK(series_coh(even, 0, a) == 1);

            for (int k = -10; k <= a + 10; ++k) {
                CHECK(series_coh(linked, 1, k) == 0);
                CHECK(series_coh(ci, 1, k) == 0);
                CHECK(series_coh(odd, 1, k) == 0);
            }
        }
    CHECK_THROWS_AS(series_coh(QuadricDivisorSpec::rank4(3, 2, 1), 2, 0), domain_error);
}

TEST_CASE("resolution in the linked case") {
    for (int a = 2; a <= 6; ++a) {
        QuadricDivisorSpec spec = QuadricDivisorSpec::rank4(3, a, a - 1);
        BettiTable t = linked_resolution(spec);
        Int generators = 0;
        for (const auto& [key, v] : t.entries())
            if (key.first == 0)
                generators += v;
        CHECK(generators == 3);
        CHECK(t.entry(1, a + 1) == 2);
        CHECK(regularity_of_table(t) == a);
        CHECK(regularity_of_table(t) == (spec.degree() + 1) / 2);
    }
    CHECK_THROWS_AS(linked_resolution(QuadricDivisorSpec::rank4(3, 2, 2)), domain_error);
}

TEST_CASE("series and resolution agree on the ideal of X in the ambient space") {
    for (int n = 2; n <= 3; ++n)
        for (int a = 2; a <= 4; ++a)
            for (int parity = 0; parity <= 1; ++parity) {
                QuadricDivisorSpec spec =
                    parity == 0 ? QuadricDivisorSpec::rank4(n, a, a - 1)
                                : QuadricDivisorSpec::rank4(n, a, a);
                BettiTable res = resolution_of(spec);
                const int N = spec.ambient();
                for (int k = 0; k <= 2 * a + 2; ++k)
                    CHECK(coh_line(N, k - 2, 0) + series_coh(spec, 0, k) ==
                          hilbert_function(res, k));
                // rank 3 with the same degree
                QuadricDivisorSpec r3 = QuadricDivisorSpec::rank3(n, spec.degree());
                for (int k = 0; k <= 2 * a + 2; ++k)
                    CHECK(coh_line(N, k - 2, 0) + series_coh(r3, 0, k) ==
                          hilbert_function(resolution_of(r3), k));
            }
}

TEST_CASE("depth at the vertex and vertex containment") {
    CHECK(depth_at_vertex(QuadricDivisorSpec::rank4(3, 3, 2)) == 3);
    CHECK(depth_at_vertex(QuadricDivisorSpec::rank4(2, 2, 2)) == 3);
    CHECK(depth_at_vertex(QuadricDivisorSpec::rank3(3, 5)) == 2);
    // rank-4 depth stays at least 3 for every class
    for (int a = 1; a <= 5; ++a)
        CHECK(depth_at_vertex(QuadricDivisorSpec::rank4(2, a, a)) >= 3);

    CHECK(vertex_containment(QuadricDivisorSpec::rank4(3, 3, 2)));
    CHECK_FALSE(vertex_containment(QuadricDivisorSpec::rank4(3, 3, 3)));
    CHECK(vertex_containment(QuadricDivisorSpec::rank3(3, 5)));
}

TEST_CASE("the full ideal table of a cone divisor is Cohen-Macaulay") {
    for (int parity = 0; parity <= 1; ++parity) {
        QuadricDivisorSpec spec = parity == 0 ? QuadricDivisorSpec::rank4(3, 3, 2)
                                              : QuadricDivisorSpec::rank4(3, 3, 3);
        CohTable table = sheaf_table_from_betti(resolution_of(spec));
        for (int i = 1; i <= 3; ++i)
            for (int k = -8; k <= 8; ++k)
                CHECK(table.value(i, k).is_zero());
    }
}

TEST_CASE("the relative-ideal expression slots into the solver") {
    QuadricDivisorSpec spec = QuadricDivisorSpec::rank4(3, 3, 2);
    const int N = spec.ambient();
    // 0 -> O(-2) -> I_X -> I_{X/Q} -> 0 with the middle unknown
    CohTable ideal = les_solve(ShortExactSeq::with_unknown_mid(SheafExpr::line_bundle(N, -2),
                                                               relative_ideal_expr(spec)));
    BettiTable res = resolution_of(spec);
    for (int k = 0; k <= 6; ++k) {
        DimRange v = ideal.value(0, k);
        REQUIRE(v.exact());
        CHECK(v.lo == hilbert_function(res, k));
    }
}
