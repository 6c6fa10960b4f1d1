#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bcross/counting.hpp"
#include "bcross/errors.hpp"

using namespace bcross;

TEST_CASE("catalan numbers") {
    CHECK(catalan(0) == 1);
    CHECK(catalan(4) == 14);
    CHECK(catalan(6) == 132);
    CHECK(catalan(10) == 16796);
}

TEST_CASE("type A counts: determinant vs product is asserted internally") {
    CHECK(typea_facet_count(5, 1) == 5);
    CHECK(typea_facet_count(8, 2) == 84);
    for (int k = 1; k <= 5; ++k) CHECK(typea_facet_count(2 * k + 1, k) == 1);
    // the assert runs across the whole small range
    for (int n = 3; n <= 12; ++n)
        for (int k = 1; 2 * k + 1 <= n; ++k) CHECK(typea_facet_count(n, k) > 0);
}

TEST_CASE("type B lower bound: all three forms agree across the range") {
    CHECK(typeb_lower_bound(3, 1) == 6);
    CHECK(typeb_lower_bound(4, 2) == 20);
    CHECK(typeb_lower_bound(5, 3) == 50);
    CHECK(typeb_lower_bound(5, 2) == 175);
    for (int n = 2; n <= 12; ++n) {
        CHECK(typeb_lower_bound(n, 1) == binomial(2 * n - 2, n - 1));
        CHECK(typeb_lower_bound(n, n - 1) == n);
        for (int k = 1; k <= n - 1; ++k) CHECK(typeb_lower_bound(n, k) > 0);
    }
}

TEST_CASE("type B upper bounds") {
    const TypeBUpper u42 = typeb_upper_bounds(4, 2);
    CHECK(u42.operative == 20);
    CHECK(u42.paper_literal == 40);  // the documented transcription discrepancy

    const TypeBUpper u31 = typeb_upper_bounds(3, 1);
    CHECK(u31.operative == 6);

    // odd dimension: the transcribed formula and the standard one coincide
    const TypeBUpper u41 = typeb_upper_bounds(4, 1);
    CHECK(u41.operative == u41.paper_literal);
    CHECK(u41.operative == 2 * binomial(10, 1));
    for (int n = 2; n <= 8; ++n)
        for (int k = 1; k <= n - 1; ++k)
            if ((k * (n - k)) % 2 == 1) {
                const TypeBUpper u = typeb_upper_bounds(n, k);
                CHECK(u.operative == u.paper_literal);
            }
}

TEST_CASE("lower bound never exceeds the operative upper bound, n <= 8") {
    for (int n = 2; n <= 8; ++n)
        for (int k = 1; k <= n - 1; ++k)
            CHECK(typeb_lower_bound(n, k) <= typeb_upper_bounds(n, k).operative);
}

TEST_CASE("bounds reports with enumeration") {
    const BoundsReport r31 = bounds_report(3, 1, true);
    CHECK(r31.lower == 6);
    CHECK(*r31.enumerated == 6);
    CHECK(r31.lower_equals_enumerated);

    const BoundsReport r42 = bounds_report(4, 2, true);
    CHECK(r42.lower == 20);
    CHECK(*r42.enumerated == 20);
    CHECK(r42.upper_operative == 20);
    CHECK(r42.upper_paper_literal == 40);

    const BoundsReport r52 = bounds_report(5, 2, true);
    CHECK(r52.lower == 175);
    CHECK(*r52.enumerated >= r52.lower);
    MESSAGE("n=5 k=2 enumerated count: ", r52.enumerated->get_str(),
            " (conjectured equal to the lower bound: ", r52.lower_equals_enumerated, ")");

    const BoundsReport no_enum = bounds_report(6, 2, false);
    CHECK_FALSE(no_enum.enumerated.has_value());
    CHECK(no_enum.type_a_count.has_value());
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(typea_facet_count(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(typeb_lower_bound(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(catalan(-1), std::invalid_argument);
}
