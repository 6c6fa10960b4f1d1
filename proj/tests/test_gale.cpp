#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "bcross/counting.hpp"
#include "bcross/errors.hpp"
#include "bcross/gale.hpp"

using namespace bcross;

TEST_CASE("face test: documented instances") {
    const CyclicSpec spec(4, 8);
    CHECK(gale_is_face({}, spec));
    CHECK(gale_is_face({1, 2, 5, 6}, spec));
    CHECK_FALSE(gale_is_face({1, 3, 5}, spec));
    CHECK(gale_is_face({1, 2, 3, 4}, spec));
    CHECK_THROWS_AS(gale_is_face({0}, spec), std::invalid_argument);
    CHECK_THROWS_AS(CyclicSpec(3, 8), std::invalid_argument);
    CHECK_THROWS_AS(CyclicSpec(8, 8), std::invalid_argument);
}

TEST_CASE("faces are closed under subsets") {
    std::mt19937 rng(11);
    const CyclicSpec spec(6, 11);
    for (int rep = 0; rep < 500; ++rep) {
        std::vector<int> sigma;
        for (int v = 1; v <= spec.N; ++v)
            if (rng() % 3 == 0) sigma.push_back(v);
        if (!gale_is_face(sigma, spec)) continue;
        for (std::size_t drop = 0; drop < sigma.size(); ++drop) {
            std::vector<int> sub;
            for (std::size_t i = 0; i < sigma.size(); ++i)
                if (i != drop) sub.push_back(sigma[i]);
            CHECK(gale_is_face(sub, spec));
        }
    }
}

TEST_CASE("facet enumeration matches the closed formula") {
    CHECK(cyclic_facets(CyclicSpec(4, 8)).size() == 20);
    CHECK(cyclic_facets(CyclicSpec(6, 10)).size() == 50);
    const auto pentagon_like = cyclic_facets(CyclicSpec(2, 5));
    CHECK(pentagon_like.size() == 5);
    for (const auto& f : pentagon_like) CHECK((f[1] - f[0] == 1 || (f[0] == 1 && f[1] == 5)));

    for (int d = 2; d <= 6; d += 2)
        for (int N = d + 1; N <= 12; ++N) {
            const auto facets = cyclic_facets(CyclicSpec(d, N));
            CHECK(BigInt(static_cast<unsigned long>(facets.size())) == cyclic_facet_count_formula(d, N));
        }
}

TEST_CASE("vertex numbering walks a single 2n-cycle") {
    const CyclicNumbering six = cyclic_vertex_numbering(6);
    CHECK(six.label_of(1, 6) == 1);
    CHECK(six.label_of(1, 5) == 2);
    CHECK(six.label_of(6, 5) == 3);
    CHECK(six.label_of(2, 6) == 12);
    CHECK(six.label_of(2, 1) == 11);
    CHECK(six.label_of(3, 1) == 10);
    CHECK(six.label_of(1, 1) == 0);  // not a vertex

    for (int n = 3; n <= 8; ++n) {
        const CyclicNumbering num = cyclic_vertex_numbering(n);
        CHECK(num.positions.size() == static_cast<std::size_t>(2 * n));
        std::set<std::pair<int, int>> distinct(num.positions.begin(), num.positions.end());
        CHECK(distinct.size() == static_cast<std::size_t>(2 * n));
        // consecutive labels share a row or a column, cyclically
        for (int t = 0; t < 2 * n; ++t) {
            const auto a = num.positions[static_cast<std::size_t>(t)];
            const auto b = num.positions[static_cast<std::size_t>((t + 1) % (2 * n))];
            CHECK((a.first == b.first || a.second == b.second));
        }
    }
}

TEST_CASE("the reversed numbering is also a valid cycle numbering") {
    for (int n = 3; n <= 6; ++n) {
        const CyclicNumbering num = cyclic_vertex_numbering(n, true);
        for (int t = 0; t < 2 * n; ++t) {
            const auto a = num.positions[static_cast<std::size_t>(t)];
            const auto b = num.positions[static_cast<std::size_t>((t + 1) % (2 * n))];
            CHECK((a.first == b.first || a.second == b.second));
        }
    }
}

TEST_CASE("boundary isomorphism with the cyclic polytope") {
    for (int n = 3; n <= 5; ++n) {
        const CyclicIsoReport rep = verify_cyclic_iso(n);
        CHECK(rep.facets_match);
        CHECK(rep.nonfaces_ok);
        CHECK(rep.reversed_ok);
        CHECK(rep.pass);
        if (n == 3) CHECK(rep.typeb_facets == 6);
        if (n == 4) {
            CHECK(rep.typeb_facets == 20);
            CHECK(rep.gale_facets == 20);
        }
        if (n == 5) {
            CHECK(rep.typeb_facets == 50);
            CHECK(rep.gale_facets == 50);
        }
    }
}
