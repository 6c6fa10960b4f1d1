#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "bcross/errors.hpp"
#include "bcross/polygon.hpp"

using namespace bcross;

namespace {

// Independent geometric oracle: place the polygon vertices at roots of
// unity and test proper segment intersection with orientation signs. Chords
// of a circle never produce degenerate orientations at distinct vertices,
// so long double is exact enough here.
struct Pt {
    long double x, y;
};

Pt vertex_point(int i, int n) {
    const long double t = -2.0L * std::acos(-1.0L) * i / n;  // clockwise
    return {std::cos(t), std::sin(t)};
}

long double orient(Pt a, Pt b, Pt c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

bool crosses_geometric(const Diagonal& d1, const Diagonal& d2) {
    if (d1.a == d2.a || d1.a == d2.b || d1.b == d2.a || d1.b == d2.b) return false;
    const Pt a = vertex_point(d1.a, d1.ngon), b = vertex_point(d1.b, d1.ngon);
    const Pt c = vertex_point(d2.a, d2.ngon), d = vertex_point(d2.b, d2.ngon);
    return orient(a, b, c) * orient(a, b, d) < 0 && orient(c, d, a) * orient(c, d, b) < 0;
}

std::vector<Diagonal> all_diagonals(int n) {
    std::vector<Diagonal> out;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) out.emplace_back(a, b, n);
    return out;
}

// exponential oracle: largest pairwise-crossing subset by scanning all subsets
int max_crossing_brute(const std::vector<Diagonal>& s) {
    REQUIRE(s.size() <= 20);
    int best = 0;
    for (unsigned mask = 0; mask < (1u << s.size()); ++mask) {
        std::vector<Diagonal> sub;
        for (std::size_t i = 0; i < s.size(); ++i)
            if ((mask >> i) & 1) sub.push_back(s[i]);
        bool pairwise = true;
        for (std::size_t i = 0; i < sub.size() && pairwise; ++i)
            for (std::size_t j = i + 1; j < sub.size() && pairwise; ++j)
                if (!crosses(sub[i], sub[j])) pairwise = false;
        if (pairwise) best = std::max(best, static_cast<int>(sub.size()));
    }
    return best;
}

}  // namespace

TEST_CASE("crossing matches the stated examples") {
    CHECK(crosses(Diagonal(0, 2, 4), Diagonal(1, 3, 4)));
    CHECK_FALSE(crosses(Diagonal(0, 2, 6), Diagonal(2, 4, 6)));
    CHECK_FALSE(crosses(Diagonal(0, 5, 8), Diagonal(1, 4, 8)));
    CHECK_THROWS_AS(crosses(Diagonal(0, 2, 6), Diagonal(0, 2, 8)), std::invalid_argument);
}

TEST_CASE("crossing agrees with the geometric oracle for all pairs, n <= 12") {
    for (int n = 3; n <= 12; ++n) {
        const auto diags = all_diagonals(n);
        for (const auto& d1 : diags)
            for (const auto& d2 : diags)
                CHECK(crosses(d1, d2) == crosses_geometric(d1, d2));
    }
}

TEST_CASE("crossing is symmetric, irreflexive, rotation- and reflection-invariant") {
    for (int n = 4; n <= 9; ++n) {
        const auto diags = all_diagonals(n);
        for (const auto& d1 : diags) {
            CHECK_FALSE(crosses(d1, d1));
            for (const auto& d2 : diags) {
                const bool c = crosses(d1, d2);
                CHECK(c == crosses(d2, d1));
                for (int off = 1; off < n; ++off) {
                    const Diagonal r1((d1.a + off) % n, (d1.b + off) % n, n);
                    const Diagonal r2((d2.a + off) % n, (d2.b + off) % n, n);
                    CHECK(c == crosses(r1, r2));
                }
                const Diagonal m1(n - 1 - d1.a, n - 1 - d1.b, n);
                const Diagonal m2(n - 1 - d2.a, n - 1 - d2.b, n);
                CHECK(c == crosses(m1, m2));
            }
        }
    }
}

TEST_CASE("rotation examples and involution") {
    CHECK(rotate_half(Diagonal(0, 3, 6)) == Diagonal(0, 3, 6));
    CHECK(rotate_half(Diagonal(0, 2, 6)) == Diagonal(3, 5, 6));
    CHECK(rotate_half(Diagonal(1, 6, 8)) == Diagonal(2, 5, 8));
    CHECK_THROWS_AS(rotate_half(Diagonal(0, 2, 5)), std::invalid_argument);
    for (int n = 4; n <= 16; n += 2)
        for (const auto& d : all_diagonals(n)) CHECK(rotate_half(rotate_half(d)) == d);
}

TEST_CASE("no diagonal crosses its own rotation, exhaustively to n = 16") {
    CHECK_FALSE(never_crosses_own_rotation(Diagonal(0, 5, 8)));
    CHECK_FALSE(never_crosses_own_rotation(Diagonal(0, 3, 6)));
    for (int n = 4; n <= 16; n += 2)
        for (const auto& d : all_diagonals(n)) CHECK_FALSE(never_crosses_own_rotation(d));
}

TEST_CASE("class crossing does not depend on which representative is fixed") {
    for (int n = 4; n <= 12; n += 2) {
        const auto diags = all_diagonals(n);
        for (const auto& d1 : diags)
            for (const auto& d2 : diags) {
                const DiagonalClass c1(d1), c2(d2);
                auto crosses_some = [&](const Diagonal& fixed) {
                    for (const Diagonal& m : c2.members())
                        if (crosses(fixed, m)) return true;
                    return false;
                };
                CHECK(crosses_some(c1.rep) == crosses_some(rotate_half(c1.rep)));
            }
    }
}

TEST_CASE("class canonicalization") {
    const DiagonalClass c(Diagonal(3, 5, 6));
    CHECK(c.rep == Diagonal(0, 2, 6));
    CHECK(c.orbit_size() == 2);
    CHECK(DiagonalClass(Diagonal(1, 4, 6)).orbit_size() == 1);
    CHECK(c.label() == "0-2");
}

TEST_CASE("ground set sizes and ordering") {
    const GroundSet a = ground_set(Mode::TypeA, 6, 1);
    CHECK(a.vertex_count() == 9);
    CHECK(a.frozen.size() == 6);
    CHECK(std::is_sorted(a.vertices.begin(), a.vertices.end()));

    const GroundSet b31 = ground_set(Mode::TypeB, 3, 1);
    CHECK(b31.vertex_count() == 6);

    for (int n = 2; n <= 7; ++n)
        for (int k = 1; k <= n - 1; ++k)
            CHECK(ground_set(Mode::TypeB, n, k).vertex_count() == n * (n - k));

    const GroundSet bs = ground_set(Mode::TypeBSym, 3, 1);
    CHECK(bs.vertex_count() == 9);  // chords of length >= 2 in the hexagon
    for (int v = 0; v < bs.vertex_count(); ++v)
        CHECK(bs.rotate_partner[bs.rotate_partner[v]] == v);

    CHECK_THROWS_AS(ground_set(Mode::TypeA, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(ground_set(Mode::TypeB, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(ground_set(Mode::TypeB, 3, 0), std::invalid_argument);
}

TEST_CASE("max crossing number: stated cases and the brute-force oracle") {
    const std::vector<Diagonal> diameters = {Diagonal(0, 3, 6), Diagonal(1, 4, 6), Diagonal(2, 5, 6)};
    CHECK(max_crossing_number(diameters) == 3);

    const std::vector<Diagonal> fan = {Diagonal(0, 2, 6), Diagonal(0, 3, 6), Diagonal(0, 4, 6)};
    CHECK(max_crossing_number(fan) == 1);

    // crossing pairs here are 13-24, 24-35, 35-14: a path, so no triple
    const std::vector<Diagonal> mixed = {Diagonal(1, 3, 6), Diagonal(2, 4, 6), Diagonal(3, 5, 6),
                                         Diagonal(1, 4, 6)};
    CHECK(max_crossing_brute(mixed) == 2);
    CHECK(max_crossing_number(mixed) == 2);

    CHECK(max_crossing_number(std::vector<Diagonal>{}) == 0);
}

TEST_CASE("max crossing number agrees with brute force on random subsets") {
    std::mt19937 rng(7);
    for (int n = 5; n <= 10; ++n) {
        const auto diags = all_diagonals(n);
        for (int rep = 0; rep < 40; ++rep) {
            std::vector<Diagonal> sub;
            for (const auto& d : diags)
                if (rng() % 3 == 0 && sub.size() < 12) sub.push_back(d);
            CHECK(max_crossing_number(sub) == max_crossing_brute(sub));
        }
    }
}

TEST_CASE("short chords sit in no deep crossing") {
    // every (k+1)-crossing avoids the chords of cyclic length <= k
    for (int n = 4; n <= 10; ++n) {
        const auto diags = all_diagonals(n);
        for (int k = 1; k <= (n - 1) / 2; ++k)
            for (const auto& d : diags) {
                if (d.cyclic_length() > k) continue;
                std::vector<Diagonal> crossing_d;
                for (const auto& e : diags)
                    if (crosses(d, e)) crossing_d.push_back(e);
                // d plus any j mutually-crossing chords through it: j <= k-1+1
                CHECK(max_crossing_number(crossing_d) + 1 <= k);
            }
    }
}
