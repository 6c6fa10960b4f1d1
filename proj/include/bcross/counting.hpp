#pragma once

#include <optional>

#include "bcross/bigint.hpp"
#include "bcross/complex.hpp"
#include "bcross/gale.hpp"

namespace bcross {

BigInt catalan(int m);

// Type-A facet count: the Hankel determinant of Catalan numbers and the
// hook-style product are both evaluated exactly and must agree.
BigInt typea_facet_count(int n, int k);

// Type-B lower bound: two binomial determinants and the triple product are
// all evaluated exactly and must agree.
BigInt typeb_lower_bound(int n, int k);

struct TypeBUpper {
    BigInt operative;      // standard facet count of the matching cyclic polytope
    BigInt paper_literal;  // the transcribed case formula, reported side by side
};

// Upper bound: the facet count of the k(n-k)-dimensional cyclic polytope on
// n(n-k) vertices. The operative value comes from the standard closed
// formula, validated against Gale enumeration while small; the literal
// transcription is returned alongside because the even case of the
// transcription disagrees with enumeration (40 vs 20 at n=4, k=2) and the
// enumerated value is the one used.
TypeBUpper typeb_upper_bounds(int n, int k);

struct BoundsReport {
    int n = 0, k = 0;
    BigInt lower;
    std::optional<BigInt> enumerated;
    BigInt upper_operative;
    BigInt upper_paper_literal;
    std::optional<BigInt> type_a_count;  // present when n >= 2k+1
    bool lower_equals_enumerated = false;
};

BoundsReport bounds_report(int n, int k, bool with_enumeration,
                           const EnumerationBudget& budget = {});

}  // namespace bcross
