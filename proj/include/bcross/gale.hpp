#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bcross/bigint.hpp"
#include "bcross/complex.hpp"
#include "bcross/monomial.hpp"

namespace bcross {

// Boundary complex of the d-dimensional cyclic polytope on N vertices,
// accessed combinatorially through Gale's evenness condition on the cycle
// graph C_N with vertices 1..N.
struct CyclicSpec {
    int d = 0, N = 0;
    CyclicSpec(int d, int N);
};

// Gale: sigma is a face iff |sigma| plus the number of odd-sized connected
// components of the induced subgraph of C_N is at most d.
bool gale_is_face(const std::vector<int>& sigma, const CyclicSpec& spec);

// Standard closed-form facet count of the cyclic polytope.
BigInt cyclic_facet_count_formula(int d, int N);

// All facets by exhaustive Gale enumeration, cross-checked against the
// closed formula. Sorted lexicographically.
std::vector<std::vector<int>> cyclic_facets(const CyclicSpec& spec,
                                            std::uint64_t subset_budget = 5'000'000);

// The vertex set of the reduced type-B complex at k = n-2, seen as matrix
// positions, has two entries in each row and column; walking those
// alternating row/column adjacencies is a single 2n-cycle. Labels start at
// position (1, n), the row partner gets 2.
struct CyclicNumbering {
    int n = 0;
    std::vector<std::pair<int, int>> positions;  // index = label-1 -> (row, col), 1-based
    int label_of(int i, int j) const;            // 0 when (i, j) is not a vertex
};

CyclicNumbering cyclic_vertex_numbering(int n, bool reversed = false);

struct CyclicIsoReport {
    int n = 0;
    bool facets_match = false;    // numbered type-B facets == Gale facets
    bool nonfaces_ok = false;     // minor supports map to all-singleton label sets
    bool reversed_ok = false;     // same facet match under the reversed numbering
    bool pass = false;
    std::size_t typeb_facets = 0;
    std::size_t gale_facets = 0;
};

// Checks that the reduced type-B complex at k = n-2 is the boundary complex
// of the (2n-4)-dimensional cyclic polytope on 2n vertices.
CyclicIsoReport verify_cyclic_iso(int n, const EnumerationBudget& budget = {});

}  // namespace bcross
