#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bcross/polygon.hpp"

namespace bcross {

using Face = FaceBits;

struct EnumerationBudget {
    std::uint64_t node_cap = 10'000'000;  // DFS nodes == faces visited
    std::uint64_t face_cap = 1'000'000;   // stored faces / facets
};

struct SimplicialComplex {
    GroundSet ground;
    std::vector<Face> facets;  // canonically sorted antichain
    int dim = -1;
    bool pure = true;

    std::size_t facet_count() const { return facets.size(); }
    std::vector<std::vector<int>> facet_index_lists() const;
};

// How a set of type-B classes is tested for a (k+1)-crossing. Symmetrized is
// the operative rule: classes expand to their full orbits in the 2n-gon and
// the crossing test runs on the expanded chord set. PairwiseReps is the
// alternative reading (k+1 classes pairwise admitting crossing
// representatives); it is kept only so the two can be compared.
enum class ClassCrossingRule { Symmetrized, PairwiseReps };

bool is_face(const GroundSet& g, const Face& s,
             ClassCrossingRule rule = ClassCrossingRule::Symmetrized);

// All maximal crossing-free sets, depth-first in canonical vertex order with
// a maximality-by-closure test. Asserts the purity/dimension theorems for the
// Symmetrized rule and throws VerificationFailure if they fail.
SimplicialComplex enumerate_facets(const GroundSet& g, const EnumerationBudget& budget = {},
                                   ClassCrossingRule rule = ClassCrossingRule::Symmetrized);

struct SymmetricComplex {
    SimplicialComplex complex;         // rotation-invariant facets only
    std::vector<int> diameter_counts;  // per kept facet
    std::size_t ambient_facets = 0;    // facet count before the symmetry filter
};

// Facets of the reduced complex of the ngon-gon (ngon even) that are fixed
// setwise by the 180-degree rotation, with their diameter counts.
SymmetricComplex enumerate_symmetric_facets(int ngon, int k, const EnumerationBudget& budget = {});

// Graded face lists; level t holds the faces of dimension t-1, so level 0 is
// always { empty face }.
struct GradedFaces {
    std::vector<std::vector<Face>> levels;

    int top_dimension() const { return static_cast<int>(levels.size()) - 2; }
    std::vector<long long> counts() const;
};

GradedFaces all_faces(const GroundSet& g, const EnumerationBudget& budget = {});

// Downward closure of an arbitrary facet list (links, hand-built complexes).
GradedFaces closure_of_facets(const std::vector<Face>& facets,
                              std::uint64_t face_cap = EnumerationBudget{}.face_cap);

struct FHVector {
    std::vector<long long> f;  // f[0] = 1 for the empty face, ..., f[d] = facet-level count
    std::vector<long long> h;  // h[0..d]
    bool h_symmetric = false;
    bool h_unimodal = false;
};

FHVector fh_vector(const std::vector<long long>& face_counts_by_level);
FHVector fh_vector(const GradedFaces& faces);
FHVector fh_vector(const SimplicialComplex& cx,
                   std::uint64_t face_cap = EnumerationBudget{}.face_cap);

std::string hilbert_series_text(const std::vector<long long>& h);

// Facets { F \ sigma : sigma subset of F }; valid for pure complexes (checked).
SimplicialComplex link(const SimplicialComplex& cx, const Face& sigma);

// Side-by-side enumeration of the two class-crossing readings for a type-B
// ground set. Divergence is recorded, not decided.
struct ReadingComparison {
    int n = 0, k = 0;
    bool coincide = false;
    std::size_t facets_symmetrized = 0;
    std::size_t facets_pairwise = 0;
};

ReadingComparison compare_class_crossing_readings(int n, int k,
                                                  const EnumerationBudget& budget = {});

}  // namespace bcross
