#pragma once

#include <array>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "bcross/bits.hpp"

namespace bcross {

// A chord of the convex N-gon with vertices 0..N-1 numbered clockwise.
// Hull edges count as chords here; the short-chord filter removes them from
// reduced ground sets.
struct Diagonal {
    int a = 0, b = 1;  // 0 <= a < b < ngon
    int ngon = 3;

    Diagonal() = default;
    Diagonal(int x, int y, int n);

    int cyclic_length() const {
        int s = b - a;
        return s < ngon - s ? s : ngon - s;
    }
    bool is_diameter() const { return ngon % 2 == 0 && b - a == ngon / 2; }
    std::string label() const;

    friend bool operator==(const Diagonal&, const Diagonal&) = default;
    friend auto operator<=>(const Diagonal& x, const Diagonal& y) {
        return std::tie(x.a, x.b) <=> std::tie(y.a, y.b);
    }
};

// True iff the chords cross in the open interior; chords sharing an endpoint
// never cross. Purely combinatorial: exactly one endpoint of d2 lies strictly
// inside the arc (d1.a, d1.b).
bool crosses(const Diagonal& d1, const Diagonal& d2);

// Image under the 180-degree rotation of the (even) polygon, in canonical
// a < b form. Involutive.
Diagonal rotate_half(const Diagonal& d);

// crosses(d, rotate_half(d)); contractually always false.
bool never_crosses_own_rotation(const Diagonal& d);

// Orbit of a chord of the 2n-gon under the 180-degree rotation. Canonical
// representative: the orbit member with the smaller (a, b).
struct DiagonalClass {
    Diagonal rep;

    explicit DiagonalClass(const Diagonal& d);
    bool is_diameter() const { return rep.is_diameter(); }
    int orbit_size() const { return is_diameter() ? 1 : 2; }
    std::vector<Diagonal> members() const;
    std::string label() const { return rep.label(); }

    friend bool operator==(const DiagonalClass&, const DiagonalClass&) = default;
    friend auto operator<=>(const DiagonalClass& x, const DiagonalClass& y) {
        return x.rep <=> y.rep;
    }
};

enum class Mode { TypeA, TypeB, TypeBSym };

std::string mode_name(Mode m);
Mode mode_from_name(const std::string& s);

// Vertex set of a reduced complex plus the frozen join-simplex part.
//
//   TypeA    n-gon chords of cyclic length > k; frozen = length <= k.
//   TypeB    rotation classes of the 2n-gon chords of length > k;
//            vertices store canonical representatives.
//   TypeBSym the 2n-gon chords of length > k themselves, with the rotation
//            pairing recorded, for enumerating rotation-invariant facets.
struct GroundSet {
    Mode mode = Mode::TypeA;
    int n = 0, k = 0;
    int ngon = 0;  // polygon the vertices live on (n or 2n)

    std::vector<Diagonal> vertices;  // canonical order; TypeB entries are class reps
    std::vector<Diagonal> frozen;    // join part, canonical reps for TypeB

    // Crossing universe: every chord occurring in some vertex orbit.
    // TypeA / TypeBSym: universe == vertices.
    std::vector<Diagonal> universe;
    std::vector<std::array<int, 2>> vertex_diags;  // universe indices; [1] == -1 for singletons
    std::vector<int> rotate_partner;               // TypeBSym: vertex index of the rotated chord

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    std::string vertex_label(int v) const { return vertices.at(static_cast<std::size_t>(v)).label(); }
    int index_of_vertex(const Diagonal& canonical_rep) const;  // -1 if absent
    DiagonalClass vertex_class(int v) const;                   // TypeB only

    // Facet cardinality the purity theorems predict for this ground set.
    int expected_facet_size() const;
};

GroundSet ground_set(Mode mode, int n, int k);

// Largest pairwise-crossing subset (max clique of the crossing graph).
int max_crossing_number(std::span<const Diagonal> s);
bool has_crossing_of_size(std::span<const Diagonal> s, int size);

// Clique search over adjacency bit rows, shared by the enumeration engine.
bool mask_has_clique(const std::vector<FaceBits>& adjacency, FaceBits candidates, int size);

}  // namespace bcross
