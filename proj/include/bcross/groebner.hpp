#pragma once

#include <cstdint>
#include <vector>

#include "bcross/bigint.hpp"
#include "bcross/complex.hpp"
#include "bcross/monomial.hpp"

namespace bcross {

struct IdealBasis {
    std::vector<Poly<Rat>> gens;  // nonzero, leading coefficient 1
    TermOrder order;
};

IdealBasis make_ideal_basis(std::vector<Poly<Rat>> gens, TermOrder order);

struct MonomialIdeal {
    std::vector<Monomial> mingens;  // divisibility antichain, sorted ascending

    bool contains(const Monomial& m) const {
        for (const Monomial& g : mingens)
            if (g.divides(m)) return true;
        return false;
    }
    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
};

MonomialIdeal make_monomial_ideal(std::vector<Monomial> gens, const TermOrder& ord);

// Full reduction: no term of the result is divisible by any leading monomial
// of the basis. Reducers are tried lowest index first, so the result is
// deterministic.
Poly<Rat> normal_form(const Poly<Rat>& p, const std::vector<Poly<Rat>>& basis,
                      const TermOrder& ord);

struct GroebnerOptions {
    std::uint64_t spair_cap = 200'000;
    int max_degree = 100;
    double wall_seconds = 600.0;
    bool self_check = true;     // re-reduce every S-polynomial of the final basis
    bool crosscheck_fp = true;  // rerun over the 32003-element field, compare lm sets
};

struct GroebnerResult {
    std::vector<Poly<Rat>> basis;  // reduced basis, monic, sorted by leading monomial
    bool input_was_gb = false;     // no S-polynomial of the input survived reduction
    std::uint64_t spairs_reduced = 0;
    std::uint64_t spairs_skipped = 0;
    double seconds = 0.0;
};

GroebnerResult buchberger(const IdealBasis& input, const GroebnerOptions& opts = {});

// Minimal generators of the leading-monomial ideal of a Groebner basis.
MonomialIdeal initial_ideal(const std::vector<Poly<Rat>>& gb, const TermOrder& ord);

// Every S-polynomial of the basis reduces to zero (no selection criteria).
bool verify_groebner_basis(const std::vector<Poly<Rat>>& basis, const TermOrder& ord);

// All (k+1)-minors of the generic n x n matrix, monic under the order.
std::vector<Poly<Rat>> minor_ideal_gens(int n, int k, const TermOrder& ord);

// The three equivalent statements, computed independently:
//   (a) the (k+1)-minors are a Groebner basis under the order,
//   (b) the Stanley-Reisner generators equal the initial ideal,
//   (c) the type-B facet count equals the binomial-determinant lower bound.
// Their agreement is itself asserted by the caller; the containment of the
// Stanley-Reisner ideal in the initial ideal is checked unconditionally.
struct GroebnerEquivalenceReport {
    int n = 0, k = 0;
    bool minors_are_gb = false;
    bool sr_equals_initial = false;
    bool count_equals_lower = false;
    bool all_equal = false;
    bool all_true = false;
    bool sr_contained_in_initial = false;
    BigInt facet_count;
    BigInt lower_bound;
    std::size_t gb_size = 0, sr_gens = 0, initial_gens = 0;
    double seconds = 0.0;
};

GroebnerEquivalenceReport check_groebner_equivalences(int n, int k,
                                                      const GroebnerOptions& gopts = {},
                                                      const EnumerationBudget& budget = {});

// Probes of the simplicial complex attached to a squarefree monomial ideal
// on nvars vertices (brute force; nvars <= 20).
int squarefree_complex_dimension(const MonomialIdeal& ideal, int nvars);
long long squarefree_complex_top_face_count(const MonomialIdeal& ideal, int nvars);

}  // namespace bcross
