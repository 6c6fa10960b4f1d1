#pragma once

#include <cstdint>
#include <vector>

#include "bcross/complex.hpp"

namespace bcross {

// Reduced chain complex of a graded face list over the two-element field.
// Level t carries the dimension t-1 faces; the empty face supplies the
// augmentation, so all Betti numbers below are reduced.
class ChainComplexGF2 {
  public:
    explicit ChainComplexGF2(const GradedFaces& faces);  // checks closure and dd == 0

    // rank of the boundary map out of level t; index 0 is the zero map
    const std::vector<int>& boundary_ranks() const { return ranks_; }

    // reduced Betti numbers, index 0 <-> dimension -1
    std::vector<long long> reduced_betti() const;

  private:
    std::vector<long long> level_sizes_;
    std::vector<int> ranks_;
};

std::vector<long long> betti_gf2(const GradedFaces& faces);

// Reduced Betti profile of a sphere of the given dimension, padded to faces
// of dimension top_dim. sphere_dim == -1 means the complex { empty set }.
std::vector<long long> sphere_profile(int sphere_dim, int top_dim);
bool is_sphere_profile(const std::vector<long long>& betti, int sphere_dim);

enum class LinkPolicy { All, Sample, None };

// Full link sweep is factorially expensive; default to it only on small
// ground sets and sample elsewhere.
LinkPolicy default_link_policy(const GroundSet& g);

struct SphereCheck {
    std::vector<int> face;
    int expected_sphere_dim = -2;
    std::vector<long long> betti;
};

struct HomologySphereReport {
    bool pass = false;
    int sphere_dim = -2;
    std::vector<long long> complex_betti;
    std::size_t checks_run = 0;
    std::vector<SphereCheck> failures;
    LinkPolicy policy = LinkPolicy::None;
    std::uint64_t seed = 0;
    std::size_t sample_size = 0;
};

// Checks the complex itself and, per policy, the links of its faces against
// the sphere profiles of the appropriate dimensions.
HomologySphereReport is_homology_sphere(const SimplicialComplex& cx, LinkPolicy policy,
                                        std::size_t sample_size = 50, std::uint64_t seed = 12345,
                                        const EnumerationBudget& budget = {});

}  // namespace bcross
