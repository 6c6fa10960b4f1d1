#include "bcross/homology.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "bcross/errors.hpp"

namespace bcross {

namespace {

using BitRow = std::vector<std::uint64_t>;

int gf2_rank(std::vector<BitRow> rows, int ncols) {
    int rank = 0;
    const int nrows = static_cast<int>(rows.size());
    for (int col = 0; col < ncols && rank < nrows; ++col) {
        const std::size_t word = static_cast<std::size_t>(col) >> 6;
        const std::uint64_t bit = std::uint64_t{1} << (col & 63);
        int pivot = -1;
        for (int r = rank; r < nrows; ++r)
            if (rows[static_cast<std::size_t>(r)][word] & bit) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(pivot)]);
        for (int r = rank + 1; r < nrows; ++r)
            if (rows[static_cast<std::size_t>(r)][word] & bit)
                for (std::size_t ww = 0; ww < rows[static_cast<std::size_t>(r)].size(); ++ww)
                    rows[static_cast<std::size_t>(r)][ww] ^= rows[static_cast<std::size_t>(rank)][ww];
        ++rank;
    }
    return rank;
}

}  // namespace

ChainComplexGF2::ChainComplexGF2(const GradedFaces& faces) {
    const auto& levels = faces.levels;
    if (levels.empty() || levels[0].size() != 1 || levels[0][0].any())
        throw std::invalid_argument("graded face list must start with the empty face");

    std::vector<std::map<FaceBits, int>> index(levels.size());
    for (std::size_t t = 0; t < levels.size(); ++t) {
        for (std::size_t i = 0; i < levels[t].size(); ++i) {
            if (levels[t][i].count() != static_cast<int>(t))
                throw std::invalid_argument("face listed at the wrong dimension level");
            index[t][levels[t][i]] = static_cast<int>(i);
        }
        level_sizes_.push_back(static_cast<long long>(levels[t].size()));
    }

    // boundary rows per level; row of a face = indicator of its codim-1 subfaces
    std::vector<std::vector<BitRow>> boundary(levels.size());
    ranks_.assign(levels.size(), 0);  // ranks_[0] stays 0: level 0 maps to nothing
    for (std::size_t t = 1; t < levels.size(); ++t) {
        const int ncols = static_cast<int>(levels[t - 1].size());
        const std::size_t words = static_cast<std::size_t>((ncols + 63) / 64);
        boundary[t].assign(levels[t].size(), BitRow(words, 0));
        for (std::size_t i = 0; i < levels[t].size(); ++i) {
            for (int v : levels[t][i].indices()) {
                const FaceBits sub = levels[t][i].without(v);
                auto it = index[t - 1].find(sub);
                if (it == index[t - 1].end())
                    throw std::invalid_argument("face list is not downward closed");
                boundary[t][i][static_cast<std::size_t>(it->second) >> 6] ^=
                    std::uint64_t{1} << (it->second & 63);
            }
        }
        ranks_[t] = gf2_rank(boundary[t], ncols);
    }

    // boundary-of-boundary must vanish
    for (std::size_t t = 2; t < levels.size(); ++t) {
        const std::size_t words = boundary[t - 1].empty() ? 0 : boundary[t - 1][0].size();
        for (std::size_t i = 0; i < levels[t].size(); ++i) {
            BitRow acc(words, 0);
            for (int v : levels[t][i].indices()) {
                const FaceBits sub = levels[t][i].without(v);
                const int si = index[t - 1].at(sub);
                for (std::size_t ww = 0; ww < words; ++ww)
                    acc[ww] ^= boundary[t - 1][static_cast<std::size_t>(si)][ww];
            }
            for (std::uint64_t x : acc)
                if (x) throw VerificationFailure("boundary of boundary is nonzero over GF(2)");
        }
    }
}

std::vector<long long> ChainComplexGF2::reduced_betti() const {
    const std::size_t top = level_sizes_.size();
    std::vector<long long> betti(top, 0);
    for (std::size_t t = 0; t < top; ++t) {
        const long long rank_out = ranks_[t];
        const long long rank_in = t + 1 < top ? ranks_[t + 1] : 0;
        betti[t] = level_sizes_[t] - rank_out - rank_in;
    }
    return betti;
}

std::vector<long long> betti_gf2(const GradedFaces& faces) {
    return ChainComplexGF2(faces).reduced_betti();
}

std::vector<long long> sphere_profile(int sphere_dim, int top_dim) {
    std::vector<long long> out(static_cast<std::size_t>(top_dim) + 2, 0);
    out.at(static_cast<std::size_t>(sphere_dim + 1)) = 1;
    return out;
}

bool is_sphere_profile(const std::vector<long long>& betti, int sphere_dim) {
    for (std::size_t t = 0; t < betti.size(); ++t) {
        const long long want = static_cast<int>(t) == sphere_dim + 1 ? 1 : 0;
        if (betti[t] != want) return false;
    }
    return sphere_dim + 1 < static_cast<int>(betti.size());
}

LinkPolicy default_link_policy(const GroundSet& g) {
    return g.vertex_count() <= 12 ? LinkPolicy::All : LinkPolicy::Sample;
}

HomologySphereReport is_homology_sphere(const SimplicialComplex& cx, LinkPolicy policy,
                                        std::size_t sample_size, std::uint64_t seed,
                                        const EnumerationBudget& budget) {
    if (!cx.pure) throw std::invalid_argument("homology-sphere check needs a pure complex");

    HomologySphereReport rep;
    rep.policy = policy;
    rep.seed = seed;
    rep.sample_size = policy == LinkPolicy::Sample ? sample_size : 0;
    rep.sphere_dim = cx.dim;

    const GradedFaces faces = closure_of_facets(cx.facets, budget.face_cap);
    rep.complex_betti = betti_gf2(faces);
    bool ok = is_sphere_profile(rep.complex_betti, cx.dim);
    ++rep.checks_run;
    if (!ok) rep.failures.push_back({{}, cx.dim, rep.complex_betti});

    std::vector<Face> targets;
    if (policy != LinkPolicy::None) {
        for (std::size_t t = 1; t < faces.levels.size(); ++t)
            targets.insert(targets.end(), faces.levels[t].begin(), faces.levels[t].end());
        if (policy == LinkPolicy::Sample && targets.size() > sample_size) {
            std::mt19937_64 rng(seed);
            std::shuffle(targets.begin(), targets.end(), rng);
            targets.resize(sample_size);
            std::sort(targets.begin(), targets.end(), index_lex_less);
        }
    }

    for (const Face& sigma : targets) {
        std::vector<Face> link_facets;
        for (const Face& f : cx.facets)
            if (sigma.is_subset_of(f)) link_facets.push_back(f.and_not(sigma));
        const GradedFaces lf = closure_of_facets(link_facets, budget.face_cap);
        const std::vector<long long> betti = betti_gf2(lf);
        const int expected = cx.dim - sigma.count();
        ++rep.checks_run;
        if (!is_sphere_profile(betti, expected)) {
            rep.failures.push_back({sigma.indices(), expected, betti});
            ok = false;
        }
    }

    rep.pass = ok && rep.failures.empty();
    return rep;
}

}  // namespace bcross
