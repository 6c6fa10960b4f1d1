#include "bcross/complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "bcross/errors.hpp"

namespace bcross {

std::vector<std::vector<int>> SimplicialComplex::facet_index_lists() const {
    std::vector<std::vector<int>> out;
    out.reserve(facets.size());
    for (const Face& f : facets) out.push_back(f.indices());
    return out;
}

namespace {

// Crossing machinery for one ground set: vertices expand to chords of the
// universe, and adding a vertex is legal while no (k+1)-clique of the
// crossing graph appears among the selected chords.
struct CrossContext {
    int k = 1;
    int vcount = 0;
    std::vector<std::array<int, 2>> vdiags;
    std::vector<FaceBits> cross;  // adjacency over the universe

    bool can_add(const FaceBits& dmask, int v) const {
        for (int t = 0; t < 2; ++t) {
            const int d = vdiags[static_cast<std::size_t>(v)][static_cast<std::size_t>(t)];
            if (d < 0) break;
            // a new (k+1)-crossing must use the new chord; members of one
            // orbit never cross, so one new chord at a time suffices
            if (mask_has_clique(cross, cross[static_cast<std::size_t>(d)] & dmask, k))
                return false;
        }
        return true;
    }

    FaceBits add_diags(FaceBits dmask, int v) const {
        for (int t = 0; t < 2; ++t) {
            const int d = vdiags[static_cast<std::size_t>(v)][static_cast<std::size_t>(t)];
            if (d >= 0) dmask.set(d);
        }
        return dmask;
    }
};

CrossContext make_context(const GroundSet& g, ClassCrossingRule rule) {
    CrossContext ctx;
    ctx.k = g.k;
    ctx.vcount = g.vertex_count();
    if (rule == ClassCrossingRule::PairwiseReps) {
        if (g.mode != Mode::TypeB)
            throw std::invalid_argument("pairwise class crossing only applies to type B");
        // adjacency directly between classes: some pair of representatives crosses
        ctx.vdiags.resize(g.vertices.size());
        ctx.cross.assign(g.vertices.size(), FaceBits{});
        std::vector<std::vector<Diagonal>> orbits(g.vertices.size());
        for (std::size_t i = 0; i < g.vertices.size(); ++i) {
            ctx.vdiags[i] = {static_cast<int>(i), -1};
            orbits[i] = DiagonalClass(g.vertices[i]).members();
        }
        for (std::size_t i = 0; i < g.vertices.size(); ++i)
            for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
                bool c = false;
                for (const Diagonal& d1 : orbits[i])
                    for (const Diagonal& d2 : orbits[j])
                        if (crosses(d1, d2)) c = true;
                if (c) {
                    ctx.cross[i].set(static_cast<int>(j));
                    ctx.cross[j].set(static_cast<int>(i));
                }
            }
    } else {
        ctx.vdiags = g.vertex_diags;
        ctx.cross.assign(g.universe.size(), FaceBits{});
        for (std::size_t i = 0; i < g.universe.size(); ++i)
            for (std::size_t j = i + 1; j < g.universe.size(); ++j)
                if (crosses(g.universe[i], g.universe[j])) {
                    ctx.cross[i].set(static_cast<int>(j));
                    ctx.cross[j].set(static_cast<int>(i));
                }
    }
    return ctx;
}

// Depth-first walk of all faces in canonical vertex order. Each face is
// visited exactly once; a face is a facet iff no vertex at all (smaller or
// larger than the last added) extends it.
class FaceDfs {
  public:
    FaceDfs(const CrossContext& ctx, const EnumerationBudget& budget, bool want_facets,
            std::vector<Face>* facets_out, std::vector<std::vector<Face>>* levels_out)
        : ctx_(ctx),
          budget_(budget),
          want_facets_(want_facets),
          facets_(facets_out),
          levels_(levels_out) {}

    void run() {
        if (levels_) levels_->assign(1, {});
        dfs(FaceBits{}, FaceBits{}, 0, 0);
    }

  private:
    void dfs(const FaceBits& vset, const FaceBits& dset, int next, int depth) {
        if (++nodes_ > budget_.node_cap)
            throw BudgetExceeded("face enumeration exceeded the node budget");
        if (levels_) {
            if (++stored_ > budget_.face_cap)
                throw BudgetExceeded("face enumeration exceeded the face budget");
            if (static_cast<int>(levels_->size()) <= depth) levels_->resize(static_cast<std::size_t>(depth) + 1);
            (*levels_)[static_cast<std::size_t>(depth)].push_back(vset);
        }

        bool extendable = false;
        if (want_facets_) {
            for (int v = 0; v < next && !extendable; ++v)
                if (!vset.test(v) && ctx_.can_add(dset, v)) extendable = true;
        }
        candidates_.clear();
        for (int v = next; v < ctx_.vcount; ++v)
            if (ctx_.can_add(dset, v)) candidates_.push_back(v);
        if (!candidates_.empty()) extendable = true;

        if (want_facets_ && !extendable) {
            if (facets_->size() + 1 > budget_.face_cap)
                throw BudgetExceeded("facet enumeration exceeded the facet budget");
            facets_->push_back(vset);
        }
        // candidates_ is reused across recursion; copy the slice we need
        const std::vector<int> cands = candidates_;
        for (int v : cands) dfs(vset.with(v), ctx_.add_diags(dset, v), v + 1, depth + 1);
    }

    const CrossContext& ctx_;
    EnumerationBudget budget_;
    bool want_facets_;
    std::vector<Face>* facets_;
    std::vector<std::vector<Face>>* levels_;
    std::vector<int> candidates_;
    std::uint64_t nodes_ = 0, stored_ = 0;
};

void sort_canonically(std::vector<Face>& faces) {
    std::sort(faces.begin(), faces.end(), index_lex_less);
}

void set_dim_and_purity(SimplicialComplex& cx) {
    int lo = FaceBits::kCapacity + 1, hi = -1;
    for (const Face& f : cx.facets) {
        const int c = f.count();
        lo = std::min(lo, c);
        hi = std::max(hi, c);
    }
    if (cx.facets.empty()) {
        cx.dim = -1;
        cx.pure = true;
        return;
    }
    cx.dim = hi - 1;
    cx.pure = lo == hi;
}

}  // namespace

bool is_face(const GroundSet& g, const Face& s, ClassCrossingRule rule) {
    for (int v : s.indices())
        if (v >= g.vertex_count()) throw std::invalid_argument("face uses an out-of-range vertex");
    if (rule == ClassCrossingRule::PairwiseReps) {
        CrossContext ctx = make_context(g, rule);
        return !mask_has_clique(ctx.cross, s, g.k + 1);
    }
    std::vector<Diagonal> expanded;
    s.for_each([&](int v) {
        for (int t = 0; t < 2; ++t) {
            const int d = g.vertex_diags[static_cast<std::size_t>(v)][static_cast<std::size_t>(t)];
            if (d >= 0) expanded.push_back(g.universe[static_cast<std::size_t>(d)]);
        }
    });
    return !has_crossing_of_size(expanded, g.k + 1);
}

SimplicialComplex enumerate_facets(const GroundSet& g, const EnumerationBudget& budget,
                                   ClassCrossingRule rule) {
    CrossContext ctx = make_context(g, rule);
    SimplicialComplex cx;
    cx.ground = g;
    FaceDfs dfs(ctx, budget, /*want_facets=*/true, &cx.facets, nullptr);
    dfs.run();
    sort_canonically(cx.facets);
    set_dim_and_purity(cx);

    if (rule == ClassCrossingRule::Symmetrized) {
        const int want = g.expected_facet_size();
        if (!cx.pure || cx.dim + 1 != want) {
            std::ostringstream msg;
            msg << "purity/dimension check failed for mode " << mode_name(g.mode) << " n=" << g.n
                << " k=" << g.k << ": expected facet size " << want << ", got dim " << cx.dim
                << (cx.pure ? " (pure)" : " (not pure)");
            throw VerificationFailure(msg.str());
        }
    }
    return cx;
}

SymmetricComplex enumerate_symmetric_facets(int ngon, int k, const EnumerationBudget& budget) {
    if (ngon < 4 || ngon % 2 != 0) throw std::invalid_argument("even polygon of size >= 4 required");
    const int half = ngon / 2;
    if (k < 1 || k > half - 1) throw std::invalid_argument("need 1 <= k <= n-1 for the 2n-gon");

    GroundSet g = ground_set(Mode::TypeBSym, half, k);
    SimplicialComplex full = enumerate_facets(g, budget);

    SymmetricComplex out;
    out.ambient_facets = full.facets.size();
    out.complex.ground = g;
    for (const Face& f : full.facets) {
        bool symmetric = true;
        int diameters = 0;
        f.for_each([&](int v) {
            const int p = g.rotate_partner[static_cast<std::size_t>(v)];
            if (!f.test(p)) symmetric = false;
            if (p == v) ++diameters;
        });
        if (symmetric) {
            out.complex.facets.push_back(f);
            out.diameter_counts.push_back(diameters);
        }
    }
    set_dim_and_purity(out.complex);
    return out;
}

std::vector<long long> GradedFaces::counts() const {
    std::vector<long long> c;
    c.reserve(levels.size());
    for (const auto& lvl : levels) c.push_back(static_cast<long long>(lvl.size()));
    return c;
}

GradedFaces all_faces(const GroundSet& g, const EnumerationBudget& budget) {
    CrossContext ctx = make_context(g, ClassCrossingRule::Symmetrized);
    GradedFaces out;
    FaceDfs dfs(ctx, budget, /*want_facets=*/false, nullptr, &out.levels);
    dfs.run();
    for (auto& lvl : out.levels) sort_canonically(lvl);
    return out;
}

GradedFaces closure_of_facets(const std::vector<Face>& facets, std::uint64_t face_cap) {
    std::set<FaceBits> seen;
    seen.insert(FaceBits{});
    for (const Face& f : facets) {
        const std::vector<int> idx = f.indices();
        const std::size_t m = idx.size();
        if (m > 24) throw BudgetExceeded("facet too large for subset closure");
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
            FaceBits sub;
            for (std::size_t i = 0; i < m; ++i)
                if ((mask >> i) & 1) sub.set(idx[i]);
            seen.insert(sub);
            if (seen.size() > face_cap) throw BudgetExceeded("closure exceeded the face budget");
        }
    }
    GradedFaces out;
    for (const FaceBits& f : seen) {
        const int level = f.count();
        if (static_cast<int>(out.levels.size()) <= level) out.levels.resize(static_cast<std::size_t>(level) + 1);
        out.levels[static_cast<std::size_t>(level)].push_back(f);
    }
    for (auto& lvl : out.levels) sort_canonically(lvl);
    return out;
}

FHVector fh_vector(const std::vector<long long>& face_counts_by_level) {
    if (face_counts_by_level.empty() || face_counts_by_level[0] != 1)
        throw std::invalid_argument("face counts must start with the empty face");
    FHVector out;
    out.f = face_counts_by_level;
    const int d = static_cast<int>(out.f.size()) - 1;

    // h(t) = sum_i f_{i-1} (t-1)^{d-i}, read off coefficients of t^{d-j}
    std::vector<long long> poly(static_cast<std::size_t>(d) + 1, 0);
    for (int i = 0; i <= d; ++i) {
        std::vector<long long> pw(static_cast<std::size_t>(d - i) + 1, 0);
        pw[0] = 1;  // (t-1)^0
        for (int rep = 0; rep < d - i; ++rep) {
            std::vector<long long> nx(pw.size() + 1, 0);
            for (std::size_t c = 0; c < pw.size(); ++c) {
                nx[c + 1] += pw[c];
                nx[c] -= pw[c];
            }
            pw = std::move(nx);
        }
        for (std::size_t c = 0; c < pw.size(); ++c) poly[c] += out.f[static_cast<std::size_t>(i)] * pw[c];
    }
    out.h.assign(static_cast<std::size_t>(d) + 1, 0);
    for (int j = 0; j <= d; ++j) out.h[static_cast<std::size_t>(j)] = poly[static_cast<std::size_t>(d - j)];

    out.h_symmetric = true;
    for (int j = 0; j <= d; ++j)
        if (out.h[static_cast<std::size_t>(j)] != out.h[static_cast<std::size_t>(d - j)]) out.h_symmetric = false;
    int p = 0;
    while (p < d && out.h[static_cast<std::size_t>(p) + 1] >= out.h[static_cast<std::size_t>(p)]) ++p;
    out.h_unimodal = true;
    for (int j = p; j < d; ++j)
        if (out.h[static_cast<std::size_t>(j) + 1] > out.h[static_cast<std::size_t>(j)]) out.h_unimodal = false;
    return out;
}

FHVector fh_vector(const GradedFaces& faces) { return fh_vector(faces.counts()); }

FHVector fh_vector(const SimplicialComplex& cx, std::uint64_t face_cap) {
    return fh_vector(closure_of_facets(cx.facets, face_cap));
}

std::string hilbert_series_text(const std::vector<long long>& h) {
    if (h.empty()) return "0";
    std::ostringstream num;
    bool first = true;
    for (std::size_t i = 0; i < h.size(); ++i) {
        const long long c = h[i];
        if (c == 0) continue;
        if (first) {
            if (c < 0) num << "-";
            first = false;
        } else {
            num << (c < 0 ? " - " : " + ");
        }
        const long long a = c < 0 ? -c : c;
        if (i == 0) {
            num << a;
        } else {
            if (a != 1) num << a << "*";
            num << "t";
            if (i > 1) num << "^" << i;
        }
    }
    if (first) return "0";
    std::ostringstream out;
    out << "(" << num.str() << ") / (1 - t)^" << (h.size() - 1);
    return out.str();
}

SimplicialComplex link(const SimplicialComplex& cx, const Face& sigma) {
    if (!cx.pure) throw std::invalid_argument("link is only computed for pure complexes");
    bool is_face_of_cx = false;
    for (const Face& f : cx.facets)
        if (sigma.is_subset_of(f)) {
            is_face_of_cx = true;
            break;
        }
    if (!is_face_of_cx) throw std::invalid_argument("link argument is not a face");

    SimplicialComplex out;
    out.ground = cx.ground;
    for (const Face& f : cx.facets)
        if (sigma.is_subset_of(f)) out.facets.push_back(f.and_not(sigma));
    sort_canonically(out.facets);
    set_dim_and_purity(out);
    return out;
}

ReadingComparison compare_class_crossing_readings(int n, int k, const EnumerationBudget& budget) {
    GroundSet g = ground_set(Mode::TypeB, n, k);
    SimplicialComplex sym = enumerate_facets(g, budget, ClassCrossingRule::Symmetrized);
    SimplicialComplex pw = enumerate_facets(g, budget, ClassCrossingRule::PairwiseReps);
    ReadingComparison out;
    out.n = n;
    out.k = k;
    out.facets_symmetrized = sym.facets.size();
    out.facets_pairwise = pw.facets.size();
    out.coincide = sym.facets == pw.facets;
    return out;
}

}  // namespace bcross
