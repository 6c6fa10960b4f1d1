#include "bcross/gale.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "bcross/errors.hpp"

namespace bcross {

CyclicSpec::CyclicSpec(int d_, int N_) : d(d_), N(N_) {
    // The cycle-graph evenness condition characterizes faces only in even
    // dimension, where the polytope has the full dihedral symmetry.
    if (d < 2 || d % 2 != 0 || N <= d)
        throw std::invalid_argument("cyclic-graph face test needs even d with 2 <= d < N");
}

bool gale_is_face(const std::vector<int>& sigma, const CyclicSpec& spec) {
    std::vector<bool> present(static_cast<std::size_t>(spec.N) + 1, false);
    int size = 0;
    for (int v : sigma) {
        if (v < 1 || v > spec.N) throw std::invalid_argument("vertex label out of range");
        if (!present[static_cast<std::size_t>(v)]) {
            present[static_cast<std::size_t>(v)] = true;
            ++size;
        }
    }
    if (size == 0) return true;

    int odd_components = 0;
    if (size == spec.N) {
        odd_components = spec.N % 2;
    } else {
        // walk runs of consecutive present vertices around the cycle,
        // starting just after an absent one
        int start = 1;
        while (present[static_cast<std::size_t>(start)]) ++start;
        int run = 0;
        for (int step = 0; step < spec.N; ++step) {
            const int v = (start - 1 + step) % spec.N + 1;
            if (present[static_cast<std::size_t>(v)]) {
                ++run;
            } else if (run) {
                odd_components += run % 2;
                run = 0;
            }
        }
        odd_components += run % 2;
    }
    return size + odd_components <= spec.d;
}

BigInt cyclic_facet_count_formula(int d, int N) {
    if (d % 2 == 0)
        return binomial(N - d / 2, d / 2) + binomial(N - d / 2 - 1, d / 2 - 1);
    return 2 * binomial(N - (d + 1) / 2, (d - 1) / 2);
}

std::vector<std::vector<int>> cyclic_facets(const CyclicSpec& spec, std::uint64_t subset_budget) {
    if (binomial(spec.N, spec.d) > BigInt(static_cast<unsigned long>(subset_budget)))
        throw BudgetExceeded("cyclic facet enumeration exceeds the subset budget");
    std::vector<std::vector<int>> out;
    for (const auto& sigma : index_subsets(spec.N, spec.d))
        if (gale_is_face(sigma, spec)) out.push_back(sigma);
    if (BigInt(static_cast<unsigned long>(out.size())) != cyclic_facet_count_formula(spec.d, spec.N))
        throw VerificationFailure("enumerated cyclic facet count disagrees with the closed formula");
    return out;
}

int CyclicNumbering::label_of(int i, int j) const {
    for (std::size_t t = 0; t < positions.size(); ++t)
        if (positions[t].first == i && positions[t].second == j) return static_cast<int>(t) + 1;
    return 0;
}

CyclicNumbering cyclic_vertex_numbering(int n, bool reversed) {
    if (n < 3) throw std::invalid_argument("the k = n-2 numbering needs n >= 3");
    const GroundSet g = ground_set(Mode::TypeB, n, n - 2);

    std::set<std::pair<int, int>> vertex_positions;
    for (int v = 0; v < g.vertex_count(); ++v)
        vertex_positions.insert(class_to_position(g.vertex_class(v), n));
    if (vertex_positions.size() != static_cast<std::size_t>(2 * n))
        throw VerificationFailure("expected 2n distinct matrix positions");

    std::map<int, std::vector<int>> row_cols, col_rows;
    for (auto [i, j] : vertex_positions) {
        row_cols[i].push_back(j);
        col_rows[j].push_back(i);
    }
    for (auto& [i, cols] : row_cols)
        if (cols.size() != 2) throw VerificationFailure("each row must hold exactly 2 vertices");
    for (auto& [j, rows] : col_rows)
        if (rows.size() != 2) throw VerificationFailure("each column must hold exactly 2 vertices");

    CyclicNumbering out;
    out.n = n;
    std::pair<int, int> cur{1, n};
    if (!vertex_positions.count(cur)) throw VerificationFailure("position (1, n) must be a vertex");
    out.positions.push_back(cur);
    for (int step = 1; step < 2 * n; ++step) {
        std::pair<int, int> next = cur;
        if (step % 2 == 1) {  // row step
            const auto& cols = row_cols.at(cur.first);
            next.second = cols[0] == cur.second ? cols[1] : cols[0];
        } else {  // column step
            const auto& rows = col_rows.at(cur.second);
            next.first = rows[0] == cur.first ? rows[1] : rows[0];
        }
        out.positions.push_back(next);
        cur = next;
    }
    std::set<std::pair<int, int>> visited(out.positions.begin(), out.positions.end());
    if (visited != vertex_positions)
        throw VerificationFailure("the row/column walk does not close into a single 2n-cycle");
    // closure: the final step back to (1, n) is a column step
    if (out.positions.back().second != out.positions.front().second)
        throw VerificationFailure("the 2n-cycle does not close along a column");

    if (reversed) std::reverse(out.positions.begin() + 1, out.positions.end());
    return out;
}

namespace {

std::vector<int> labels_of_positions(const CyclicNumbering& num,
                                     const std::vector<std::pair<int, int>>& pos) {
    std::vector<int> labels;
    labels.reserve(pos.size());
    for (auto [i, j] : pos) {
        const int l = num.label_of(i, j);
        if (l == 0) throw VerificationFailure("position is not a complex vertex");
        labels.push_back(l);
    }
    std::sort(labels.begin(), labels.end());
    return labels;
}

bool facets_equal_under(const CyclicNumbering& num, const SimplicialComplex& cx,
                        const std::vector<std::vector<int>>& gale, int n) {
    std::vector<std::vector<int>> mapped;
    mapped.reserve(cx.facets.size());
    for (const Face& f : cx.facets) {
        std::vector<std::pair<int, int>> pos;
        f.for_each([&](int v) { pos.push_back(class_to_position(cx.ground.vertex_class(v), n)); });
        mapped.push_back(labels_of_positions(num, pos));
    }
    std::sort(mapped.begin(), mapped.end());
    std::vector<std::vector<int>> sorted_gale = gale;
    std::sort(sorted_gale.begin(), sorted_gale.end());
    return mapped == sorted_gale;
}

}  // namespace

CyclicIsoReport verify_cyclic_iso(int n, const EnumerationBudget& budget) {
    if (n < 3) throw std::invalid_argument("cyclic isomorphism check needs n >= 3");
    CyclicIsoReport rep;
    rep.n = n;

    const SimplicialComplex cx = enumerate_facets(ground_set(Mode::TypeB, n, n - 2), budget);
    const CyclicSpec spec(2 * n - 4, 2 * n);
    const auto gale = cyclic_facets(spec);
    rep.typeb_facets = cx.facets.size();
    rep.gale_facets = gale.size();

    const CyclicNumbering forward = cyclic_vertex_numbering(n, false);
    rep.facets_match = facets_equal_under(forward, cx, gale, n);

    // minimal nonfaces: every minor support must map to n-1 pairwise
    // non-adjacent labels of the cycle, i.e. all components are singletons
    rep.nonfaces_ok = true;
    const auto subsets = index_subsets(n, n - 1);
    for (const auto& rows : subsets)
        for (const auto& cols : subsets) {
            const MinorSelection sel = minor_selection(rows, cols, n);
            const std::vector<int> labels = labels_of_positions(forward, sel.lead_support);
            for (std::size_t t = 0; t < labels.size() && rep.nonfaces_ok; ++t) {
                const int a = labels[t];
                const int b = labels[(t + 1) % labels.size()];
                const int gap = (b - a + 2 * n) % (2 * n);
                if (gap == 1 || gap == 2 * n - 1) rep.nonfaces_ok = false;
            }
        }

    const CyclicNumbering backward = cyclic_vertex_numbering(n, true);
    rep.reversed_ok = facets_equal_under(backward, cx, gale, n);

    rep.pass = rep.facets_match && rep.nonfaces_ok && rep.reversed_ok;
    return rep;
}

}  // namespace bcross
