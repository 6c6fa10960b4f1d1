#include "bcross/polygon.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "bcross/errors.hpp"

namespace bcross {

Diagonal::Diagonal(int x, int y, int n) : ngon(n) {
    if (n < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
    if (x < 0 || y < 0 || x >= n || y >= n || x == y)
        throw std::invalid_argument("diagonal endpoints must be distinct vertices of the polygon");
    a = std::min(x, y);
    b = std::max(x, y);
}

std::string Diagonal::label() const {
    return std::to_string(a) + "-" + std::to_string(b);
}

bool crosses(const Diagonal& d1, const Diagonal& d2) {
    if (d1.ngon != d2.ngon) throw std::invalid_argument("diagonals live on different polygons");
    if (d1.a == d2.a || d1.a == d2.b || d1.b == d2.a || d1.b == d2.b) return false;
    const bool a_inside = d1.a < d2.a && d2.a < d1.b;
    const bool b_inside = d1.a < d2.b && d2.b < d1.b;
    return a_inside != b_inside;
}

Diagonal rotate_half(const Diagonal& d) {
    if (d.ngon % 2 != 0) throw std::invalid_argument("180-degree rotation needs an even polygon");
    const int h = d.ngon / 2;
    return Diagonal((d.a + h) % d.ngon, (d.b + h) % d.ngon, d.ngon);
}

bool never_crosses_own_rotation(const Diagonal& d) {
    return crosses(d, rotate_half(d));
}

DiagonalClass::DiagonalClass(const Diagonal& d) : rep(d) {
    Diagonal r = rotate_half(d);
    if (r < rep) rep = r;
}

std::vector<Diagonal> DiagonalClass::members() const {
    if (is_diameter()) return {rep};
    return {rep, rotate_half(rep)};
}

std::string mode_name(Mode m) {
    switch (m) {
        case Mode::TypeA: return "A";
        case Mode::TypeB: return "B";
        case Mode::TypeBSym: return "BSym";
    }
    throw std::invalid_argument("unknown mode");
}

Mode mode_from_name(const std::string& s) {
    if (s == "A") return Mode::TypeA;
    if (s == "B") return Mode::TypeB;
    if (s == "BSym") return Mode::TypeBSym;
    throw std::invalid_argument("unknown mode '" + s + "' (expected A, B or BSym)");
}

int GroundSet::index_of_vertex(const Diagonal& canonical_rep) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), canonical_rep);
    if (it == vertices.end() || !(*it == canonical_rep)) return -1;
    return static_cast<int>(it - vertices.begin());
}

DiagonalClass GroundSet::vertex_class(int v) const {
    return DiagonalClass(vertices.at(static_cast<std::size_t>(v)));
}

int GroundSet::expected_facet_size() const {
    switch (mode) {
        case Mode::TypeA: return k * (n - 2 * k - 1);
        case Mode::TypeB: return k * (n - k);
        case Mode::TypeBSym: return k * (2 * n - 2 * k - 1);
    }
    throw std::invalid_argument("unknown mode");
}

namespace {

std::vector<Diagonal> all_diagonals(int ngon) {
    std::vector<Diagonal> out;
    out.reserve(static_cast<std::size_t>(ngon) * (ngon - 1) / 2);
    for (int a = 0; a < ngon; ++a)
        for (int b = a + 1; b < ngon; ++b) out.emplace_back(a, b, ngon);
    return out;
}

}  // namespace

GroundSet ground_set(Mode mode, int n, int k) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    GroundSet g;
    g.mode = mode;
    g.n = n;
    g.k = k;

    if (mode == Mode::TypeA) {
        if (n < 2 * k + 1) throw std::invalid_argument("type A needs n >= 2k+1");
        g.ngon = n;
        for (const Diagonal& d : all_diagonals(n))
            (d.cyclic_length() <= k ? g.frozen : g.vertices).push_back(d);
        g.universe = g.vertices;
        g.vertex_diags.resize(g.vertices.size());
        for (std::size_t i = 0; i < g.vertices.size(); ++i)
            g.vertex_diags[i] = {static_cast<int>(i), -1};
    } else {
        if (n < 2 || k > n - 1) throw std::invalid_argument("type B needs 1 <= k <= n-1");
        g.ngon = 2 * n;
        std::vector<Diagonal> omega, gamma;
        for (const Diagonal& d : all_diagonals(g.ngon))
            (d.cyclic_length() <= k ? gamma : omega).push_back(d);

        if (mode == Mode::TypeBSym) {
            g.vertices = omega;
            g.frozen = gamma;
            g.universe = omega;
            g.vertex_diags.resize(omega.size());
            g.rotate_partner.resize(omega.size());
            std::map<Diagonal, int> pos;
            for (std::size_t i = 0; i < omega.size(); ++i) pos[omega[i]] = static_cast<int>(i);
            for (std::size_t i = 0; i < omega.size(); ++i) {
                g.vertex_diags[i] = {static_cast<int>(i), -1};
                g.rotate_partner[i] = pos.at(rotate_half(omega[i]));
            }
        } else {
            std::map<Diagonal, int> universe_pos;
            for (const Diagonal& d : omega) universe_pos[d] = 0;
            int idx = 0;
            for (auto& [d, p] : universe_pos) {
                p = idx++;
                g.universe.push_back(d);
            }
            std::vector<Diagonal> reps;
            for (const Diagonal& d : omega) {
                DiagonalClass c(d);
                if (c.rep == d) reps.push_back(d);
            }
            std::sort(reps.begin(), reps.end());
            g.vertices = reps;
            g.vertex_diags.resize(reps.size());
            for (std::size_t i = 0; i < reps.size(); ++i) {
                DiagonalClass c(reps[i]);
                g.vertex_diags[i][0] = universe_pos.at(c.rep);
                g.vertex_diags[i][1] = c.is_diameter() ? -1 : universe_pos.at(rotate_half(c.rep));
            }
            std::vector<Diagonal> theta;
            for (const Diagonal& d : gamma) {
                DiagonalClass c(d);
                if (c.rep == d) theta.push_back(d);
            }
            std::sort(theta.begin(), theta.end());
            g.frozen = theta;
            if (static_cast<int>(g.vertices.size()) != n * (n - k))
                throw VerificationFailure("type B class count differs from n(n-k)");
        }
    }

    if (static_cast<int>(g.universe.size()) > FaceBits::kCapacity ||
        static_cast<int>(g.vertices.size()) > FaceBits::kCapacity)
        throw BudgetExceeded("ground set exceeds the supported bit width");
    return g;
}

bool mask_has_clique(const std::vector<FaceBits>& adjacency, FaceBits candidates, int size) {
    if (size <= 0) return true;
    while (true) {
        if (candidates.count() < size) return false;
        const int v = candidates.lowest();
        candidates.reset(v);
        if (mask_has_clique(adjacency, candidates & adjacency[static_cast<std::size_t>(v)], size - 1))
            return true;
    }
}

namespace {

std::vector<FaceBits> crossing_rows(std::span<const Diagonal> s) {
    if (s.size() > FaceBits::kCapacity)
        throw BudgetExceeded("too many diagonals for a crossing-number query");
    std::vector<FaceBits> adj(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (crosses(s[i], s[j])) {
                adj[i].set(static_cast<int>(j));
                adj[j].set(static_cast<int>(i));
            }
    return adj;
}

}  // namespace

int max_crossing_number(std::span<const Diagonal> s) {
    if (s.empty()) return 0;
    auto adj = crossing_rows(s);
    FaceBits all;
    for (std::size_t i = 0; i < s.size(); ++i) all.set(static_cast<int>(i));
    int best = 0;
    while (best < static_cast<int>(s.size()) && mask_has_clique(adj, all, best + 1)) ++best;
    return best;
}

bool has_crossing_of_size(std::span<const Diagonal> s, int size) {
    if (size <= 0) return true;
    if (static_cast<std::size_t>(size) > s.size()) return false;
    auto adj = crossing_rows(s);
    FaceBits all;
    for (std::size_t i = 0; i < s.size(); ++i) all.set(static_cast<int>(i));
    return mask_has_clique(adj, all, size);
}

}  // namespace bcross
