#include "bcross/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace bcross {

VarRank::VarRank(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("matrix size must be positive");
    const long long m = static_cast<long long>(n) * n;
    rank_.assign(static_cast<std::size_t>(m), 0);
    of_rank_.assign(static_cast<std::size_t>(m), {0, 0});
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            long long raw = static_cast<long long>(2 - i) * n + static_cast<long long>(j - 1) * (n - 1) - 1;
            long long r = ((raw % m) + m) % m + 1;
            rank_[static_cast<std::size_t>(i - 1) * n + (j - 1)] = static_cast<int>(r);
            auto& slot = of_rank_[static_cast<std::size_t>(r - 1)];
            if (slot.first != 0) throw VerificationFailure("variable ranking is not a bijection");
            slot = {i, j};
        }
}

int VarRank::rank(int i, int j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_) throw std::invalid_argument("matrix index out of range");
    return rank_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
}

std::pair<int, int> VarRank::variable_of_rank(int r) const {
    if (r < 1 || r > n_ * n_) throw std::invalid_argument("rank out of range");
    return of_rank_[static_cast<std::size_t>(r - 1)];
}

std::vector<std::pair<int, int>> Monomial::support() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (exp(i, j) > 0) out.emplace_back(i, j);
    return out;
}

std::string Monomial::text() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const int e = exp(i, j);
            if (!e) continue;
            if (!first) os << " * ";
            first = false;
            os << "x[" << i << "," << j << "]";
            if (e > 1) os << "^" << e;
        }
    return first ? "1" : os.str();
}

TermOrder::TermOrder(int n) : rank_(n) {
    by_rank_.resize(static_cast<std::size_t>(n) * n);
    for (int r = 1; r <= n * n; ++r) {
        auto [i, j] = rank_.variable_of_rank(r);
        by_rank_[static_cast<std::size_t>(r - 1)] =
            static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j - 1);
    }
}

Cmp TermOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.n != n() || b.n != n()) throw std::invalid_argument("monomials from a different matrix size");
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? Cmp::Less : Cmp::Greater;
    for (std::size_t r = 0; r < by_rank_.size(); ++r) {
        const int ea = a.exps[by_rank_[r]], eb = b.exps[by_rank_[r]];
        if (ea != eb) return ea > eb ? Cmp::Less : Cmp::Greater;
    }
    return Cmp::Equal;
}

MinorSelection minor_selection(const std::vector<int>& rows, const std::vector<int>& cols, int n) {
    if (rows.empty() || rows.size() != cols.size())
        throw std::invalid_argument("row and column selections must be nonempty and of equal size");
    auto check = [n](const std::vector<int>& v) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] < 1 || v[i] > n) throw std::invalid_argument("selection index out of range");
            if (i && v[i] <= v[i - 1]) throw std::invalid_argument("selection must be strictly increasing");
        }
    };
    check(rows);
    check(cols);

    const int s = static_cast<int>(rows.size());
    MinorSelection sel;
    sel.rows = rows;
    sel.cols = cols;
    // minimal shift with rows[i+shift] > cols[i] for all applicable i;
    // shift == s is vacuously valid and selects the main diagonal
    for (sel.shift = 0; sel.shift <= s; ++sel.shift) {
        bool ok = true;
        for (int i = 1; i + sel.shift <= s; ++i)
            if (!(rows[static_cast<std::size_t>(i + sel.shift - 1)] > cols[static_cast<std::size_t>(i - 1)])) {
                ok = false;
                break;
            }
        if (ok) break;
    }
    std::set<int> rseen, cseen;
    for (int i = 1; i <= s; ++i) {
        const int ri = (i + sel.shift - 1) % s;  // residues taken in 1..s
        const int r = rows[static_cast<std::size_t>(ri)];
        const int c = cols[static_cast<std::size_t>(i - 1)];
        sel.lead_support.emplace_back(r, c);
        rseen.insert(r);
        cseen.insert(c);
    }
    if (static_cast<int>(rseen.size()) != s || static_cast<int>(cseen.size()) != s)
        throw VerificationFailure("minor selection support must hit every row and column once");
    return sel;
}

Fp Fp::inverse() const {
    if (v == 0) throw std::invalid_argument("division by zero mod 32003");
    // Fermat: v^(P-2)
    std::uint64_t base = v, acc = 1, e = P - 2;
    while (e) {
        if (e & 1) acc = acc * base % P;
        base = base * base % P;
        e >>= 1;
    }
    return Fp(static_cast<long>(acc));
}

namespace {

int permutation_sign(const std::vector<int>& perm) {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return inversions % 2 ? -1 : 1;
}

}  // namespace

template <class C>
Poly<C> minor_polynomial_t(const std::vector<int>& rows, const std::vector<int>& cols, int n,
                           const TermOrder& ord) {
    if (rows.size() != cols.size() || rows.empty())
        throw std::invalid_argument("minor needs equal-size nonempty selections");
    if (rows.size() > 5) throw BudgetExceeded("minor expansion limited to size 5");
    const int s = static_cast<int>(rows.size());
    std::vector<int> perm(static_cast<std::size_t>(s));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Term<C>> terms;
    do {
        Monomial m = Monomial::one(n);
        for (int i = 0; i < s; ++i)
            m.bump(rows[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]);
        terms.push_back({std::move(m), C(permutation_sign(perm))});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return make_poly(std::move(terms), ord);
}

template Poly<Rat> minor_polynomial_t<Rat>(const std::vector<int>&, const std::vector<int>&, int,
                                           const TermOrder&);
template Poly<Fp> minor_polynomial_t<Fp>(const std::vector<int>&, const std::vector<int>&, int,
                                         const TermOrder&);

Poly<Rat> minor_polynomial(const std::vector<int>& rows, const std::vector<int>& cols, int n,
                           const TermOrder& ord) {
    return minor_polynomial_t<Rat>(rows, cols, n, ord);
}

const Monomial& leading_monomial(const Poly<Rat>& p) { return p.lm(); }

std::vector<std::vector<int>> index_subsets(int n, int m) {
    std::vector<std::vector<int>> out;
    if (m < 0 || m > n) return out;
    std::vector<int> cur(static_cast<std::size_t>(m));
    std::iota(cur.begin(), cur.end(), 1);
    while (true) {
        out.push_back(cur);
        int i = m - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - (m - 1 - i)) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < m; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

LeadingMonomialReport verify_leading_monomials(int n, int k, bool override_budget) {
    if (k < 0 || k + 1 > n) throw std::invalid_argument("need 0 <= k <= n-1");
    if (!override_budget && (k + 1 > 4 || n > 6))
        throw BudgetExceeded("leading-monomial sweep capped at size-4 minors and n <= 6");

    LeadingMonomialReport rep;
    rep.n = n;
    rep.k = k;
    const TermOrder ord(n);
    const auto subsets = index_subsets(n, k + 1);
    for (const auto& rows : subsets)
        for (const auto& cols : subsets) {
            const MinorSelection sel = minor_selection(rows, cols, n);
            Monomial expected = Monomial::one(n);
            for (auto [i, j] : sel.lead_support) expected.bump(i, j);
            const Poly<Rat> det = minor_polynomial(rows, cols, n, ord);
            ++rep.pairs_checked;
            if (!(leading_monomial(det) == expected)) {
                rep.counterexamples.push_back(
                    {rows, cols, leading_monomial(det).text(), expected.text()});
            }
        }
    rep.pass = rep.counterexamples.empty();
    return rep;
}

namespace {

// value reduced into {1..n}
int residue_1n(int x, int n) {
    int r = ((x % n) + n) % n;
    return r == 0 ? n : r;
}

}  // namespace

std::pair<int, int> class_to_position(const DiagonalClass& c, int n) {
    if (c.rep.ngon != 2 * n) throw std::invalid_argument("class lives on the wrong polygon");
    const int a = c.rep.a, b = c.rep.b;
    if (b - a <= n) return {residue_1n(a + 1, n), residue_1n(b, n)};
    return {residue_1n(b + 1, n), residue_1n(a, n)};
}

DiagonalClass position_to_class(int i, int j, int n) {
    if (i < 1 || j < 1 || i > n || j > n) throw std::invalid_argument("matrix index out of range");
    const int N = 2 * n;
    auto wrap = [N](int x) { return ((x % N) + N) % N; };
    const Diagonal member = i <= j ? Diagonal(wrap(i - 1), wrap(j), N) : Diagonal(wrap(i - 1 + n), wrap(j), N);
    return DiagonalClass(member);
}

std::vector<Monomial> stanley_reisner_generators(int n, int k) {
    if (k < 1 || k > n - 1) throw std::invalid_argument("need 1 <= k <= n-1");
    const TermOrder ord(n);
    std::vector<Monomial> gens;
    const auto subsets = index_subsets(n, k + 1);
    for (const auto& rows : subsets)
        for (const auto& cols : subsets) {
            const MinorSelection sel = minor_selection(rows, cols, n);
            Monomial m = Monomial::one(n);
            for (auto [i, j] : sel.lead_support) m.bump(i, j);
            gens.push_back(std::move(m));
        }
    std::sort(gens.begin(), gens.end(),
              [&](const Monomial& a, const Monomial& b) { return ord.less(a, b); });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    // divisibility pruning (a no-op while all generators share a degree)
    std::vector<Monomial> minimal;
    for (const Monomial& m : gens) {
        bool divisible = false;
        for (const Monomial& g : minimal)
            if (g.divides(m)) {
                divisible = true;
                break;
            }
        if (!divisible) minimal.push_back(m);
    }

    for (const Monomial& m : minimal) {
        std::vector<Diagonal> expanded;
        std::set<Diagonal> reps;
        for (auto [i, j] : m.support()) {
            const DiagonalClass c = position_to_class(i, j, n);
            reps.insert(c.rep);
            for (const Diagonal& d : c.members()) expanded.push_back(d);
        }
        if (static_cast<int>(reps.size()) != k + 1 || !has_crossing_of_size(expanded, k + 1))
            throw VerificationFailure("generator support does not map to a (k+1)-crossing of classes");
    }
    return minimal;
}

}  // namespace bcross
