#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bcross/errors.hpp"
#include "bcross/polygon.hpp"

namespace bcross {

// Ranking of the n^2 entries of an n x n variable matrix. Rank 1 is the
// smallest variable; the ranking starts at the lower-right corner and walks
// up the broken diagonals below the main diagonal before those above it.
class VarRank {
  public:
    explicit VarRank(int n);

    int n() const { return n_; }
    int rank(int i, int j) const;                    // 1-based matrix indices
    std::pair<int, int> variable_of_rank(int r) const;

  private:
    int n_ = 0;
    std::vector<int> rank_;                          // (i-1)*n + (j-1) -> rank
    std::vector<std::pair<int, int>> of_rank_;       // rank-1 -> (i, j)
};

// Exponent vector over the n^2 matrix variables, stored row-major.
struct Monomial {
    int n = 0;
    std::vector<int> exps;

    static Monomial one(int n) { return Monomial{n, std::vector<int>(static_cast<std::size_t>(n) * n, 0)}; }
    static Monomial variable(int n, int i, int j) {
        Monomial m = one(n);
        m.bump(i, j);
        return m;
    }

    int degree() const {
        int d = 0;
        for (int e : exps) d += e;
        return d;
    }
    int exp(int i, int j) const { return exps[idx(i, j)]; }
    void bump(int i, int j, int by = 1) { exps[idx(i, j)] += by; }

    bool is_one() const {
        for (int e : exps)
            if (e) return false;
        return true;
    }
    bool is_squarefree() const {
        for (int e : exps)
            if (e > 1) return false;
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial m = a;
        for (std::size_t i = 0; i < m.exps.size(); ++i) m.exps[i] += b.exps[i];
        return m;
    }
    bool divides(const Monomial& other) const {
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > other.exps[i]) return false;
        return true;
    }
    Monomial divided_by(const Monomial& d) const {
        Monomial m = *this;
        for (std::size_t i = 0; i < m.exps.size(); ++i) m.exps[i] -= d.exps[i];
        return m;
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial m = a;
        for (std::size_t i = 0; i < m.exps.size(); ++i)
            if (b.exps[i] > m.exps[i]) m.exps[i] = b.exps[i];
        return m;
    }
    bool coprime_with(const Monomial& b) const {
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] && b.exps[i]) return false;
        return true;
    }

    // 1-based (i, j) pairs with nonzero exponent, row-major order
    std::vector<std::pair<int, int>> support() const;
    std::string text() const;  // "x[1,2]^2 * x[2,1]"

    friend bool operator==(const Monomial&, const Monomial&) = default;

  private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n) +
               static_cast<std::size_t>(j - 1);
    }
};

enum class Cmp { Less, Equal, Greater };

// Graded order refined reverse-lexicographically by the variable ranking: on
// equal degrees, the first rank (smallest variable) where the exponents
// differ decides, and the larger exponent there makes the smaller monomial.
class TermOrder {
  public:
    explicit TermOrder(int n);

    int n() const { return rank_.n(); }
    const VarRank& ranks() const { return rank_; }
    Cmp compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) == Cmp::Less; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) == Cmp::Greater; }

  private:
    VarRank rank_;
    std::vector<std::size_t> by_rank_;  // rank-1 -> row-major exponent index
};

// Row/column selection of a square submatrix together with the support of
// its determinant's leading monomial: the longest diagonal strictly below
// the main diagonal plus the complementary diagonal.
struct MinorSelection {
    std::vector<int> rows;  // strictly increasing, in [1..n]
    std::vector<int> cols;
    int shift = 0;          // minimal cyclic shift with rows[i+shift] > cols[i] for all i
    std::vector<std::pair<int, int>> lead_support;  // one entry per row and per column
};

MinorSelection minor_selection(const std::vector<int>& rows, const std::vector<int>& cols, int n);

// ----- polynomial engine ------------------------------------------------

using Rat = mpq_class;

// Arithmetic modulo 32003, the cross-check field.
struct Fp {
    static constexpr std::uint32_t P = 32003;
    std::uint32_t v = 0;

    Fp() = default;
    explicit Fp(long x) {
        long r = x % static_cast<long>(P);
        if (r < 0) r += P;
        v = static_cast<std::uint32_t>(r);
    }
    bool is_zero() const { return v == 0; }
    friend Fp operator+(Fp a, Fp b) { return from_raw((a.v + b.v) % P); }
    friend Fp operator-(Fp a, Fp b) { return from_raw((a.v + P - b.v) % P); }
    friend Fp operator*(Fp a, Fp b) {
        return from_raw(static_cast<std::uint32_t>(std::uint64_t{a.v} * b.v % P));
    }
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
    Fp operator-() const { return from_raw(v ? P - v : 0); }
    Fp inverse() const;
    friend bool operator==(Fp, Fp) = default;

  private:
    static Fp from_raw(std::uint32_t r) {
        Fp f;
        f.v = r;
        return f;
    }
};

template <class C>
inline bool coeff_is_zero(const C& c) {
    return c.is_zero();
}
template <>
inline bool coeff_is_zero<Rat>(const Rat& c) {
    return sgn(c) == 0;
}

template <class C>
struct Term {
    Monomial mono;
    C coeff;

    friend bool operator==(const Term& a, const Term& b) {
        return a.mono == b.mono && a.coeff == b.coeff;
    }
};

// Sparse polynomial with terms kept strictly descending under a TermOrder.
template <class C>
struct Poly {
    std::vector<Term<C>> terms;

    bool is_zero() const { return terms.empty(); }
    const Monomial& lm() const {
        if (is_zero()) throw std::invalid_argument("zero polynomial has no leading monomial");
        return terms.front().mono;
    }
    const C& lc() const {
        if (is_zero()) throw std::invalid_argument("zero polynomial has no leading coefficient");
        return terms.front().coeff;
    }
    int degree() const { return is_zero() ? -1 : terms.front().mono.degree(); }
};

template <class C>
Poly<C> make_poly(std::vector<Term<C>> terms, const TermOrder& ord) {
    std::sort(terms.begin(), terms.end(),
              [&](const Term<C>& a, const Term<C>& b) { return ord.greater(a.mono, b.mono); });
    Poly<C> p;
    for (auto& t : terms) {
        if (!p.terms.empty() && p.terms.back().mono == t.mono)
            p.terms.back().coeff = p.terms.back().coeff + t.coeff;
        else
            p.terms.push_back(std::move(t));
        if (!p.terms.empty() && coeff_is_zero(p.terms.back().coeff)) p.terms.pop_back();
    }
    return p;
}

template <class C>
Poly<C> poly_add(const Poly<C>& a, const Poly<C>& b, const TermOrder& ord) {
    Poly<C> out;
    out.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
        if (j == b.terms.size()) {
            out.terms.push_back(a.terms[i++]);
        } else if (i == a.terms.size()) {
            out.terms.push_back(b.terms[j++]);
        } else {
            const Cmp c = ord.compare(a.terms[i].mono, b.terms[j].mono);
            if (c == Cmp::Greater) {
                out.terms.push_back(a.terms[i++]);
            } else if (c == Cmp::Less) {
                out.terms.push_back(b.terms[j++]);
            } else {
                C sum = a.terms[i].coeff + b.terms[j].coeff;
                if (!coeff_is_zero(sum)) out.terms.push_back({a.terms[i].mono, std::move(sum)});
                ++i;
                ++j;
            }
        }
    }
    return out;
}

template <class C>
Poly<C> poly_negate(Poly<C> p) {
    for (auto& t : p.terms) t.coeff = -t.coeff;
    return p;
}

template <class C>
Poly<C> poly_sub(const Poly<C>& a, const Poly<C>& b, const TermOrder& ord) {
    return poly_add(a, poly_negate(b), ord);
}

// Multiplying by one term keeps the order (the order is multiplicative).
template <class C>
Poly<C> poly_mul_term(const Poly<C>& p, const Monomial& m, const C& c) {
    Poly<C> out;
    if (coeff_is_zero(c)) return out;
    out.terms.reserve(p.terms.size());
    for (const auto& t : p.terms) out.terms.push_back({t.mono * m, t.coeff * c});
    return out;
}

template <class C>
Poly<C> poly_monic(Poly<C> p) {
    if (p.is_zero()) return p;
    const C inv_lc = p.lc();
    for (auto& t : p.terms) t.coeff = t.coeff / inv_lc;
    return p;
}

// Signed permutation expansion of the selected (k+1)-minor; sizes above 5
// are refused (the expansion is factorial).
template <class C>
Poly<C> minor_polynomial_t(const std::vector<int>& rows, const std::vector<int>& cols, int n,
                           const TermOrder& ord);

Poly<Rat> minor_polynomial(const std::vector<int>& rows, const std::vector<int>& cols, int n,
                           const TermOrder& ord);

const Monomial& leading_monomial(const Poly<Rat>& p);

// Exhaustive leading-monomial check for all equal-size row/column selections
// of one size: lm(det) must equal the product over the selection's support.
struct LeadingMonomialReport {
    int n = 0, k = 0;
    bool pass = false;
    long long pairs_checked = 0;
    struct Counterexample {
        std::vector<int> rows, cols;
        std::string lm, expected;
    };
    std::vector<Counterexample> counterexamples;
};

LeadingMonomialReport verify_leading_monomials(int n, int k, bool override_budget = false);

// Bijection between rotation classes of the 2n-gon chords and matrix
// positions: class -> (row, col) in [1..n]^2, and back. Mutually inverse.
std::pair<int, int> class_to_position(const DiagonalClass& c, int n);
DiagonalClass position_to_class(int i, int j, int n);

// Minimal squarefree generators of the Stanley-Reisner ideal of the reduced
// type-B complex: the leading supports of all (k+1)-minors, deduplicated.
// Each generator is checked to map back to a (k+1)-crossing of classes.
std::vector<Monomial> stanley_reisner_generators(int n, int k);

// All size-m index subsets of [1..n] in lexicographic order.
std::vector<std::vector<int>> index_subsets(int n, int m);

}  // namespace bcross
