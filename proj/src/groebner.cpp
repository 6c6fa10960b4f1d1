#include "bcross/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include "bcross/counting.hpp"
#include "bcross/errors.hpp"

namespace bcross {

namespace {

template <class C>
Poly<C> normal_form_t(const Poly<C>& p, const std::vector<Poly<C>>& basis, const TermOrder& ord) {
    Poly<C> remainder;
    Poly<C> h = p;
    while (!h.is_zero()) {
        bool reduced = false;
        for (const Poly<C>& g : basis) {
            if (g.is_zero()) continue;
            if (g.lm().divides(h.lm())) {
                const Monomial q = h.lm().divided_by(g.lm());
                const C c = h.lc() / g.lc();
                h = poly_sub(h, poly_mul_term(g, q, c), ord);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            remainder.terms.push_back(h.terms.front());
            h.terms.erase(h.terms.begin());
        }
    }
    return remainder;
}

template <class C>
Poly<C> spolynomial(const Poly<C>& f, const Poly<C>& g, const TermOrder& ord) {
    const Monomial l = Monomial::lcm(f.lm(), g.lm());
    const C fc = C(1) / f.lc();
    const C gc = C(1) / g.lc();
    const Poly<C> a = poly_mul_term(f, l.divided_by(f.lm()), fc);
    const Poly<C> b = poly_mul_term(g, l.divided_by(g.lm()), gc);
    return poly_sub(a, b, ord);
}

struct SPairKey {
    int deg;  // degree of the lcm; generators here are homogeneous, so this is the sugar degree
    int i, j;
    friend auto operator<=>(const SPairKey&, const SPairKey&) = default;
};

template <class C>
struct CoreResult {
    std::vector<Poly<C>> basis;
    bool input_was_gb = true;
    std::uint64_t reduced = 0, skipped = 0;
};

template <class C>
CoreResult<C> buchberger_core(std::vector<Poly<C>> basis, const TermOrder& ord,
                              const GroebnerOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    auto seconds_spent = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };

    CoreResult<C> res;
    std::erase_if(basis, [](const Poly<C>& p) { return p.is_zero(); });
    for (auto& g : basis) g = poly_monic(std::move(g));

    std::map<SPairKey, Monomial> pending;  // key -> lcm
    auto push_pairs = [&](std::size_t upto) {
        for (std::size_t i = 0; i < upto; ++i) {
            const Monomial l = Monomial::lcm(basis[i].lm(), basis[upto].lm());
            pending.emplace(SPairKey{l.degree(), static_cast<int>(i), static_cast<int>(upto)}, l);
        }
    };
    for (std::size_t t = 1; t < basis.size(); ++t) push_pairs(t);

    std::uint64_t processed = 0;
    while (!pending.empty()) {
        if (++processed > opts.spair_cap)
            throw BudgetExceeded("Groebner computation exceeded the S-pair budget");
        if (seconds_spent() > opts.wall_seconds)
            throw BudgetExceeded("Groebner computation exceeded the wall-clock budget");

        const auto it = pending.begin();
        const auto [deg, i, j] = it->first;
        const Monomial lcm_ij = it->second;
        pending.erase(it);
        if (deg > opts.max_degree)
            throw BudgetExceeded("Groebner computation exceeded the degree budget");

        const Poly<C>& f = basis[static_cast<std::size_t>(i)];
        const Poly<C>& g = basis[static_cast<std::size_t>(j)];

        if (f.lm().coprime_with(g.lm())) {
            ++res.skipped;
            continue;
        }
        // chain criterion: some other basis element divides the lcm and both
        // spanned pairs are no longer pending
        bool chained = false;
        for (std::size_t l = 0; l < basis.size() && !chained; ++l) {
            if (l == static_cast<std::size_t>(i) || l == static_cast<std::size_t>(j)) continue;
            if (!basis[l].lm().divides(lcm_ij)) continue;
            auto has_pending = [&](int a, int b) {
                if (a > b) std::swap(a, b);
                const Monomial m = Monomial::lcm(basis[static_cast<std::size_t>(a)].lm(),
                                                 basis[static_cast<std::size_t>(b)].lm());
                return pending.count(SPairKey{m.degree(), a, b}) > 0;
            };
            if (!has_pending(i, static_cast<int>(l)) && !has_pending(j, static_cast<int>(l)))
                chained = true;
        }
        if (chained) {
            ++res.skipped;
            continue;
        }

        Poly<C> r = normal_form_t(spolynomial(f, g, ord), basis, ord);
        ++res.reduced;
        if (!r.is_zero()) {
            res.input_was_gb = false;
            basis.push_back(poly_monic(std::move(r)));
            push_pairs(basis.size() - 1);
        }
    }

    // reduce: drop elements whose lm another lm divides, then tail-reduce
    std::vector<Poly<C>> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (basis[j].lm().divides(basis[i].lm()) && !(basis[i].lm() == basis[j].lm() && j > i))
                redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly<C>> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        minimal[i] = poly_monic(normal_form_t(minimal[i], others, ord));
    }
    std::sort(minimal.begin(), minimal.end(),
              [&](const Poly<C>& a, const Poly<C>& b) { return ord.less(a.lm(), b.lm()); });
    res.basis = std::move(minimal);
    return res;
}

template <class C>
bool verify_gb_t(const std::vector<Poly<C>>& basis, const TermOrder& ord) {
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            if (!normal_form_t(spolynomial(basis[i], basis[j], ord), basis, ord).is_zero())
                return false;
    return true;
}

Poly<Fp> to_fp(const Poly<Rat>& p) {
    Poly<Fp> out;
    out.terms.reserve(p.terms.size());
    for (const auto& t : p.terms) {
        const BigInt num = t.coeff.get_num(), den = t.coeff.get_den();
        const Fp fn(mpz_fdiv_ui(num.get_mpz_t(), Fp::P));
        const Fp fd(mpz_fdiv_ui(den.get_mpz_t(), Fp::P));
        if (fd.is_zero()) throw VerificationFailure("denominator vanishes mod 32003");
        const Fp c = fn / fd;
        if (!c.is_zero()) out.terms.push_back({t.mono, c});
    }
    return out;
}

}  // namespace

IdealBasis make_ideal_basis(std::vector<Poly<Rat>> gens, TermOrder order) {
    std::erase_if(gens, [](const Poly<Rat>& p) { return p.is_zero(); });
    for (auto& g : gens) g = poly_monic(std::move(g));
    return IdealBasis{std::move(gens), std::move(order)};
}

MonomialIdeal make_monomial_ideal(std::vector<Monomial> gens, const TermOrder& ord) {
    std::sort(gens.begin(), gens.end(),
              [&](const Monomial& a, const Monomial& b) { return ord.less(a, b); });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    MonomialIdeal out;
    for (const Monomial& m : gens)
        if (!out.contains(m)) out.mingens.push_back(m);
    return out;
}

Poly<Rat> normal_form(const Poly<Rat>& p, const std::vector<Poly<Rat>>& basis,
                      const TermOrder& ord) {
    return normal_form_t(p, basis, ord);
}

GroebnerResult buchberger(const IdealBasis& input, const GroebnerOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    CoreResult<Rat> core = buchberger_core<Rat>(input.gens, input.order, opts);

    if (opts.self_check && !verify_gb_t(core.basis, input.order))
        throw VerificationFailure("computed basis failed the exhaustive S-polynomial check");

    if (opts.crosscheck_fp) {
        std::vector<Poly<Fp>> fp_gens;
        fp_gens.reserve(input.gens.size());
        for (const auto& g : input.gens) fp_gens.push_back(to_fp(g));
        CoreResult<Fp> fp = buchberger_core<Fp>(std::move(fp_gens), input.order, opts);
        std::vector<Monomial> lr, lf;
        for (const auto& g : core.basis) lr.push_back(g.lm());
        for (const auto& g : fp.basis) lf.push_back(g.lm());
        if (lr != lf)
            throw VerificationFailure("rational and mod-32003 leading monomial sets differ");
    }

    GroebnerResult res;
    res.basis = std::move(core.basis);
    res.input_was_gb = core.input_was_gb;
    res.spairs_reduced = core.reduced;
    res.spairs_skipped = core.skipped;
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

MonomialIdeal initial_ideal(const std::vector<Poly<Rat>>& gb, const TermOrder& ord) {
    std::vector<Monomial> lms;
    lms.reserve(gb.size());
    for (const auto& g : gb) lms.push_back(g.lm());
    return make_monomial_ideal(std::move(lms), ord);
}

bool verify_groebner_basis(const std::vector<Poly<Rat>>& basis, const TermOrder& ord) {
    return verify_gb_t(basis, ord);
}

std::vector<Poly<Rat>> minor_ideal_gens(int n, int k, const TermOrder& ord) {
    if (k < 1 || k > n - 1) throw std::invalid_argument("need 1 <= k <= n-1");
    std::vector<Poly<Rat>> gens;
    const auto subsets = index_subsets(n, k + 1);
    for (const auto& rows : subsets)
        for (const auto& cols : subsets)
            gens.push_back(poly_monic(minor_polynomial(rows, cols, n, ord)));
    return gens;
}

GroebnerEquivalenceReport check_groebner_equivalences(int n, int k, const GroebnerOptions& gopts,
                                                      const EnumerationBudget& budget) {
    const auto start = std::chrono::steady_clock::now();
    GroebnerEquivalenceReport rep;
    rep.n = n;
    rep.k = k;

    TermOrder ord(n);
    IdealBasis ideal = make_ideal_basis(minor_ideal_gens(n, k, ord), ord);
    GroebnerResult gb = buchberger(ideal, gopts);
    rep.minors_are_gb = gb.input_was_gb;
    rep.gb_size = gb.basis.size();

    const MonomialIdeal init = initial_ideal(gb.basis, ord);
    const MonomialIdeal sr = make_monomial_ideal(stanley_reisner_generators(n, k), ord);
    rep.initial_gens = init.mingens.size();
    rep.sr_gens = sr.mingens.size();
    rep.sr_equals_initial = init == sr;

    rep.sr_contained_in_initial = true;
    for (const Monomial& m : sr.mingens)
        if (!init.contains(m)) rep.sr_contained_in_initial = false;

    const SimplicialComplex cx = enumerate_facets(ground_set(Mode::TypeB, n, k), budget);
    rep.facet_count = BigInt(static_cast<unsigned long>(cx.facets.size()));
    rep.lower_bound = typeb_lower_bound(n, k);
    rep.count_equals_lower = rep.facet_count == rep.lower_bound;

    rep.all_equal = rep.minors_are_gb == rep.sr_equals_initial &&
                    rep.sr_equals_initial == rep.count_equals_lower;
    rep.all_true = rep.minors_are_gb && rep.sr_equals_initial && rep.count_equals_lower;
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

namespace {

// brute-force sweep over all subsets of [nvars]; a subset is a face iff it
// contains no generator support
std::pair<int, long long> squarefree_complex_top(const MonomialIdeal& ideal, int nvars) {
    if (nvars < 0 || nvars > 20) throw BudgetExceeded("squarefree complex probe capped at 20 variables");
    std::vector<std::uint32_t> supports;
    for (const Monomial& m : ideal.mingens) {
        if (!m.is_squarefree()) throw std::invalid_argument("ideal is not squarefree");
        if (m.n * m.n != nvars) throw std::invalid_argument("variable count mismatch");
        std::uint32_t s = 0;
        int v = 0;
        for (int e : m.exps) {
            if (e) s |= std::uint32_t{1} << v;
            ++v;
        }
        supports.push_back(s);
    }
    int best = -1;
    long long count = 0;
    for (std::uint32_t face = 0; face < (std::uint32_t{1} << nvars); ++face) {
        bool ok = true;
        for (std::uint32_t s : supports)
            if ((face & s) == s) {
                ok = false;
                break;
            }
        if (!ok) continue;
        const int sz = std::popcount(face);
        if (sz - 1 > best) {
            best = sz - 1;
            count = 1;
        } else if (sz - 1 == best) {
            ++count;
        }
    }
    return {best, count};
}

}  // namespace

int squarefree_complex_dimension(const MonomialIdeal& ideal, int nvars) {
    return squarefree_complex_top(ideal, nvars).first;
}

long long squarefree_complex_top_face_count(const MonomialIdeal& ideal, int nvars) {
    return squarefree_complex_top(ideal, nvars).second;
}

}  // namespace bcross
