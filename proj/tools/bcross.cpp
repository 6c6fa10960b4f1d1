// Command-line surface for the triangulation-complex library: enumeration,
// f/h-vectors, GF(2) homology, counting bounds, Stanley-Reisner generators,
// leading-monomial sweeps, Groebner checks, Gale enumeration and the cyclic
// polytope isomorphism, plus the bundled verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or budget error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bcross/counting.hpp"
#include "bcross/errors.hpp"
#include "bcross/gale.hpp"
#include "bcross/groebner.hpp"
#include "bcross/homology.hpp"
#include "bcross/monomial.hpp"
#include "bcross/report.hpp"

namespace {

using nlohmann::json;

struct CommonArgs {
    std::string mode = "B";
    int n = 3, k = 1;
    std::string format = "text";
    std::string cache_dir;
    bcross::EnumerationBudget budget;
};

void add_budget_flags(CLI::App* cmd, bcross::EnumerationBudget& budget) {
    cmd->add_option("--node-cap", budget.node_cap, "enumeration node budget");
    cmd->add_option("--face-cap", budget.face_cap, "stored face budget");
}

std::string default_cache_dir() {
    const char* env = std::getenv("BCROSS_CACHE");
    return env ? std::string(env) : std::string();
}

void emit(const json& j, const std::string& format) {
    if (format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << j.dump(2) << "\n";  // text falls back to pretty JSON for nested data
}

json bounds_to_json(const bcross::BoundsReport& rep) {
    json j;
    j["n"] = rep.n;
    j["k"] = rep.k;
    j["lower"] = rep.lower.get_str();
    j["upper_operative"] = rep.upper_operative.get_str();
    j["upper_paper_literal"] = rep.upper_paper_literal.get_str();
    if (rep.enumerated) j["enumerated"] = rep.enumerated->get_str();
    if (rep.type_a_count) j["type_a_count"] = rep.type_a_count->get_str();
    if (rep.enumerated) j["lower_equals_enumerated"] = rep.lower_equals_enumerated;
    return j;
}

int run_cli(int argc, char** argv) {
    CLI::App app{"type-A/type-B generalized triangulation complexes and determinantal checks"};
    app.require_subcommand(1);

    CommonArgs a;
    a.cache_dir = default_cache_dir();

    // facets
    auto* facets = app.add_subcommand("facets", "enumerate facets of a complex");
    facets->add_option("--mode", a.mode, "A, B or BSym")->capture_default_str();
    facets->add_option("--n", a.n)->required();
    facets->add_option("--k", a.k)->required();
    facets->add_option("--format", a.format, "json or text")->capture_default_str();
    facets->add_option("--cache-dir", a.cache_dir, "facet cache directory");
    add_budget_flags(facets, a.budget);
    facets->callback([&] {
        const bcross::GroundSet g = bcross::ground_set(bcross::mode_from_name(a.mode), a.n, a.k);
        const bcross::SimplicialComplex cx = bcross::facets_cached(g, a.budget, a.cache_dir);
        if (a.format == "json") {
            json j = bcross::complex_to_json(cx);
            j["dim"] = cx.dim;
            j["pure"] = cx.pure;
            j["facet_count"] = cx.facets.size();
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << cx.facets.size() << " facets, dim " << cx.dim << ", pure "
                      << (cx.pure ? "true" : "false") << "\n";
            for (const auto& f : cx.facet_index_lists()) {
                for (std::size_t i = 0; i < f.size(); ++i)
                    std::cout << (i ? " " : "") << g.vertex_label(f[i]);
                std::cout << "\n";
            }
        }
    });

    // fvector
    auto* fvec = app.add_subcommand("fvector", "f/h-vector and Hilbert series");
    fvec->add_option("--mode", a.mode)->capture_default_str();
    fvec->add_option("--n", a.n)->required();
    fvec->add_option("--k", a.k)->required();
    fvec->add_option("--format", a.format)->capture_default_str();
    fvec->add_option("--cache-dir", a.cache_dir);
    add_budget_flags(fvec, a.budget);
    fvec->callback([&] {
        const bcross::GroundSet g = bcross::ground_set(bcross::mode_from_name(a.mode), a.n, a.k);
        const bcross::SimplicialComplex cx = bcross::facets_cached(g, a.budget, a.cache_dir);
        const bcross::FHVector fh = bcross::fh_vector(cx, a.budget.face_cap);
        json j;
        j["f"] = fh.f;
        j["h"] = fh.h;
        j["h_symmetric"] = fh.h_symmetric;
        j["h_unimodal"] = fh.h_unimodal;
        j["hilbert_series"] = bcross::hilbert_series_text(fh.h);
        emit(j, a.format);
    });

    // homology
    auto* hom = app.add_subcommand("homology", "GF(2) Betti numbers and sphere checks");
    std::string links = "default";
    std::size_t sample = 50;
    std::uint64_t seed = 12345;
    hom->add_option("--mode", a.mode)->capture_default_str();
    hom->add_option("--n", a.n)->required();
    hom->add_option("--k", a.k)->required();
    hom->add_option("--links", links, "all, sample, none or default")->capture_default_str();
    hom->add_option("--sample", sample, "sample size for --links sample")->capture_default_str();
    hom->add_option("--seed", seed, "recorded sampling seed")->capture_default_str();
    hom->add_option("--format", a.format)->capture_default_str();
    hom->add_option("--cache-dir", a.cache_dir);
    add_budget_flags(hom, a.budget);
    hom->callback([&] {
        const bcross::GroundSet g = bcross::ground_set(bcross::mode_from_name(a.mode), a.n, a.k);
        const bcross::SimplicialComplex cx = bcross::facets_cached(g, a.budget, a.cache_dir);
        bcross::LinkPolicy policy = bcross::default_link_policy(g);
        if (links == "all") policy = bcross::LinkPolicy::All;
        else if (links == "sample") policy = bcross::LinkPolicy::Sample;
        else if (links == "none") policy = bcross::LinkPolicy::None;
        else if (links != "default") throw CLI::ValidationError("--links", "unknown policy");
        const bcross::HomologySphereReport rep =
            bcross::is_homology_sphere(cx, policy, sample, seed, a.budget);
        json j;
        j["betti"] = rep.complex_betti;
        j["sphere_dim"] = rep.sphere_dim;
        j["pass"] = rep.pass;
        j["checks_run"] = rep.checks_run;
        j["policy"] = links == "default" ? (policy == bcross::LinkPolicy::All ? "all" : "sample") : links;
        j["seed"] = rep.seed;
        json fails = json::array();
        for (const auto& f : rep.failures) {
            json jf;
            jf["face"] = f.face;
            jf["expected_sphere_dim"] = f.expected_sphere_dim;
            jf["betti"] = f.betti;
            fails.push_back(std::move(jf));
        }
        j["failures"] = std::move(fails);
        emit(j, a.format);
        if (!rep.pass) throw bcross::VerificationFailure("homology sphere check failed");
    });

    // count
    auto* count = app.add_subcommand("count", "closed-form counts and bound sandwich");
    bool enumerate = false;
    count->add_option("--n", a.n)->required();
    count->add_option("--k", a.k)->required();
    count->add_flag("--enumerate", enumerate, "also enumerate the type-B facets");
    count->add_option("--format", a.format, "json, csv or text")->capture_default_str();
    count->add_option("--cache-dir", a.cache_dir);
    add_budget_flags(count, a.budget);
    count->callback([&] {
        const bcross::BoundsReport rep = bcross::bounds_report(a.n, a.k, enumerate, a.budget);
        if (a.format == "csv") {
            std::cout << "n,k,lower,enumerated,upper_operative,upper_paper_literal,type_a_count,"
                         "lower_equals_enumerated\n";
            std::cout << rep.n << "," << rep.k << "," << rep.lower.get_str() << ","
                      << (rep.enumerated ? rep.enumerated->get_str() : "") << ","
                      << rep.upper_operative.get_str() << "," << rep.upper_paper_literal.get_str()
                      << "," << (rep.type_a_count ? rep.type_a_count->get_str() : "") << ","
                      << (rep.enumerated ? (rep.lower_equals_enumerated ? "true" : "false") : "")
                      << "\n";
        } else {
            emit(bounds_to_json(rep), a.format);
        }
    });

    // sr-ideal
    auto* sr = app.add_subcommand("sr-ideal", "Stanley-Reisner generators of the type-B complex");
    sr->add_option("--n", a.n)->required();
    sr->add_option("--k", a.k)->required();
    sr->add_option("--format", a.format)->capture_default_str();
    sr->callback([&] {
        const auto gens = bcross::stanley_reisner_generators(a.n, a.k);
        json j;
        j["n"] = a.n;
        j["k"] = a.k;
        json arr = json::array();
        for (const auto& m : gens) {
            json supp = json::array();
            for (auto [i, jj] : m.support()) supp.push_back(json::array({i, jj}));
            arr.push_back(std::move(supp));
        }
        j["generators"] = std::move(arr);
        j["count"] = gens.size();
        emit(j, a.format);
    });

    // lm-check
    auto* lm = app.add_subcommand("lm-check", "leading monomials of all minors vs their supports");
    bool force = false;
    lm->add_option("--n", a.n)->required();
    lm->add_option("--k", a.k)->required();
    lm->add_flag("--force", force, "override the default size budget");
    lm->add_option("--format", a.format)->capture_default_str();
    lm->callback([&] {
        const bcross::LeadingMonomialReport rep = bcross::verify_leading_monomials(a.n, a.k, force);
        json j;
        j["n"] = rep.n;
        j["k"] = rep.k;
        j["pairs_checked"] = rep.pairs_checked;
        j["pass"] = rep.pass;
        json bad = json::array();
        for (const auto& c : rep.counterexamples) {
            json jc;
            jc["rows"] = c.rows;
            jc["cols"] = c.cols;
            jc["lm"] = c.lm;
            jc["expected"] = c.expected;
            bad.push_back(std::move(jc));
        }
        j["counterexamples"] = std::move(bad);
        emit(j, a.format);
        if (!rep.pass) throw bcross::VerificationFailure("leading monomial check failed");
    });

    // groebner
    auto* gro = app.add_subcommand("groebner", "Groebner basis of the minor ideal and equivalences");
    bcross::GroebnerOptions gopts;
    std::string dump_path;
    gro->add_option("--n", a.n)->required();
    gro->add_option("--k", a.k)->required();
    gro->add_option("--spair-cap", gopts.spair_cap)->capture_default_str();
    gro->add_option("--max-degree", gopts.max_degree)->capture_default_str();
    gro->add_option("--wall-seconds", gopts.wall_seconds)->capture_default_str();
    bool no_fp = false;
    gro->add_flag("--no-fp-check", no_fp, "skip the mod-32003 cross check");
    gro->add_option("--dump", dump_path, "write the reduced basis as JSON");
    gro->add_option("--format", a.format)->capture_default_str();
    add_budget_flags(gro, a.budget);
    gro->callback([&] {
        gopts.crosscheck_fp = !no_fp;
        const bcross::GroebnerEquivalenceReport rep =
            bcross::check_groebner_equivalences(a.n, a.k, gopts, a.budget);
        if (!dump_path.empty()) {
            bcross::TermOrder ord(a.n);
            const auto basis =
                bcross::buchberger(bcross::make_ideal_basis(bcross::minor_ideal_gens(a.n, a.k, ord), ord),
                                   gopts)
                    .basis;
            json dump = json::array();
            for (const auto& p : basis) {
                json terms = json::array();
                for (const auto& t : p.terms) {
                    json jt;
                    jt["coeff"] = t.coeff.get_str();
                    json mono = json::array();
                    for (auto [i, jj] : t.mono.support())
                        mono.push_back(json::array({i, jj, t.mono.exp(i, jj)}));
                    jt["monomial"] = std::move(mono);
                    terms.push_back(std::move(jt));
                }
                dump.push_back(std::move(terms));
            }
            std::ofstream out(dump_path);
            out << dump.dump(2) << "\n";
        }
        json j;
        j["n"] = rep.n;
        j["k"] = rep.k;
        j["minors_are_gb"] = rep.minors_are_gb;
        j["sr_equals_initial"] = rep.sr_equals_initial;
        j["count_equals_lower"] = rep.count_equals_lower;
        j["all_equal"] = rep.all_equal;
        j["all_true"] = rep.all_true;
        j["sr_contained_in_initial"] = rep.sr_contained_in_initial;
        j["facet_count"] = rep.facet_count.get_str();
        j["lower_bound"] = rep.lower_bound.get_str();
        j["gb_size"] = rep.gb_size;
        j["seconds"] = rep.seconds;
        emit(j, a.format);
        if (!rep.all_equal || !rep.sr_contained_in_initial)
            throw bcross::VerificationFailure("equivalence statements disagree");
    });

    // gale
    auto* gale = app.add_subcommand("gale", "facets of an even-dimensional cyclic polytope");
    int d = 4, N = 8;
    gale->add_option("--d", d, "even polytope dimension")->required();
    gale->add_option("--N", N, "vertex count")->required();
    gale->add_option("--format", a.format)->capture_default_str();
    gale->callback([&] {
        const auto facets_list = bcross::cyclic_facets(bcross::CyclicSpec(d, N));
        json j;
        j["d"] = d;
        j["N"] = N;
        j["count"] = facets_list.size();
        j["formula"] = bcross::cyclic_facet_count_formula(d, N).get_str();
        j["facets"] = facets_list;
        emit(j, a.format);
    });

    // cyclic-iso
    auto* iso = app.add_subcommand("cyclic-iso", "type-B complex at k = n-2 vs the cyclic polytope");
    iso->add_option("--n", a.n)->required();
    iso->add_option("--format", a.format)->capture_default_str();
    add_budget_flags(iso, a.budget);
    iso->callback([&] {
        const bcross::CyclicIsoReport rep = bcross::verify_cyclic_iso(a.n, a.budget);
        json j;
        j["n"] = rep.n;
        j["facets_match"] = rep.facets_match;
        j["nonfaces_ok"] = rep.nonfaces_ok;
        j["reversed_ok"] = rep.reversed_ok;
        j["pass"] = rep.pass;
        j["typeb_facets"] = rep.typeb_facets;
        j["gale_facets"] = rep.gale_facets;
        emit(j, a.format);
        if (!rep.pass) throw bcross::VerificationFailure("cyclic isomorphism check failed");
    });

    // verify
    auto* verify = app.add_subcommand("verify", "run the verification suite");
    std::string suite = "small";
    bool allow_skip = false;
    bcross::SuiteOptions sopts;
    verify->add_option("--suite", suite, "suite name (small)")->capture_default_str();
    verify->add_flag("--allow-skip", allow_skip, "do not fail on budget skips");
    verify->add_option("--seed", sopts.seed, "recorded sampling seed")->capture_default_str();
    verify->add_option("--stretch-seconds", sopts.stretch_wall_seconds,
                       "wall budget for the stretch item")
        ->capture_default_str();
    verify->add_option("--cache-dir", a.cache_dir);
    verify->add_option("--format", a.format)->capture_default_str();
    add_budget_flags(verify, sopts.enumeration);
    verify->callback([&] {
        if (suite != "small") throw CLI::ValidationError("--suite", "only 'small' exists");
        sopts.cache_dir = a.cache_dir;
        const auto outcomes = bcross::run_small_suite(sopts);
        if (a.format == "json") {
            std::cout << bcross::outcomes_to_json(outcomes).dump(2) << "\n";
        } else {
            for (const auto& o : outcomes) {
                std::string tag = o.status == bcross::VerificationOutcome::Status::Pass ? "PASS"
                                  : o.status == bcross::VerificationOutcome::Status::Fail ? "FAIL"
                                                                                          : "SKIP";
                std::printf("[%s] %-30s %7.2fs  %s\n", tag.c_str(), o.id.c_str(), o.seconds,
                            (o.status == bcross::VerificationOutcome::Status::Pass ? o.actual : o.note)
                                .c_str());
            }
        }
        const int code = bcross::suite_exit_code(outcomes, allow_skip);
        if (code != 0) throw bcross::VerificationFailure("verification suite did not pass");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const bcross::VerificationFailure& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const bcross::BudgetExceeded& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
