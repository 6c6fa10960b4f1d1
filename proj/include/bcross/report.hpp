#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bcross/complex.hpp"
#include "bcross/groebner.hpp"
#include "bcross/homology.hpp"

namespace bcross {

// Facet list serialization. Vertices are listed as canonical "a-b" labels,
// facets as sorted index arrays; the whole structure is order-canonical so
// identical inputs produce byte-identical files.
nlohmann::json complex_to_json(const SimplicialComplex& cx);
SimplicialComplex complex_from_json(const nlohmann::json& j);  // throws on schema problems

std::string cache_file_name(const GroundSet& g);
void write_facet_cache(const std::string& dir, const SimplicialComplex& cx);

// Returns the cached complex only on an exact (mode, n, k, schema) match and
// after revalidation (purity plus spot face checks); anything corrupt is
// reported on stderr and ignored.
std::optional<SimplicialComplex> load_facet_cache(const std::string& dir, const GroundSet& g);

// Load-or-compute; an empty cache_dir disables caching entirely.
SimplicialComplex facets_cached(const GroundSet& g, const EnumerationBudget& budget,
                                const std::string& cache_dir);

struct VerificationOutcome {
    enum class Status { Pass, Fail, SkippedBudget };

    std::string id;
    Status status = Status::Fail;
    std::string expected, actual, note;
    double seconds = 0.0;
    bool required = true;  // budget-flagged stretch items may skip
};

struct SuiteOptions {
    EnumerationBudget enumeration;
    GroebnerOptions groebner;
    double stretch_wall_seconds = 120.0;
    std::uint64_t seed = 12345;
    std::string cache_dir;  // empty: no on-disk cache
};

// The desk-scale verification suite; one outcome per acceptance item plus a
// budget-flagged stretch item and an informational reading comparison.
std::vector<VerificationOutcome> run_small_suite(const SuiteOptions& opts = {});

nlohmann::json outcomes_to_json(const std::vector<VerificationOutcome>& outcomes);
std::string outcome_status_name(VerificationOutcome::Status s);

// 0 all pass; 1 any failure, or any skip unless allow_skip.
int suite_exit_code(const std::vector<VerificationOutcome>& outcomes, bool allow_skip);

}  // namespace bcross
