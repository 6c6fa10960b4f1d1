#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "bcross/errors.hpp"
#include "bcross/report.hpp"

using namespace bcross;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("bcross_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    static inline int counter = 0;
};

}  // namespace

TEST_CASE("facet JSON round trip") {
    const SimplicialComplex cx = enumerate_facets(ground_set(Mode::TypeB, 3, 1));
    const nlohmann::json j = complex_to_json(cx);
    CHECK(j.at("schema") == 1);
    CHECK(j.at("mode") == "B");
    CHECK(j.at("vertices").size() == 6);
    const SimplicialComplex back = complex_from_json(j);
    CHECK(back.facets == cx.facets);
    CHECK(back.dim == cx.dim);
    CHECK(back.pure == cx.pure);
}

TEST_CASE("cache write, load and validation") {
    TempDir tmp;
    const GroundSet g = ground_set(Mode::TypeB, 3, 1);
    const SimplicialComplex cx = enumerate_facets(g);
    write_facet_cache(tmp.path.string(), cx);

    const auto loaded = load_facet_cache(tmp.path.string(), g);
    REQUIRE(loaded.has_value());
    CHECK(loaded->facets == cx.facets);

    // byte-identical rewrite
    const std::filesystem::path file = tmp.path / cache_file_name(g);
    std::ifstream in1(file);
    const std::string first((std::istreambuf_iterator<char>(in1)), std::istreambuf_iterator<char>());
    write_facet_cache(tmp.path.string(), cx);
    std::ifstream in2(file);
    const std::string second((std::istreambuf_iterator<char>(in2)), std::istreambuf_iterator<char>());
    CHECK(first == second);

    // wrong key: no hit
    CHECK_FALSE(load_facet_cache(tmp.path.string(), ground_set(Mode::TypeB, 4, 1)).has_value());

    // corrupt file: ignored with a warning
    {
        std::ofstream out(file);
        out << "{ not json";
    }
    CHECK_FALSE(load_facet_cache(tmp.path.string(), g).has_value());

    // schema mismatch: ignored
    {
        nlohmann::json j = complex_to_json(cx);
        j["schema"] = 99;
        std::ofstream out(file);
        out << j.dump(2) << "\n";
    }
    CHECK_FALSE(load_facet_cache(tmp.path.string(), g).has_value());

    // facets_cached recomputes and repairs the file
    const SimplicialComplex again = facets_cached(g, {}, tmp.path.string());
    CHECK(again.facets == cx.facets);
    CHECK(load_facet_cache(tmp.path.string(), g).has_value());
}

TEST_CASE("tampered facet lists fail revalidation") {
    TempDir tmp;
    const GroundSet g = ground_set(Mode::TypeB, 3, 1);
    const SimplicialComplex cx = enumerate_facets(g);
    nlohmann::json j = complex_to_json(cx);
    j["facets"][0] = nlohmann::json::array({0, 1, 2});  // wrong size: purity check trips
    {
        std::ofstream out(tmp.path / cache_file_name(g));
        out << j.dump(2) << "\n";
    }
    CHECK_FALSE(load_facet_cache(tmp.path.string(), g).has_value());
}

TEST_CASE("suite exit codes") {
    std::vector<VerificationOutcome> outcomes(2);
    outcomes[0].status = VerificationOutcome::Status::Pass;
    outcomes[1].status = VerificationOutcome::Status::Pass;
    CHECK(suite_exit_code(outcomes, false) == 0);
    outcomes[1].status = VerificationOutcome::Status::SkippedBudget;
    CHECK(suite_exit_code(outcomes, false) == 1);
    CHECK(suite_exit_code(outcomes, true) == 0);
    outcomes[1].status = VerificationOutcome::Status::Fail;
    CHECK(suite_exit_code(outcomes, true) == 1);
}

TEST_CASE("outcome JSON shape") {
    VerificationOutcome o;
    o.id = "demo";
    o.status = VerificationOutcome::Status::Pass;
    o.expected = "x";
    o.actual = "x";
    const nlohmann::json j = outcomes_to_json({o});
    REQUIRE(j.size() == 1);
    CHECK(j[0].at("id") == "demo");
    CHECK(j[0].at("status") == "pass");
    CHECK(j[0].at("required") == true);
}
