#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "fdsat/errors.hpp"
#include "fdsat/report.hpp"
#include "fdsat/scenario.hpp"
#include "fdsat/usecases.hpp"

using namespace fdsat;
using namespace fdsat::usecases;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("catalog: eight unique entries, each with bands and advantages") {
    const auto& entries = catalog();
    REQUIRE(entries.size() == 8);
    std::set<UseCaseId> ids;
    for (const auto& e : entries) {
        ids.insert(e.id);
        CHECK(!e.name.empty());
        CHECK(!e.application.empty());
        CHECK(e.bands.size() >= 1);
        CHECK(e.advantages.size() >= 1);
    }
    CHECK(ids.size() == 8);
}

TEST_CASE("catalog: transcribed fields") {
    const auto& ul = lookup(UseCaseId::UL);
    CHECK(ul.bands == std::vector<std::string>{"Ku", "Ka"});
    CHECK(ul.application.find("satellite-aided M2M and D2D") != std::string::npos);

    const auto& isl_ml = lookup(UseCaseId::ISL_ML);
    bool has_doubling = false;
    bool has_latency = false;
    for (const auto& adv : isl_ml.advantages) {
        if (adv.find("Doubling the spectrum") != std::string::npos) has_doubling = true;
        if (adv.find("latency by up to 50%") != std::string::npos) has_latency = true;
    }
    CHECK(has_doubling);
    CHECK(has_latency);

    const auto& isl_so = lookup(UseCaseId::ISL_SO);
    CHECK(isl_so.application.find("Relaying, data offloading") != std::string::npos);
}

TEST_CASE("priority tiers match the ranking") {
    CHECK(priority(UseCaseId::ISL_SO) == PriorityTier::MostPromising);
    CHECK(priority(UseCaseId::ISL_ML) == PriorityTier::MostPromising);
    CHECK(priority(UseCaseId::FL) == PriorityTier::Promising);
    CHECK(priority(UseCaseId::UL) == PriorityTier::Promising);
    CHECK(priority(UseCaseId::SATL) == PriorityTier::LessPromising);
    CHECK(priority(UseCaseId::CTRL) == PriorityTier::LessPromising);
    CHECK(priority(UseCaseId::FU_UD) == PriorityTier::LessPromising);
    CHECK(priority(UseCaseId::UU_FD) == PriorityTier::LessPromising);
}

TEST_CASE("use case id parsing") {
    CHECK(parse_use_case_id("FU-UD") == UseCaseId::FU_UD);
    CHECK(parse_use_case_id("ISL-SO") == UseCaseId::ISL_SO);
    CHECK_THROWS_WITH_AS(parse_use_case_id("XX"), doctest::Contains("valid ids"),
                         ValidationError);
}

TEST_CASE("catalog JSON is static and matches the checked-in transcription") {
    const std::string rendered = report::render_catalog_json(catalog());
    CHECK(rendered == report::render_catalog_json(catalog()));
    const std::string golden = read_file(std::string(FDSAT_TESTS_DATA_DIR) +
                                         "/catalog_golden.json");
    CHECK(rendered == golden);
}

TEST_CASE("default scenarios: quantified templates validate as-is") {
    for (UseCaseId id : {UseCaseId::FU_UD, UseCaseId::UU_FD, UseCaseId::SATL}) {
        const auto tmpl = default_scenario(id);
        CHECK(tmpl.parameters_specified);
        CHECK_NOTHROW(scenario::validate(tmpl.scenario));
        CHECK(!tmpl.scenario.assumptions.empty());
    }

    const auto fu_ud = default_scenario(UseCaseId::FU_UD).scenario;
    CHECK(fu_ud.nodes.at("gw").eirp_dbw == 43.0);
    CHECK(fu_ud.nodes.at("sat").eirp_dbw == 65.0);
    CHECK(fu_ud.nodes.at("gw").g_over_t_dbk == 31.5);
    CHECK(fu_ud.link.carrier_ghz == 37.5);
    CHECK(fu_ud.env.bandwidth_hz == 50e6);
    CHECK(fu_ud.env.temperature_k == 290.0);
    CHECK(fu_ud.duplex.sic_db == 70.0);

    const auto satl = default_scenario(UseCaseId::SATL).scenario;
    CHECK(satl.nodes.at(satl.link.fd_node).isolation_db == 25.0);
    CHECK(satl.nodes.at("haps").position->alt_km == 20.0);
}

TEST_CASE("default scenarios: unquantified templates carry the flag") {
    for (UseCaseId id : {UseCaseId::UL, UseCaseId::FL, UseCaseId::CTRL, UseCaseId::ISL_SO,
                         UseCaseId::ISL_ML}) {
        const auto tmpl = default_scenario(id);
        CHECK(!tmpl.parameters_specified);
        CHECK(tmpl.note.find("not specified") != std::string::npos);
    }
}
