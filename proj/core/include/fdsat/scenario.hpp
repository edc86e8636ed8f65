#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fdsat/duplexing.hpp"
#include "fdsat/geometry.hpp"
#include "fdsat/linkbudget.hpp"
#include "fdsat/usecases.hpp"

namespace fdsat::scenario {

struct NodeSpec {
    enum class Role { Ground, Aerial, Satellite };

    Role role = Role::Ground;
    // Present for ground/aerial nodes; satellites are resolved from the
    // constellation at assessment time.
    std::optional<geometry::GeodeticPosition> position;
    double eirp_dbw = 0.0;
    double g_over_t_dbk = 0.0;
    double isolation_db = 0.0;

    bool operator==(const NodeSpec&) const = default;
};

struct EpochPolicy {
    enum class Mode { BestPass, Fixed };

    Mode mode = Mode::BestPass;
    double window_s = 86400.0;  // best-pass scan window from t = 0
    double step_s = 10.0;       // coarse scan step (refined to 1 s)
    double epoch_s = 0.0;       // fixed-epoch mode only

    bool operator==(const EpochPolicy&) const = default;
};

struct LinkSpec {
    std::string a_tx;
    std::string a_rx;
    std::string b_tx;
    std::string b_rx;
    std::string fd_node;
    double carrier_ghz = 0.0;  // shared IBFD carrier; defaulted per use case
    double min_elevation_deg = 10.0;
    double additional_loss_db = 0.0;
    EpochPolicy epoch;

    bool operator==(const LinkSpec&) const = default;
};

struct DuplexSpec {
    double sic_db = 0.0;
    double fdd_split = 0.5;  // band share of the FD node's receive direction
    std::optional<double> fd_node_tx_power_dbw;  // default: FD node EIRP
    double amplification_db = 0.0;               // bent-pipe loop gain check

    bool operator==(const DuplexSpec&) const = default;
};

// One applied assumption. `defaulted` entries come from omitted fields; the
// rest record explicit values taken for quantities the source system
// parameters do not pin down (SI reference power, unmodeled loss margin).
struct Assumption {
    std::string key;
    std::string detail;
    bool defaulted = true;
};

struct Scenario {
    usecases::UseCaseId use_case = usecases::UseCaseId::FU_UD;
    geometry::ConstellationSpec constellation;
    std::map<std::string, NodeSpec> nodes;
    LinkSpec link;
    linkbudget::NoiseEnvironment env;
    DuplexSpec duplex;
    // Provenance, not physics: excluded from equality.
    std::vector<Assumption> assumptions;

    bool operator==(const Scenario& other) const {
        return use_case == other.use_case && constellation == other.constellation &&
               nodes == other.nodes && link == other.link && env == other.env &&
               duplex == other.duplex;
    }
};

struct AssessmentResult {
    int satellite_id = 0;
    double epoch_s = 0.0;
    // Resolved geometry per positioned node, keyed by node name.
    std::map<std::string, geometry::PassGeometry> passes;
    linkbudget::LinkBudget fd_receive_budget;
    linkbudget::LinkBudget remote_receive_budget;
    duplexing::DuplexComparison comparison;
    double loop_margin_db = 0.0;
    bool loop_warning = false;
    std::vector<Assumption> assumptions;
};

// Parses the declarative scenario document (strict: unknown keys rejected).
Scenario load_scenario(const std::string& text);
Scenario load_scenario_file(const std::string& path);

// Canonical re-serialization; load(serialize(s)) == s.
std::string serialize_scenario(const Scenario& s);

void validate(const Scenario& s);

// Pure function of the scenario value: resolves geometry, builds both
// directional budgets on the shared carrier, runs the duplex comparison and
// attaches the assumption ledger.
AssessmentResult assess(const Scenario& s);

// One assessment per SIC value with geometry resolved once and reused.
// Output order equals input order; entries may evaluate in parallel
// (FDSAT_THREADS caps the worker count, 0 = auto).
std::vector<std::pair<double, duplexing::DuplexComparison>> sweep_sic(
    const Scenario& s, const std::vector<double>& sic_values_db);

struct SweepRange {
    double start = 0.0;
    double stop = 0.0;
    double step = 0.0;
};

// "start:stop:step", start <= stop, step > 0.
SweepRange parse_sweep_range(const std::string& text);
std::vector<double> expand(const SweepRange& range);

std::vector<std::pair<double, duplexing::DuplexComparison>> sweep_grid(
    const Scenario& s, const SweepRange& range);

}  // namespace fdsat::scenario

namespace fdsat::usecases {

struct ScenarioTemplate {
    scenario::Scenario scenario;
    bool parameters_specified = false;  // false: placeholders only
    std::string note;
};

// Pre-filled study template for one use case. Fully parameterized for FU-UD,
// UU-FD and SATL; the remaining ids carry placeholder RF values and an
// explanatory note.
ScenarioTemplate default_scenario(UseCaseId id);

}  // namespace fdsat::usecases
