#include "fdsat/usecases.hpp"

#include "fdsat/errors.hpp"
#include "fdsat/scenario.hpp"

namespace fdsat::usecases {

namespace {

std::vector<UseCase> build_catalog() {
    std::vector<UseCase> entries;
    entries.push_back(
        {UseCaseId::UL,
         "User link",
         "5G over satellite, hot spot scenarios, relaying, integrated access, and "
         "backhauling (IAB), satellite-aided M2M and D2D",
         {"Ku", "Ka"},
         {"Doubling the spectrum (increasing data rate or number of served users)",
          "reducing latency by up to 50%",
          "reducing power imbalance between terrestrial and satellite networks",
          "reducing interference between the bands"},
         PriorityTier::Promising,
         {"terminal", "satellite", "satellite", "terminal", "satellite", 29.3}});
    entries.push_back(
        {UseCaseId::FL,
         "Feeder link",
         "Broadband",
         {"Q/V", "optical"},
         {"Doubling the spectrum (especially useful for feeder links. This can help to "
          "reduce the required number of feeder links to satisfy the demand)",
          "reducing interference between adjacent bands",
          "reducing latency by up to 50%"},
         PriorityTier::Promising,
         {"gateway", "satellite", "satellite", "gateway", "satellite", 37.5}});
    entries.push_back(
        {UseCaseId::CTRL,
         "Control links",
         "Transmission of telemetry data to the satellite",
         {"C/Ku"},
         {"Reduction of the orbital arc between adjacent satellites",
          "reduction of latency by up to 50%"},
         PriorityTier::LessPromising,
         {"station", "satellite", "satellite", "station", "satellite", 15.0}});
    entries.push_back(
        {UseCaseId::FU_UD,
         "Feeder uplink and user downlink",
         "Broadcast/multicast/unicast.",
         {"Q/V", "optical", "Ku", "Ka"},
         {"Reduction of the interference between very close bands", "overhead reduction",
          "doubling of spectrum"},
         PriorityTier::LessPromising,
         {"gateway", "satellite", "satellite", "terminal", "satellite", 37.5}});
    entries.push_back(
        {UseCaseId::UU_FD,
         "User uplink and feeder downlink",
         "Backhauling",
         {"Q/V", "optical", "Ku", "Ka"},
         {"Reduction of the interference between very close bands", "overhead reduction",
          "doubling of spectrum"},
         PriorityTier::LessPromising,
         {"terminal", "satellite", "satellite", "gateway", "satellite", 29.3}});
    entries.push_back(
        {UseCaseId::ISL_SO,
         "Inter-Satellite Link (ISL) for a single orbital plane",
         "Relaying, data offloading, exchange of parameters, e.g., telemetry, machine "
         "learning model, etc.",
         {"L/S/Ka/W", "optical"},
         {"Doubling the spectrum",
          "reducing the power imbalance between terrestrial and satellite networks",
          "reduction of latency by up to 50%"},
         PriorityTier::MostPromising,
         {"satellite_a", "satellite_b", "satellite_b", "satellite_a", "satellite_a", 29.3}});
    entries.push_back(
        {UseCaseId::ISL_ML,
         "Inter-satellite and inter-orbital links in multi-layer satellite constellations",
         "Relaying, data offloading, edge computing, exchange of parameters, e.g., "
         "telemetry, machine learning model, etc.",
         {"L/S/Ka/W", "optical"},
         {"Doubling the spectrum (e.g., to increase the number of simultaneously "
          "inter-connected satellites)",
          "reducing the orbital arc between the satellites",
          "reduction of power imbalance between terrestrial and satellite networks",
          "reduction of latency by up to 50%"},
         PriorityTier::MostPromising,
         {"satellite_a", "satellite_b", "satellite_b", "satellite_a", "satellite_a", 29.3}});
    entries.push_back(
        {UseCaseId::SATL,
         "Satellite-aerial-terrestrial links",
         "Satellite-aerial terrestrial integration, data offloading, edge computing",
         {"K"},
         {"Doubling the spectrum (e.g. increasing the number of supported airplanes and HAPS)",
          "reducing of power imbalance between terrestrial and satellite networks"},
         PriorityTier::LessPromising,
         {"haps", "satellite", "satellite", "haps", "satellite", 22.5}});
    return entries;
}

}  // namespace

const std::vector<UseCase>& catalog() {
    static const std::vector<UseCase> entries = build_catalog();
    return entries;
}

const UseCase& lookup(UseCaseId id) {
    for (const auto& entry : catalog()) {
        if (entry.id == id) return entry;
    }
    throw ValidationError("unknown use case id");
}

PriorityTier priority(UseCaseId id) {
    return lookup(id).priority_tier;
}

std::string to_string(UseCaseId id) {
    switch (id) {
        case UseCaseId::UL: return "UL";
        case UseCaseId::FL: return "FL";
        case UseCaseId::CTRL: return "CTRL";
        case UseCaseId::FU_UD: return "FU-UD";
        case UseCaseId::UU_FD: return "UU-FD";
        case UseCaseId::ISL_SO: return "ISL-SO";
        case UseCaseId::ISL_ML: return "ISL-ML";
        case UseCaseId::SATL: return "SATL";
    }
    throw ValidationError("unknown use case id");
}

std::string to_string(PriorityTier tier) {
    switch (tier) {
        case PriorityTier::MostPromising: return "MostPromising";
        case PriorityTier::Promising: return "Promising";
        case PriorityTier::LessPromising: return "LessPromising";
    }
    throw ValidationError("unknown priority tier");
}

UseCaseId parse_use_case_id(const std::string& text) {
    for (const auto& entry : catalog()) {
        if (to_string(entry.id) == text) return entry.id;
    }
    throw ValidationError("unknown use case id '" + text +
                          "'; valid ids: UL, FL, CTRL, FU-UD, UU-FD, ISL-SO, ISL-ML, SATL");
}

namespace {

using scenario::NodeSpec;
using scenario::Scenario;

constexpr double kGatewayLatDeg = 49.6266;
constexpr double kGatewayLonDeg = 6.15898;
constexpr double kTerminalLatDeg = 42.16951;
constexpr double kTerminalLonDeg = -8.68318;
constexpr double kHapsAltitudeKm = 20.0;

NodeSpec ground_node(double lat, double lon, double eirp, double gt, double iso) {
    NodeSpec node;
    node.role = NodeSpec::Role::Ground;
    node.position = geometry::GeodeticPosition{lat, lon, 0.0};
    node.eirp_dbw = eirp;
    node.g_over_t_dbk = gt;
    node.isolation_db = iso;
    return node;
}

NodeSpec satellite_node(double eirp, double gt, double iso) {
    NodeSpec node;
    node.role = NodeSpec::Role::Satellite;
    node.eirp_dbw = eirp;
    node.g_over_t_dbk = gt;
    node.isolation_db = iso;
    return node;
}

Scenario base_scenario(UseCaseId id) {
    Scenario s;
    s.use_case = id;
    s.constellation.altitude_km = 780.0;
    s.constellation.planes = 6;
    s.constellation.sats_per_plane = 11;
    s.constellation.inclination_deg = 86.4;
    s.constellation.raan_spread_deg = 180.0;
    s.constellation.phase_offset_deg = geometry::default_phase_offset_deg(6, 11);
    s.constellation.epoch_s = 0.0;
    s.env = {290.0, 50e6};
    s.duplex.sic_db = 70.0;
    s.duplex.amplification_db = 60.0;
    s.link.carrier_ghz = lookup(id).fd_topology.default_carrier_ghz;
    s.link.min_elevation_deg = 10.0;
    return s;
}

void record_defaults(Scenario& s, const std::string& carrier_note) {
    s.assumptions = {
        {"constellation.inclination_deg", "inclination_deg = 86.4 (default)", true},
        {"constellation.raan_spread_deg", "raan_spread_deg = 180 (default: star pattern)", true},
        {"constellation.phase_offset_deg",
         "phase_offset_deg = 360/total_satellites (default stagger)", true},
        {"constellation.epoch_s", "epoch_s = 0 (default time origin)", true},
        {"link.carrier_ghz", carrier_note, true},
        {"link.epoch", "epoch resolved by best_pass over 86400 s at 10 s step (default)", true},
        {"duplex.fdd_split", "fdd_split = 0.5 (default: equal band split)", true},
        {"duplex.fd_node_tx_power_dbw",
         "fd_node_tx_power_dbw = FD-node EIRP (default SI reference)", true},
    };
}

}  // namespace

ScenarioTemplate default_scenario(UseCaseId id) {
    ScenarioTemplate tmpl;
    tmpl.scenario = base_scenario(id);
    Scenario& s = tmpl.scenario;

    switch (id) {
        case UseCaseId::FU_UD:
            s.nodes["gw"] = ground_node(kGatewayLatDeg, kGatewayLonDeg, 43.0, 31.5, 40.0);
            s.nodes["sat"] = satellite_node(65.0, 31.5, 25.0);
            s.nodes["ut"] = ground_node(kTerminalLatDeg, kTerminalLonDeg, 43.0, 31.5, 25.0);
            s.link.a_tx = "gw";
            s.link.a_rx = "sat";
            s.link.b_tx = "sat";
            s.link.b_rx = "ut";
            s.link.fd_node = "sat";
            tmpl.parameters_specified = true;
            tmpl.note = "feeder uplink and user downlink relayed through one satellite";
            record_defaults(s, "carrier_ghz = 37.5 (default: feeder band)");
            break;
        case UseCaseId::UU_FD:
            s.nodes["gw"] = ground_node(kGatewayLatDeg, kGatewayLonDeg, 43.0, 31.5, 40.0);
            s.nodes["sat"] = satellite_node(65.0, 31.5, 25.0);
            s.nodes["ut"] = ground_node(kTerminalLatDeg, kTerminalLonDeg, 43.0, 31.5, 25.0);
            s.link.a_tx = "ut";
            s.link.a_rx = "sat";
            s.link.b_tx = "sat";
            s.link.b_rx = "gw";
            s.link.fd_node = "sat";
            tmpl.parameters_specified = true;
            tmpl.note = "user uplink and feeder downlink relayed through one satellite";
            record_defaults(s, "carrier_ghz = 29.3 (default: user band)");
            break;
        case UseCaseId::SATL: {
            NodeSpec haps = ground_node(kTerminalLatDeg, kTerminalLonDeg, 43.0, 31.5, 25.0);
            haps.role = NodeSpec::Role::Aerial;
            haps.position->alt_km = kHapsAltitudeKm;
            s.nodes["haps"] = haps;
            s.nodes["sat"] = satellite_node(65.0, 31.5, 25.0);
            s.link.a_tx = "haps";
            s.link.a_rx = "sat";
            s.link.b_tx = "sat";
            s.link.b_rx = "haps";
            s.link.fd_node = "sat";
            tmpl.parameters_specified = true;
            tmpl.note =
                "satellite-aerial link; the platform altitude (20 km) and its terminal-class "
                "RF chain are study assumptions";
            record_defaults(s, "carrier_ghz = 22.5 (default: K-band centre)");
            s.assumptions.push_back({"nodes.haps",
                                     "aerial platform at 20 km reusing the terminal RF chain "
                                     "(assumed; no platform-specific values available)",
                                     true});
            break;
        }
        case UseCaseId::UL:
        case UseCaseId::FL:
        case UseCaseId::CTRL: {
            const bool user_side = id == UseCaseId::UL;
            const double iso = user_side ? 25.0 : 40.0;
            const double lat = user_side ? kTerminalLatDeg : kGatewayLatDeg;
            const double lon = user_side ? kTerminalLonDeg : kGatewayLonDeg;
            const std::string name = user_side ? "terminal" : "station";
            s.nodes[name] = ground_node(lat, lon, 43.0, 31.5, iso);
            s.nodes["sat"] = satellite_node(65.0, 31.5, 25.0);
            s.link.a_tx = name;
            s.link.a_rx = "sat";
            s.link.b_tx = "sat";
            s.link.b_rx = name;
            s.link.fd_node = "sat";
            tmpl.parameters_specified = false;
            tmpl.note = "parameters not specified for this use case; ground node reuses the "
                        "reference station RF chain as a placeholder";
            record_defaults(s, "carrier_ghz defaulted to a band-centre placeholder");
            break;
        }
        case UseCaseId::ISL_SO:
        case UseCaseId::ISL_ML:
            s.nodes["sat_a"] = satellite_node(65.0, 31.5, 25.0);
            s.nodes["sat_b"] = satellite_node(65.0, 31.5, 25.0);
            s.link.a_tx = "sat_a";
            s.link.a_rx = "sat_b";
            s.link.b_tx = "sat_b";
            s.link.b_rx = "sat_a";
            s.link.fd_node = "sat_a";
            tmpl.parameters_specified = false;
            tmpl.note = "parameters not specified for this use case; inter-satellite geometry "
                        "is outside the assessment pipeline";
            record_defaults(s, "carrier_ghz defaulted to a band-centre placeholder");
            break;
    }
    return tmpl;
}

}  // namespace fdsat::usecases
