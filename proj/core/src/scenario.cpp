#include "fdsat/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "fdsat/errors.hpp"
#include "fdsat/parallel.hpp"

namespace fdsat::scenario {

namespace {

std::string fmt_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

const NodeSpec& node_at(const Scenario& s, const std::string& name, const char* field) {
    const auto it = s.nodes.find(name);
    if (it == s.nodes.end()) {
        throw ValidationError(std::string("[link]: ") + field + " references unknown node '" +
                              name + "'");
    }
    return it->second;
}

// Positioned (ground/aerial) node names referenced by the link, in order of
// first appearance; used as the best-pass observer list.
std::vector<std::string> observer_names(const Scenario& s) {
    std::vector<std::string> names;
    for (const std::string& name : {s.link.a_tx, s.link.a_rx, s.link.b_tx, s.link.b_rx}) {
        if (s.nodes.at(name).role == NodeSpec::Role::Satellite) continue;
        if (std::find(names.begin(), names.end(), name) == names.end()) {
            names.push_back(name);
        }
    }
    return names;
}

std::string satellite_name(const Scenario& s) {
    std::string sat;
    for (const std::string& name : {s.link.a_tx, s.link.a_rx, s.link.b_tx, s.link.b_rx}) {
        if (s.nodes.at(name).role != NodeSpec::Role::Satellite) continue;
        if (sat.empty()) {
            sat = name;
        } else if (sat != name) {
            throw ValidationError("link directions reference more than one satellite node ('" +
                                  sat + "', '" + name + "'); single-relay topologies only");
        }
    }
    if (sat.empty()) {
        throw ValidationError("link directions reference no satellite node");
    }
    return sat;
}

std::map<std::string, linkbudget::RfChain> build_chains(const Scenario& s) {
    std::map<std::string, linkbudget::RfChain> chains;
    for (const auto& [name, node] : s.nodes) {
        chains[name] = {node.eirp_dbw, node.g_over_t_dbk, node.isolation_db, s.link.carrier_ghz};
    }
    return chains;
}

struct ResolvedGeometry {
    int satellite_id = 0;
    double epoch_s = 0.0;
    std::map<std::string, geometry::PassGeometry> passes;
};

ResolvedGeometry resolve_geometry(const Scenario& s) {
    const auto names = observer_names(s);
    std::vector<geometry::GeodeticPosition> observers;
    observers.reserve(names.size());
    for (const auto& name : names) {
        observers.push_back(*s.nodes.at(name).position);
    }

    geometry::CommonPass pass;
    if (s.link.epoch.mode == EpochPolicy::Mode::BestPass) {
        pass = geometry::best_pass(s.constellation, observers, s.link.epoch.window_s,
                                   s.link.epoch.step_s, s.link.min_elevation_deg);
    } else {
        pass = geometry::best_at_epoch(s.constellation, observers, s.link.epoch.epoch_s,
                                       s.link.min_elevation_deg);
    }

    ResolvedGeometry out;
    out.satellite_id = pass.satellite_id;
    out.epoch_s = pass.epoch_s;
    for (std::size_t i = 0; i < names.size(); ++i) {
        out.passes[names[i]] = pass.per_observer[i];
    }
    return out;
}

double direction_distance_km(const Scenario& s, const ResolvedGeometry& geom,
                             const std::string& tx, const std::string& rx) {
    const std::string positioned =
        s.nodes.at(tx).role == NodeSpec::Role::Satellite ? rx : tx;
    return geom.passes.at(positioned).slant_range_km;
}

AssessmentResult assess_resolved(const Scenario& s, const ResolvedGeometry& geom,
                                 double sic_db) {
    AssessmentResult result;
    result.satellite_id = geom.satellite_id;
    result.epoch_s = geom.epoch_s;
    result.passes = geom.passes;
    result.assumptions = s.assumptions;

    const auto chains = build_chains(s);
    const double dist_a = direction_distance_km(s, geom, s.link.a_tx, s.link.a_rx);
    const double dist_b = direction_distance_km(s, geom, s.link.b_tx, s.link.b_rx);

    duplexing::FdLinkPair pair;
    pair.direction_a = {s.link.a_tx, s.link.a_rx, dist_a};
    pair.direction_b = {s.link.b_tx, s.link.b_rx, dist_b};
    pair.fd_node = s.link.fd_node;
    pair.carrier_ghz = s.link.carrier_ghz;
    pair.fd_node_tx_power_dbw = s.duplex.fd_node_tx_power_dbw;

    const duplexing::SicConfig cfg{sic_db, s.nodes.at(s.link.fd_node).isolation_db};
    result.comparison = duplexing::compare_duplex(pair, chains, s.env, cfg, s.duplex.fdd_split,
                                                  s.link.additional_loss_db);

    const auto budget_for = [&](const std::string& tx, const std::string& rx, double dist) {
        return linkbudget::make_link_budget(chains.at(tx), chains.at(rx), dist, s.env,
                                            s.link.additional_loss_db);
    };
    const bool fd_rx_is_a = s.link.a_rx == s.link.fd_node;
    if (fd_rx_is_a) {
        result.fd_receive_budget = budget_for(s.link.a_tx, s.link.a_rx, dist_a);
        result.remote_receive_budget = budget_for(s.link.b_tx, s.link.b_rx, dist_b);
    } else {
        result.fd_receive_budget = budget_for(s.link.b_tx, s.link.b_rx, dist_b);
        result.remote_receive_budget = budget_for(s.link.a_tx, s.link.a_rx, dist_a);
    }

    result.loop_margin_db = duplexing::loop_stability_margin_db(s.duplex.amplification_db, cfg);
    result.loop_warning = result.loop_margin_db < 0.0;
    return result;
}

}  // namespace

void validate(const Scenario& s) {
    geometry::validate(s.constellation);
    linkbudget::validate(s.env);

    if (s.nodes.empty()) {
        throw ValidationError("scenario defines no nodes");
    }
    for (const auto& [name, node] : s.nodes) {
        if (node.role == NodeSpec::Role::Satellite) {
            if (node.position.has_value()) {
                throw ValidationError("node '" + name +
                                      "': satellite nodes take no geodetic position");
            }
        } else {
            if (!node.position.has_value()) {
                throw ValidationError("node '" + name + "': missing required field 'lat_deg'");
            }
            geometry::validate(*node.position);
        }
        if (!(node.isolation_db >= 0.0)) {
            throw ValidationError("node '" + name + "': isolation_db must be >= 0");
        }
    }

    node_at(s, s.link.a_tx, "direction_a_tx");
    node_at(s, s.link.a_rx, "direction_a_rx");
    node_at(s, s.link.b_tx, "direction_b_tx");
    node_at(s, s.link.b_rx, "direction_b_rx");
    node_at(s, s.link.fd_node, "fd_node");
    if (s.link.a_tx == s.link.a_rx || s.link.b_tx == s.link.b_rx) {
        throw ValidationError("[link]: a direction cannot start and end at the same node");
    }

    const bool fd_rx_a = s.link.a_rx == s.link.fd_node;
    const bool fd_rx_b = s.link.b_rx == s.link.fd_node;
    const bool fd_tx_a = s.link.a_tx == s.link.fd_node;
    const bool fd_tx_b = s.link.b_tx == s.link.fd_node;
    if (!((fd_rx_a && fd_tx_b) || (fd_rx_b && fd_tx_a))) {
        throw ValidationError("[link]: fd_node '" + s.link.fd_node +
                              "' must transmit in one direction and receive in the other");
    }

    satellite_name(s);  // exactly one relay satellite
    for (const auto& [tx, rx] : {std::pair{s.link.a_tx, s.link.a_rx},
                                 std::pair{s.link.b_tx, s.link.b_rx}}) {
        const bool tx_sat = s.nodes.at(tx).role == NodeSpec::Role::Satellite;
        const bool rx_sat = s.nodes.at(rx).role == NodeSpec::Role::Satellite;
        if (tx_sat == rx_sat) {
            throw ValidationError("[link]: direction '" + tx + "' -> '" + rx +
                                  "' must connect the satellite and a positioned node");
        }
    }

    if (!(s.link.carrier_ghz > 0.0)) {
        throw ValidationError("[link]: carrier_ghz must be positive");
    }
    if (!(s.link.min_elevation_deg >= -90.0 && s.link.min_elevation_deg <= 90.0)) {
        throw ValidationError("[link]: min_elevation_deg out of range [-90, 90]");
    }
    if (!(s.link.additional_loss_db >= 0.0)) {
        throw ValidationError("[link]: additional_loss_db must be >= 0");
    }
    if (s.link.epoch.mode == EpochPolicy::Mode::BestPass) {
        if (!(s.link.epoch.window_s > 0.0)) {
            throw ValidationError("[link]: window_s must be positive");
        }
        if (!(s.link.epoch.step_s > 0.0)) {
            throw ValidationError("[link]: step_s must be positive");
        }
    } else if (!std::isfinite(s.link.epoch.epoch_s)) {
        throw ValidationError("[link]: epoch_s must be finite");
    }

    if (!(s.duplex.sic_db >= 0.0)) {
        throw ValidationError("[duplex]: sic_db must be >= 0");
    }
    if (!(s.duplex.fdd_split > 0.0 && s.duplex.fdd_split < 1.0)) {
        throw ValidationError("[duplex]: fdd_split must lie strictly between 0 and 1");
    }
    if (!(s.duplex.amplification_db >= 0.0)) {
        throw ValidationError("[duplex]: amplification_db must be >= 0");
    }
}

AssessmentResult assess(const Scenario& s) {
    validate(s);
    const ResolvedGeometry geom = resolve_geometry(s);
    return assess_resolved(s, geom, s.duplex.sic_db);
}

std::vector<std::pair<double, duplexing::DuplexComparison>> sweep_sic(
    const Scenario& s, const std::vector<double>& sic_values_db) {
    if (sic_values_db.empty()) {
        throw ValidationError("SIC sweep needs at least one value");
    }
    for (double v : sic_values_db) {
        if (!(v >= 0.0)) {
            throw ValidationError("SIC sweep values must be >= 0 dB, got " + fmt_num(v));
        }
    }
    validate(s);
    const ResolvedGeometry geom = resolve_geometry(s);

    std::vector<std::pair<double, duplexing::DuplexComparison>> out(sic_values_db.size());
    parallel_for(sic_values_db.size(), [&](std::size_t i) {
        out[i] = {sic_values_db[i],
                  assess_resolved(s, geom, sic_values_db[i]).comparison};
    });
    return out;
}

SweepRange parse_sweep_range(const std::string& text) {
    const auto parse_part = [&](const std::string& part) {
        double v = 0.0;
        const char* begin = part.data();
        const char* end = part.data() + part.size();
        const auto [ptr, ec] = std::from_chars(begin, end, v);
        if (ec != std::errc() || ptr != end || part.empty()) {
            throw ValidationError("malformed sic range '" + text +
                                  "': expected start:stop:step");
        }
        return v;
    };
    const std::size_t c1 = text.find(':');
    const std::size_t c2 = c1 == std::string::npos ? std::string::npos : text.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos ||
        text.find(':', c2 + 1) != std::string::npos) {
        throw ValidationError("malformed sic range '" + text + "': expected start:stop:step");
    }
    SweepRange range;
    range.start = parse_part(text.substr(0, c1));
    range.stop = parse_part(text.substr(c1 + 1, c2 - c1 - 1));
    range.step = parse_part(text.substr(c2 + 1));
    if (!(range.step > 0.0)) {
        throw ValidationError("sic range step must be positive");
    }
    if (range.start > range.stop) {
        throw ValidationError("sic range start must not exceed stop");
    }
    if (!(range.start >= 0.0)) {
        throw ValidationError("sic range values must be >= 0 dB");
    }
    return range;
}

std::vector<double> expand(const SweepRange& range) {
    const long count =
        static_cast<long>(std::floor((range.stop - range.start) / range.step + 1e-9)) + 1;
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(count));
    for (long k = 0; k < count; ++k) {
        values.push_back(range.start + static_cast<double>(k) * range.step);
    }
    return values;
}

std::vector<std::pair<double, duplexing::DuplexComparison>> sweep_grid(const Scenario& s,
                                                                       const SweepRange& range) {
    return sweep_sic(s, expand(range));
}

}  // namespace fdsat::scenario
