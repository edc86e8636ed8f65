#include "fdsat/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include <json.hpp>

#include "fdsat/errors.hpp"
#include "fdsat/linkbudget.hpp"

namespace fdsat::report {

namespace {

using nlohmann::json;
using scenario::AssessmentResult;
using scenario::NodeSpec;
using scenario::Scenario;

std::string fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

// JSON has no inf/nan literals; encode non-finite edge values as strings.
json json_num(double v) {
    if (std::isfinite(v)) return v;
    if (std::isnan(v)) return "nan";
    return v > 0 ? "inf" : "-inf";
}

json budget_json(const linkbudget::LinkBudget& b) {
    json j;
    j["eirp_dbw"] = json_num(b.eirp_dbw);
    j["g_over_t_dbk"] = json_num(b.g_over_t_dbk);
    j["carrier_ghz"] = json_num(b.carrier_ghz);
    j["slant_range_km"] = json_num(b.slant_range_km);
    j["bandwidth_hz"] = json_num(b.bandwidth_hz);
    j["additional_loss_db"] = json_num(b.additional_loss_db);
    j["fspl_db"] = json_num(b.fspl_db);
    j["noise_dbw"] = json_num(b.noise_dbw);
    j["snr_db"] = json_num(b.snr_db);
    return j;
}

json direction_json(const duplexing::DirectionReport& d) {
    json j;
    j["tx_node"] = d.tx_node;
    j["rx_node"] = d.rx_node;
    j["distance_km"] = json_num(d.distance_km);
    j["band_fraction_fdd"] = json_num(d.band_fraction_fdd);
    j["snr_fdd_db"] = json_num(d.snr_fdd_db);
    j["snr_fd_db"] = json_num(d.snr_fd_db);
    j["sinr_fd_db"] = json_num(d.sinr_fd_db);
    j["se_fdd_bps_hz"] = json_num(d.se_fdd_bps_hz);
    j["se_fd_bps_hz"] = json_num(d.se_fd_bps_hz);
    return j;
}

json scenario_json(const Scenario& s) {
    json j;
    j["use_case"] = usecases::to_string(s.use_case);
    j["constellation"] = {{"altitude_km", s.constellation.altitude_km},
                          {"planes", s.constellation.planes},
                          {"sats_per_plane", s.constellation.sats_per_plane},
                          {"inclination_deg", s.constellation.inclination_deg},
                          {"raan_spread_deg", s.constellation.raan_spread_deg},
                          {"phase_offset_deg", s.constellation.phase_offset_deg},
                          {"epoch_s", s.constellation.epoch_s}};
    json nodes;
    for (const auto& [name, node] : s.nodes) {
        json n;
        switch (node.role) {
            case NodeSpec::Role::Ground: n["role"] = "ground"; break;
            case NodeSpec::Role::Aerial: n["role"] = "aerial"; break;
            case NodeSpec::Role::Satellite: n["role"] = "satellite"; break;
        }
        if (node.position.has_value()) {
            n["lat_deg"] = node.position->lat_deg;
            n["lon_deg"] = node.position->lon_deg;
            n["alt_km"] = node.position->alt_km;
        }
        n["eirp_dbw"] = node.eirp_dbw;
        n["g_over_t_dbk"] = node.g_over_t_dbk;
        n["isolation_db"] = node.isolation_db;
        nodes[name] = n;
    }
    j["nodes"] = nodes;
    json link;
    link["direction_a_tx"] = s.link.a_tx;
    link["direction_a_rx"] = s.link.a_rx;
    link["direction_b_tx"] = s.link.b_tx;
    link["direction_b_rx"] = s.link.b_rx;
    link["fd_node"] = s.link.fd_node;
    link["carrier_ghz"] = s.link.carrier_ghz;
    link["min_elevation_deg"] = s.link.min_elevation_deg;
    link["additional_loss_db"] = s.link.additional_loss_db;
    if (s.link.epoch.mode == scenario::EpochPolicy::Mode::BestPass) {
        link["epoch_mode"] = "best_pass";
        link["window_s"] = s.link.epoch.window_s;
        link["step_s"] = s.link.epoch.step_s;
    } else {
        link["epoch_mode"] = "fixed";
        link["epoch_s"] = s.link.epoch.epoch_s;
    }
    j["link"] = link;
    j["env"] = {{"temperature_k", s.env.temperature_k}, {"bandwidth_hz", s.env.bandwidth_hz}};
    json duplex;
    duplex["sic_db"] = s.duplex.sic_db;
    duplex["fdd_split"] = s.duplex.fdd_split;
    if (s.duplex.fd_node_tx_power_dbw.has_value()) {
        duplex["fd_node_tx_power_dbw"] = *s.duplex.fd_node_tx_power_dbw;
    }
    duplex["amplification_db"] = s.duplex.amplification_db;
    j["duplex"] = duplex;
    return j;
}

json assumptions_json(const std::vector<scenario::Assumption>& assumptions) {
    json arr = json::array();
    for (const auto& a : assumptions) {
        arr.push_back({{"key", a.key}, {"detail", a.detail}, {"defaulted", a.defaulted}});
    }
    return arr;
}

void direction_table(std::ostringstream& out, const char* label,
                     const duplexing::DirectionReport& d,
                     const linkbudget::LinkBudget& b) {
    out << "  " << label << ": " << d.tx_node << " -> " << d.rx_node << "\n";
    out << "    slant_range_km     : " << fixed(d.distance_km, 3) << "\n";
    out << "    fspl_db            : " << fixed(b.fspl_db, 3) << "\n";
    out << "    noise_dbw          : " << fixed(b.noise_dbw, 3) << "\n";
    out << "    snr_db (full band) : " << fixed(d.snr_fd_db, 3) << "\n";
    out << "    snr_db (FDD band)  : " << fixed(d.snr_fdd_db, 3) << " over "
        << fixed(100.0 * d.band_fraction_fdd, 1) << "% of the band\n";
    out << "    sinr_db (FD)       : " << fixed(d.sinr_fd_db, 3) << "\n";
}

}  // namespace

std::string render_table(const Scenario& s, const AssessmentResult& r) {
    std::ostringstream out;
    out << "fdsat assessment report (tool v" << kToolVersion << ")\n";
    out << "use_case            : " << usecases::to_string(s.use_case) << "\n";
    out << "carrier_ghz         : " << fixed(s.link.carrier_ghz, 3) << "\n";
    out << "bandwidth_hz        : " << fixed(s.env.bandwidth_hz, 0) << "\n";
    out << "temperature_k       : " << fixed(s.env.temperature_k, 1) << "\n";
    out << "sic_db              : " << fixed(s.duplex.sic_db, 2) << "\n";
    out << "additional_loss_db  : " << fixed(s.link.additional_loss_db, 2) << "\n";
    out << "\ngeometry (epoch " << fixed(r.epoch_s, 3) << " s, satellite " << r.satellite_id
        << ")\n";
    for (const auto& [name, pass] : r.passes) {
        out << "  " << name << ": elevation_deg = " << fixed(pass.elevation_deg, 3)
            << ", slant_range_km = " << fixed(pass.slant_range_km, 3) << "\n";
    }
    out << "\nlink budgets\n";
    direction_table(out, "FD receive direction", r.comparison.fd_receive, r.fd_receive_budget);
    direction_table(out, "remote direction", r.comparison.remote_receive,
                    r.remote_receive_budget);
    out << "\nduplex comparison\n";
    out << "  se_fdd_bps_hz      : " << fixed(r.comparison.se_fdd_bps_hz, 6) << "\n";
    out << "  se_fd_bps_hz       : " << fixed(r.comparison.se_fd_bps_hz, 6) << "\n";
    out << "  gain_percent       : " << fixed(r.comparison.gain_percent, 2) << "\n";
    out << "  residual_si_dbw    : " << fixed(r.comparison.residual_si_dbw, 2) << "\n";
    out << "  loop_margin_db     : " << fixed(r.loop_margin_db, 2) << "\n";
    if (r.loop_warning) {
        out << "  WARNING: loop margin is negative; a bent-pipe echo loop gains power per "
               "round trip\n";
    }
    out << "\nassumptions\n";
    if (r.assumptions.empty()) {
        out << "  (none: every default was overridden)\n";
    }
    for (const auto& a : r.assumptions) {
        out << "  - " << a.detail << "\n";
    }
    return out.str();
}

std::string render_json(const Scenario& s, const AssessmentResult& r) {
    json j;
    j["version"] = kToolVersion;
    j["scenario"] = scenario_json(s);
    j["assumptions"] = assumptions_json(r.assumptions);
    json geometry;
    geometry["epoch_s"] = json_num(r.epoch_s);
    geometry["satellite_id"] = r.satellite_id;
    json passes;
    for (const auto& [name, pass] : r.passes) {
        passes[name] = {{"elevation_deg", pass.elevation_deg},
                        {"slant_range_km", pass.slant_range_km}};
    }
    geometry["passes"] = passes;
    json duplex;
    duplex["se_fdd_bps_hz"] = json_num(r.comparison.se_fdd_bps_hz);
    duplex["se_fd_bps_hz"] = json_num(r.comparison.se_fd_bps_hz);
    duplex["gain_percent"] = json_num(r.comparison.gain_percent);
    duplex["residual_si_dbw"] = json_num(r.comparison.residual_si_dbw);
    duplex["fd_receive"] = direction_json(r.comparison.fd_receive);
    duplex["remote_receive"] = direction_json(r.comparison.remote_receive);
    json result;
    result["geometry"] = geometry;
    result["duplex"] = duplex;
    result["link_budgets"] = {{"fd_receive", budget_json(r.fd_receive_budget)},
                              {"remote_receive", budget_json(r.remote_receive_budget)}};
    result["loop"] = {{"margin_db", json_num(r.loop_margin_db)}, {"warning", r.loop_warning}};
    j["result"] = result;
    return j.dump(2) + "\n";
}

std::string render_assess_csv(double sic_db, const duplexing::DuplexComparison& c) {
    std::ostringstream out;
    out << kSweepCsvHeader << "\n";
    out << fixed(sic_db, 6) << ',' << fixed(c.se_fdd_bps_hz, 6) << ','
        << fixed(c.se_fd_bps_hz, 6) << ',' << fixed(c.gain_percent, 6) << ','
        << fixed(c.residual_si_dbw, 6) << "\n";
    return out.str();
}

std::string render_sweep_csv(const SweepTable& table) {
    std::ostringstream out;
    out << kSweepCsvHeader << "\n";
    for (const auto& [sic, c] : table) {
        out << fixed(sic, 6) << ',' << fixed(c.se_fdd_bps_hz, 6) << ','
            << fixed(c.se_fd_bps_hz, 6) << ',' << fixed(c.gain_percent, 6) << ','
            << fixed(c.residual_si_dbw, 6) << "\n";
    }
    return out.str();
}

std::string render_gain_svg(const std::vector<std::pair<double, double>>& sic_gain_points) {
    if (sic_gain_points.empty()) {
        throw ValidationError("cannot plot an empty sweep");
    }
    constexpr double kWidth = 640.0;
    constexpr double kHeight = 400.0;
    constexpr double kLeft = 70.0;
    constexpr double kRight = 620.0;
    constexpr double kTop = 20.0;
    constexpr double kBottom = 350.0;

    double x_min = sic_gain_points.front().first;
    double x_max = x_min;
    double y_min = sic_gain_points.front().second;
    double y_max = y_min;
    for (const auto& [x, y] : sic_gain_points) {
        x_min = std::min(x_min, x);
        x_max = std::max(x_max, x);
        y_min = std::min(y_min, y);
        y_max = std::max(y_max, y);
    }
    if (x_max == x_min) {
        x_min -= 1.0;
        x_max += 1.0;
    }
    if (y_max == y_min) {
        y_min -= 1.0;
        y_max += 1.0;
    }
    const double y_pad = 0.05 * (y_max - y_min);
    y_min -= y_pad;
    y_max += y_pad;

    const auto map_x = [&](double x) {
        return kLeft + (x - x_min) / (x_max - x_min) * (kRight - kLeft);
    };
    const auto map_y = [&](double y) {
        return kBottom - (y - y_min) / (y_max - y_min) * (kBottom - kTop);
    };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(kWidth, 0)
        << "\" height=\"" << fixed(kHeight, 0) << "\" viewBox=\"0 0 " << fixed(kWidth, 0) << " "
        << fixed(kHeight, 0) << "\">\n";
    svg << "  <rect x=\"0\" y=\"0\" width=\"" << fixed(kWidth, 0) << "\" height=\""
        << fixed(kHeight, 0) << "\" fill=\"white\"/>\n";

    svg << "  <g stroke=\"#d0d0d0\" stroke-width=\"1\">\n";
    constexpr int kTicks = 5;
    for (int k = 0; k <= kTicks; ++k) {
        const double xv = x_min + (x_max - x_min) * k / kTicks;
        const double yv = y_min + (y_max - y_min) * k / kTicks;
        svg << "    <line x1=\"" << fixed(map_x(xv), 2) << "\" y1=\"" << fixed(kTop, 2)
            << "\" x2=\"" << fixed(map_x(xv), 2) << "\" y2=\"" << fixed(kBottom, 2) << "\"/>\n";
        svg << "    <line x1=\"" << fixed(kLeft, 2) << "\" y1=\"" << fixed(map_y(yv), 2)
            << "\" x2=\"" << fixed(kRight, 2) << "\" y2=\"" << fixed(map_y(yv), 2) << "\"/>\n";
    }
    svg << "  </g>\n";

    svg << "  <g font-family=\"monospace\" font-size=\"12\" fill=\"#202020\">\n";
    for (int k = 0; k <= kTicks; ++k) {
        const double xv = x_min + (x_max - x_min) * k / kTicks;
        const double yv = y_min + (y_max - y_min) * k / kTicks;
        svg << "    <text x=\"" << fixed(map_x(xv), 2) << "\" y=\"" << fixed(kBottom + 18.0, 2)
            << "\" text-anchor=\"middle\">" << fixed(xv, 2) << "</text>\n";
        svg << "    <text x=\"" << fixed(kLeft - 8.0, 2) << "\" y=\"" << fixed(map_y(yv) + 4.0, 2)
            << "\" text-anchor=\"end\">" << fixed(yv, 2) << "</text>\n";
    }
    svg << "    <text x=\"" << fixed(0.5 * (kLeft + kRight), 2) << "\" y=\""
        << fixed(kBottom + 40.0, 2) << "\" text-anchor=\"middle\">SIC (dB)</text>\n";
    svg << "    <text x=\"16\" y=\"" << fixed(0.5 * (kTop + kBottom), 2)
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " << fixed(0.5 * (kTop + kBottom), 2)
        << ")\">FD gain over FDD (%)</text>\n";
    svg << "  </g>\n";

    svg << "  <g stroke=\"#202020\" stroke-width=\"1.5\" fill=\"none\">\n";
    svg << "    <line x1=\"" << fixed(kLeft, 2) << "\" y1=\"" << fixed(kBottom, 2) << "\" x2=\""
        << fixed(kRight, 2) << "\" y2=\"" << fixed(kBottom, 2) << "\"/>\n";
    svg << "    <line x1=\"" << fixed(kLeft, 2) << "\" y1=\"" << fixed(kTop, 2) << "\" x2=\""
        << fixed(kLeft, 2) << "\" y2=\"" << fixed(kBottom, 2) << "\"/>\n";
    svg << "  </g>\n";

    svg << "  <polyline fill=\"none\" stroke=\"#0057b8\" stroke-width=\"2\" points=\"";
    bool first = true;
    for (const auto& [x, y] : sic_gain_points) {
        if (!first) svg << ' ';
        first = false;
        svg << fixed(map_x(x), 2) << ',' << fixed(map_y(y), 2);
    }
    svg << "\"/>\n";
    svg << "</svg>\n";
    return svg.str();
}

std::string render_visibility_table(
    const std::vector<std::pair<std::string, std::vector<geometry::PassInterval>>>& per_node) {
    std::ostringstream out;
    for (const auto& [name, passes] : per_node) {
        out << "node '" << name << "': " << passes.size() << " pass(es)\n";
        out << "  sat  start_s      end_s        max_elev_epoch_s  max_elev_deg  min_range_km\n";
        for (const auto& p : passes) {
            char line[160];
            std::snprintf(line, sizeof(line), "  %-4d %-12.1f %-12.1f %-17.1f %-13.3f %.3f\n",
                          p.satellite_id, p.start_s, p.end_s, p.max_elevation_epoch_s,
                          p.max_elevation_deg, p.min_slant_range_km);
            out << line;
        }
    }
    return out.str();
}

std::string render_catalog_table(const std::vector<usecases::UseCase>& entries) {
    std::ostringstream out;
    char header[160];
    std::snprintf(header, sizeof(header), "%-7s %-14s %-22s %s\n", "ID", "TIER", "BANDS", "NAME");
    out << header;
    for (const auto& e : entries) {
        std::string bands;
        for (const auto& b : e.bands) {
            if (!bands.empty()) bands += ", ";
            bands += b;
        }
        char line[512];
        std::snprintf(line, sizeof(line), "%-7s %-14s %-22s %s\n",
                      usecases::to_string(e.id).c_str(),
                      usecases::to_string(e.priority_tier).c_str(), bands.c_str(),
                      e.name.c_str());
        out << line;
    }
    return out.str();
}

std::string render_catalog_json(const std::vector<usecases::UseCase>& entries) {
    json arr = json::array();
    for (const auto& e : entries) {
        json j;
        j["id"] = usecases::to_string(e.id);
        j["name"] = e.name;
        j["application"] = e.application;
        j["bands"] = e.bands;
        j["advantages"] = e.advantages;
        j["priority_tier"] = usecases::to_string(e.priority_tier);
        arr.push_back(j);
    }
    return arr.dump(2) + "\n";
}

}  // namespace fdsat::report
