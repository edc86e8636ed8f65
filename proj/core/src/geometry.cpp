#include "fdsat/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "fdsat/errors.hpp"

namespace fdsat::geometry {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;
constexpr double kRadToDeg = 180.0 / std::numbers::pi;

std::string fmt_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

struct Candidate {
    bool found = false;
    double min_elevation_deg = 0.0;
    double epoch_s = 0.0;
    int satellite_id = 0;
};

// Scans epochs t0 + k*step <= t1 and keeps the (epoch, satellite) maximizing
// the minimum elevation over all observers, feasible ones only. Strict
// improvement keeps the earliest epoch / lowest id on ties.
Candidate scan_window(const ConstellationSpec& spec,
                      const std::vector<CartesianPosition>& observers_ecef,
                      double t0, double t1, double step, double min_elevation_deg) {
    Candidate best;
    for (long k = 0;; ++k) {
        const double t = t0 + static_cast<double>(k) * step;
        if (t > t1 + 1e-9) break;
        const auto states = propagate(spec, t);
        for (const auto& st : states) {
            double min_elev = 90.0;
            for (const auto& obs : observers_ecef) {
                const double dx = st.position.x_km - obs.x_km;
                const double dy = st.position.y_km - obs.y_km;
                const double dz = st.position.z_km - obs.z_km;
                const double rng = std::sqrt(dx * dx + dy * dy + dz * dz);
                const double obs_norm =
                    std::sqrt(obs.x_km * obs.x_km + obs.y_km * obs.y_km + obs.z_km * obs.z_km);
                const double sin_elev =
                    (dx * obs.x_km + dy * obs.y_km + dz * obs.z_km) / (rng * obs_norm);
                const double elev = std::asin(std::clamp(sin_elev, -1.0, 1.0)) * kRadToDeg;
                min_elev = std::min(min_elev, elev);
            }
            if (min_elev >= min_elevation_deg &&
                (!best.found || min_elev > best.min_elevation_deg)) {
                best = {true, min_elev, t, st.id};
            }
        }
    }
    return best;
}

CommonPass finish_pass(const ConstellationSpec& spec,
                       const std::vector<GeodeticPosition>& observers,
                       const Candidate& c) {
    CommonPass pass;
    pass.satellite_id = c.satellite_id;
    pass.epoch_s = c.epoch_s;
    pass.min_elevation_deg = c.min_elevation_deg;
    const auto states = propagate(spec, c.epoch_s);
    const auto& sat = states[static_cast<std::size_t>(c.satellite_id)].position;
    for (const auto& obs : observers) {
        const auto topo = elevation_and_range(obs, sat);
        pass.per_observer.push_back(
            {c.satellite_id, c.epoch_s, topo.elevation_deg, topo.slant_range_km});
    }
    return pass;
}

std::vector<CartesianPosition> observers_to_ecef(const std::vector<GeodeticPosition>& observers) {
    if (observers.empty()) {
        throw ValidationError("pass search requires at least one observer");
    }
    std::vector<CartesianPosition> ecef;
    ecef.reserve(observers.size());
    for (const auto& obs : observers) {
        ecef.push_back(geodetic_to_cartesian(obs));
    }
    return ecef;
}

std::vector<SatelliteState> propagate_impl(const ConstellationSpec& spec, double t_s,
                                           bool earth_fixed) {
    validate(spec);
    if (!std::isfinite(t_s)) {
        throw ValidationError("propagation time must be finite");
    }

    const double a = kEarthRadiusKm + spec.altitude_km;
    const double mean_motion_deg_s = std::sqrt(kMuKm3PerS2 / (a * a * a)) * kRadToDeg;
    const double elapsed_s = t_s - spec.epoch_s;

    const double incl = spec.inclination_deg * kDegToRad;
    const double cos_i = std::cos(incl);
    const double sin_i = std::sin(incl);

    const double rot = earth_fixed
                           ? std::fmod(kEarthRotationDegPerS * elapsed_s, 360.0) * kDegToRad
                           : 0.0;
    const double cos_w = std::cos(rot);
    const double sin_w = std::sin(rot);

    std::vector<SatelliteState> states;
    states.reserve(static_cast<std::size_t>(spec.total_satellites()));
    int id = 0;
    for (int k = 0; k < spec.planes; ++k) {
        const double raan = (k * spec.raan_spread_deg / spec.planes) * kDegToRad;
        const double cos_raan = std::cos(raan);
        const double sin_raan = std::sin(raan);
        for (int j = 0; j < spec.sats_per_plane; ++j, ++id) {
            const double anomaly_deg = j * 360.0 / spec.sats_per_plane +
                                       k * spec.phase_offset_deg + mean_motion_deg_s * elapsed_s;
            const double theta = std::fmod(anomaly_deg, 360.0) * kDegToRad;
            const double x_orb = a * std::cos(theta);
            const double y_orb = a * std::sin(theta);

            // Rz(raan) * Rx(incl) applied to the in-plane position.
            const double x_inertial = cos_raan * x_orb - sin_raan * (cos_i * y_orb);
            const double y_inertial = sin_raan * x_orb + cos_raan * (cos_i * y_orb);
            const double z_inertial = sin_i * y_orb;

            // ECEF = Rz(-rot) * inertial.
            states.push_back({id,
                              {cos_w * x_inertial + sin_w * y_inertial,
                               -sin_w * x_inertial + cos_w * y_inertial,
                               z_inertial}});
        }
    }
    return states;
}

}  // namespace

double default_phase_offset_deg(int planes, int sats_per_plane) {
    if (planes < 1 || sats_per_plane < 1) {
        throw ValidationError("phase offset default needs planes >= 1 and sats_per_plane >= 1");
    }
    return 360.0 / (static_cast<double>(planes) * static_cast<double>(sats_per_plane));
}

void validate(const GeodeticPosition& pos) {
    if (!(pos.lat_deg >= -90.0 && pos.lat_deg <= 90.0)) {
        throw ValidationError("latitude " + fmt_num(pos.lat_deg) +
                              " out of range [-90, 90] deg");
    }
    if (!(pos.lon_deg >= -180.0 && pos.lon_deg <= 180.0)) {
        throw ValidationError("longitude " + fmt_num(pos.lon_deg) +
                              " out of range [-180, 180] deg");
    }
    if (!(pos.alt_km >= 0.0)) {
        throw ValidationError("altitude " + fmt_num(pos.alt_km) + " km must be >= 0");
    }
}

void validate(const ConstellationSpec& spec) {
    if (!(spec.altitude_km > 0.0)) {
        throw ValidationError("constellation altitude must be positive");
    }
    if (spec.planes < 1) {
        throw ValidationError("constellation needs at least one plane");
    }
    if (spec.sats_per_plane < 1) {
        throw ValidationError("constellation needs at least one satellite per plane");
    }
    if (!(spec.inclination_deg >= 0.0 && spec.inclination_deg <= 180.0)) {
        throw ValidationError("inclination " + fmt_num(spec.inclination_deg) +
                              " out of range [0, 180] deg");
    }
}

double norm_km(const CartesianPosition& p) {
    return std::sqrt(p.x_km * p.x_km + p.y_km * p.y_km + p.z_km * p.z_km);
}

CartesianPosition geodetic_to_cartesian(const GeodeticPosition& pos) {
    validate(pos);
    const double lat = pos.lat_deg * kDegToRad;
    const double lon = pos.lon_deg * kDegToRad;
    const double r = kEarthRadiusKm + pos.alt_km;
    return {r * std::cos(lat) * std::cos(lon), r * std::cos(lat) * std::sin(lon),
            r * std::sin(lat)};
}

GeodeticPosition cartesian_to_geodetic(const CartesianPosition& pos) {
    const double r = norm_km(pos);
    if (!(r > 0.0)) {
        throw ValidationError("cartesian position must have positive norm");
    }
    GeodeticPosition out;
    out.lat_deg = std::asin(std::clamp(pos.z_km / r, -1.0, 1.0)) * kRadToDeg;
    out.lon_deg = std::atan2(pos.y_km, pos.x_km) * kRadToDeg;
    out.alt_km = r - kEarthRadiusKm;
    return out;
}

std::vector<SatelliteState> propagate(const ConstellationSpec& spec, double t_s) {
    return propagate_impl(spec, t_s, true);
}

std::vector<SatelliteState> propagate_inertial(const ConstellationSpec& spec, double t_s) {
    return propagate_impl(spec, t_s, false);
}

double orbital_period_s(double altitude_km) {
    if (!(altitude_km > 0.0)) {
        throw ValidationError("orbital period needs a positive altitude");
    }
    const double a = kEarthRadiusKm + altitude_km;
    return 2.0 * std::numbers::pi * std::sqrt(a * a * a / kMuKm3PerS2);
}

Topocentric elevation_and_range(const GeodeticPosition& observer, const CartesianPosition& sat) {
    const CartesianPosition obs = geodetic_to_cartesian(observer);
    const double dx = sat.x_km - obs.x_km;
    const double dy = sat.y_km - obs.y_km;
    const double dz = sat.z_km - obs.z_km;
    const double rng = std::sqrt(dx * dx + dy * dy + dz * dz);
    if (!(rng > 0.0)) {
        throw ValidationError("satellite coincides with the observer");
    }
    const double obs_norm = norm_km(obs);
    const double sin_elev = (dx * obs.x_km + dy * obs.y_km + dz * obs.z_km) / (rng * obs_norm);
    return {std::asin(std::clamp(sin_elev, -1.0, 1.0)) * kRadToDeg, rng};
}

CommonPass best_pass(const ConstellationSpec& spec,
                     const std::vector<GeodeticPosition>& observers,
                     double window_s, double step_s, double min_elevation_deg) {
    if (!(window_s > 0.0)) {
        throw ValidationError("pass-search window must be positive");
    }
    if (!(step_s > 0.0)) {
        throw ValidationError("pass-search step must be positive");
    }
    const auto ecef = observers_to_ecef(observers);

    Candidate best = scan_window(spec, ecef, 0.0, window_s, step_s, min_elevation_deg);
    if (best.found && step_s > 1.0) {
        const Candidate fine =
            scan_window(spec, ecef, std::max(0.0, best.epoch_s - step_s),
                        std::min(window_s, best.epoch_s + step_s), 1.0, min_elevation_deg);
        if (fine.found && fine.min_elevation_deg > best.min_elevation_deg) {
            best = fine;
        }
    }
    if (!best.found) {
        throw NoVisibilityError(
            "no common visibility: no epoch in [0, " + fmt_num(window_s) +
            "] s at which one satellite is at or above " + fmt_num(min_elevation_deg) +
            " deg elevation for all " + std::to_string(observers.size()) + " observer(s)");
    }
    return finish_pass(spec, observers, best);
}

CommonPass best_at_epoch(const ConstellationSpec& spec,
                         const std::vector<GeodeticPosition>& observers,
                         double epoch_s, double min_elevation_deg) {
    const auto ecef = observers_to_ecef(observers);
    const Candidate best = scan_window(spec, ecef, epoch_s, epoch_s, 1.0, min_elevation_deg);
    if (!best.found) {
        throw NoVisibilityError(
            "no common visibility: at epoch " + fmt_num(epoch_s) +
            " s no satellite is at or above " + fmt_num(min_elevation_deg) +
            " deg elevation for all " + std::to_string(observers.size()) + " observer(s)");
    }
    return finish_pass(spec, observers, best);
}

std::vector<PassInterval> list_passes(const ConstellationSpec& spec,
                                      const GeodeticPosition& observer,
                                      double window_s, double step_s,
                                      double min_elevation_deg) {
    if (!(window_s > 0.0)) {
        throw ValidationError("visibility window must be positive");
    }
    if (!(step_s > 0.0)) {
        throw ValidationError("visibility step must be positive");
    }
    validate(observer);
    validate(spec);

    const int n = spec.total_satellites();
    std::vector<PassInterval> open(static_cast<std::size_t>(n));
    std::vector<bool> in_pass(static_cast<std::size_t>(n), false);
    std::vector<PassInterval> out;

    double last_t = 0.0;
    for (long k = 0;; ++k) {
        const double t = static_cast<double>(k) * step_s;
        if (t > window_s + 1e-9) break;
        last_t = t;
        const auto states = propagate(spec, t);
        for (int s = 0; s < n; ++s) {
            const auto topo = elevation_and_range(observer, states[static_cast<std::size_t>(s)].position);
            auto& cur = open[static_cast<std::size_t>(s)];
            const bool above = topo.elevation_deg >= min_elevation_deg;
            if (above && !in_pass[static_cast<std::size_t>(s)]) {
                in_pass[static_cast<std::size_t>(s)] = true;
                cur = {s, t, t, t, topo.elevation_deg, topo.slant_range_km};
            } else if (above) {
                cur.end_s = t;
                if (topo.elevation_deg > cur.max_elevation_deg) {
                    cur.max_elevation_deg = topo.elevation_deg;
                    cur.max_elevation_epoch_s = t;
                }
                cur.min_slant_range_km = std::min(cur.min_slant_range_km, topo.slant_range_km);
            } else if (in_pass[static_cast<std::size_t>(s)]) {
                in_pass[static_cast<std::size_t>(s)] = false;
                out.push_back(cur);
            }
        }
    }
    for (int s = 0; s < n; ++s) {
        if (in_pass[static_cast<std::size_t>(s)]) {
            open[static_cast<std::size_t>(s)].end_s = last_t;
            out.push_back(open[static_cast<std::size_t>(s)]);
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const PassInterval& a, const PassInterval& b) {
        if (a.start_s != b.start_s) return a.start_s < b.start_s;
        return a.satellite_id < b.satellite_id;
    });
    return out;
}

}  // namespace fdsat::geometry
