#pragma once

#include <vector>

namespace fdsat::geometry {

// Spherical Earth model. WGS-84 flattening moves LEO slant ranges by <0.2%,
// which is below every tolerance used in this project.
inline constexpr double kEarthRadiusKm = 6371.0;
inline constexpr double kMuKm3PerS2 = 398600.4418;
// Sidereal rotation rate.
inline constexpr double kEarthRotationDegPerS = 360.0 / 86164.0905;

struct GeodeticPosition {
    double lat_deg = 0.0;  // [-90, 90]
    double lon_deg = 0.0;  // [-180, 180]
    double alt_km = 0.0;   // >= 0

    bool operator==(const GeodeticPosition&) const = default;
};

// Earth-centered Earth-fixed frame.
struct CartesianPosition {
    double x_km = 0.0;
    double y_km = 0.0;
    double z_km = 0.0;
};

// Circular-orbit shell: `planes` orbital planes spread over `raan_spread_deg`
// of right ascension, `sats_per_plane` equally spaced slots per plane, and an
// inter-plane anomaly stagger of `phase_offset_deg`.
struct ConstellationSpec {
    double altitude_km = 0.0;
    int planes = 0;
    int sats_per_plane = 0;
    double inclination_deg = 86.4;
    double raan_spread_deg = 180.0;
    double phase_offset_deg = 0.0;
    double epoch_s = 0.0;

    int total_satellites() const { return planes * sats_per_plane; }

    bool operator==(const ConstellationSpec&) const = default;
};

// Scenario-level default for the anomaly stagger: one full slot spread over
// the whole constellation.
double default_phase_offset_deg(int planes, int sats_per_plane);

struct SatelliteState {
    int id = 0;
    CartesianPosition position;
};

struct Topocentric {
    double elevation_deg = 0.0;
    double slant_range_km = 0.0;
};

struct PassGeometry {
    int satellite_id = 0;
    double epoch_s = 0.0;
    double elevation_deg = 0.0;
    double slant_range_km = 0.0;
};

// One contiguous interval during which a satellite stays above the elevation
// mask, as seen from one observer.
struct PassInterval {
    int satellite_id = 0;
    double start_s = 0.0;
    double end_s = 0.0;
    double max_elevation_epoch_s = 0.0;
    double max_elevation_deg = 0.0;
    double min_slant_range_km = 0.0;
};

// Best single-satellite epoch serving every observer at once.
struct CommonPass {
    int satellite_id = 0;
    double epoch_s = 0.0;
    double min_elevation_deg = 0.0;          // worst observer at the chosen epoch
    std::vector<PassGeometry> per_observer;  // same order as the observer list
};

void validate(const GeodeticPosition& pos);
void validate(const ConstellationSpec& spec);

double norm_km(const CartesianPosition& p);

CartesianPosition geodetic_to_cartesian(const GeodeticPosition& pos);
GeodeticPosition cartesian_to_geodetic(const CartesianPosition& pos);

// Earth-fixed satellite states at time t (ids are plane-major, slot-minor).
std::vector<SatelliteState> propagate(const ConstellationSpec& spec, double t_s);
// Same states before the Earth-rotation term is applied.
std::vector<SatelliteState> propagate_inertial(const ConstellationSpec& spec, double t_s);

double orbital_period_s(double altitude_km);

// Elevation above the observer's local horizon and straight-line range.
// Negative elevations are returned as-is (satellite below the horizon).
Topocentric elevation_and_range(const GeodeticPosition& observer, const CartesianPosition& sat);

// Scans [0, window_s] at step_s (refined to 1 s around the coarse optimum
// when step_s > 1) and returns the epoch and satellite maximizing the minimum
// elevation across observers, subject to every observer seeing the satellite
// at or above min_elevation_deg. Ties break to the earlier epoch, then the
// lower satellite id. Throws NoVisibilityError when no epoch qualifies.
CommonPass best_pass(const ConstellationSpec& spec,
                     const std::vector<GeodeticPosition>& observers,
                     double window_s,
                     double step_s,
                     double min_elevation_deg);

// Same selection restricted to a single epoch.
CommonPass best_at_epoch(const ConstellationSpec& spec,
                         const std::vector<GeodeticPosition>& observers,
                         double epoch_s,
                         double min_elevation_deg);

// All passes above the mask for one observer, ordered by start epoch.
std::vector<PassInterval> list_passes(const ConstellationSpec& spec,
                                      const GeodeticPosition& observer,
                                      double window_s,
                                      double step_s,
                                      double min_elevation_deg);

}  // namespace fdsat::geometry
