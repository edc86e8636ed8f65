#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "fdsat/errors.hpp"
#include "fdsat/geometry.hpp"

using namespace fdsat;
using namespace fdsat::geometry;

namespace {

constexpr double kPi = std::numbers::pi;

ConstellationSpec reference_shell() {
    ConstellationSpec spec;
    spec.altitude_km = 780.0;
    spec.planes = 6;
    spec.sats_per_plane = 11;
    spec.inclination_deg = 86.4;
    spec.raan_spread_deg = 180.0;
    spec.phase_offset_deg = default_phase_offset_deg(6, 11);
    return spec;
}

const GeodeticPosition kGateway{49.6266, 6.15898, 0.0};
const GeodeticPosition kTerminal{42.16951, -8.68318, 0.0};

// Closed-form slant range for an observer on the surface seeing a satellite
// at altitude h under elevation eps.
double slant_range_oracle_km(double elevation_deg, double altitude_km) {
    const double e = elevation_deg * kPi / 180.0;
    const double r = kEarthRadiusKm + altitude_km;
    return std::sqrt(r * r - std::pow(kEarthRadiusKm * std::cos(e), 2)) -
           kEarthRadiusKm * std::sin(e);
}

// Geocentric angle between observer and sub-satellite point at elevation eps.
double central_angle_rad(double elevation_deg, double altitude_km) {
    const double e = elevation_deg * kPi / 180.0;
    return std::acos(kEarthRadiusKm * std::cos(e) / (kEarthRadiusKm + altitude_km)) - e;
}

}  // namespace

TEST_CASE("geodetic conversion: axis and pole cases") {
    const auto origin = geodetic_to_cartesian({0.0, 0.0, 0.0});
    CHECK(origin.x_km == doctest::Approx(6371.0).epsilon(1e-14));
    CHECK(std::abs(origin.y_km) < 1e-9);
    CHECK(std::abs(origin.z_km) < 1e-9);

    const auto pole = geodetic_to_cartesian({90.0, 0.0, 0.0});
    CHECK(std::abs(pole.x_km) < 1e-9);
    CHECK(std::abs(pole.y_km) < 1e-9);
    CHECK(pole.z_km == doctest::Approx(6371.0).epsilon(1e-14));
}

TEST_CASE("geodetic conversion: gateway station matches the spherical-trig oracle") {
    // Independent hand computation: x = R cos(lat) cos(lon), etc.
    const double lat = 49.6266 * kPi / 180.0;
    const double lon = 6.15898 * kPi / 180.0;
    const double x = 6371.0 * std::cos(lat) * std::cos(lon);
    const double y = 6371.0 * std::cos(lat) * std::sin(lon);
    const double z = 6371.0 * std::sin(lat);

    const auto p = geodetic_to_cartesian(kGateway);
    CHECK(p.x_km == doctest::Approx(x).epsilon(1e-14));
    CHECK(p.y_km == doctest::Approx(y).epsilon(1e-14));
    CHECK(p.z_km == doctest::Approx(z).epsilon(1e-14));
    // Frozen oracle values.
    CHECK(p.x_km == doctest::Approx(4103.098523963).epsilon(1e-11));
    CHECK(p.y_km == doctest::Approx(442.767156433).epsilon(1e-11));
    CHECK(p.z_km == doctest::Approx(4853.677033739).epsilon(1e-11));
}

TEST_CASE("geodetic conversion: rejects out-of-range inputs") {
    CHECK_THROWS_AS(geodetic_to_cartesian({91.0, 0.0, 0.0}), ValidationError);
    CHECK_THROWS_AS(geodetic_to_cartesian({0.0, 181.0, 0.0}), ValidationError);
    CHECK_THROWS_AS(geodetic_to_cartesian({0.0, 0.0, -1.0}), ValidationError);
}

TEST_CASE("geodetic conversion: cartesian round trip within 1e-9 km") {
    std::mt19937 rng(20240901);
    std::uniform_real_distribution<double> lat(-90.0, 90.0);
    std::uniform_real_distribution<double> lon(-180.0, 180.0);
    std::uniform_real_distribution<double> alt(0.0, 2000.0);
    for (int i = 0; i < 500; ++i) {
        const GeodeticPosition g{lat(rng), lon(rng), alt(rng)};
        const auto c = geodetic_to_cartesian(g);
        const auto c2 = geodetic_to_cartesian(cartesian_to_geodetic(c));
        CHECK(std::abs(c.x_km - c2.x_km) < 1e-9);
        CHECK(std::abs(c.y_km - c2.y_km) < 1e-9);
        CHECK(std::abs(c.z_km - c2.z_km) < 1e-9);
    }
}

TEST_CASE("propagation: satellite count and radius conservation") {
    const auto spec = reference_shell();
    const double a = kEarthRadiusKm + spec.altitude_km;
    for (double t : {0.0, 123.0, 5000.0, 86400.0}) {
        const auto states = propagate(spec, t);
        REQUIRE(states.size() == 66);
        for (const auto& st : states) {
            CHECK(std::abs(norm_km(st.position) - a) < 1e-9);
        }
    }
}

TEST_CASE("propagation: slot zero starts at its ascending node") {
    auto spec = reference_shell();
    spec.phase_offset_deg = 0.0;
    const auto states = propagate(spec, 0.0);
    const auto& first = states.front().position;
    CHECK(states.front().id == 0);
    CHECK(std::abs(first.z_km) < 1e-9);  // latitude 0
    CHECK(first.x_km == doctest::Approx(kEarthRadiusKm + 780.0).epsilon(1e-12));
}

TEST_CASE("propagation: orbital period matches the Kepler oracle") {
    const double a = kEarthRadiusKm + 780.0;
    const double oracle = 2.0 * kPi * std::sqrt(a * a * a / kMuKm3PerS2);
    CHECK(oracle == doctest::Approx(6018.124217).epsilon(1e-9));
    CHECK(orbital_period_s(780.0) == doctest::Approx(oracle).epsilon(1e-15));
}

TEST_CASE("propagation: one period closes the inertial orbit within 1e-6 km") {
    const auto spec = reference_shell();
    const double period = orbital_period_s(spec.altitude_km);
    for (double t : {0.0, 917.3}) {
        const auto before = propagate_inertial(spec, t);
        const auto after = propagate_inertial(spec, t + period);
        for (std::size_t i = 0; i < before.size(); ++i) {
            CHECK(std::abs(before[i].position.x_km - after[i].position.x_km) < 1e-6);
            CHECK(std::abs(before[i].position.y_km - after[i].position.y_km) < 1e-6);
            CHECK(std::abs(before[i].position.z_km - after[i].position.z_km) < 1e-6);
        }
    }
}

TEST_CASE("propagation: validation errors") {
    auto spec = reference_shell();
    spec.altitude_km = 0.0;
    CHECK_THROWS_AS(propagate(spec, 0.0), ValidationError);
    spec = reference_shell();
    spec.inclination_deg = 200.0;
    CHECK_THROWS_AS(propagate(spec, 0.0), ValidationError);
    spec = reference_shell();
    CHECK_THROWS_AS(propagate(spec, std::nan("")), ValidationError);
}

TEST_CASE("elevation and range: nadir, horizon formula and antipode") {
    const GeodeticPosition observer{0.0, 0.0, 0.0};

    SUBCASE("satellite directly overhead") {
        const auto topo = elevation_and_range(observer, {kEarthRadiusKm + 780.0, 0.0, 0.0});
        CHECK(topo.elevation_deg == doctest::Approx(90.0).epsilon(1e-12));
        CHECK(topo.slant_range_km == doctest::Approx(780.0).epsilon(1e-12));
    }

    SUBCASE("elevation 10 deg at 780 km altitude") {
        const double d = slant_range_oracle_km(10.0, 780.0);
        CHECK(d == doctest::Approx(2324.589300122).epsilon(1e-12));
    }

    SUBCASE("satellite at the antipode") {
        const auto topo = elevation_and_range(observer, {-(kEarthRadiusKm + 780.0), 0.0, 0.0});
        CHECK(topo.elevation_deg == doctest::Approx(-90.0).epsilon(1e-12));
    }
}

TEST_CASE("elevation and range: closed form agrees with the vector path within 1e-9 km") {
    const GeodeticPosition observer{0.0, 0.0, 0.0};
    for (double altitude : {400.0, 780.0, 1200.0}) {
        const double r = kEarthRadiusKm + altitude;
        for (double elev = 0.0; elev <= 90.0; elev += 0.5) {
            const double lambda = central_angle_rad(elev, altitude);
            const CartesianPosition sat{r * std::cos(lambda), 0.0, r * std::sin(lambda)};
            const auto topo = elevation_and_range(observer, sat);
            CHECK(std::abs(topo.slant_range_km - slant_range_oracle_km(elev, altitude)) < 1e-9);
            CHECK(topo.elevation_deg == doctest::Approx(elev).epsilon(1e-9));
        }
    }
}

TEST_CASE("best pass: observer under a satellite finds it immediately") {
    const auto spec = reference_shell();
    const auto states = propagate(spec, 0.0);
    auto observer = cartesian_to_geodetic(states[5].position);
    observer.alt_km = 0.0;

    const auto pass = best_pass(spec, {observer}, 100.0, 10.0, 10.0);
    CHECK(pass.epoch_s == 0.0);
    CHECK(pass.satellite_id == 5);
    CHECK(pass.min_elevation_deg > 89.999);
}

TEST_CASE("best pass: 1 s scan equals the exhaustive oracle") {
    const auto spec = reference_shell();
    const std::vector<GeodeticPosition> observers{kGateway, kTerminal};
    const double window = 7200.0;
    const double min_elev = 10.0;

    // Independent exhaustive max-min scan at 1 s steps.
    double best_elev = -1e9;
    double best_t = -1.0;
    int best_sat = -1;
    std::vector<CartesianPosition> obs_ecef;
    for (const auto& o : observers) obs_ecef.push_back(geodetic_to_cartesian(o));
    for (double t = 0.0; t <= window; t += 1.0) {
        const auto states = propagate(spec, t);
        for (const auto& st : states) {
            double min_e = 1e9;
            for (std::size_t i = 0; i < observers.size(); ++i) {
                min_e = std::min(min_e,
                                 elevation_and_range(observers[i], st.position).elevation_deg);
            }
            if (min_e >= min_elev && min_e > best_elev) {
                best_elev = min_e;
                best_t = t;
                best_sat = st.id;
            }
        }
    }
    REQUIRE(best_sat >= 0);

    const auto pass = best_pass(spec, observers, window, 1.0, min_elev);
    CHECK(pass.epoch_s == best_t);
    CHECK(pass.satellite_id == best_sat);
    CHECK(pass.min_elevation_deg == doctest::Approx(best_elev).epsilon(1e-12));
}

TEST_CASE("best pass: gateway/terminal 24 h regression values") {
    const auto spec = reference_shell();
    const auto pass = best_pass(spec, {kGateway, kTerminal}, 86400.0, 10.0, 10.0);
    CHECK(pass.epoch_s == 1320.0);
    CHECK(pass.satellite_id == 10);
    CHECK(pass.min_elevation_deg == doctest::Approx(42.873385).epsilon(1e-6));
    CHECK(pass.per_observer[0].slant_range_km == doctest::Approx(1081.643314).epsilon(1e-9));
    CHECK(pass.per_observer[1].slant_range_km == doctest::Approx(1079.537359).epsilon(1e-9));

    SUBCASE("invariant under observer reordering") {
        const auto swapped = best_pass(spec, {kTerminal, kGateway}, 86400.0, 10.0, 10.0);
        CHECK(swapped.epoch_s == pass.epoch_s);
        CHECK(swapped.satellite_id == pass.satellite_id);
        CHECK(swapped.min_elevation_deg == pass.min_elevation_deg);
        CHECK(swapped.per_observer[0].slant_range_km == pass.per_observer[1].slant_range_km);
        CHECK(swapped.per_observer[1].slant_range_km == pass.per_observer[0].slant_range_km);
    }

    SUBCASE("refinement never loses to the coarse scan") {
        const auto coarse_only = best_pass(spec, {kGateway, kTerminal}, 86400.0, 1.0, 10.0);
        CHECK(pass.min_elevation_deg >= 42.0);
        CHECK(coarse_only.min_elevation_deg >= pass.min_elevation_deg - 1e-9);
    }
}

TEST_CASE("best pass: impossible constraints raise the visibility error") {
    const auto spec = reference_shell();
    CHECK_THROWS_WITH_AS(best_pass(spec, {kGateway, kTerminal}, 3600.0, 10.0, 90.0),
                         doctest::Contains("no common visibility"), NoVisibilityError);
    CHECK_THROWS_AS(best_pass(spec, {kGateway}, 0.0, 10.0, 10.0), ValidationError);
    CHECK_THROWS_AS(best_pass(spec, {kGateway}, 100.0, 0.0, 10.0), ValidationError);
    CHECK_THROWS_AS(best_pass(spec, {}, 100.0, 10.0, 10.0), ValidationError);
}

TEST_CASE("pass listing: rejects degenerate windows and steps") {
    const auto spec = reference_shell();
    CHECK_THROWS_AS(list_passes(spec, kGateway, 0.0, 10.0, 10.0), ValidationError);
    CHECK_THROWS_AS(list_passes(spec, kGateway, 100.0, 0.0, 10.0), ValidationError);
}

TEST_CASE("pass listing: raising the mask strictly shrinks total pass time") {
    const auto spec = reference_shell();
    const auto low = list_passes(spec, kGateway, 86400.0, 10.0, 10.0);
    const auto high = list_passes(spec, kGateway, 86400.0, 10.0, 80.0);
    REQUIRE(!low.empty());

    const auto total = [](const std::vector<PassInterval>& passes) {
        double sum = 0.0;
        for (const auto& p : passes) sum += p.end_s - p.start_s;
        return sum;
    };
    CHECK(total(high) < total(low));

    for (const auto& p : low) {
        CHECK(p.max_elevation_deg >= 10.0);
        CHECK(p.min_slant_range_km > 0.0);
        CHECK(p.end_s >= p.start_s);
        CHECK(p.max_elevation_epoch_s >= p.start_s);
        CHECK(p.max_elevation_epoch_s <= p.end_s);
    }
}
