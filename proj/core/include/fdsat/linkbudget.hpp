#pragma once

namespace fdsat::linkbudget {

inline constexpr double kBoltzmannJPerK = 1.380649e-23;
// Rounded -10*log10(k_B), the conventional link-budget constant.
inline constexpr double kBoltzmannConstantDb = 228.6;

// Transmit/receive characterization of one node. EIRP and G/T are taken as
// the complete description; antenna patterns and pointing losses are folded
// into them.
struct RfChain {
    double eirp_dbw = 0.0;
    double g_over_t_dbk = 0.0;
    double isolation_db = 0.0;  // circulator Tx/Rx isolation
    double carrier_ghz = 0.0;

    bool operator==(const RfChain&) const = default;
};

struct NoiseEnvironment {
    double temperature_k = 0.0;
    double bandwidth_hz = 0.0;

    bool operator==(const NoiseEnvironment&) const = default;
};

// One-directional carrier evaluation. Carries its inputs so that snr_db can
// be recomputed from the stored parts.
struct LinkBudget {
    double eirp_dbw = 0.0;
    double g_over_t_dbk = 0.0;
    double carrier_ghz = 0.0;
    double slant_range_km = 0.0;
    double bandwidth_hz = 0.0;
    double additional_loss_db = 0.0;
    double fspl_db = 0.0;
    double noise_dbw = 0.0;
    double snr_db = 0.0;
};

void validate(const RfChain& chain);
void validate(const NoiseEnvironment& env);

// 92.45 + 20 log10(d_km) + 20 log10(f_GHz)
double fspl_db(double distance_km, double carrier_ghz);

// 10 log10(k_B * T * B)
double noise_power_dbw(const NoiseEnvironment& env);

// eirp - FSPL + G/T + 228.6 - 10 log10(B) - additional_loss
double snr_db(const RfChain& tx, const RfChain& rx, double distance_km,
              const NoiseEnvironment& env, double additional_loss_db = 0.0);

double db_to_linear(double x_db);
double linear_to_db(double x);  // throws on x <= 0

LinkBudget make_link_budget(const RfChain& tx, const RfChain& rx, double distance_km,
                            const NoiseEnvironment& env, double additional_loss_db = 0.0);

}  // namespace fdsat::linkbudget
