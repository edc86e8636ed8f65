#pragma once

#include <map>
#include <optional>
#include <string>

#include "fdsat/linkbudget.hpp"

namespace fdsat::duplexing {

struct SicConfig {
    double sic_db = 0.0;        // cancellation depth; +inf = perfect cancellation
    double isolation_db = 0.0;  // circulator isolation at the FD node

    bool operator==(const SicConfig&) const = default;
};

struct LinkDirection {
    std::string tx_node;
    std::string rx_node;
    double distance_km = 0.0;
};

// Two opposite directions on one shared carrier (single-channel IBFD). The
// FD node transmits in one direction and receives in the other; only that
// node suffers self-interference.
struct FdLinkPair {
    LinkDirection direction_a;
    LinkDirection direction_b;
    std::string fd_node;
    double carrier_ghz = 0.0;
    // Power leaking into the FD node's own receiver before isolation/SIC.
    // Defaults to the FD node's EIRP when unset.
    std::optional<double> fd_node_tx_power_dbw;
};

// Per-direction breakdown, keyed by role rather than by a/b label so that
// swapping the pair's directions leaves the comparison unchanged.
struct DirectionReport {
    std::string tx_node;
    std::string rx_node;
    double distance_km = 0.0;
    double band_fraction_fdd = 0.5;  // share of the total band under FDD
    double snr_fdd_db = 0.0;         // over its FDD sub-band
    double snr_fd_db = 0.0;          // over the full band, before SI
    double sinr_fd_db = 0.0;         // after SI (equals snr_fd_db at the remote end)
    double se_fdd_bps_hz = 0.0;      // weighted contribution per Hz of total band
    double se_fd_bps_hz = 0.0;
};

struct DuplexComparison {
    double se_fdd_bps_hz = 0.0;
    double se_fd_bps_hz = 0.0;
    double gain_percent = 0.0;
    double residual_si_dbw = 0.0;
    DirectionReport fd_receive;      // direction terminating at the FD node
    DirectionReport remote_receive;  // direction terminating at the remote node
};

// tx_power - isolation - sic
double residual_si_dbw(double tx_power_dbw, const SicConfig& cfg);

// Signal over (noise + residual SI), combined in watts. With SI at -inf the
// result equals snr_db exactly.
double sinr_db(double snr_db, double residual_si_dbw, double noise_dbw);

// isolation + sic - amplification; negative means a bent-pipe echo loop
// gains power per round trip and the report must carry a warning.
double loop_stability_margin_db(double amplification_db, const SicConfig& cfg);

// FDD baseline vs full-duplex spectral efficiency, both normalized per Hz of
// the total band. Under FDD the direction received at the FD node gets
// `fdd_split` of the band and the other direction the remainder, each with
// noise over its own sub-band. Under FD both directions use the full band and
// the FD node's receive direction suffers the residual SI.
DuplexComparison compare_duplex(const FdLinkPair& pair,
                                const std::map<std::string, linkbudget::RfChain>& chains,
                                const linkbudget::NoiseEnvironment& env,
                                const SicConfig& cfg,
                                double fdd_split = 0.5,
                                double additional_loss_db = 0.0);

// Smallest SIC (to 0.01 dB) such that SE_fd >= SE_fdd: 0 when FD wins even
// without cancellation, nullopt when FD never wins below 200 dB.
std::optional<double> sic_breakeven_db(const FdLinkPair& pair,
                                       const std::map<std::string, linkbudget::RfChain>& chains,
                                       const linkbudget::NoiseEnvironment& env,
                                       double fdd_split = 0.5,
                                       double additional_loss_db = 0.0);

}  // namespace fdsat::duplexing
