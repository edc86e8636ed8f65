#include "fdsat/duplexing.hpp"

#include <cmath>
#include <string>

#include "fdsat/errors.hpp"

namespace fdsat::duplexing {

namespace {

double log2_capacity(double snr_linear) {
    return std::log2(1.0 + snr_linear);
}

const linkbudget::RfChain& chain_at(const std::map<std::string, linkbudget::RfChain>& chains,
                                    const std::string& node) {
    const auto it = chains.find(node);
    if (it == chains.end()) {
        throw ValidationError("link pair references unknown node '" + node + "'");
    }
    return it->second;
}

struct DirectionInputs {
    const LinkDirection* dir;
    linkbudget::RfChain tx;
    linkbudget::RfChain rx;
};

DirectionInputs direction_inputs(const FdLinkPair& pair, const LinkDirection& dir,
                                 const std::map<std::string, linkbudget::RfChain>& chains) {
    DirectionInputs in;
    in.dir = &dir;
    in.tx = chain_at(chains, dir.tx_node);
    in.rx = chain_at(chains, dir.rx_node);
    // The pair shares a single IBFD carrier regardless of the chains' native
    // band assignments.
    in.tx.carrier_ghz = pair.carrier_ghz;
    in.rx.carrier_ghz = pair.carrier_ghz;
    return in;
}

}  // namespace

double residual_si_dbw(double tx_power_dbw, const SicConfig& cfg) {
    if (!(cfg.sic_db >= 0.0)) {
        throw ValidationError("SIC depth must be >= 0 dB");
    }
    if (!(cfg.isolation_db >= 0.0)) {
        throw ValidationError("isolation must be >= 0 dB");
    }
    return tx_power_dbw - cfg.isolation_db - cfg.sic_db;
}

double sinr_db(double snr_db, double residual_si_dbw, double noise_dbw) {
    if (!std::isfinite(noise_dbw)) {
        throw ValidationError("noise power must be finite");
    }
    if (std::isinf(residual_si_dbw) && residual_si_dbw < 0.0) {
        return snr_db;
    }
    // S / (N + I) in watts == snr - 10 log10(1 + I/N) in dB.
    const double i_over_n = std::pow(10.0, (residual_si_dbw - noise_dbw) / 10.0);
    return snr_db - 10.0 * std::log10(1.0 + i_over_n);
}

double loop_stability_margin_db(double amplification_db, const SicConfig& cfg) {
    if (!(amplification_db >= 0.0)) {
        throw ValidationError("amplification must be >= 0 dB");
    }
    return cfg.isolation_db + cfg.sic_db - amplification_db;
}

DuplexComparison compare_duplex(const FdLinkPair& pair,
                                const std::map<std::string, linkbudget::RfChain>& chains,
                                const linkbudget::NoiseEnvironment& env,
                                const SicConfig& cfg,
                                double fdd_split,
                                double additional_loss_db) {
    linkbudget::validate(env);
    if (!(pair.carrier_ghz > 0.0)) {
        throw ValidationError("IBFD carrier frequency must be positive");
    }
    if (!(fdd_split > 0.0 && fdd_split < 1.0)) {
        throw ValidationError("FDD band split must lie strictly between 0 and 1");
    }

    const bool fd_rx_is_a = pair.direction_a.rx_node == pair.fd_node;
    const bool fd_rx_is_b = pair.direction_b.rx_node == pair.fd_node;
    if (fd_rx_is_a == fd_rx_is_b) {
        throw ValidationError("FD node '" + pair.fd_node +
                              "' must receive exactly one of the two directions");
    }
    const LinkDirection& fd_dir = fd_rx_is_a ? pair.direction_a : pair.direction_b;
    const LinkDirection& remote_dir = fd_rx_is_a ? pair.direction_b : pair.direction_a;
    if (remote_dir.tx_node != pair.fd_node) {
        throw ValidationError("FD node '" + pair.fd_node +
                              "' must transmit the direction it does not receive");
    }

    const DirectionInputs fd_in = direction_inputs(pair, fd_dir, chains);
    const DirectionInputs remote_in = direction_inputs(pair, remote_dir, chains);

    // FDD baseline: the FD node's receive direction gets `fdd_split` of the
    // band, the other direction the remainder; noise follows each sub-band.
    const linkbudget::NoiseEnvironment fd_band{env.temperature_k, env.bandwidth_hz * fdd_split};
    const linkbudget::NoiseEnvironment remote_band{env.temperature_k,
                                                   env.bandwidth_hz * (1.0 - fdd_split)};
    const double snr_fdd_fd =
        linkbudget::snr_db(fd_in.tx, fd_in.rx, fd_dir.distance_km, fd_band, additional_loss_db);
    const double snr_fdd_remote = linkbudget::snr_db(remote_in.tx, remote_in.rx,
                                                     remote_dir.distance_km, remote_band,
                                                     additional_loss_db);
    const double se_fdd_fd = fdd_split * log2_capacity(linkbudget::db_to_linear(snr_fdd_fd));
    const double se_fdd_remote =
        (1.0 - fdd_split) * log2_capacity(linkbudget::db_to_linear(snr_fdd_remote));
    const double se_fdd = se_fdd_fd + se_fdd_remote;

    // FD: full band in both directions; only the FD node sees residual SI.
    const double snr_fd_fd =
        linkbudget::snr_db(fd_in.tx, fd_in.rx, fd_dir.distance_km, env, additional_loss_db);
    const double snr_fd_remote = linkbudget::snr_db(remote_in.tx, remote_in.rx,
                                                    remote_dir.distance_km, env,
                                                    additional_loss_db);
    const double si_reference_dbw =
        pair.fd_node_tx_power_dbw.value_or(chain_at(chains, pair.fd_node).eirp_dbw);
    const double residual = residual_si_dbw(si_reference_dbw, cfg);
    const double noise_full = linkbudget::noise_power_dbw(env);
    const double sinr_fd = sinr_db(snr_fd_fd, residual, noise_full);
    const double se_fd_fd = log2_capacity(linkbudget::db_to_linear(sinr_fd));
    const double se_fd_remote = log2_capacity(linkbudget::db_to_linear(snr_fd_remote));
    const double se_fd = se_fd_fd + se_fd_remote;

    if (!(se_fdd > 0.0)) {
        throw ValidationError("FDD baseline spectral efficiency is zero; gain undefined");
    }

    DuplexComparison out;
    out.se_fdd_bps_hz = se_fdd;
    out.se_fd_bps_hz = se_fd;
    out.gain_percent = 100.0 * (se_fd - se_fdd) / se_fdd;
    out.residual_si_dbw = residual;
    out.fd_receive = {fd_dir.tx_node, fd_dir.rx_node, fd_dir.distance_km, fdd_split,
                      snr_fdd_fd,     snr_fd_fd,      sinr_fd,            se_fdd_fd,
                      se_fd_fd};
    out.remote_receive = {remote_dir.tx_node, remote_dir.rx_node, remote_dir.distance_km,
                          1.0 - fdd_split,    snr_fdd_remote,     snr_fd_remote,
                          snr_fd_remote,      se_fdd_remote,      se_fd_remote};
    return out;
}

std::optional<double> sic_breakeven_db(const FdLinkPair& pair,
                                       const std::map<std::string, linkbudget::RfChain>& chains,
                                       const linkbudget::NoiseEnvironment& env,
                                       double fdd_split,
                                       double additional_loss_db) {
    const double isolation = chain_at(chains, pair.fd_node).isolation_db;
    const auto se_fd_at = [&](double sic) {
        return compare_duplex(pair, chains, env, SicConfig{sic, isolation}, fdd_split,
                              additional_loss_db);
    };

    const auto at_zero = se_fd_at(0.0);
    if (at_zero.se_fd_bps_hz >= at_zero.se_fdd_bps_hz) {
        return 0.0;
    }
    constexpr double kCeilingDb = 200.0;
    const auto at_ceiling = se_fd_at(kCeilingDb);
    if (at_ceiling.se_fd_bps_hz < at_ceiling.se_fdd_bps_hz) {
        return std::nullopt;
    }

    // SE_fd is monotone in SIC, so the bracket [lo, hi] keeps
    // SE_fd(lo) < SE_fdd <= SE_fd(hi).
    double lo = 0.0;
    double hi = kCeilingDb;
    while (hi - lo > 0.01) {
        const double mid = 0.5 * (lo + hi);
        const auto at_mid = se_fd_at(mid);
        if (at_mid.se_fd_bps_hz >= at_mid.se_fdd_bps_hz) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

}  // namespace fdsat::duplexing
