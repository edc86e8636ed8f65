#include "fdsat/linkbudget.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "fdsat/errors.hpp"

namespace fdsat::linkbudget {

namespace {

std::string fmt_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

}  // namespace

void validate(const RfChain& chain) {
    if (!(chain.carrier_ghz > 0.0)) {
        throw ValidationError("carrier frequency must be positive, got " +
                              fmt_num(chain.carrier_ghz) + " GHz");
    }
    if (!(chain.isolation_db >= 0.0)) {
        throw ValidationError("isolation must be >= 0 dB, got " + fmt_num(chain.isolation_db));
    }
}

void validate(const NoiseEnvironment& env) {
    if (!(env.temperature_k > 0.0)) {
        throw ValidationError("receiver temperature must be positive, got " +
                              fmt_num(env.temperature_k) + " K");
    }
    if (!(env.bandwidth_hz > 0.0)) {
        throw ValidationError("bandwidth must be positive");
    }
}

double fspl_db(double distance_km, double carrier_ghz) {
    if (!(distance_km > 0.0)) {
        throw ValidationError("path distance must be positive, got " + fmt_num(distance_km) +
                              " km");
    }
    if (!(carrier_ghz > 0.0)) {
        throw ValidationError("carrier frequency must be positive, got " + fmt_num(carrier_ghz) +
                              " GHz");
    }
    return 92.45 + 20.0 * std::log10(distance_km) + 20.0 * std::log10(carrier_ghz);
}

double noise_power_dbw(const NoiseEnvironment& env) {
    validate(env);
    return 10.0 * std::log10(kBoltzmannJPerK * env.temperature_k * env.bandwidth_hz);
}

double snr_db(const RfChain& tx, const RfChain& rx, double distance_km,
              const NoiseEnvironment& env, double additional_loss_db) {
    validate(tx);
    validate(env);
    return tx.eirp_dbw - fspl_db(distance_km, tx.carrier_ghz) + rx.g_over_t_dbk +
           kBoltzmannConstantDb - 10.0 * std::log10(env.bandwidth_hz) - additional_loss_db;
}

double db_to_linear(double x_db) {
    return std::pow(10.0, x_db / 10.0);
}

double linear_to_db(double x) {
    if (!(x > 0.0)) {
        throw ValidationError("linear power ratio must be positive, got " + fmt_num(x));
    }
    return 10.0 * std::log10(x);
}

LinkBudget make_link_budget(const RfChain& tx, const RfChain& rx, double distance_km,
                            const NoiseEnvironment& env, double additional_loss_db) {
    LinkBudget budget;
    budget.eirp_dbw = tx.eirp_dbw;
    budget.g_over_t_dbk = rx.g_over_t_dbk;
    budget.carrier_ghz = tx.carrier_ghz;
    budget.slant_range_km = distance_km;
    budget.bandwidth_hz = env.bandwidth_hz;
    budget.additional_loss_db = additional_loss_db;
    budget.fspl_db = fspl_db(distance_km, tx.carrier_ghz);
    budget.noise_dbw = noise_power_dbw(env);
    budget.snr_db = snr_db(tx, rx, distance_km, env, additional_loss_db);
    return budget;
}

}  // namespace fdsat::linkbudget
