#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fdsat/geometry.hpp"
#include "fdsat/scenario.hpp"
#include "fdsat/usecases.hpp"

namespace fdsat::report {

inline constexpr const char* kToolVersion = "0.1.0";

inline constexpr const char* kSweepCsvHeader =
    "sic_db,se_fdd_bps_hz,se_fd_bps_hz,gain_percent,residual_si_dbw";

using SweepTable = std::vector<std::pair<double, duplexing::DuplexComparison>>;

// Human-readable assessment report. Every number is printed at fixed
// precision; output is byte-deterministic for a given (scenario, version).
std::string render_table(const scenario::Scenario& s, const scenario::AssessmentResult& r);

// Single JSON object {assumptions, result, scenario, version} with sorted
// keys; parsing and re-serializing reproduces identical bytes.
std::string render_json(const scenario::Scenario& s, const scenario::AssessmentResult& r);

// One data row per assessment, 6-decimal fixed formatting.
std::string render_assess_csv(double sic_db, const duplexing::DuplexComparison& c);
std::string render_sweep_csv(const SweepTable& table);

// Minimal self-contained chart: axes, gridlines, one polyline of gain(%) vs
// SIC(dB). Input points are plotted exactly as given.
std::string render_gain_svg(const std::vector<std::pair<double, double>>& sic_gain_points);

std::string render_visibility_table(
    const std::vector<std::pair<std::string, std::vector<geometry::PassInterval>>>& per_node);

std::string render_catalog_table(const std::vector<usecases::UseCase>& entries);
std::string render_catalog_json(const std::vector<usecases::UseCase>& entries);

}  // namespace fdsat::report
