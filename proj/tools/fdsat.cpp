#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fdsat/errors.hpp"
#include "fdsat/report.hpp"
#include "fdsat/scenario.hpp"
#include "fdsat/usecases.hpp"

namespace {

using namespace fdsat;

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open output file for writing: " + path);
    }
    out << content;
    if (!out) {
        throw IoError("error while writing output file: " + path);
    }
}

struct AssessArgs {
    std::string scenario_path;
    double sic_db = -1.0;  // <0: keep the scenario value
    std::string format = "table";
};

int run_assess(const AssessArgs& args) {
    scenario::Scenario s = scenario::load_scenario_file(args.scenario_path);
    if (args.sic_db >= 0.0) {
        s.duplex.sic_db = args.sic_db;
    }
    const auto result = scenario::assess(s);
    if (args.format == "table") {
        std::cout << report::render_table(s, result);
    } else if (args.format == "json") {
        std::cout << report::render_json(s, result);
    } else if (args.format == "csv") {
        std::cout << report::render_assess_csv(s.duplex.sic_db, result.comparison);
    } else {
        throw ValidationError("unknown format '" + args.format + "' (use table, json or csv)");
    }
    return kExitOk;
}

struct SweepArgs {
    std::string scenario_path;
    std::string sic_range;
    std::string csv_path;
    std::string svg_path;
};

int run_sweep(const SweepArgs& args) {
    const scenario::Scenario s = scenario::load_scenario_file(args.scenario_path);
    const auto range = scenario::parse_sweep_range(args.sic_range);
    const auto table = scenario::sweep_grid(s, range);
    const std::string csv = report::render_sweep_csv(table);

    if (!args.csv_path.empty()) {
        write_file(args.csv_path, csv);
    }
    if (!args.svg_path.empty()) {
        // Plot exactly what the CSV carries so that re-reading the CSV and
        // re-plotting reproduces identical bytes.
        std::vector<std::pair<double, double>> points;
        std::istringstream in(csv);
        std::string line;
        std::getline(in, line);  // header
        while (std::getline(in, line)) {
            const std::size_t first = line.find(',');
            const std::size_t last = line.rfind(',');
            const std::size_t third = line.rfind(',', last - 1);
            const std::string sic_text = line.substr(0, first);
            const std::string gain_text = line.substr(third + 1, last - third - 1);
            points.emplace_back(std::stod(sic_text), std::stod(gain_text));
        }
        write_file(args.svg_path, report::render_gain_svg(points));
    }
    if (args.csv_path.empty() && args.svg_path.empty()) {
        std::cout << csv;
    }
    return kExitOk;
}

struct VisibilityArgs {
    std::string scenario_path;
    double window_s = 0.0;
    double step_s = 10.0;
};

int run_visibility(const VisibilityArgs& args) {
    const scenario::Scenario s = scenario::load_scenario_file(args.scenario_path);
    std::vector<std::pair<std::string, std::vector<geometry::PassInterval>>> per_node;
    for (const auto& [name, node] : s.nodes) {
        if (!node.position.has_value()) continue;
        per_node.emplace_back(name, geometry::list_passes(s.constellation, *node.position,
                                                          args.window_s, args.step_s,
                                                          s.link.min_elevation_deg));
    }
    std::cout << report::render_visibility_table(per_node);
    return kExitOk;
}

struct CatalogArgs {
    std::string id;
    bool as_json = false;
};

int run_catalog(const CatalogArgs& args) {
    std::vector<usecases::UseCase> entries;
    if (args.id.empty()) {
        entries = usecases::catalog();
    } else {
        entries.push_back(usecases::lookup(usecases::parse_use_case_id(args.id)));
    }
    if (args.as_json) {
        std::cout << report::render_catalog_json(entries);
        return kExitOk;
    }
    if (!args.id.empty()) {
        const auto& e = entries.front();
        std::cout << "id          : " << usecases::to_string(e.id) << "\n";
        std::cout << "name        : " << e.name << "\n";
        std::cout << "tier        : " << usecases::to_string(e.priority_tier) << "\n";
        std::cout << "application : " << e.application << "\n";
        std::cout << "bands       : ";
        for (std::size_t i = 0; i < e.bands.size(); ++i) {
            std::cout << (i == 0 ? "" : ", ") << e.bands[i];
        }
        std::cout << "\nadvantages  :\n";
        for (const auto& adv : e.advantages) {
            std::cout << "  - " << adv << "\n";
        }
        std::cout << "fd topology : " << e.fd_topology.a_tx << " -> " << e.fd_topology.a_rx
                  << " with " << e.fd_topology.b_tx << " -> " << e.fd_topology.b_rx
                  << ", FD at " << e.fd_topology.fd_node << ", default carrier "
                  << e.fd_topology.default_carrier_ghz << " GHz\n";
        return kExitOk;
    }
    std::cout << report::render_catalog_table(entries);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"deterministic trade-study tool for single-channel full-duplex satellite links"};
    app.require_subcommand(1);

    AssessArgs assess_args;
    auto* assess_cmd = app.add_subcommand("assess", "assess one scenario file");
    assess_cmd->add_option("--scenario", assess_args.scenario_path, "scenario file path")
        ->required();
    assess_cmd->add_option("--sic", assess_args.sic_db, "override the scenario SIC level (dB)")
        ->check(CLI::NonNegativeNumber);
    assess_cmd->add_option("--format", assess_args.format, "output format: table, json or csv");

    SweepArgs sweep_args;
    auto* sweep_cmd = app.add_subcommand("sweep", "sweep the SIC level over a range");
    sweep_cmd->add_option("--scenario", sweep_args.scenario_path, "scenario file path")
        ->required();
    sweep_cmd->add_option("--sic-range", sweep_args.sic_range, "range as start:stop:step (dB)")
        ->required();
    sweep_cmd->add_option("--csv", sweep_args.csv_path, "write the sweep table to this file");
    sweep_cmd->add_option("--svg", sweep_args.svg_path, "write a gain-vs-SIC chart to this file");

    VisibilityArgs vis_args;
    auto* vis_cmd = app.add_subcommand("visibility", "list passes per positioned node");
    vis_cmd->add_option("--scenario", vis_args.scenario_path, "scenario file path")->required();
    vis_cmd->add_option("--window-s", vis_args.window_s, "scan window length (s)")->required();
    vis_cmd->add_option("--step-s", vis_args.step_s, "scan step (s), default 10");

    CatalogArgs catalog_args;
    auto* catalog_cmd = app.add_subcommand("catalog", "print the use-case catalog");
    catalog_cmd->add_option("id", catalog_args.id, "single use-case id, e.g. ISL-SO");
    catalog_cmd->add_flag("--json", catalog_args.as_json, "emit JSON instead of a table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (app.got_subcommand(assess_cmd)) return run_assess(assess_args);
        if (app.got_subcommand(sweep_cmd)) return run_sweep(sweep_args);
        if (app.got_subcommand(vis_cmd)) return run_visibility(vis_args);
        if (app.got_subcommand(catalog_cmd)) return run_catalog(catalog_args);
    } catch (const fdsat::NoVisibilityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoVisibility;
    } catch (const fdsat::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const fdsat::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitValidation;
}
