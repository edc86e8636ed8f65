#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fdsat/errors.hpp"
#include "fdsat/scenario.hpp"

namespace fdsat::scenario {

namespace {

std::string fmt_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

std::string fmt_exact(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct RawValue {
    enum class Kind { Number, String, Bool };
    Kind kind = Kind::Number;
    double number = 0.0;
    std::string text;
    bool flag = false;
    int line = 0;
    int col = 0;
};

struct RawTable {
    std::map<std::string, RawValue> values;
    int line = 0;
};

struct RawDoc {
    RawTable root;
    std::map<std::string, RawTable> tables;   // keyed by dotted section path
    std::vector<std::string> table_order;
};

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '-' || c == '.';
}

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])) != 0) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])) != 0) --e;
    return s.substr(b, e - b);
}

// Cuts a trailing comment, honoring quoted strings.
std::string strip_comment(const std::string& line) {
    bool in_string = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (in_string) {
            if (c == '\\') {
                ++i;
            } else if (c == '"') {
                in_string = false;
            }
        } else if (c == '"') {
            in_string = true;
        } else if (c == '#') {
            return line.substr(0, i);
        }
    }
    return line;
}

std::string parse_quoted(const std::string& raw, int line_no, int col) {
    if (raw.size() < 2 || raw.back() != '"') {
        throw ParseError("unterminated string", line_no, col);
    }
    std::string out;
    for (std::size_t i = 1; i + 1 < raw.size(); ++i) {
        char c = raw[i];
        if (c == '\\') {
            ++i;
            if (i + 1 >= raw.size()) {
                throw ParseError("dangling escape in string", line_no, col);
            }
            const char esc = raw[i];
            if (esc == '"' || esc == '\\') {
                out += esc;
            } else {
                throw ParseError(std::string("unsupported escape '\\") + esc + "'", line_no, col);
            }
        } else if (c == '"') {
            throw ParseError("unexpected '\"' inside string", line_no, col);
        } else {
            out += c;
        }
    }
    return out;
}

RawValue parse_value(const std::string& raw, int line_no, int col) {
    RawValue v;
    v.line = line_no;
    v.col = col;
    if (raw.empty()) {
        throw ParseError("missing value after '='", line_no, col);
    }
    if (raw.front() == '"') {
        v.kind = RawValue::Kind::String;
        v.text = parse_quoted(raw, line_no, col);
        return v;
    }
    if (raw == "true" || raw == "false") {
        v.kind = RawValue::Kind::Bool;
        v.flag = raw == "true";
        return v;
    }
    double num = 0.0;
    const char* begin = raw.data();
    const char* end = raw.data() + raw.size();
    const auto [ptr, ec] = std::from_chars(begin, end, num);
    if (ec != std::errc() || ptr != end) {
        throw ParseError("invalid value '" + raw + "' (expected number, string or bool)",
                         line_no, col);
    }
    v.kind = RawValue::Kind::Number;
    v.number = num;
    return v;
}

RawDoc parse_document(const std::string& text) {
    RawDoc doc;
    RawTable* current = &doc.root;
    std::string current_name;

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string body = trim(strip_comment(line));
        if (body.empty()) continue;

        if (body.front() == '[') {
            if (body.back() != ']' || body.size() < 3) {
                throw ParseError("malformed section header '" + body + "'", line_no, 1);
            }
            const std::string name = trim(body.substr(1, body.size() - 2));
            if (name.empty()) {
                throw ParseError("empty section name", line_no, 1);
            }
            for (char c : name) {
                if (!is_ident_char(c)) {
                    throw ParseError("invalid section name '" + name + "'", line_no, 1);
                }
            }
            if (doc.tables.count(name) != 0) {
                throw ParseError("duplicate section [" + name + "]", line_no, 1);
            }
            doc.tables[name].line = line_no;
            doc.table_order.push_back(name);
            current = &doc.tables[name];
            current_name = name;
            continue;
        }

        const std::size_t eq = body.find('=');
        if (eq == std::string::npos) {
            throw ParseError("expected 'key = value' or '[section]'", line_no, 1);
        }
        const std::string key = trim(body.substr(0, eq));
        if (key.empty()) {
            throw ParseError("missing key before '='", line_no, 1);
        }
        for (char c : key) {
            if (!is_ident_char(c) || c == '.') {
                throw ParseError("invalid key '" + key + "'", line_no, 1);
            }
        }
        const std::string raw_value = trim(body.substr(eq + 1));
        const int value_col = static_cast<int>(line.find(raw_value.empty() ? "=" : raw_value)) + 1;
        if (current->values.count(key) != 0) {
            const std::string where = current_name.empty() ? "document root" : "[" + current_name + "]";
            throw ParseError("duplicate key '" + key + "' in " + where, line_no, value_col);
        }
        current->values[key] = parse_value(raw_value, line_no, value_col);
    }
    return doc;
}

// Typed, strict accessor over one raw table: every key must be consumed.
class TableView {
  public:
    TableView(const RawTable* table, std::string display_name)
        : table_(table), name_(std::move(display_name)) {}

    bool present() const { return table_ != nullptr; }

    bool has(const std::string& key) const {
        return table_ != nullptr && table_->values.count(key) != 0;
    }

    double number(const std::string& key) {
        const RawValue& v = require(key);
        if (v.kind != RawValue::Kind::Number) {
            throw ParseError(name_ + ": field '" + key + "' must be a number", v.line, v.col);
        }
        return v.number;
    }

    std::optional<double> number_opt(const std::string& key) {
        if (!has(key)) return std::nullopt;
        return number(key);
    }

    int integer(const std::string& key) {
        const double v = number(key);
        if (std::floor(v) != v || std::abs(v) > 1e9) {
            const RawValue& raw = table_->values.at(key);
            throw ParseError(name_ + ": field '" + key + "' must be an integer", raw.line,
                             raw.col);
        }
        return static_cast<int>(v);
    }

    std::string str(const std::string& key) {
        const RawValue& v = require(key);
        if (v.kind != RawValue::Kind::String) {
            throw ParseError(name_ + ": field '" + key + "' must be a quoted string", v.line,
                             v.col);
        }
        return v.text;
    }

    std::optional<std::string> str_opt(const std::string& key) {
        if (!has(key)) return std::nullopt;
        return str(key);
    }

    // Strict mode: any unread key is a typo.
    void finish() {
        if (table_ == nullptr) return;
        for (const auto& [key, value] : table_->values) {
            if (consumed_.count(key) == 0) {
                throw ParseError("unknown key '" + key + "' in " + name_, value.line, value.col);
            }
        }
    }

  private:
    const RawValue& require(const std::string& key) {
        if (table_ == nullptr || table_->values.count(key) == 0) {
            throw ValidationError(name_ + ": missing required field '" + key + "'");
        }
        consumed_.insert(key);
        return table_->values.at(key);
    }

    const RawTable* table_;
    std::string name_;
    std::set<std::string> consumed_;
};

TableView view(const RawDoc& doc, const std::string& path, const std::string& display) {
    const auto it = doc.tables.find(path);
    return {it == doc.tables.end() ? nullptr : &it->second, display};
}

void add_default(Scenario& s, const std::string& key, const std::string& detail) {
    s.assumptions.push_back({key, detail, true});
}

void add_override(Scenario& s, const std::string& key, const std::string& detail) {
    s.assumptions.push_back({key, detail, false});
}

}  // namespace

Scenario load_scenario(const std::string& text) {
    const RawDoc doc = parse_document(text);
    Scenario s;

    TableView root(&doc.root, "document root");
    s.use_case = usecases::parse_use_case_id(root.str("use_case"));
    root.finish();

    TableView constellation = view(doc, "constellation", "[constellation]");
    if (!constellation.present()) {
        throw ValidationError("missing required section [constellation]");
    }
    s.constellation.altitude_km = constellation.number("altitude_km");
    s.constellation.planes = constellation.integer("planes");
    s.constellation.sats_per_plane = constellation.integer("sats_per_plane");
    if (const auto v = constellation.number_opt("inclination_deg")) {
        s.constellation.inclination_deg = *v;
    } else {
        s.constellation.inclination_deg = 86.4;
        add_default(s, "constellation.inclination_deg", "inclination_deg = 86.4 (default)");
    }
    if (const auto v = constellation.number_opt("raan_spread_deg")) {
        s.constellation.raan_spread_deg = *v;
    } else {
        s.constellation.raan_spread_deg = 180.0;
        add_default(s, "constellation.raan_spread_deg",
                    "raan_spread_deg = 180 (default: star pattern)");
    }
    if (const auto v = constellation.number_opt("phase_offset_deg")) {
        s.constellation.phase_offset_deg = *v;
    } else {
        geometry::validate(s.constellation);
        s.constellation.phase_offset_deg = geometry::default_phase_offset_deg(
            s.constellation.planes, s.constellation.sats_per_plane);
        add_default(s, "constellation.phase_offset_deg",
                    "phase_offset_deg = " + fmt_num(s.constellation.phase_offset_deg) +
                        " (default: 360/total_satellites)");
    }
    if (const auto v = constellation.number_opt("epoch_s")) {
        s.constellation.epoch_s = *v;
    } else {
        s.constellation.epoch_s = 0.0;
        add_default(s, "constellation.epoch_s", "epoch_s = 0 (default time origin)");
    }
    constellation.finish();

    bool any_node = false;
    for (const auto& name : doc.table_order) {
        if (name.rfind("nodes.", 0) != 0) continue;
        const std::string node_name = name.substr(6);
        if (node_name.empty() || node_name.find('.') != std::string::npos) {
            throw ParseError("node sections must be [nodes.<name>]", doc.tables.at(name).line, 1);
        }
        any_node = true;
        TableView node_view = view(doc, name, "node '" + node_name + "'");
        NodeSpec node;
        const std::string role = node_view.str("role");
        if (role == "ground") {
            node.role = NodeSpec::Role::Ground;
        } else if (role == "aerial") {
            node.role = NodeSpec::Role::Aerial;
        } else if (role == "satellite") {
            node.role = NodeSpec::Role::Satellite;
        } else {
            throw ValidationError("node '" + node_name + "': role must be one of ground, aerial, satellite");
        }
        if (node.role == NodeSpec::Role::Satellite) {
            if (node_view.has("lat_deg") || node_view.has("lon_deg") || node_view.has("alt_km")) {
                throw ValidationError("node '" + node_name +
                                      "': satellite nodes take no geodetic position");
            }
        } else {
            geometry::GeodeticPosition pos;
            pos.lat_deg = node_view.number("lat_deg");
            pos.lon_deg = node_view.number("lon_deg");
            if (const auto v = node_view.number_opt("alt_km")) {
                pos.alt_km = *v;
            } else {
                pos.alt_km = 0.0;
                add_default(s, "nodes." + node_name + ".alt_km",
                            "nodes." + node_name + ".alt_km = 0 (default)");
            }
            node.position = pos;
        }
        node.eirp_dbw = node_view.number("eirp_dbw");
        node.g_over_t_dbk = node_view.number("g_over_t_dbk");
        node.isolation_db = node_view.number("isolation_db");
        node_view.finish();
        s.nodes[node_name] = node;
    }
    if (doc.tables.count("nodes") != 0) {
        throw ParseError("node entries must be named: [nodes.<name>]",
                         doc.tables.at("nodes").line, 1);
    }
    if (!any_node) {
        throw ValidationError("scenario defines no [nodes.<name>] sections");
    }

    TableView link = view(doc, "link", "[link]");
    if (!link.present()) {
        throw ValidationError("missing required section [link]");
    }
    s.link.a_tx = link.str("direction_a_tx");
    s.link.a_rx = link.str("direction_a_rx");
    s.link.b_tx = link.str("direction_b_tx");
    s.link.b_rx = link.str("direction_b_rx");
    s.link.fd_node = link.str("fd_node");
    if (const auto v = link.number_opt("carrier_ghz")) {
        s.link.carrier_ghz = *v;
    } else {
        s.link.carrier_ghz = usecases::lookup(s.use_case).fd_topology.default_carrier_ghz;
        add_default(s, "link.carrier_ghz",
                    "carrier_ghz = " + fmt_num(s.link.carrier_ghz) + " (default for " +
                        usecases::to_string(s.use_case) + ")");
    }
    if (const auto v = link.number_opt("min_elevation_deg")) {
        s.link.min_elevation_deg = *v;
    } else {
        s.link.min_elevation_deg = 10.0;
        add_default(s, "link.min_elevation_deg", "min_elevation_deg = 10 (default)");
    }
    if (const auto v = link.number_opt("additional_loss_db")) {
        s.link.additional_loss_db = *v;
        if (*v != 0.0) {
            add_override(s, "link.additional_loss_db",
                         "additional_loss_db = " + fmt_num(*v) +
                             " (explicit margin beyond the modeled losses)");
        }
    } else {
        s.link.additional_loss_db = 0.0;
        add_default(s, "link.additional_loss_db", "additional_loss_db = 0 (default)");
    }

    const auto mode = link.str_opt("epoch_mode");
    if (!mode.has_value()) {
        s.link.epoch.mode = EpochPolicy::Mode::BestPass;
        add_default(s, "link.epoch_mode", "epoch_mode = \"best_pass\" (default policy)");
    } else if (*mode == "best_pass") {
        s.link.epoch.mode = EpochPolicy::Mode::BestPass;
    } else if (*mode == "fixed") {
        s.link.epoch.mode = EpochPolicy::Mode::Fixed;
    } else {
        throw ValidationError("[link]: epoch_mode must be \"best_pass\" or \"fixed\"");
    }
    if (s.link.epoch.mode == EpochPolicy::Mode::BestPass) {
        if (link.has("epoch_s")) {
            throw ValidationError("[link]: epoch_s is only valid with epoch_mode = \"fixed\"");
        }
        if (const auto v = link.number_opt("window_s")) {
            s.link.epoch.window_s = *v;
        } else {
            s.link.epoch.window_s = 86400.0;
            add_default(s, "link.window_s", "window_s = 86400 (default: 24 h pass search)");
        }
        if (const auto v = link.number_opt("step_s")) {
            s.link.epoch.step_s = *v;
        } else {
            s.link.epoch.step_s = 10.0;
            add_default(s, "link.step_s", "step_s = 10 (default coarse scan, 1 s refinement)");
        }
    } else {
        if (link.has("window_s") || link.has("step_s")) {
            throw ValidationError(
                "[link]: window_s/step_s are only valid with epoch_mode = \"best_pass\"");
        }
        s.link.epoch.epoch_s = link.number("epoch_s");
    }
    link.finish();

    TableView env = view(doc, "env", "[env]");
    if (!env.present()) {
        throw ValidationError("missing required section [env]");
    }
    s.env.temperature_k = env.number("temperature_k");
    s.env.bandwidth_hz = env.number("bandwidth_hz");
    env.finish();

    TableView duplex = view(doc, "duplex", "[duplex]");
    if (!duplex.present()) {
        throw ValidationError("missing required section [duplex]");
    }
    s.duplex.sic_db = duplex.number("sic_db");
    if (const auto v = duplex.number_opt("fdd_split")) {
        s.duplex.fdd_split = *v;
    } else {
        s.duplex.fdd_split = 0.5;
        add_default(s, "duplex.fdd_split", "fdd_split = 0.5 (default: equal band split)");
    }
    if (const auto v = duplex.number_opt("fd_node_tx_power_dbw")) {
        s.duplex.fd_node_tx_power_dbw = *v;
        const auto fd_it = s.nodes.find(s.link.fd_node);
        if (fd_it == s.nodes.end() || fd_it->second.eirp_dbw != *v) {
            add_override(s, "duplex.fd_node_tx_power_dbw",
                         "fd_node_tx_power_dbw = " + fmt_num(*v) +
                             " (explicit SI reference; default is the FD-node EIRP)");
        }
    } else {
        add_default(s, "duplex.fd_node_tx_power_dbw",
                    "fd_node_tx_power_dbw = FD-node EIRP (default SI reference)");
    }
    if (const auto v = duplex.number_opt("amplification_db")) {
        s.duplex.amplification_db = *v;
    } else {
        s.duplex.amplification_db = 0.0;
        add_default(s, "duplex.amplification_db", "amplification_db = 0 (default)");
    }
    duplex.finish();

    for (const auto& name : doc.table_order) {
        if (name == "constellation" || name == "link" || name == "env" || name == "duplex" ||
            name.rfind("nodes.", 0) == 0 || name == "nodes") {
            continue;
        }
        throw ParseError("unknown section [" + name + "]", doc.tables.at(name).line, 1);
    }

    validate(s);
    return s;
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read scenario file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw IoError("error while reading scenario file: " + path);
    }
    return load_scenario(buf.str());
}

std::string serialize_scenario(const Scenario& s) {
    std::ostringstream out;
    out << "use_case = \"" << usecases::to_string(s.use_case) << "\"\n\n";

    out << "[constellation]\n";
    out << "altitude_km = " << fmt_exact(s.constellation.altitude_km) << "\n";
    out << "planes = " << s.constellation.planes << "\n";
    out << "sats_per_plane = " << s.constellation.sats_per_plane << "\n";
    out << "inclination_deg = " << fmt_exact(s.constellation.inclination_deg) << "\n";
    out << "raan_spread_deg = " << fmt_exact(s.constellation.raan_spread_deg) << "\n";
    out << "phase_offset_deg = " << fmt_exact(s.constellation.phase_offset_deg) << "\n";
    out << "epoch_s = " << fmt_exact(s.constellation.epoch_s) << "\n";

    for (const auto& [name, node] : s.nodes) {
        out << "\n[nodes." << name << "]\n";
        switch (node.role) {
            case NodeSpec::Role::Ground: out << "role = \"ground\"\n"; break;
            case NodeSpec::Role::Aerial: out << "role = \"aerial\"\n"; break;
            case NodeSpec::Role::Satellite: out << "role = \"satellite\"\n"; break;
        }
        if (node.position.has_value()) {
            out << "lat_deg = " << fmt_exact(node.position->lat_deg) << "\n";
            out << "lon_deg = " << fmt_exact(node.position->lon_deg) << "\n";
            out << "alt_km = " << fmt_exact(node.position->alt_km) << "\n";
        }
        out << "eirp_dbw = " << fmt_exact(node.eirp_dbw) << "\n";
        out << "g_over_t_dbk = " << fmt_exact(node.g_over_t_dbk) << "\n";
        out << "isolation_db = " << fmt_exact(node.isolation_db) << "\n";
    }

    out << "\n[link]\n";
    out << "direction_a_tx = \"" << s.link.a_tx << "\"\n";
    out << "direction_a_rx = \"" << s.link.a_rx << "\"\n";
    out << "direction_b_tx = \"" << s.link.b_tx << "\"\n";
    out << "direction_b_rx = \"" << s.link.b_rx << "\"\n";
    out << "fd_node = \"" << s.link.fd_node << "\"\n";
    out << "carrier_ghz = " << fmt_exact(s.link.carrier_ghz) << "\n";
    out << "min_elevation_deg = " << fmt_exact(s.link.min_elevation_deg) << "\n";
    out << "additional_loss_db = " << fmt_exact(s.link.additional_loss_db) << "\n";
    if (s.link.epoch.mode == EpochPolicy::Mode::BestPass) {
        out << "epoch_mode = \"best_pass\"\n";
        out << "window_s = " << fmt_exact(s.link.epoch.window_s) << "\n";
        out << "step_s = " << fmt_exact(s.link.epoch.step_s) << "\n";
    } else {
        out << "epoch_mode = \"fixed\"\n";
        out << "epoch_s = " << fmt_exact(s.link.epoch.epoch_s) << "\n";
    }

    out << "\n[env]\n";
    out << "temperature_k = " << fmt_exact(s.env.temperature_k) << "\n";
    out << "bandwidth_hz = " << fmt_exact(s.env.bandwidth_hz) << "\n";

    out << "\n[duplex]\n";
    out << "sic_db = " << fmt_exact(s.duplex.sic_db) << "\n";
    out << "fdd_split = " << fmt_exact(s.duplex.fdd_split) << "\n";
    if (s.duplex.fd_node_tx_power_dbw.has_value()) {
        out << "fd_node_tx_power_dbw = " << fmt_exact(*s.duplex.fd_node_tx_power_dbw) << "\n";
    }
    out << "amplification_db = " << fmt_exact(s.duplex.amplification_db) << "\n";
    return out.str();
}

}  // namespace fdsat::scenario
