#include "saenum/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "saenum/errors.hpp"

namespace sae {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    std::size_t e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

// strips a trailing comment that is not inside a string literal
std::string strip_comment(const std::string& line) {
    bool in_string = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') in_string = !in_string;
        if (line[i] == '#' && !in_string) return line.substr(0, i);
    }
    return line;
}

bool parse_number(const std::string& text, double& out) {
    char* end = nullptr;
    out = std::strtod(text.c_str(), &end);
    return end == text.c_str() + text.size() && !text.empty();
}

TomlValue parse_value(const std::string& raw, const std::string& context) {
    const std::string text = trim(raw);
    if (text.empty()) throw config_error("empty value for " + context);
    if (text == "true") return true;
    if (text == "false") return false;
    if (text.front() == '"') {
        if (text.size() < 2 || text.back() != '"')
            throw config_error("unterminated string for " + context);
        return text.substr(1, text.size() - 2);
    }
    if (text.front() == '[') {
        if (text.back() != ']') throw config_error("unterminated array for " + context);
        std::vector<double> numbers;
        std::vector<std::string> strings;
        std::string inner = text.substr(1, text.size() - 2);
        std::stringstream ss(inner);
        std::string item;
        while (std::getline(ss, item, ',')) {
            item = trim(item);
            if (item.empty()) continue;
            if (item.front() == '"') {
                if (item.back() != '"') throw config_error("bad string in array for " + context);
                strings.push_back(item.substr(1, item.size() - 2));
            } else {
                double v;
                if (!parse_number(item, v))
                    throw config_error("bad number '" + item + "' in array for " + context);
                numbers.push_back(v);
            }
        }
        if (!strings.empty() && !numbers.empty())
            throw config_error("mixed array types for " + context);
        if (!strings.empty()) return strings;
        return numbers;
    }
    double v;
    if (parse_number(text, v)) return v;
    throw config_error("cannot parse value '" + text + "' for " + context);
}

class SectionReader {
public:
    SectionReader(const TomlTable& table, std::string section)
        : table_(table), section_(std::move(section)) {}

    bool present() const { return table_.count(section_) > 0; }

    const TomlValue* find(const std::string& key) const {
        auto sec = table_.find(section_);
        if (sec == table_.end()) return nullptr;
        auto it = sec->second.find(key);
        return it == sec->second.end() ? nullptr : &it->second;
    }

    template <typename T>
    T get(const std::string& key, const T& fallback) const {
        const TomlValue* v = find(key);
        if (!v) return fallback;
        if (const T* typed = std::get_if<T>(v)) return *typed;
        throw config_error("wrong type for [" + section_ + "] " + key);
    }

    template <typename T>
    T require(const std::string& key) const {
        const TomlValue* v = find(key);
        if (!v) throw config_error("missing [" + section_ + "] " + key);
        if (const T* typed = std::get_if<T>(v)) return *typed;
        throw config_error("wrong type for [" + section_ + "] " + key);
    }

private:
    const TomlTable& table_;
    std::string section_;
};

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

}  // namespace

TomlTable parse_toml(const std::string& text) {
    TomlTable table;
    std::string section;
    std::stringstream ss(text);
    std::string line;
    int line_no = 0;
    while (std::getline(ss, line)) {
        ++line_no;
        line = trim(strip_comment(line));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw config_error("line " + std::to_string(line_no) + ": bad section header");
            section = trim(line.substr(1, line.size() - 2));
            table[section];
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error("line " + std::to_string(line_no) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        if (key.empty() || section.empty())
            throw config_error("line " + std::to_string(line_no) + ": key outside section");
        table[section][key] =
            parse_value(line.substr(eq + 1), "[" + section + "] " + key);
    }
    return table;
}

TomlTable parse_toml_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_toml(buffer.str());
}

ArrayGeometry geometry_from_preset(const std::string& preset) {
    if (preset == "mra6") return mra6();
    const std::size_t colon = preset.find(':');
    if (colon != std::string::npos) {
        const std::string kind = preset.substr(0, colon);
        const std::string args = preset.substr(colon + 1);
        const std::size_t comma = args.find(',');
        if (comma == std::string::npos)
            throw config_error("geometry preset needs two arguments: " + preset);
        const int a = std::atoi(args.substr(0, comma).c_str());
        const int b = std::atoi(args.substr(comma + 1).c_str());
        if (kind == "nested") return nested(a, b);
        if (kind == "coprime") return coprime(a, b);
    }
    throw config_error("unknown geometry preset: " + preset);
}

LoadedConfig load_config(const std::string& path) {
    const TomlTable table = parse_toml_file(path);
    LoadedConfig cfg;

    SectionReader geometry(table, "geometry");
    if (const TomlValue* positions = geometry.find("positions")) {
        const auto* list = std::get_if<std::vector<double>>(positions);
        if (!list) throw config_error("[geometry] positions must be an integer array");
        ArrayGeometry g;
        for (double p : *list) {
            if (p != std::floor(p)) throw config_error("[geometry] positions must be integers");
            g.positions.push_back(static_cast<int>(p));
        }
        cfg.scenario.geometry = g;
    } else {
        cfg.scenario.geometry = geometry_from_preset(
            geometry.get<std::string>("preset", "mra6"));
    }
    cfg.scenario.geometry.spacing_m = geometry.get<double>("spacing_m", 0.0);

    SectionReader noise(table, "noise");
    cfg.scenario.noise_power = db_to_linear(noise.get<double>("power_db", 0.0));

    SectionReader sources(table, "sources");
    cfg.scenario.source_u = sources.require<std::vector<double>>("u");
    if (const TomlValue* per_source = sources.find("power_db")) {
        const auto* dbs = std::get_if<std::vector<double>>(per_source);
        if (!dbs) throw config_error("[sources] power_db must be an array");
        for (double db : *dbs) cfg.scenario.source_power.push_back(db_to_linear(db));
    } else {
        const double snr_db = sources.get<double>("snr_db", 0.0);
        cfg.scenario.source_power.assign(cfg.scenario.source_u.size(),
                                         cfg.scenario.noise_power * db_to_linear(snr_db));
    }

    SectionReader band(table, "band");
    const double f_lo = band.require<double>("f_lo");
    const double f_hi = band.require<double>("f_hi");
    const double bins_value = band.get<double>("bins", 1.0);
    const int bins = static_cast<int>(bins_value);
    if (bins < 1 || bins_value != std::floor(bins_value))
        throw config_error("[band] bins must be a positive integer");
    if (f_hi < f_lo) throw config_error("[band] f_hi must be >= f_lo");
    cfg.scenario.f_center = band.get<double>("f_center", 0.5 * (f_lo + f_hi));
    cfg.scenario.prop_speed = band.get<double>("prop_speed", 343.0);
    if (bins == 1) {
        cfg.scenario.freqs = {cfg.scenario.f_center};
    } else {
        for (int i = 0; i < bins; ++i)
            cfg.scenario.freqs.push_back(f_lo + (f_hi - f_lo) * i / (bins - 1));
    }

    SectionReader processing(table, "processing");
    const double snapshots = processing.get<double>("snapshots", 1.0);
    if (snapshots < 1 || snapshots != std::floor(snapshots))
        throw config_error("[processing] snapshots must be a positive integer");
    cfg.scenario.snapshots = static_cast<int>(snapshots);
    const double u_grid = processing.get<double>("u_grid", 256.0);
    if (u_grid < 2 || u_grid != std::floor(u_grid))
        throw config_error("[processing] u_grid must be an integer >= 2");
    cfg.options.u_grid_size = static_cast<int>(u_grid);
    const std::string acm = processing.get<std::string>("acm", "lra");
    if (acm == "lra") cfg.options.ap_acm = AcmKind::lag_redundancy;
    else if (acm == "ss") cfg.options.ap_acm = AcmKind::spatial_smoothing;
    else throw config_error("[processing] acm must be 'lra' or 'ss'");
    const std::string convention =
        processing.get<std::string>("criterion_snapshots", "total");
    if (convention == "total")
        cfg.options.criterion_snapshots = SnapshotConvention::total;
    else if (convention == "per_bin")
        cfg.options.criterion_snapshots = SnapshotConvention::per_bin;
    else throw config_error("[processing] criterion_snapshots must be 'total' or 'per_bin'");

    cfg.scenario.validate();

    SectionReader sweep(table, "sweep");
    if (sweep.present()) {
        cfg.has_sweep = true;
        cfg.sweep.base = cfg.scenario;
        cfg.sweep.options = cfg.options;
        cfg.sweep.name = sweep.get<std::string>("name", "sweep");
        cfg.sweep.parameter =
            sweep_parameter_from_string(sweep.require<std::string>("parameter"));
        if (const TomlValue* grid = sweep.find("grid")) {
            const auto* list = std::get_if<std::vector<double>>(grid);
            if (!list) throw config_error("[sweep] grid must be a number array");
            cfg.sweep.grid = *list;
        } else {
            const double lo = sweep.require<double>("lo");
            const double hi = sweep.require<double>("hi");
            const double step = sweep.require<double>("step");
            if (step <= 0.0) throw config_error("[sweep] step must be positive");
            for (double v = lo; v <= hi + 1e-9; v += step) cfg.sweep.grid.push_back(v);
        }
        const double trials = sweep.get<double>("trials", 100.0);
        if (trials < 1 || trials != std::floor(trials))
            throw config_error("[sweep] trials must be a positive integer");
        cfg.sweep.trials = static_cast<int>(trials);
        for (const std::string& s :
             sweep.get<std::vector<std::string>>("strategies", {"ap"}))
            cfg.sweep.strategies.push_back(strategy_from_string(s));
        for (const std::string& c :
             sweep.get<std::vector<std::string>>("criteria", {"mdlgap"}))
            cfg.sweep.criteria.push_back(criterion_from_string(c));
        cfg.sweep.validate();
    }
    return cfg;
}

}  // namespace sae
