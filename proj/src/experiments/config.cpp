#include "smlab/experiments/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>

#include "smlab/experiments/csv.hpp"

namespace smlab {

MapSpec ExperimentConfig::map_spec() const {
    return map == MapKind::standard_map ? MapSpec::standard(lambda)
                                        : MapSpec::circle_rotation(alpha);
}

SamplingFunction ExperimentConfig::phi() const {
    return SamplingFunction{phi_c0, phi_cos_x, phi_sin_x, phi_cos_y, phi_sin_y};
}

void ExperimentConfig::validate() const {
    if (map == MapKind::standard_map && !(lambda > 0.0))
        throw ConfigError("lambda", "must be > 0");
    if (map == MapKind::rotation && !(alpha > 0.0 && alpha < 1.0))
        throw ConfigError("alpha", "must be in (0, 1)");
    if (e_count < 1) throw ConfigError("egrid", "must be >= 1");
    if (e_count > 1 && !(e_min < e_max)) throw ConfigError("emin", "must be < emax");
    if (n_steps < 1) throw ConfigError("N", "must be >= 1");
    if (samples < 1) throw ConfigError("samples", "must be >= 1");
    if (!(epsilon > 0.0)) throw ConfigError("epsilon", "must be > 0");
    if (sites < 1) throw ConfigError("sites", "must be >= 1");
    if (center_width < 1 || center_width > sites / 2)
        throw ConfigError("center_width", "must be in [1, sites/2]");
    if (half_width < 1) throw ConfigError("K", "must be >= 1");
    if (!(delta >= 0.0)) throw ConfigError("delta", "must be >= 0");
    if (horizon < 1) throw ConfigError("horizon", "must be >= 1");
    if (points < 1) throw ConfigError("points", "must be >= 1");
    if (threads < 0) throw ConfigError("threads", "must be >= 0");
}

std::vector<std::string> ExperimentConfig::echo_lines() const {
    std::vector<std::string> lines;
    auto kv = [&lines](const std::string& k, const std::string& v) { lines.push_back(k + "=" + v); };
    kv("map", map == MapKind::standard_map ? "standard" : "rotation");
    kv("lambda", format_double(lambda));
    kv("alpha", format_double(alpha));
    kv("phi_c0", format_double(phi_c0));
    kv("phi_cos_x", format_double(phi_cos_x));
    kv("phi_sin_x", format_double(phi_sin_x));
    kv("phi_cos_y", format_double(phi_cos_y));
    kv("phi_sin_y", format_double(phi_sin_y));
    kv("emin", format_double(e_min));
    kv("emax", format_double(e_max));
    kv("egrid", std::to_string(e_count));
    kv("N", std::to_string(n_steps));
    kv("samples", std::to_string(samples));
    kv("seed", std::to_string(seed));
    kv("epsilon", format_double(epsilon));
    kv("sites", std::to_string(sites));
    kv("center_width", std::to_string(center_width));
    kv("K", std::to_string(half_width));
    kv("delta", format_double(delta));
    kv("horizon", std::to_string(horizon));
    kv("points", std::to_string(points));
    return lines;
}

namespace {

double parse_real(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError(key, "not a real number: '" + value + "'");
    }
}

long parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        long v = std::stol(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError(key, "not an integer: '" + value + "'");
    }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        throw ConfigError(key, "not an unsigned integer: '" + value + "'");
    return v;
}

}  // namespace

void ExperimentConfig::set_field(const std::string& key, const std::string& value) {
    if (key == "map") {
        if (value == "standard")
            map = MapKind::standard_map;
        else if (value == "rotation")
            map = MapKind::rotation;
        else
            throw ConfigError("map", "expected 'standard' or 'rotation', got '" + value + "'");
    } else if (key == "lambda") {
        lambda = parse_real(key, value);
    } else if (key == "alpha") {
        alpha = parse_real(key, value);
    } else if (key == "phi_c0") {
        phi_c0 = parse_real(key, value);
    } else if (key == "phi_cos_x") {
        phi_cos_x = parse_real(key, value);
    } else if (key == "phi_sin_x") {
        phi_sin_x = parse_real(key, value);
    } else if (key == "phi_cos_y") {
        phi_cos_y = parse_real(key, value);
    } else if (key == "phi_sin_y") {
        phi_sin_y = parse_real(key, value);
    } else if (key == "emin") {
        e_min = parse_real(key, value);
    } else if (key == "emax") {
        e_max = parse_real(key, value);
    } else if (key == "egrid") {
        e_count = static_cast<int>(parse_int(key, value));
    } else if (key == "N") {
        n_steps = parse_int(key, value);
    } else if (key == "samples") {
        samples = static_cast<int>(parse_int(key, value));
    } else if (key == "seed") {
        seed = parse_u64(key, value);
    } else if (key == "epsilon") {
        epsilon = parse_real(key, value);
    } else if (key == "sites") {
        sites = static_cast<int>(parse_int(key, value));
    } else if (key == "center_width") {
        center_width = static_cast<int>(parse_int(key, value));
    } else if (key == "K") {
        half_width = static_cast<int>(parse_int(key, value));
    } else if (key == "delta") {
        delta = parse_real(key, value);
    } else if (key == "horizon") {
        horizon = parse_int(key, value);
    } else if (key == "points") {
        points = static_cast<int>(parse_int(key, value));
    } else if (key == "threads") {
        threads = static_cast<int>(parse_int(key, value));
    } else if (key == "out") {
        out = value;
    } else if (key == "svg") {
        svg_out = value;
    } else {
        throw ConfigError(key, "unknown config key");
    }
}

ExperimentConfig ExperimentConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config", "cannot open '" + path + "'");
    ExperimentConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        // strip comments and whitespace
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto notspace = [](unsigned char c) { return !std::isspace(c); };
        line.erase(line.begin(), std::find_if(line.begin(), line.end(), notspace));
        line.erase(std::find_if(line.rbegin(), line.rend(), notspace).base(), line.end());
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config", "line " + std::to_string(lineno) + ": expected key=value");
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        key.erase(std::find_if(key.rbegin(), key.rend(), notspace).base(), key.end());
        value.erase(value.begin(), std::find_if(value.begin(), value.end(), notspace));
        cfg.set_field(key, value);
    }
    return cfg;
}

}  // namespace smlab
