#include "pppcov/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "pppcov/errors.hpp"

namespace pppcov {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

// whole string must be one number; "40 dBm" style values are errors
double parse_number(const std::string& key, const std::string& value) {
    double out = 0.0;
    const char* begin = value.data();
    const char* end = begin + value.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    if (ec != std::errc{} || ptr != end)
        throw InvalidConfig("key '" + key + "': '" + value + "' is not a bare number");
    if (!std::isfinite(out))
        throw InvalidConfig("key '" + key + "': value must be finite");
    return out;
}

long parse_integer(const std::string& key, const std::string& value) {
    const double v = parse_number(key, value);
    if (v != std::floor(v))
        throw InvalidConfig("key '" + key + "': expected an integer");
    return static_cast<long>(v);
}

std::uint64_t parse_seed(const std::string& key, const std::string& value) {
    std::uint64_t out = 0;
    const char* begin = value.data();
    const char* end = begin + value.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    if (ec != std::errc{} || ptr != end)
        throw InvalidConfig("key '" + key + "': expected a non-negative integer");
    return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    throw InvalidConfig("key '" + key + "': expected true or false");
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> parts;
    std::string item;
    std::stringstream ss(value);
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) parts.push_back(item);
    }
    return parts;
}

struct KeyValue {
    std::string key, value;
};

std::vector<KeyValue> tokenize(const std::string& text) {
    std::vector<KeyValue> out;
    std::set<std::string> seen;
    std::stringstream ss(text);
    std::string line;
    long line_no = 0;
    while (std::getline(ss, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw InvalidConfig("line " + std::to_string(line_no) + ": expected 'key = value'");
        KeyValue kv{trim(line.substr(0, eq)), trim(line.substr(eq + 1))};
        if (kv.key.empty() || kv.value.empty())
            throw InvalidConfig("line " + std::to_string(line_no) + ": empty key or value");
        if (!seen.insert(kv.key).second)
            throw InvalidConfig("duplicate key '" + kv.key + "'");
        out.push_back(std::move(kv));
    }
    return out;
}

// returns false if the key is not a NetworkParams field
bool apply_network_key(NetworkParams& p, const KeyValue& kv) {
    const std::string& k = kv.key;
    if (k == "lambda_bs") p.lambda_bs = parse_number(k, kv.value);
    else if (k == "lambda_ue") p.lambda_ue = parse_number(k, kv.value);
    else if (k == "num_subbands") p.num_subbands = static_cast<int>(parse_integer(k, kv.value));
    else if (k == "pathloss_alpha") p.pathloss_alpha = parse_number(k, kv.value);
    else if (k == "p_max_dbm") p.p_max_dbm = parse_number(k, kv.value);
    else if (k == "sinr_threshold_db") p.sinr_threshold_db = parse_number(k, kv.value);
    else if (k == "eta") p.eta = parse_number(k, kv.value);
    else if (k == "p_c") p.p_c = parse_number(k, kv.value);
    else if (k == "p_pre") p.p_pre = parse_number(k, kv.value);
    else if (k == "p_0") p.p_0 = parse_number(k, kv.value);
    else return false;
    return true;
}

SweepAxis parse_axis(const std::string& value) {
    if (value == "threshold_db") return SweepAxis::ThresholdDb;
    if (value == "bs_density") return SweepAxis::BsDensity;
    if (value == "num_subbands") return SweepAxis::NumSubbands;
    throw InvalidConfig("axis '" + value +
                        "' is not one of threshold_db, bs_density, num_subbands");
}

Metric parse_metric(const std::string& name) {
    if (name == "CoverageAnalytic") return Metric::CoverageAnalytic;
    if (name == "CoverageMC") return Metric::CoverageMC;
    if (name == "EE_Analytic") return Metric::EE_Analytic;
    if (name == "EE_MC") return Metric::EE_MC;
    throw InvalidConfig("metric '" + name + "' is not recognized");
}

GainModel parse_gain_model(const std::string& value) {
    if (value == "gamma") return GainModel::GammaSampled;
    if (value == "zf") return GainModel::ExactZF;
    throw InvalidConfig("gain_model '" + value + "' is not one of gamma, zf");
}

} // namespace

NetworkParams parse_network_params(const std::string& text) {
    NetworkParams p;
    for (const auto& kv : tokenize(text)) {
        if (!apply_network_key(p, kv))
            throw InvalidConfig("unknown key '" + kv.key + "'");
    }
    validate_params(p);
    return p;
}

NetworkParams load_network_params(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InvalidConfig("cannot open config file: " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_network_params(buf.str());
}

SweepSpec parse_sweep_spec(const std::string& text) {
    SweepSpec spec;
    bool saw_axis = false, saw_values = false, saw_metrics = false;
    for (const auto& kv : tokenize(text)) {
        if (apply_network_key(spec.base, kv)) continue;
        const std::string& k = kv.key;
        if (k == "axis") {
            spec.axis = parse_axis(kv.value);
            saw_axis = true;
        } else if (k == "values") {
            spec.values.clear();
            for (const auto& item : split_list(kv.value))
                spec.values.push_back(parse_number(k, item));
            saw_values = true;
        } else if (k == "metrics") {
            spec.metrics.clear();
            for (const auto& item : split_list(kv.value))
                spec.metrics.push_back(parse_metric(item));
            saw_metrics = true;
        } else if (k == "trials") {
            spec.sim.trials = parse_integer(k, kv.value);
        } else if (k == "seed") {
            spec.sim.seed = parse_seed(k, kv.value);
        } else if (k == "window_radius") {
            spec.sim.window_radius = parse_number(k, kv.value);
        } else if (k == "gain_model") {
            spec.sim.gain_model = parse_gain_model(kv.value);
        } else if (k == "confidence_level") {
            spec.sim.confidence_level = parse_number(k, kv.value);
        } else if (k == "include_noise") {
            spec.sim.include_noise = parse_bool(k, kv.value);
        } else {
            throw InvalidConfig("unknown key '" + k + "'");
        }
    }
    if (!saw_axis) throw InvalidConfig("sweep spec: missing 'axis'");
    if (!saw_values) throw InvalidConfig("sweep spec: missing 'values'");
    if (!saw_metrics) throw InvalidConfig("sweep spec: missing 'metrics'");
    validate_params(spec.base);
    validate_spec(spec);
    return spec;
}

SweepSpec load_sweep_spec(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InvalidConfig("cannot open sweep spec file: " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_sweep_spec(buf.str());
}

} // namespace pppcov
