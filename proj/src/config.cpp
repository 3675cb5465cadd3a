#include "netdrift/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <sstream>
#include <string>

#include <json.hpp>

#include "netdrift/errors.hpp"

namespace netdrift {
namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& message) { raise(Errc::parse_error, message); }
[[noreturn]] void invalid(const std::string& message) { raise(Errc::validation_error, message); }

std::string path_of(const std::string& scope, const char* key) {
    return scope.empty() ? std::string(key) : scope + "." + key;
}

void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed,
                         const std::string& scope) {
    for (const auto& item : j.items()) {
        const bool known = std::any_of(allowed.begin(), allowed.end(),
                                       [&](const char* k) { return item.key() == k; });
        if (!known) {
            parse_fail("unknown key \"" + path_of(scope, item.key().c_str()) + "\"");
        }
    }
}

const json* find(const json& j, const char* key) {
    const auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

double as_double(const json& v, const std::string& where) {
    if (!v.is_number()) parse_fail("key \"" + where + "\" must be a number");
    return v.get<double>();
}

bool as_bool(const json& v, const std::string& where) {
    if (!v.is_boolean()) parse_fail("key \"" + where + "\" must be a boolean");
    return v.get<bool>();
}

std::uint64_t as_uint(const json& v, const std::string& where) {
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    if (v.is_number_integer()) invalid("\"" + where + "\" must be >= 0");
    parse_fail("key \"" + where + "\" must be a non-negative integer");
}

std::vector<double> as_double_array(const json& v, const std::string& where) {
    if (!v.is_array()) parse_fail("key \"" + where + "\" must be an array of numbers");
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& entry : v) {
        if (!entry.is_number()) parse_fail("key \"" + where + "\" must be an array of numbers");
        out.push_back(entry.get<double>());
    }
    return out;
}

json load_json(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(Errc::io_error, "cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) raise(Errc::io_error, "failed reading " + path.string());
    const std::string text = buffer.str();
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1;
        const std::size_t stop = std::min(text.size(), e.byte > 0 ? e.byte - 1 : std::size_t{0});
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') ++line;
        }
        parse_fail(path.string() + " line " + std::to_string(line) + ": " + e.what());
    }
}

SimConfig parse_sim_config(const json& j, const std::string& scope) {
    if (!j.is_object()) {
        parse_fail(scope.empty() ? "config must be a JSON object"
                                 : "key \"" + scope + "\" must be an object");
    }
    reject_unknown_keys(j,
                        {"n", "m", "c", "rewire", "noise", "iterations", "seed", "snapshot_every",
                         "init_state", "op_order"},
                        scope);
    SimConfig cfg;

    const json* v = find(j, "n");
    if (!v) parse_fail("missing required key \"" + path_of(scope, "n") + "\"");
    const std::uint64_t n = as_uint(*v, path_of(scope, "n"));
    if (n > std::numeric_limits<NodeId>::max()) {
        invalid("\"" + path_of(scope, "n") + "\" exceeds the supported node count");
    }
    cfg.n = static_cast<NodeId>(n);

    v = find(j, "m");
    if (!v) parse_fail("missing required key \"" + path_of(scope, "m") + "\"");
    cfg.m = as_uint(*v, path_of(scope, "m"));

    if ((v = find(j, "c"))) cfg.c = as_double(*v, path_of(scope, "c"));

    if ((v = find(j, "rewire"))) {
        const std::string where = path_of(scope, "rewire");
        if (!v->is_object()) parse_fail("key \"" + where + "\" must be an object");
        reject_unknown_keys(*v, {"p", "alpha", "retry_cap"}, where);
        if (const json* w = find(*v, "p")) cfg.rewire.p = as_double(*w, where + ".p");
        if (const json* w = find(*v, "alpha")) cfg.rewire.alpha = as_double(*w, where + ".alpha");
        if (const json* w = find(*v, "retry_cap")) {
            const std::uint64_t cap = as_uint(*w, where + ".retry_cap");
            if (cap > static_cast<std::uint64_t>(std::numeric_limits<int>::max())) {
                invalid("\"" + where + ".retry_cap\" is out of range");
            }
            cfg.rewire.retry_cap = static_cast<int>(cap);
        }
    }

    if ((v = find(j, "noise"))) {
        const std::string where = path_of(scope, "noise");
        if (!v->is_object()) parse_fail("key \"" + where + "\" must be an object");
        reject_unknown_keys(*v, {"sigma", "enabled"}, where);
        if (const json* w = find(*v, "sigma")) cfg.noise.sigma = as_double(*w, where + ".sigma");
        if (const json* w = find(*v, "enabled")) cfg.noise.enabled = as_bool(*w, where + ".enabled");
    }

    if ((v = find(j, "iterations"))) cfg.iterations = as_uint(*v, path_of(scope, "iterations"));
    if ((v = find(j, "seed"))) cfg.seed = as_uint(*v, path_of(scope, "seed"));
    if ((v = find(j, "snapshot_every"))) {
        cfg.snapshot_every = as_uint(*v, path_of(scope, "snapshot_every"));
    }

    if ((v = find(j, "init_state"))) {
        const std::string where = path_of(scope, "init_state");
        if (!v->is_object()) parse_fail("key \"" + where + "\" must be an object");
        reject_unknown_keys(*v, {"low", "high"}, where);
        if (const json* w = find(*v, "low")) cfg.init_state.low = as_double(*w, where + ".low");
        if (const json* w = find(*v, "high")) cfg.init_state.high = as_double(*w, where + ".high");
    }

    if ((v = find(j, "op_order"))) {
        const std::string where = path_of(scope, "op_order");
        if (!v->is_string()) parse_fail("key \"" + where + "\" must be a string");
        cfg.op_order = parse_op_order(v->get<std::string>());
    }

    return cfg;
}

constexpr std::pair<OpOrder, const char*> kOpOrderNames[] = {
    {OpOrder::diffuse_rewire_noise, "diffuse-rewire-noise"},
    {OpOrder::diffuse_noise_rewire, "diffuse-noise-rewire"},
    {OpOrder::rewire_diffuse_noise, "rewire-diffuse-noise"},
    {OpOrder::rewire_noise_diffuse, "rewire-noise-diffuse"},
    {OpOrder::noise_diffuse_rewire, "noise-diffuse-rewire"},
    {OpOrder::noise_rewire_diffuse, "noise-rewire-diffuse"},
};

}  // namespace

std::string_view to_string(OpOrder order) noexcept {
    for (const auto& [value, name] : kOpOrderNames) {
        if (value == order) return name;
    }
    return "diffuse-rewire-noise";
}

OpOrder parse_op_order(std::string_view text) {
    for (const auto& [value, name] : kOpOrderNames) {
        if (text == name) return value;
    }
    parse_fail("unknown op_order \"" + std::string(text) + "\"");
}

void validate(const SimConfig& config) {
    if (config.n < 1) invalid("n must be at least 1");
    const std::uint64_t max_m = static_cast<std::uint64_t>(config.n) * (config.n - 1) / 2;
    if (config.m > max_m) {
        invalid("m=" + std::to_string(config.m) + " exceeds the n(n-1)/2 maximum " +
                std::to_string(max_m));
    }
    if (!(config.c >= 0.0 && config.c <= 1.0)) invalid("c must be in [0, 1]");
    if (!(config.rewire.p >= 0.0 && config.rewire.p <= 1.0)) invalid("rewire.p must be in [0, 1]");
    if (!std::isfinite(config.rewire.alpha)) invalid("rewire.alpha must be finite");
    if (config.rewire.retry_cap < 1) invalid("rewire.retry_cap must be at least 1");
    if (!(config.noise.sigma >= 0.0) || !std::isfinite(config.noise.sigma)) {
        invalid("noise.sigma must be finite and >= 0");
    }
    if (!std::isfinite(config.init_state.low) || !std::isfinite(config.init_state.high) ||
        config.init_state.low > config.init_state.high) {
        invalid("init_state bounds must be finite with low <= high");
    }
}

void validate(const SweepSpec& spec) {
    validate(spec.base);
    if (spec.p_values.empty()) invalid("p_values must be non-empty");
    if (spec.alpha_values.empty()) invalid("alpha_values must be non-empty");
    for (const double p : spec.p_values) {
        if (!(p >= 0.0 && p <= 1.0)) invalid("p_values entries must be in [0, 1]");
    }
    for (const double alpha : spec.alpha_values) {
        if (!std::isfinite(alpha)) invalid("alpha_values entries must be finite");
    }
    if (spec.replicates < 1) invalid("replicates must be at least 1");
}

SimConfig load_config(const std::filesystem::path& path) {
    const SimConfig cfg = parse_sim_config(load_json(path), "");
    validate(cfg);
    return cfg;
}

SweepSpec load_sweep(const std::filesystem::path& path) {
    const json j = load_json(path);
    if (!j.is_object()) parse_fail("sweep config must be a JSON object");
    reject_unknown_keys(j, {"base", "p_values", "alpha_values", "replicates", "measure_at"}, "");
    SweepSpec spec;

    const json* v = find(j, "base");
    if (!v) parse_fail("missing required key \"base\"");
    spec.base = parse_sim_config(*v, "base");

    v = find(j, "p_values");
    if (!v) parse_fail("missing required key \"p_values\"");
    spec.p_values = as_double_array(*v, "p_values");

    v = find(j, "alpha_values");
    if (!v) parse_fail("missing required key \"alpha_values\"");
    spec.alpha_values = as_double_array(*v, "alpha_values");

    if ((v = find(j, "replicates"))) {
        const std::uint64_t reps = as_uint(*v, "replicates");
        if (reps > std::numeric_limits<std::uint32_t>::max()) invalid("\"replicates\" is out of range");
        spec.replicates = static_cast<std::uint32_t>(reps);
    }
    if ((v = find(j, "measure_at"))) spec.measure_at = as_uint(*v, "measure_at");

    validate(spec);
    return spec;
}

}  // namespace netdrift
