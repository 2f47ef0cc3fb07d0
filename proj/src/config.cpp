// config.cpp

#include "jcwind/config.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace jcwind {

namespace {

using nlohmann::json;

std::string located(const std::string& source, const std::string& message, int line, int column) {
    std::ostringstream os;
    os << source;
    if (line > 0) os << ":" << line << ":" << column;
    os << ": " << message;
    return os.str();
}

// 1-based line and column of byte offset `pos` (nlohmann reports the byte after the error).
std::pair<int, int> line_column(const std::string& text, std::size_t pos) {
    pos = std::min(pos, text.size());
    int line = 1;
    int column = 1;
    for (std::size_t i = 0; i + 1 < pos; ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

json parse_json(const std::string& text, const std::string& source) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        const auto [line, column] = line_column(text, e.byte);
        std::string msg = e.what();
        // Drop the library prefix "[json.exception.parse_error.101] parse error at ...: ".
        if (const auto at = msg.find("syntax error"); at != std::string::npos) msg = msg.substr(at);
        throw ConfigError(source, "malformed JSON: " + msg, line, column);
    }
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& source,
                    const std::string& what) {
    for (const auto& [key, value] : obj.items()) {
        if (!allowed.count(key)) {
            throw ConfigError(source, "unknown key '" + key + "' in " + what);
        }
    }
}

double number(const json& obj, const std::string& key, const std::string& source) {
    const auto& v = obj.at(key);
    if (!v.is_number()) throw ConfigError(source, "'" + key + "' must be a number");
    return v.get<double>();
}

int integer(const json& v, const std::string& key, const std::string& source) {
    if (!v.is_number_integer()) throw ConfigError(source, "'" + key + "' must be an integer");
    return v.get<int>();
}

std::vector<std::string> string_list(const json& obj, const std::string& key,
                                     const std::string& source) {
    std::vector<std::string> out;
    if (!obj.contains(key)) return out;
    const auto& v = obj.at(key);
    if (!v.is_array()) throw ConfigError(source, "'" + key + "' must be an array of strings");
    for (const auto& e : v) {
        if (!e.is_string()) throw ConfigError(source, "'" + key + "' must be an array of strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

ModelParams params_from_json(const json& j, const std::string& source) {
    if (!j.is_object()) throw ConfigError(source, "parameter set must be a JSON object");
    reject_unknown(j, {"omega", "Omega", "g", "g_rel", "kappa", "gamma", "Gamma"}, source,
                   "parameter set");
    if (!j.contains("omega")) throw ConfigError(source, "missing required key 'omega'");
    const bool hasG = j.contains("g");
    const bool hasRel = j.contains("g_rel");
    if (hasG == hasRel) throw ConfigError(source, "exactly one of 'g' and 'g_rel' is required");

    ModelParams p;
    p.omega = number(j, "omega", source);
    p.Omega = j.contains("Omega") ? number(j, "Omega", source) : 1.0;
    p.kappa = j.contains("kappa") ? number(j, "kappa", source) : 0.0;
    p.gamma = j.contains("gamma") ? number(j, "gamma", source) : 0.0;
    p.Gamma = j.contains("Gamma") ? number(j, "Gamma", source) : 0.0;
    p.g = hasG ? number(j, "g", source) : number(j, "g_rel", source) * coupling_scale(p.omega, p.Omega);
    try {
        validate(p);
    } catch (const ValidationError& e) {
        throw ConfigError(source, e.what());
    }
    return p;
}

SweepAxis axis_from_json(const json& j, const ModelParams& base, const std::string& source) {
    if (!j.is_object()) throw ConfigError(source, "each axis must be an object");
    reject_unknown(j, {"param", "min", "max", "min_rel", "max_rel", "count"}, source, "axis");
    if (!j.contains("param") || !j.at("param").is_string()) {
        throw ConfigError(source, "axis needs a 'param' string");
    }
    SweepAxis a;
    try {
        a.param = param_from_name(j.at("param").get<std::string>());
    } catch (const ValidationError& e) {
        throw ConfigError(source, e.what());
    }
    const bool rel = j.contains("min_rel") || j.contains("max_rel");
    if (rel) {
        if (a.param != Param::g) throw ConfigError(source, "min_rel/max_rel apply to the g axis only");
        if (j.contains("min") || j.contains("max")) {
            throw ConfigError(source, "axis mixes absolute and relative bounds");
        }
        if (!j.contains("min_rel") || !j.contains("max_rel")) {
            throw ConfigError(source, "axis needs both min_rel and max_rel");
        }
        const double gs = coupling_scale(base.omega, base.Omega);
        a.min = number(j, "min_rel", source) * gs;
        a.max = number(j, "max_rel", source) * gs;
    } else {
        if (!j.contains("min") || !j.contains("max")) throw ConfigError(source, "axis needs min and max");
        a.min = number(j, "min", source);
        a.max = number(j, "max", source);
    }
    if (!j.contains("count")) throw ConfigError(source, "axis needs 'count'");
    a.count = integer(j.at("count"), "count", source);
    return a;
}

LevelIndex level_from_json(const json& j, const std::string& source) {
    if (j.is_number_integer()) return LevelIndex{j.get<int>(), -1};
    if (!j.is_object()) throw ConfigError(source, "each level must be an integer or {n, eta}");
    reject_unknown(j, {"n", "eta"}, source, "level");
    if (!j.contains("n")) throw ConfigError(source, "level needs 'n'");
    LevelIndex l;
    l.n = integer(j.at("n"), "n", source);
    l.eta = j.contains("eta") ? integer(j.at("eta"), "eta", source) : -1;
    return l;
}

}  // namespace

ConfigError::ConfigError(const std::string& source, const std::string& message, int line, int column)
    : ValidationError("config", located(source, message, line, column)), line_(line), column_(column) {}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError(path, "cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ModelParams parse_params(const std::string& text, const std::string& source) {
    return params_from_json(parse_json(text, source), source);
}

ModelParams load_params(const std::string& path) {
    return parse_params(read_file(path), path);
}

SweepSpec parse_sweep_spec(const std::string& text, const std::string& source,
                           const std::string& base_dir) {
    const json j = parse_json(text, source);
    if (!j.is_object()) throw ConfigError(source, "sweep spec must be a JSON object");
    reject_unknown(j,
                   {"params", "params_file", "axes", "levels", "observables", "overlays",
                    "overlay_solve_for", "seed", "threads", "volumetric"},
                   source, "sweep spec");

    SweepSpec spec;
    if (j.contains("params") == j.contains("params_file")) {
        throw ConfigError(source, "exactly one of 'params' and 'params_file' is required");
    }
    if (j.contains("params")) {
        spec.baseParams = params_from_json(j.at("params"), source);
    } else {
        if (!j.at("params_file").is_string()) throw ConfigError(source, "'params_file' must be a string");
        const std::filesystem::path rel(j.at("params_file").get<std::string>());
        const auto path = rel.is_absolute() ? rel : std::filesystem::path(base_dir) / rel;
        spec.baseParams = load_params(path.string());
    }

    if (!j.contains("axes") || !j.at("axes").is_array()) {
        throw ConfigError(source, "'axes' must be an array");
    }
    for (const auto& a : j.at("axes")) spec.axes.push_back(axis_from_json(a, spec.baseParams, source));

    if (j.contains("levels")) {
        if (!j.at("levels").is_array()) throw ConfigError(source, "'levels' must be an array");
        spec.levels.clear();
        for (const auto& l : j.at("levels")) spec.levels.push_back(level_from_json(l, source));
    }

    try {
        for (const auto& name : string_list(j, "observables", source)) {
            spec.observables.push_back(observable_from_name(name));
        }
        for (const auto& name : string_list(j, "overlays", source)) {
            spec.overlayFamilies.push_back(family_from_name(name));
        }
        if (j.contains("overlay_solve_for")) {
            if (!j.at("overlay_solve_for").is_string()) {
                throw ConfigError(source, "'overlay_solve_for' must be a string");
            }
            spec.overlaySolveFor = param_from_name(j.at("overlay_solve_for").get<std::string>());
        }
        if (j.contains("seed")) {
            if (!j.at("seed").is_number_unsigned()) {
                throw ConfigError(source, "'seed' must be a non-negative integer");
            }
            spec.seed = j.at("seed").get<std::uint64_t>();
        }
        if (j.contains("threads")) spec.threads = integer(j.at("threads"), "threads", source);
        if (j.contains("volumetric")) {
            if (!j.at("volumetric").is_boolean()) throw ConfigError(source, "'volumetric' must be a boolean");
            spec.volumetric = j.at("volumetric").get<bool>();
        }
        validate(spec);
    } catch (const ConfigError&) {
        throw;
    } catch (const ValidationError& e) {
        throw ConfigError(source, e.what());
    }
    return spec;
}

SweepSpec load_sweep_spec(const std::string& path) {
    const auto dir = std::filesystem::path(path).parent_path();
    return parse_sweep_spec(read_file(path), path, dir.empty() ? "." : dir.string());
}

}  // namespace jcwind
