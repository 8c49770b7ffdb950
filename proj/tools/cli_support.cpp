#include "cli_support.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "crc32.hpp"

namespace pintz_cli {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

void dump_rec(const ordered_json& j, std::string& out) {
    switch (j.type()) {
        case nlohmann::detail::value_t::null:
            out += "null";
            break;
        case nlohmann::detail::value_t::boolean:
            out += j.get<bool>() ? "true" : "false";
            break;
        case nlohmann::detail::value_t::string:
            out += nlohmann::json(j.get<std::string>()).dump();
            break;
        case nlohmann::detail::value_t::number_integer:
            out += std::to_string(j.get<int64_t>());
            break;
        case nlohmann::detail::value_t::number_unsigned:
            out += std::to_string(j.get<uint64_t>());
            break;
        case nlohmann::detail::value_t::number_float:
            out += fmt17(j.get<double>());
            break;
        case nlohmann::detail::value_t::array: {
            out += '[';
            bool first = true;
            for (const auto& el : j) {
                if (!first) out += ',';
                first = false;
                dump_rec(el, out);
            }
            out += ']';
            break;
        }
        case nlohmann::detail::value_t::object: {
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ',';
                first = false;
                out += nlohmann::json(it.key()).dump();
                out += ':';
                dump_rec(it.value(), out);
            }
            out += '}';
            break;
        }
        default:
            out += "null";
            break;
    }
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

} // namespace

std::string dump_canonical(const ordered_json& j) {
    std::string out;
    dump_rec(j, out);
    return out;
}

std::map<std::string, std::string> load_config(
    const std::string& path, const std::vector<std::string>& known_keys) {
    std::ifstream in(path);
    if (!in.is_open()) throw ConfigError{"cannot open config file " + path};
    std::map<std::string, std::string> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError{"config " + path + ":" + std::to_string(lineno) +
                              ": expected key = value"};
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (key.empty())
            throw ConfigError{"config " + path + ":" + std::to_string(lineno) +
                              ": empty key"};
        if (std::find(known_keys.begin(), known_keys.end(), key) ==
            known_keys.end())
            throw ConfigError{"config " + path + ":" + std::to_string(lineno) +
                              ": unknown key '" + key + "'"};
        out[key] = value;
    }
    return out;
}

std::optional<std::string> Resolver::resolve(const std::string& key,
                                             size_t flag_count,
                                             const std::string& flag_value,
                                             const char* env_var,
                                             std::optional<std::string> def) const {
    if (flag_count > 0) return flag_value;
    auto it = config_.find(key);
    if (it != config_.end()) return it->second;
    if (env_var) {
        const char* v = std::getenv(env_var);
        if (v && *v) return std::string(v);
    }
    return def;
}

ordered_json Manifest::to_json(const char* version) const {
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : parameters) params[k] = v;
    ordered_json m;
    m["subcommand"] = subcommand;
    m["parameters"] = params;
    m["tool_version"] = version;
    m["wall_time_s"] = wall_time_s;
    char hex[16];
    std::snprintf(hex, sizeof hex, "%08x", result_digest);
    m["result_digest"] = hex;
    return m;
}

uint32_t digest_crc(const std::string& canonical_result) {
    return pintz::crc32(canonical_result);
}

std::string digest_hex(const std::string& canonical_result) {
    char hex[16];
    std::snprintf(hex, sizeof hex, "%08x", digest_crc(canonical_result));
    return hex;
}

} // namespace pintz_cli
