// CLI-side plumbing: canonical JSON emission, key=value config files,
// flag/config/env precedence, and the run manifest.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace pintz_cli {

using ordered_json = nlohmann::ordered_json;

// Deterministic JSON text: insertion-ordered keys, doubles at 17 significant
// digits, no whitespace.
std::string dump_canonical(const ordered_json& j);

std::string fmt17(double v);

// key = value per line; '#' comments and blank lines allowed.  Throws
// ConfigError (below) with a line number on malformed lines or keys outside
// `known_keys`.
struct ConfigError {
    std::string message;
};
std::map<std::string, std::string> load_config(
    const std::string& path, const std::vector<std::string>& known_keys);

// flag > config file > environment > built-in default
class Resolver {
  public:
    Resolver(std::map<std::string, std::string> config) : config_(std::move(config)) {}

    // flag_count/flag_value come from the parser; env_var may be empty
    std::optional<std::string> resolve(const std::string& key, size_t flag_count,
                                       const std::string& flag_value,
                                       const char* env_var = nullptr,
                                       std::optional<std::string> def = {}) const;

  private:
    std::map<std::string, std::string> config_;
};

struct Manifest {
    std::string subcommand;
    std::vector<std::pair<std::string, std::string>> parameters; // resolved
    double wall_time_s = 0.0;
    uint32_t result_digest = 0;

    ordered_json to_json(const char* version) const;
};

// crc-32 of the canonical result text, as 8 hex digits
std::string digest_hex(const std::string& canonical_result);
uint32_t digest_crc(const std::string& canonical_result);

} // namespace pintz_cli
