#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "banditgv/check.hpp"

namespace banditgv {

// Flat key = value configuration with dotted section prefixes. Lines starting
// with '#' and blank lines are skipped; keys may not repeat.
struct config_map {
  std::vector<std::pair<std::string, std::string>> entries;  // insertion order
};

config_map parse_config_text(const std::string& text);
config_map parse_config_file(const std::string& path);

const std::string* config_find(const config_map& cfg, const std::string& key);
bool config_has(const config_map& cfg, const std::string& key);

std::string get_string(const config_map& cfg, const std::string& key);
std::string get_string_or(const config_map& cfg, const std::string& key,
                          const std::string& fallback);
double get_double(const config_map& cfg, const std::string& key);
std::optional<double> get_double_opt(const config_map& cfg, const std::string& key);
long get_long(const config_map& cfg, const std::string& key);
long get_long_or(const config_map& cfg, const std::string& key, long fallback);
std::uint64_t get_u64(const config_map& cfg, const std::string& key);
bool get_flag_or(const config_map& cfg, const std::string& key, bool fallback);
std::vector<double> get_double_list(const config_map& cfg, const std::string& key);
std::vector<long> get_long_list(const config_map& cfg, const std::string& key);
std::vector<std::uint64_t> get_u64_list(const config_map& cfg, const std::string& key);

// config_error naming the first key not in the known list.
void reject_unknown_keys(const config_map& cfg, const std::vector<std::string>& known);

// FNV-1a over the sorted canonical "key=value" lines.
std::uint64_t config_hash(const config_map& cfg);

}  // namespace banditgv
