#include "banditgv/config.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace banditgv {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_list(const std::string& value, const std::string& key) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(value);
  while (std::getline(in, item, ',')) parts.push_back(trim(item));
  require_config(!parts.empty(), "config key '" + key + "': empty list");
  return parts;
}

double parse_double(const std::string& text, const std::string& key) {
  errno = 0;
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  require_config(end == text.c_str() + text.size() && !text.empty() && errno == 0,
                 "config key '" + key + "': '" + text + "' is not a number");
  return value;
}

long parse_long(const std::string& text, const std::string& key) {
  errno = 0;
  char* end = nullptr;
  const long value = std::strtol(text.c_str(), &end, 10);
  require_config(end == text.c_str() + text.size() && !text.empty() && errno == 0,
                 "config key '" + key + "': '" + text + "' is not an integer");
  return value;
}

std::uint64_t parse_u64(const std::string& text, const std::string& key) {
  errno = 0;
  char* end = nullptr;
  require_config(!text.empty() && text[0] != '-',
                 "config key '" + key + "': '" + text + "' is not unsigned");
  const unsigned long long value = std::strtoull(text.c_str(), &end, 10);
  require_config(end == text.c_str() + text.size() && errno == 0,
                 "config key '" + key + "': '" + text + "' is not unsigned");
  return static_cast<std::uint64_t>(value);
}

}  // namespace

config_map parse_config_text(const std::string& text) {
  config_map cfg;
  std::istringstream in(text);
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const auto eq = stripped.find('=');
    require_config(eq != std::string::npos,
                   "config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    require_config(!key.empty(),
                   "config line " + std::to_string(lineno) + ": empty key");
    require_config(config_find(cfg, key) == nullptr,
                   "config line " + std::to_string(lineno) + ": duplicate key '" + key +
                       "'");
    cfg.entries.emplace_back(key, value);
  }
  return cfg;
}

config_map parse_config_file(const std::string& path) {
  std::ifstream in(path);
  require_config(in.good(), "config file '" + path + "' cannot be opened");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

const std::string* config_find(const config_map& cfg, const std::string& key) {
  for (const auto& [k, v] : cfg.entries) {
    if (k == key) return &v;
  }
  return nullptr;
}

bool config_has(const config_map& cfg, const std::string& key) {
  return config_find(cfg, key) != nullptr;
}

std::string get_string(const config_map& cfg, const std::string& key) {
  const std::string* value = config_find(cfg, key);
  require_config(value != nullptr, "config key '" + key + "' is required");
  return *value;
}

std::string get_string_or(const config_map& cfg, const std::string& key,
                          const std::string& fallback) {
  const std::string* value = config_find(cfg, key);
  return value ? *value : fallback;
}

double get_double(const config_map& cfg, const std::string& key) {
  return parse_double(get_string(cfg, key), key);
}

std::optional<double> get_double_opt(const config_map& cfg, const std::string& key) {
  const std::string* value = config_find(cfg, key);
  if (!value) return std::nullopt;
  return parse_double(*value, key);
}

long get_long(const config_map& cfg, const std::string& key) {
  return parse_long(get_string(cfg, key), key);
}

long get_long_or(const config_map& cfg, const std::string& key, long fallback) {
  const std::string* value = config_find(cfg, key);
  return value ? parse_long(*value, key) : fallback;
}

std::uint64_t get_u64(const config_map& cfg, const std::string& key) {
  return parse_u64(get_string(cfg, key), key);
}

bool get_flag_or(const config_map& cfg, const std::string& key, bool fallback) {
  const std::string* value = config_find(cfg, key);
  if (!value) return fallback;
  require_config(*value == "0" || *value == "1",
                 "config key '" + key + "': expected 0 or 1");
  return *value == "1";
}

std::vector<double> get_double_list(const config_map& cfg, const std::string& key) {
  std::vector<double> out;
  for (const std::string& item : split_list(get_string(cfg, key), key)) {
    out.push_back(parse_double(item, key));
  }
  return out;
}

std::vector<long> get_long_list(const config_map& cfg, const std::string& key) {
  std::vector<long> out;
  for (const std::string& item : split_list(get_string(cfg, key), key)) {
    out.push_back(parse_long(item, key));
  }
  return out;
}

std::vector<std::uint64_t> get_u64_list(const config_map& cfg, const std::string& key) {
  std::vector<std::uint64_t> out;
  for (const std::string& item : split_list(get_string(cfg, key), key)) {
    out.push_back(parse_u64(item, key));
  }
  return out;
}

void reject_unknown_keys(const config_map& cfg, const std::vector<std::string>& known) {
  for (const auto& [key, value] : cfg.entries) {
    require_config(std::find(known.begin(), known.end(), key) != known.end(),
                   "config key '" + key + "' is not recognized");
  }
}

std::uint64_t config_hash(const config_map& cfg) {
  std::vector<std::string> lines;
  lines.reserve(cfg.entries.size());
  for (const auto& [key, value] : cfg.entries) lines.push_back(key + "=" + value);
  std::sort(lines.begin(), lines.end());
  std::uint64_t hash = 14695981039346656037ULL;
  for (const std::string& line : lines) {
    for (const char ch : line) {
      hash ^= static_cast<unsigned char>(ch);
      hash *= 1099511628211ULL;
    }
    hash ^= static_cast<unsigned char>('\n');
    hash *= 1099511628211ULL;
  }
  return hash;
}

}  // namespace banditgv
