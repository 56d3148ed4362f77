#pragma once

#include <stdexcept>
#include <string>

namespace banditgv {

// Configuration problems (bad keys, invalid parameter combinations).
// The CLI maps these to exit code 2.
struct config_error : std::runtime_error {
  explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Hard runtime contract violations (declared constants falsified, numeric
// breakdown). Active in all build types, unlike assert().
inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::runtime_error(msg);
}

inline void require_config(bool cond, const std::string& msg) {
  if (!cond) throw config_error(msg);
}

}  // namespace banditgv
