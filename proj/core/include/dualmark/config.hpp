#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "dualmark/bit_codec.hpp"
#include "dualmark/transform_rules.hpp"

namespace dualmark {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ToolkitConfig {
  int alpha = 3;  // formal-channel group size; the natural channel groups by variable
  int tau = 2;
  CodeId code = CodeId::BCH421;
  RuleMask rules = kAllRules;
  SuffixTable suffixes = default_suffix_table();
  int retry_budget = 16;
  std::string registry_path;
  std::uint64_t seed = 0;

  /// Throws ConfigError when tau > alpha, tau > 3 (the natural group size),
  /// the code is not BCH421/HAM74, or the suffix table is empty.
  void validate() const;
};

/// JSON object with any subset of: alpha, tau, code, rules (bitmask integer or
/// list of rule names), suffixes, retry_budget, registry, seed.
ToolkitConfig config_from_json(const std::string& text, ToolkitConfig base = {});
ToolkitConfig load_config(const std::string& path, ToolkitConfig base = {});
std::string config_to_json(const ToolkitConfig& config);

}  // namespace dualmark
