#include "dualmark/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace dualmark {

using nlohmann::json;

void ToolkitConfig::validate() const {
  if (alpha < 1) throw ConfigError("alpha must be at least 1");
  if (tau < 1 || tau > alpha) throw ConfigError("tau must lie in [1, alpha]");
  if (tau > 3) throw ConfigError("tau must not exceed 3, the natural-channel group size");
  if (code == CodeId::ORGFIXED) throw ConfigError("code must be BCH421 or HAM74");
  if (suffixes.empty()) throw ConfigError("suffix table must not be empty");
  for (const std::string& s : suffixes) {
    if (s.size() < 2 || s[0] != '_' || s.back() == '_') throw ConfigError("bad suffix '" + s + "'");
  }
  if (retry_budget < 0) throw ConfigError("retry_budget must be non-negative");
  if ((rules & ~kAllRules) != 0) throw ConfigError("rules mask has bits beyond R6");
}

namespace {

RuleMask rules_from_json(const json& j) {
  if (j.is_number_unsigned() || j.is_number_integer()) return j.get<RuleMask>();
  if (!j.is_array()) throw ConfigError("rules must be an integer mask or a list of rule names");
  RuleMask mask = 0;
  for (const json& item : j) {
    const std::string name = item.get<std::string>();
    bool found = false;
    for (const FormalRule& r : formal_rule_set()) {
      if (name == "R" + std::to_string(r.id) || name == r.name) {
        mask |= RuleMask{1} << (r.id - 1);
        found = true;
      }
    }
    if (!found) throw ConfigError("unknown rule '" + name + "'");
  }
  return mask;
}

}  // namespace

ToolkitConfig config_from_json(const std::string& text, ToolkitConfig c) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "alpha") {
        c.alpha = value.get<int>();
      } else if (key == "tau") {
        c.tau = value.get<int>();
      } else if (key == "code") {
        c.code = code_from_name(value.get<std::string>());
      } else if (key == "rules") {
        c.rules = rules_from_json(value);
      } else if (key == "suffixes") {
        c.suffixes = value.get<std::vector<std::string>>();
      } else if (key == "retry_budget") {
        c.retry_budget = value.get<int>();
      } else if (key == "registry") {
        c.registry_path = value.get<std::string>();
      } else if (key == "seed") {
        c.seed = value.get<std::uint64_t>();
      } else {
        throw ConfigError("unknown config key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad config value: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  c.validate();
  return c;
}

ToolkitConfig load_config(const std::string& path, ToolkitConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return config_from_json(ss.str(), std::move(base));
}

std::string config_to_json(const ToolkitConfig& c) {
  json j = {{"alpha", c.alpha},         {"tau", c.tau},
            {"code", code_name(c.code)}, {"rules", c.rules},
            {"suffixes", c.suffixes},   {"retry_budget", c.retry_budget},
            {"registry", c.registry_path}, {"seed", c.seed}};
  return j.dump(2);
}

}  // namespace dualmark
