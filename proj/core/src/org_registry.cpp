#include "dualmark/org_registry.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace dualmark {

using nlohmann::json;

ParityCheckMatrix matrix_for(const OrganizationProfile& org, std::size_t l, std::size_t alpha) {
  if (l == 0 || alpha == 0) throw std::invalid_argument("matrix_for: l and alpha must be positive");
  Rng rng = Rng::derive(org.seed, (static_cast<std::uint64_t>(l) << 32) | alpha);
  ParityCheckMatrix m(l, l * alpha);
  do {
    for (Bits& row : m.bits) {
      for (auto& b : row) b = static_cast<std::uint8_t>(rng.next() >> 63);
    }
  } while (gf2_rank(m) != l);
  return m;
}

ParityCheckMatrix unit_matrix(std::size_t l) {
  ParityCheckMatrix m(l, l);
  for (std::size_t i = 0; i < l; ++i) m.bits[i][i] = 1;
  return m;
}

Attribution attribute(const std::vector<OrgVerdict>& verdicts, bool strict) {
  Attribution a;
  int best = strict ? 2 : 1;
  for (const OrgVerdict& v : verdicts) best = std::max(best, v.verified_channels());
  for (const OrgVerdict& v : verdicts) {
    if (v.verified_channels() == best) a.orgs.push_back(v.org);
  }
  a.strict = best == 2 && !a.orgs.empty();
  return a;
}

namespace {

void check_profile(const OrganizationProfile& org) {
  if (org.id.empty()) throw RegistryError("organization id must not be empty");
  if (org.fixed_code.empty() || org.fixed_code.size() > 4 || all_zero(org.fixed_code)) {
    throw RegistryError("fixed code of '" + org.id + "' must be 1 to 4 bits and not all zero");
  }
}

}  // namespace

Registry::Registry(std::vector<OrganizationProfile> orgs) {
  for (auto& o : orgs) add(std::move(o));
}

const OrganizationProfile* Registry::find(const std::string& id) const {
  for (const auto& o : orgs_) {
    if (o.id == id) return &o;
  }
  return nullptr;
}

const OrganizationProfile& Registry::at(const std::string& id) const {
  const OrganizationProfile* o = find(id);
  if (!o) throw RegistryError("unknown organization '" + id + "'");
  return *o;
}

void Registry::add(OrganizationProfile org) {
  check_profile(org);
  for (auto& o : orgs_) {
    if (o.id == org.id) {
      o = std::move(org);
      return;
    }
  }
  orgs_.push_back(std::move(org));
}

Registry Registry::from_json(const std::string& text) {
  Registry r;
  try {
    const json j = json::parse(text);
    for (const json& o : j.at("orgs")) {
      OrganizationProfile p;
      p.id = o.at("id").get<std::string>();
      p.seed = o.at("seed").get<std::uint64_t>();
      p.fixed_code = bits_from_string(o.at("fixed_code").get<std::string>());
      r.add(std::move(p));
    }
  } catch (const json::exception& e) {
    throw RegistryError(std::string("malformed registry: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw RegistryError(std::string("malformed registry: ") + e.what());
  }
  return r;
}

Registry Registry::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw RegistryError("cannot read registry '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

std::string Registry::to_json() const {
  json orgs = json::array();
  for (const auto& o : orgs_) {
    orgs.push_back({{"id", o.id}, {"seed", o.seed}, {"fixed_code", to_string(o.fixed_code)}});
  }
  return json{{"orgs", orgs}}.dump(2) + "\n";
}

void Registry::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw RegistryError("cannot write registry '" + path + "'");
  out << to_json();
}

}  // namespace dualmark
