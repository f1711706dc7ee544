#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dualmark/parity_core.hpp"

namespace dualmark {

struct OrganizationProfile {
  std::string id;
  std::uint64_t seed = 0;
  Bits fixed_code;  // capacity Case 3 code, 1 to 4 bits, not all zero
};

/// Full-row-rank l x (l*alpha) matrix, deterministic in (seed, l, alpha).
ParityCheckMatrix matrix_for(const OrganizationProfile& org, std::size_t l, std::size_t alpha);

ParityCheckMatrix unit_matrix(std::size_t l);

class RegistryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Per-org verification outcome for one file.
struct OrgVerdict {
  std::string org;
  bool formal = false;
  bool natural = false;

  int verified_channels() const { return int{formal} + int{natural}; }
};

struct Attribution {
  /// Orgs verifying the most channels (at least one). Exactly one entry means
  /// a unique attribution; more is ambiguous; none means no watermark.
  std::vector<std::string> orgs;
  bool strict = false;  // the leading orgs verify both channels

  bool unique() const { return orgs.size() == 1; }
  std::optional<std::string> attributed() const {
    return unique() ? std::optional<std::string>(orgs.front()) : std::nullopt;
  }
};

/// With `strict`, only orgs verifying both channels count.
Attribution attribute(const std::vector<OrgVerdict>& verdicts, bool strict = false);

class Registry {
 public:
  Registry() = default;
  explicit Registry(std::vector<OrganizationProfile> orgs);

  const std::vector<OrganizationProfile>& orgs() const { return orgs_; }
  bool empty() const { return orgs_.empty(); }
  const OrganizationProfile* find(const std::string& id) const;
  /// Throws RegistryError for unknown ids.
  const OrganizationProfile& at(const std::string& id) const;

  /// Adds or replaces a profile. Throws RegistryError on a malformed fixed code.
  void add(OrganizationProfile org);

  /// {"orgs": [{"id": str, "seed": uint64, "fixed_code": "01"}]}
  static Registry from_json(const std::string& text);
  static Registry load(const std::string& path);
  std::string to_json() const;
  void save(const std::string& path) const;

 private:
  std::vector<OrganizationProfile> orgs_;
};

}  // namespace dualmark
