#pragma once

// Formal-channel rewrite rules (R1..R6) and natural-channel renaming variants.
//
// Formal rules, state 1 is the right-hand form:
//   R1  x = x + e                      <->  x += e          (+, -, *)
//   R2  L = [] ; for v in it:          <->  L = [e for v in it]
//           L.append(e)
//   R3  if/elif/while not (a == b)     <->  ... a != b
//   R4  if c: return True              <->  return bool(c)
//       else: return False
//   R5  a < lit                        <->  lit > a         (<, >, <=, >=)
//   R6  range(0, n)                    <->  range(n)

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dualmark/source_model.hpp"

namespace dualmark {

struct FormalRule {
  int id = 0;  // 1-based position in the ordered rule set
  std::string name;
};

/// The fixed ordered rule set R1..R6.
const std::vector<FormalRule>& formal_rule_set();

using RuleMask = std::uint32_t;  // bit (id - 1) enables rule id
inline constexpr RuleMask kAllRules = 0x3F;

struct FormalSite {
  int rule = 0;
  NodeAddress address;
  int state = 0;
  std::size_t ordinal = 0;  // position in the pre-order walk
};

class NotAnAnchor : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every formal anchor site in walk order. A node claimed by a rule is not
/// searched for nested sites; at a single node the lowest rule id wins.
std::vector<FormalSite> find_formal_sites(const py::Module& module, RuleMask enabled = kAllRules);

/// 1 iff the site is in the transformed form. Throws NotAnAnchor.
int detect_state(const py::Module& module, const NodeAddress& site, const FormalRule& rule,
                 RuleMask enabled = kAllRules);

/// Drives every site to `desired[ordinal]` (0 or 1); entries of -1 and sites
/// past the end of `desired` are left alone. Returns the number of rewrites.
std::size_t set_formal_states(py::Module& module, const std::vector<int>& desired,
                              RuleMask enabled = kAllRules);

/// Rewrites one site into the transformed (apply) or original (reverse) form.
/// Throws NotAnAnchor when the site does not match the rule.
void apply_rule(py::Module& module, const NodeAddress& site, const FormalRule& rule,
                RuleMask enabled = kAllRules);
void reverse_rule(py::Module& module, const NodeAddress& site, const FormalRule& rule,
                  RuleMask enabled = kAllRules);

// ---- natural channel -------------------------------------------------------

enum class Variant : int { Suffix = 1, Underline = 2, InitialCapitalization = 3 };

inline constexpr Variant kVariantOrder[] = {Variant::Suffix, Variant::Underline,
                                            Variant::InitialCapitalization};

struct VariantSet {
  bool suffix = false;
  bool underline = false;
  bool capital = false;

  bool has(Variant v) const;
  void set(Variant v, bool on);
  bool empty() const { return !suffix && !underline && !capital; }
  bool operator==(const VariantSet& o) const = default;
};

using SuffixTable = std::vector<std::string>;

const SuffixTable& default_suffix_table();

/// FNV-1a 64-bit; drives the suffix choice.
std::uint64_t name_hash(std::string_view name);
const std::string& suffix_for(std::string_view canonical, const SuffixTable& table);

class CollisionError : public std::runtime_error {
 public:
  explicit CollisionError(const std::string& name)
      : std::runtime_error("renamed identifier collides with '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Applies Suffix, then Underline, then InitialCapitalization. Throws
/// CollisionError if the result is in `taken`.
std::string apply_variants(std::string_view canonical, VariantSet variants, const SuffixTable& table,
                           const std::set<std::string>* taken = nullptr);

struct Stripped {
  std::string canonical;
  VariantSet variants;
};

/// Inverse of apply_variants; names of no known shape come back unchanged.
Stripped strip_variants(std::string_view identifier, const SuffixTable& table);

}  // namespace dualmark
