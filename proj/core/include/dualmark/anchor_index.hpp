#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dualmark/source_model.hpp"
#include "dualmark/transform_rules.hpp"

namespace dualmark {

enum class Channel { Formal, Natural };

const char* channel_name(Channel c);

struct AnchorPoint {
  Channel channel = Channel::Formal;
  int id = 0;                 // rule id (formal) or variant id (natural)
  NodeAddress address;        // formal only
  std::string identifier;     // natural only: canonical name
  int state = 0;
  std::size_t ordinal = 0;    // formal: walk ordinal; natural: variable index
  int group = -1;             // set by group_anchors
};

/// A function-local variable usable by the natural channel.
struct NaturalVariable {
  std::string canonical;
  std::string raw;  // spelling in the program
  VariantSet variants;
};

struct AnchorIndex {
  std::vector<AnchorPoint> formal;   // sorted by (rule id, walk ordinal)
  std::vector<AnchorPoint> natural;  // three per variable, in kVariantOrder
  std::vector<NaturalVariable> variables;

  const std::vector<AnchorPoint>& channel(Channel c) const { return c == Channel::Formal ? formal : natural; }
  std::vector<AnchorPoint>& channel(Channel c) { return c == Channel::Formal ? formal : natural; }
};

/// Consecutive blocks of anchor indices into one channel's list.
struct Grouping {
  Channel channel = Channel::Formal;
  int alpha = 0;
  std::vector<std::vector<std::size_t>> groups;

  std::size_t used() const;  // anchors covered by the groups
};

class InsufficientAnchors : public std::runtime_error {
 public:
  InsufficientAnchors(Channel channel, std::size_t have, std::size_t need);
  Channel channel() const noexcept { return channel_; }
  std::size_t have() const noexcept { return have_; }
  std::size_t need() const noexcept { return need_; }

 private:
  Channel channel_;
  std::size_t have_;
  std::size_t need_;
};

/// Variables eligible for renaming, ordered by first occurrence of their
/// canonical form in a pre-order walk (comprehension clauses before the
/// element, assignment targets before the value).
std::vector<NaturalVariable> natural_variables(const py::Module& module, const SuffixTable& table);

/// Every function-local variable that can be renamed without touching module
/// or class attributes, in first-occurrence order. Superset of the natural
/// channel's variables.
std::vector<std::string> local_variables(const py::Module& module);

/// All identifiers appearing in the module, including blocked ones.
std::set<std::string> identifier_universe(const py::Module& module);

AnchorIndex identify_anchors(const py::Module& module, RuleMask enabled, const SuffixTable& table);
AnchorIndex identify_anchors(const SubjectProgram& program, RuleMask enabled = kAllRules,
                             const SuffixTable& table = default_suffix_table());

/// Takes the first q*alpha anchors of the channel as q blocks of alpha and
/// stamps their group ids. Throws InsufficientAnchors.
Grouping group_anchors(AnchorIndex& index, Channel channel, int alpha, int q);

/// Rewrites the formal anchors so that anchor k (index order) takes state
/// `states[k]`; -1 or a missing entry leaves the anchor alone.
void apply_formal_states(py::Module& module, const AnchorIndex& index, const std::vector<int>& states,
                         RuleMask enabled = kAllRules);

/// Renames natural-channel variables so that anchor k takes `states[k]`.
void apply_natural_states(py::Module& module, const AnchorIndex& index, const std::vector<int>& states,
                          const SuffixTable& table);

/// Renames every variable occurrence of `from` (names, parameters, except
/// targets). Attribute and keyword-argument names are left alone.
void rename_variable(py::Module& module, const std::string& from, const std::string& to);

}  // namespace dualmark
