#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dualmark/anchor_index.hpp"
#include "dualmark/bit_codec.hpp"
#include "dualmark/config.hpp"
#include "dualmark/org_registry.hpp"
#include "dualmark/source_model.hpp"

namespace dualmark {

enum class CapacityKind { Case1, Case2, Case3, Unwatermarkable };

/// "Case1-BCH", "Case2-RawMessage", "Case3-OrgFixed", "Unwatermarkable".
const char* capacity_name(CapacityKind kind);

struct CapacityCase {
  CapacityKind kind = CapacityKind::Unwatermarkable;
  int l = 0;      // rows of the matrix = length of the embedded sequence
  int alpha = 0;
  int tau = 0;
  int q = 0;      // number of groups (equals l)

  std::size_t used() const { return static_cast<std::size_t>(alpha) * static_cast<std::size_t>(q); }
};

/// Case1: n >= alpha*l. Case2: alpha*k <= n < alpha*l. Case3: fixed_len <= n
/// < alpha*k, unit matrix with alpha = tau = 1. Otherwise Unwatermarkable.
CapacityCase estimate_capacity(std::size_t n, CodeParams code, int alpha, int tau, std::size_t fixed_len);

/// The next case down the ladder (Case1 -> Case2 -> Case3 -> Unwatermarkable)
/// that still fits n anchors.
CapacityCase degrade(const CapacityCase& from, std::size_t n, CodeParams code, int alpha, int tau,
                     std::size_t fixed_len);

/// Group size used for a channel: the configured alpha for the formal
/// channel, one variable (three variants) for the natural channel.
int channel_alpha(Channel channel, const ToolkitConfig& config);

struct ChannelReport {
  bool detected = false;  // insertion: the channel was embedded
  CapacityCase capacity;
  std::optional<Bits> w;
  std::optional<Bits> m;
  std::size_t anchors = 0;
  std::string skipped;  // reason when the channel carried nothing
  int resamples = 0;    // infeasible systems met before success
  bool degraded = false;
};

struct WatermarkReport {
  std::string file;
  std::string org;  // embedding org, or the org the channel details came from
  ChannelReport formal;
  ChannelReport natural;
  bool combined = false;
  bool strict = false;
  std::vector<std::string> attribution;
  std::vector<std::string> notes;

  const ChannelReport& channel(Channel c) const { return c == Channel::Formal ? formal : natural; }
  ChannelReport& channel(Channel c) { return c == Channel::Formal ? formal : natural; }
};

/// Versioned ("schema": 1) JSON rendering of a report.
std::string report_to_json(const WatermarkReport& report, int indent = 2);

struct InsertResult {
  SubjectProgram program;
  WatermarkReport report;
};

/// Embeds `m` (length k of config.code) in both channels. A channel without
/// capacity is skipped and noted; when neither channel embeds, the program
/// text is returned unchanged. Throws LengthMismatch.
InsertResult insert(const SubjectProgram& program, const Bits& m, const OrganizationProfile& org,
                    const ToolkitConfig& config, Rng& rng);

/// Verification of one channel under one org.
ChannelReport verify_channel(const AnchorIndex& index, Channel channel, const OrganizationProfile& org,
                             const ToolkitConfig& config);

struct ExtractOptions {
  std::vector<std::string> orgs;  // restrict to these ids; empty means every registered org
  bool strict = false;            // attribution requires both channels
};

/// Checks every selected org; channel details come from the first org among
/// those verifying the most channels.
WatermarkReport extract(const SubjectProgram& program, const Registry& registry, const ToolkitConfig& config,
                        const ExtractOptions& options = {});

/// Per-org verdicts behind extract().
std::vector<OrgVerdict> org_verdicts(const AnchorIndex& index, const Registry& registry,
                                     const ToolkitConfig& config, const std::vector<std::string>& orgs = {});

}  // namespace dualmark
