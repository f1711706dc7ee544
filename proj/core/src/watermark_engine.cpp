#include "dualmark/watermark_engine.hpp"

#include <json.hpp>

namespace dualmark {

const char* capacity_name(CapacityKind kind) {
  switch (kind) {
    case CapacityKind::Case1:
      return "Case1-BCH";
    case CapacityKind::Case2:
      return "Case2-RawMessage";
    case CapacityKind::Case3:
      return "Case3-OrgFixed";
    case CapacityKind::Unwatermarkable:
      return "Unwatermarkable";
  }
  return "?";
}

namespace {

CapacityCase make_case(CapacityKind kind, int rows, int alpha, int tau) { return {kind, rows, alpha, tau, rows}; }

}  // namespace

CapacityCase estimate_capacity(std::size_t n, CodeParams code, int alpha, int tau, std::size_t fixed_len) {
  const auto a = static_cast<std::size_t>(alpha);
  if (n >= a * static_cast<std::size_t>(code.l)) return make_case(CapacityKind::Case1, code.l, alpha, tau);
  if (n >= a * static_cast<std::size_t>(code.k)) return make_case(CapacityKind::Case2, code.k, alpha, tau);
  if (fixed_len > 0 && n >= fixed_len) return make_case(CapacityKind::Case3, static_cast<int>(fixed_len), 1, 1);
  return {};
}

CapacityCase degrade(const CapacityCase& from, std::size_t n, CodeParams code, int alpha, int tau,
                     std::size_t fixed_len) {
  switch (from.kind) {
    case CapacityKind::Case1:
      return make_case(CapacityKind::Case2, code.k, alpha, tau);
    case CapacityKind::Case2:
      if (fixed_len > 0 && n >= fixed_len) return make_case(CapacityKind::Case3, static_cast<int>(fixed_len), 1, 1);
      return {};
    default:
      return {};
  }
}

int channel_alpha(Channel channel, const ToolkitConfig& config) {
  return channel == Channel::Formal ? config.alpha : 3;
}

namespace {

ParityCheckMatrix matrix_for_case(const CapacityCase& cap, const OrganizationProfile& org) {
  if (cap.kind == CapacityKind::Case3) return unit_matrix(static_cast<std::size_t>(cap.l));
  return matrix_for(org, static_cast<std::size_t>(cap.l), static_cast<std::size_t>(cap.alpha));
}

Bits prefix_states(const std::vector<AnchorPoint>& anchors, std::size_t count) {
  Bits r(count, 0);
  for (std::size_t i = 0; i < count; ++i) r[i] = static_cast<std::uint8_t>(anchors[i].state);
  return r;
}

struct ChannelPlan {
  ChannelReport report;
  std::vector<int> states;  // per anchor, -1 = leave
};

ChannelPlan plan_channel(const AnchorIndex& index, Channel channel, const Bits& m, const OrganizationProfile& org,
                         const ToolkitConfig& config, Rng& rng) {
  ChannelPlan plan;
  ChannelReport& rep = plan.report;
  const std::size_t n = index.channel(channel).size();
  const CodeParams code = code_params(config.code);
  const int alpha = channel_alpha(channel, config);
  rep.anchors = n;
  CapacityCase cap = estimate_capacity(n, code, alpha, config.tau, org.fixed_code.size());

  while (cap.kind != CapacityKind::Unwatermarkable) {
    const ParityCheckMatrix M = matrix_for_case(cap, org);
    const ColumnGroups groups = consecutive_groups(static_cast<std::size_t>(cap.q), static_cast<std::size_t>(cap.alpha));
    // Only Case1 has alternative sequences to resample; the other cases embed
    // a fixed vector and the solver's answer is already exhaustive.
    const int attempts = cap.kind == CapacityKind::Case1 ? config.retry_budget + 1 : 1;
    for (int attempt = 0; attempt < attempts; ++attempt) {
      Bits c;
      if (cap.kind == CapacityKind::Case1) {
        c = sample_watermark(m, config.code, rng).bits;
      } else if (cap.kind == CapacityKind::Case2) {
        c = m;
      } else {
        c = org.fixed_code;
      }
      SolveOptions opts;
      opts.exclude_zero = true;
      const auto r = solve_constrained(M, c, groups, cap.tau, rng, opts);
      if (!r) {
        ++rep.resamples;
        continue;
      }
      rep.detected = true;
      rep.capacity = cap;
      rep.w = c;
      if (cap.kind != CapacityKind::Case3) rep.m = m;
      plan.states.assign(n, -1);
      for (std::size_t i = 0; i < r->size(); ++i) plan.states[i] = (*r)[i];
      return plan;
    }
    cap = degrade(cap, n, code, alpha, config.tau, org.fixed_code.size());
    rep.degraded = true;
  }
  rep.capacity = cap;
  rep.skipped = rep.degraded ? "no feasible state vector in any capacity case"
                             : "too few anchors (" + std::to_string(n) + ")";
  return plan;
}

}  // namespace

ChannelReport verify_channel(const AnchorIndex& index, Channel channel, const OrganizationProfile& org,
                             const ToolkitConfig& config) {
  ChannelReport rep;
  const auto& anchors = index.channel(channel);
  rep.anchors = anchors.size();
  rep.capacity = estimate_capacity(anchors.size(), code_params(config.code), channel_alpha(channel, config),
                                   config.tau, org.fixed_code.size());
  const CapacityCase& cap = rep.capacity;
  if (cap.kind == CapacityKind::Unwatermarkable) {
    rep.skipped = "too few anchors (" + std::to_string(anchors.size()) + ")";
    return rep;
  }
  const Bits r = prefix_states(anchors, cap.used());
  if (all_zero(r)) return rep;
  const ColumnGroups groups = consecutive_groups(static_cast<std::size_t>(cap.q), static_cast<std::size_t>(cap.alpha));
  const Bits c = threshold_groups(r, groups, cap.tau);
  if (!verify(matrix_for_case(cap, org), r, c)) return rep;
  switch (cap.kind) {
    case CapacityKind::Case1: {
      if (all_zero(c)) return rep;
      const auto m = decode(c, config.code);
      if (!m) return rep;
      rep.m = m;
      break;
    }
    case CapacityKind::Case2:
      rep.m = c;
      break;
    case CapacityKind::Case3:
      if (c != org.fixed_code) return rep;
      break;
    case CapacityKind::Unwatermarkable:
      return rep;
  }
  rep.w = c;
  rep.detected = true;
  return rep;
}

InsertResult insert(const SubjectProgram& program, const Bits& m, const OrganizationProfile& org,
                    const ToolkitConfig& config, Rng& rng) {
  const CodeParams code = code_params(config.code);
  if (m.size() != static_cast<std::size_t>(code.k)) throw LengthMismatch(static_cast<std::size_t>(code.k), m.size());

  const AnchorIndex index = identify_anchors(program.tree, config.rules, config.suffixes);
  ChannelPlan formal = plan_channel(index, Channel::Formal, m, org, config, rng);
  ChannelPlan natural = plan_channel(index, Channel::Natural, m, org, config, rng);

  InsertResult out;
  WatermarkReport& rep = out.report;
  rep.file = program.path;
  rep.org = org.id;
  rep.formal = formal.report;
  rep.natural = natural.report;
  rep.combined = rep.formal.detected || rep.natural.detected;
  rep.strict = rep.formal.detected && rep.natural.detected;
  if (rep.combined) rep.attribution.push_back(org.id);
  for (Channel ch : {Channel::Formal, Channel::Natural}) {
    const ChannelReport& c = rep.channel(ch);
    if (!c.skipped.empty()) rep.notes.push_back(std::string(channel_name(ch)) + " channel skipped: " + c.skipped);
    // Detection picks the case from the anchor count alone, so a degraded
    // embedding is only recoverable when that count points at the same case.
    if (c.detected && c.degraded) {
      rep.notes.push_back(std::string(channel_name(ch)) + " channel degraded to " + capacity_name(c.capacity.kind));
    }
  }

  if (!rep.combined) {
    out.program = program;
    return out;
  }
  py::Module tree = program.tree;
  if (formal.report.detected) apply_formal_states(tree, index, formal.states, config.rules);
  if (natural.report.detected) apply_natural_states(tree, index, natural.states, config.suffixes);
  out.program = rebuild(tree, program.path);
  return out;
}

std::vector<OrgVerdict> org_verdicts(const AnchorIndex& index, const Registry& registry, const ToolkitConfig& config,
                                     const std::vector<std::string>& orgs) {
  std::vector<OrgVerdict> out;
  auto consider = [&](const OrganizationProfile& org) {
    out.push_back(OrgVerdict{org.id, verify_channel(index, Channel::Formal, org, config).detected,
                             verify_channel(index, Channel::Natural, org, config).detected});
  };
  if (orgs.empty()) {
    for (const auto& org : registry.orgs()) consider(org);
  } else {
    for (const auto& id : orgs) consider(registry.at(id));
  }
  return out;
}

WatermarkReport extract(const SubjectProgram& program, const Registry& registry, const ToolkitConfig& config,
                        const ExtractOptions& options) {
  WatermarkReport rep;
  rep.file = program.path;
  const AnchorIndex index = identify_anchors(program.tree, config.rules, config.suffixes);
  std::vector<const OrganizationProfile*> selected;
  if (options.orgs.empty()) {
    for (const auto& org : registry.orgs()) selected.push_back(&org);
  } else {
    for (const auto& id : options.orgs) selected.push_back(&registry.at(id));
  }
  if (selected.empty()) {
    rep.formal.anchors = index.formal.size();
    rep.natural.anchors = index.natural.size();
    rep.notes.push_back("no organizations to check");
    return rep;
  }

  std::vector<OrgVerdict> verdicts;
  std::vector<std::pair<ChannelReport, ChannelReport>> details;
  for (const OrganizationProfile* org : selected) {
    ChannelReport f = verify_channel(index, Channel::Formal, *org, config);
    ChannelReport n = verify_channel(index, Channel::Natural, *org, config);
    verdicts.push_back(OrgVerdict{org->id, f.detected, n.detected});
    details.emplace_back(std::move(f), std::move(n));
  }

  std::size_t lead = 0;
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    if (verdicts[i].verified_channels() > verdicts[lead].verified_channels()) lead = i;
  }
  rep.org = verdicts[lead].verified_channels() > 0 ? verdicts[lead].org : std::string();
  rep.formal = details[lead].first;
  rep.natural = details[lead].second;
  rep.combined = rep.formal.detected || rep.natural.detected;
  rep.strict = rep.formal.detected && rep.natural.detected;
  rep.attribution = attribute(verdicts, options.strict).orgs;
  if (rep.attribution.size() > 1) rep.notes.push_back("ambiguous attribution");
  return rep;
}

namespace {

nlohmann::json channel_json(const ChannelReport& c) {
  nlohmann::json j = {{"detected", c.detected},
                      {"case", capacity_name(c.capacity.kind)},
                      {"anchors", c.anchors},
                      {"w", c.w ? nlohmann::json(to_string(*c.w)) : nlohmann::json()},
                      {"m", c.m ? nlohmann::json(to_string(*c.m)) : nlohmann::json()}};
  if (!c.skipped.empty()) j["skipped"] = c.skipped;
  return j;
}

}  // namespace

std::string report_to_json(const WatermarkReport& r, int indent) {
  nlohmann::json j = {
      {"schema", 1},
      {"file", r.file},
      {"org", r.org.empty() ? nlohmann::json() : nlohmann::json(r.org)},
      {"formal", channel_json(r.formal)},
      {"natural", channel_json(r.natural)},
      {"combined", r.combined},
      {"strict", r.strict},
      {"attribution", r.attribution},
      {"diagnostics",
       {{"formal_anchors", r.formal.anchors},
        {"natural_anchors", r.natural.anchors},
        {"infeasible_resamples", r.formal.resamples + r.natural.resamples},
        {"notes", r.notes}}},
  };
  return j.dump(indent);
}

}  // namespace dualmark
