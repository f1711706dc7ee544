#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dualmark/eval_harness.hpp"

using namespace dualmark;

namespace {

const std::filesystem::path kRoot(DUALMARK_SOURCE_DIR);

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Registry registry() { return Registry::load((kRoot / "data/registry.json").string()); }

Bits bits(unsigned v, int width) {
  Bits b(static_cast<std::size_t>(width));
  for (int i = 0; i < width; ++i) b[static_cast<std::size_t>(i)] = (v >> (width - 1 - i)) & 1U;
  return b;
}

std::vector<CorpusFile> corpus() { return load_corpus((kRoot / "corpus/programs").string()); }

}  // namespace

TEST(Capacity, Examples) {
  const CodeParams bch{4, 2};
  EXPECT_EQ(estimate_capacity(12, bch, 3, 2, 2).kind, CapacityKind::Case1);
  EXPECT_EQ(estimate_capacity(7, bch, 3, 2, 2).kind, CapacityKind::Case2);
  const auto c3 = estimate_capacity(2, bch, 3, 2, 2);
  EXPECT_EQ(c3.kind, CapacityKind::Case3);
  EXPECT_EQ(c3.alpha, 1);
  EXPECT_EQ(c3.tau, 1);
  EXPECT_EQ(estimate_capacity(1, bch, 3, 2, 2).kind, CapacityKind::Unwatermarkable);
  EXPECT_EQ(estimate_capacity(0, bch, 3, 2, 2).kind, CapacityKind::Unwatermarkable);
}

// The ladder partitions n into contiguous bands in the stated order.
TEST(Capacity, LadderInvariant) {
  for (const CodeParams code : {CodeParams{4, 2}, CodeParams{7, 4}}) {
    for (int alpha = 1; alpha <= 4; ++alpha) {
      for (std::size_t fixed = 1; fixed <= 4; ++fixed) {
        for (std::size_t n = 0; n < 40; ++n) {
          const auto c = estimate_capacity(n, code, alpha, 1, fixed);
          const std::size_t a = static_cast<std::size_t>(alpha);
          CapacityKind want = CapacityKind::Unwatermarkable;
          if (n >= a * static_cast<std::size_t>(code.l)) {
            want = CapacityKind::Case1;
          } else if (n >= a * static_cast<std::size_t>(code.k)) {
            want = CapacityKind::Case2;
          } else if (n >= fixed) {
            want = CapacityKind::Case3;
          }
          ASSERT_EQ(c.kind, want) << n << " " << alpha << " " << fixed;
          if (c.kind != CapacityKind::Unwatermarkable) EXPECT_LE(c.used(), n);
        }
      }
    }
  }
}

TEST(Capacity, Degrade) {
  const CodeParams bch{4, 2};
  EXPECT_EQ(degrade(estimate_capacity(12, bch, 3, 2, 2), 12, bch, 3, 2, 2).kind, CapacityKind::Case2);
  EXPECT_EQ(degrade(estimate_capacity(7, bch, 3, 2, 2), 7, bch, 3, 2, 2).kind, CapacityKind::Case3);
  EXPECT_EQ(degrade(estimate_capacity(2, bch, 3, 2, 2), 2, bch, 3, 2, 2).kind, CapacityKind::Unwatermarkable);
}

TEST(Engine, ZeroAnchorsLeavesProgramUntouched) {
  const std::string text = "X = 1\n\n\n# trailing comment\nprint( X )\n";
  const auto program = parse(text);
  Rng rng(1);
  const auto res = insert(program, {0, 1}, registry().at("O1"), {}, rng);
  EXPECT_EQ(res.program.text, text);
  EXPECT_FALSE(res.report.formal.detected);
  EXPECT_FALSE(res.report.natural.detected);
  EXPECT_FALSE(res.report.formal.skipped.empty());
  EXPECT_FALSE(res.report.natural.skipped.empty());
  EXPECT_EQ(res.report.notes.size(), 2U);
}

TEST(Engine, EmptyProgramUndetected) {
  const auto rep = extract(parse(""), registry(), {});
  EXPECT_FALSE(rep.formal.detected);
  EXPECT_FALSE(rep.natural.detected);
  EXPECT_FALSE(rep.combined);
  EXPECT_TRUE(rep.attribution.empty());
}

TEST(Engine, MessageLength) {
  Rng rng(1);
  EXPECT_THROW(insert(parse("x = 1\n"), {1, 0, 1}, registry().at("O1"), {}, rng), LengthMismatch);
}

TEST(Engine, CaseOneWatermarkInValidSet) {
  const auto files = corpus();
  const Registry reg = registry();
  Rng rng(5);
  int checked = 0;
  for (const auto& f : files) {
    const auto program = parse(f.text, f.path);
    const auto res = insert(program, {0, 1}, reg.at("O1"), {}, rng);
    if (res.report.formal.capacity.kind != CapacityKind::Case1) continue;
    const auto valid = valid_set({0, 1}, CodeId::BCH421);
    ASSERT_TRUE(res.report.formal.w.has_value());
    EXPECT_NE(std::find(valid.begin(), valid.end(), *res.report.formal.w), valid.end());
    if (++checked == 10) break;
  }
  EXPECT_EQ(checked, 10);
}

// Every embedded channel verifies under the embedding org and carries the message.
TEST(Engine, RoundTripAcrossCases) {
  const auto files = corpus();
  const Registry reg = registry();
  std::map<CapacityKind, int> seen;
  for (std::size_t i = 0; i < files.size(); i += 3) {
    const auto program = parse(files[i].text, files[i].path);
    for (unsigned v = 0; v < 4; ++v) {
      Rng rng = Rng::derive(11, i * 4 + v);
      const auto res = insert(program, bits(v, 2), reg.at("O2"), {}, rng);
      const auto rep = extract(parse(res.program.text), reg, {}, {{"O2"}});
      for (Channel ch : {Channel::Formal, Channel::Natural}) {
        const ChannelReport& in = res.report.channel(ch);
        const ChannelReport& out = rep.channel(ch);
        if (!in.detected) continue;
        ++seen[in.capacity.kind];
        ASSERT_TRUE(out.detected) << files[i].name << " " << channel_name(ch);
        EXPECT_EQ(out.capacity.kind, in.capacity.kind);
        if (in.capacity.kind != CapacityKind::Case3) EXPECT_EQ(out.m, bits(v, 2)) << files[i].name;
      }
    }
  }
  EXPECT_GT(seen[CapacityKind::Case1], 0);
  EXPECT_GT(seen[CapacityKind::Case2], 0);
  EXPECT_GT(seen[CapacityKind::Case3], 0);
}

TEST(Engine, RawMessageZeroStillDetected) {
  // formal: 9 anchors (Case2); the all-zero message must not read as "no watermark"
  const auto program = parse(slurp(kRoot / "tests/fixtures/worked/w10.py"));
  const Registry reg = registry();
  for (int seed = 0; seed < 20; ++seed) {
    Rng rng(static_cast<std::uint64_t>(seed));
    const auto res = insert(program, {0, 0}, reg.at("O1"), {}, rng);
    ASSERT_EQ(res.report.formal.capacity.kind, CapacityKind::Case2);
    if (!res.report.formal.detected) continue;
    const auto rep = extract(res.program, reg, {}, {{"O1"}});
    EXPECT_TRUE(rep.formal.detected);
    EXPECT_EQ(rep.formal.m, (Bits{0, 0}));
  }
}

TEST(Engine, FixedCodeOnlyVerifiesForOwner) {
  // formal: 3 anchors -> Case3 with the org's fixed code
  const auto program = parse(slurp(kRoot / "tests/fixtures/worked/w05.py"));
  const Registry reg = registry();
  Rng rng(3);
  const auto res = insert(program, {1, 1}, reg.at("O2"), {}, rng);
  ASSERT_EQ(res.report.formal.capacity.kind, CapacityKind::Case3);
  EXPECT_EQ(res.report.formal.w, reg.at("O2").fixed_code);
  EXPECT_FALSE(res.report.formal.m.has_value());
  for (const auto& org : reg.orgs()) {
    const bool ok = verify_channel(identify_anchors(res.program), Channel::Formal, org, {}).detected;
    EXPECT_EQ(ok, org.id == "O2") << org.id;
  }
}

TEST(Engine, ChannelIndependence) {
  const auto files = corpus();
  const Registry reg = registry();
  const ToolkitConfig cfg;
  int checked = 0;
  for (std::size_t i = 0; i < files.size(); i += 4) {
    const auto program = parse(files[i].text);
    Rng rng(i);
    const auto res = insert(program, {1, 0}, reg.at("O1"), cfg, rng);
    if (!res.report.strict) continue;
    const auto base = extract(res.program, reg, cfg, {{"O1"}});
    // destroy the natural channel: rename every local
    Rng arng(i + 1);
    const auto renamed = attack(res.program, {AttackKind::VariableRename, 1.0, 0}, arng, cfg);
    const auto r1 = extract(renamed, reg, cfg, {{"O1"}});
    EXPECT_EQ(r1.formal.detected, base.formal.detected) << files[i].name;
    EXPECT_EQ(r1.formal.m, base.formal.m);
    // destroy the formal channel: flip every formal anchor
    const auto idx = identify_anchors(res.program);
    std::vector<int> flipped;
    for (const auto& a : idx.formal) flipped.push_back(1 - a.state);
    py::Module tree = res.program.tree;
    apply_formal_states(tree, idx, flipped);
    const auto r2 = extract(parse(render(tree)), reg, cfg, {{"O1"}});
    EXPECT_EQ(r2.natural.detected, base.natural.detected) << files[i].name;
    EXPECT_EQ(r2.natural.m, base.natural.m);
    ++checked;
  }
  EXPECT_GT(checked, 20);
}

TEST(Engine, ReformatDoesNotChangeReport) {
  const auto files = corpus();
  const Registry reg = registry();
  for (std::size_t i = 0; i < files.size(); i += 5) {
    Rng rng(i);
    const auto res = insert(parse(files[i].text), {1, 1}, reg.at("O3"), {}, rng);
    const auto base = extract(res.program, reg, {});
    Rng arng(i);
    const auto noisy = attack(res.program, {AttackKind::Reformat, 1.0, 0}, arng);
    EXPECT_TRUE(py::structurally_equal(noisy.tree, res.program.tree));
    EXPECT_EQ(report_to_json(extract(noisy, reg, {})), report_to_json(base)) << files[i].name;
  }
}

TEST(Engine, ReportJsonSchema) {
  const auto program = parse(corpus()[60].text, "p060.py");
  Rng rng(9);
  const Registry reg = registry();
  const auto res = insert(program, {0, 1}, reg.at("O1"), {}, rng);
  const auto j = nlohmann::json::parse(report_to_json(extract(res.program, reg, {})));
  EXPECT_EQ(j.at("schema"), 1);
  EXPECT_EQ(j.at("file"), "p060.py");
  for (const char* ch : {"formal", "natural"}) {
    for (const char* key : {"detected", "case", "w", "m", "anchors"}) EXPECT_TRUE(j.at(ch).contains(key)) << key;
  }
  EXPECT_EQ(j.at("combined"), j.at("formal").at("detected").get<bool>() || j.at("natural").at("detected").get<bool>());
  EXPECT_EQ(j.at("strict"), j.at("formal").at("detected").get<bool>() && j.at("natural").at("detected").get<bool>());
  EXPECT_EQ(j.at("attribution"), nlohmann::json::array({"O1"}));
  EXPECT_TRUE(j.at("diagnostics").contains("infeasible_resamples"));
}

TEST(Engine, DeterministicGivenSeed) {
  const auto program = parse(corpus()[70].text);
  const Registry reg = registry();
  Rng a(123), b(123);
  EXPECT_EQ(insert(program, {1, 0}, reg.at("O1"), {}, a).program.text,
            insert(program, {1, 0}, reg.at("O1"), {}, b).program.text);
}
