#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dualmark/anchor_index.hpp"
#include "dualmark/rng.hpp"

using namespace dualmark;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> formal_summary(const AnchorIndex& idx) {
  std::vector<std::string> out;
  for (const auto& a : idx.formal) out.push_back("R" + std::to_string(a.id) + ":" + std::to_string(a.state));
  return out;
}

std::vector<std::string> canonical_names(const AnchorIndex& idx) {
  std::vector<std::string> out;
  for (const auto& v : idx.variables) out.push_back(v.canonical);
  return out;
}

const std::filesystem::path kWorked = std::filesystem::path(DUALMARK_SOURCE_DIR) / "tests/fixtures/worked";

}  // namespace

TEST(AnchorIndex, AugmentedThenAppendLoop) {
  const auto p = parse("x = 0\nx += 1\nys = []\nfor i in range(3):\n    ys.append(i)\n");
  const auto idx = identify_anchors(p);
  EXPECT_EQ(formal_summary(idx), (std::vector<std::string>{"R1:1", "R2:0"}));
}

TEST(AnchorIndex, NaturalOrderAndVariantStates) {
  const auto p = parse("def f():\n    Count_ = 1\n    flag = Count_ > 0\n    return flag\n");
  const auto idx = identify_anchors(p);
  ASSERT_EQ(canonical_names(idx), (std::vector<std::string>{"count", "flag"}));
  ASSERT_GE(idx.natural.size(), 3U);
  EXPECT_EQ(idx.natural[0].state, 0);  // Suffix
  EXPECT_EQ(idx.natural[1].state, 1);  // Underline
  EXPECT_EQ(idx.natural[2].state, 1);  // InitialCapitalization
  EXPECT_EQ(idx.natural[0].id, static_cast<int>(Variant::Suffix));
}

TEST(AnchorIndex, ZeroAnchorsIsValid) {
  const auto idx = identify_anchors(parse(""));
  EXPECT_TRUE(idx.formal.empty());
  EXPECT_TRUE(idx.natural.empty());
}

namespace {

AnchorIndex with_formal(std::size_t n) {
  AnchorIndex idx;
  for (std::size_t i = 0; i < n; ++i) {
    AnchorPoint a;
    a.ordinal = i;
    idx.formal.push_back(a);
  }
  return idx;
}

}  // namespace

TEST(AnchorIndex, GroupingExamples) {
  for (std::size_t n : {12U, 13U}) {
    auto idx = with_formal(n);
    const Grouping g = group_anchors(idx, Channel::Formal, 3, 4);
    ASSERT_EQ(g.groups.size(), 4U);
    for (std::size_t i = 0; i < 4; ++i) {
      EXPECT_EQ(g.groups[i], (std::vector<std::size_t>{3 * i, 3 * i + 1, 3 * i + 2}));
    }
    EXPECT_EQ(g.used(), 12U);
    if (n == 13) EXPECT_EQ(idx.formal[12].group, -1);
  }
  auto small = with_formal(5);
  try {
    group_anchors(small, Channel::Formal, 3, 4);
    FAIL() << "expected InsufficientAnchors";
  } catch (const InsufficientAnchors& e) {
    EXPECT_EQ(e.channel(), Channel::Formal);
    EXPECT_EQ(e.have(), 5U);
    EXPECT_EQ(e.need(), 12U);
  }
}

TEST(AnchorIndex, NaturalGroupsAreVariables) {
  auto idx = identify_anchors(parse("def f(alpha, beta):\n    gamma = alpha + beta\n    return gamma\n"));
  const Grouping g = group_anchors(idx, Channel::Natural, 3, 2);
  ASSERT_EQ(g.groups.size(), 2U);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t k : g.groups[i]) EXPECT_EQ(idx.natural[k].identifier, idx.variables[i].canonical);
  }
}

// Hand-audited anchor table for the worked corpus.
TEST(AnchorIndex, WorkedCorpusMatchesAudit) {
  const auto expected = nlohmann::json::parse(slurp(kWorked / "expected.json"));
  ASSERT_EQ(expected.size(), 12U);
  for (const auto& [file, want] : expected.items()) {
    const auto idx = identify_anchors(parse(slurp(kWorked / file), file));
    EXPECT_EQ(formal_summary(idx), want.at("formal").get<std::vector<std::string>>()) << file;
    EXPECT_EQ(canonical_names(idx), want.at("variables").get<std::vector<std::string>>()) << file;
    EXPECT_EQ(idx.natural.size(), 3 * idx.variables.size()) << file;
  }
}

TEST(AnchorIndex, StableForIdenticalText) {
  for (const auto& entry : std::filesystem::directory_iterator(kWorked)) {
    if (entry.path().extension() != ".py") continue;
    const std::string text = slurp(entry.path());
    const auto a = identify_anchors(parse(text));
    const auto b = identify_anchors(parse(text));
    EXPECT_EQ(formal_summary(a), formal_summary(b));
    ASSERT_EQ(a.formal.size(), b.formal.size());
    for (std::size_t i = 0; i < a.formal.size(); ++i) EXPECT_EQ(a.formal[i].address, b.formal[i].address);
    EXPECT_EQ(canonical_names(a), canonical_names(b));
  }
}

// Random state assignments survive render + re-parse with the same ordering;
// only states change.
TEST(AnchorIndex, EmbedDetectSymmetry) {
  Rng rng(42);
  const std::vector<std::string> files = {"w02.py", "w03.py", "w05.py", "w10.py", "w11.py"};
  for (const std::string& f : files) {
    const auto program = parse(slurp(kWorked / f), f);
    const auto before = identify_anchors(program);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<int> fs(before.formal.size()), ns(before.natural.size());
      for (int& s : fs) s = static_cast<int>(rng.below(2));
      for (int& s : ns) s = static_cast<int>(rng.below(2));
      py::Module tree = program.tree;
      apply_formal_states(tree, before, fs);
      apply_natural_states(tree, before, ns, default_suffix_table());
      const auto after = identify_anchors(parse(render(tree)));
      ASSERT_EQ(after.formal.size(), before.formal.size()) << f;
      ASSERT_EQ(canonical_names(after), canonical_names(before)) << f;
      for (std::size_t i = 0; i < fs.size(); ++i) {
        EXPECT_EQ(after.formal[i].id, before.formal[i].id);
        EXPECT_EQ(after.formal[i].state, fs[i]) << f << " formal " << i;
      }
      for (std::size_t i = 0; i < ns.size(); ++i) EXPECT_EQ(after.natural[i].state, ns[i]) << f << " natural " << i;
    }
  }
}

TEST(AnchorIndex, LocalVariablesIncludeIneligible) {
  const auto p = parse("def f(name):\n    parts = [name]\n    return f\"{name}\" + str(parts)\n");
  const auto locals = local_variables(p.tree);
  EXPECT_EQ(locals, (std::vector<std::string>{"name", "parts"}));
  // "name" appears in an f-string, so the natural channel leaves it alone
  EXPECT_EQ(canonical_names(identify_anchors(p)), (std::vector<std::string>{"parts"}));
}
