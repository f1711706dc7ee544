#include <gtest/gtest.h>

#include <filesystem>

#include "dualmark/config.hpp"
#include "dualmark/org_registry.hpp"

using namespace dualmark;

TEST(OrgRegistry, MatrixDeterministicAndFullRank) {
  const OrganizationProfile org{"O1", 7, {0, 1}};
  for (std::size_t l : {1U, 2U, 4U, 7U}) {
    for (std::size_t alpha : {1U, 3U, 4U}) {
      const auto a = matrix_for(org, l, alpha);
      EXPECT_EQ(a, matrix_for(org, l, alpha));
      EXPECT_EQ(a.rows, l);
      EXPECT_EQ(a.cols, l * alpha);
      EXPECT_EQ(gf2_rank(a), l);
    }
  }
}

TEST(OrgRegistry, DistinctSeedsGiveDistinctMatrices) {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const OrganizationProfile a{"A", s, {1}}, b{"B", s + 1000, {1}};
    EXPECT_NE(matrix_for(a, 4, 3), matrix_for(b, 4, 3)) << s;
  }
}

TEST(OrgRegistry, UnitMatrix) {
  const auto u = unit_matrix(2);
  EXPECT_EQ(u.bits, (std::vector<Bits>{{1, 0}, {0, 1}}));
  Rng rng(3);
  for (unsigned v = 0; v < 16; ++v) {
    const Bits r = {static_cast<std::uint8_t>(v >> 3 & 1), static_cast<std::uint8_t>(v >> 2 & 1),
                    static_cast<std::uint8_t>(v >> 1 & 1), static_cast<std::uint8_t>(v & 1)};
    EXPECT_TRUE(verify(unit_matrix(4), r, r));
    EXPECT_EQ(solve_constrained(unit_matrix(4), r, consecutive_groups(4, 1), 1, rng), r);
  }
}

TEST(OrgRegistry, Attribution) {
  EXPECT_TRUE(attribute({}).orgs.empty());
  EXPECT_TRUE(attribute({{"O1", false, false}, {"O2", false, false}}).orgs.empty());
  const auto unique = attribute({{"O1", false, false}, {"O2", true, false}, {"O3", false, false}});
  EXPECT_EQ(unique.attributed(), "O2");
  // an org verifying both channels outranks one verifying a single channel
  const auto ranked = attribute({{"O1", true, true}, {"O2", true, false}});
  EXPECT_EQ(ranked.orgs, std::vector<std::string>{"O1"});
  EXPECT_TRUE(ranked.strict);
  const auto tie = attribute({{"O1", true, false}, {"O2", false, true}});
  EXPECT_EQ(tie.orgs.size(), 2U);
  EXPECT_FALSE(tie.attributed().has_value());
  EXPECT_TRUE(attribute({{"O1", true, false}}, true).orgs.empty());
}

TEST(OrgRegistry, JsonRoundTrip) {
  Registry r({{"O1", 1701, {0, 1}}, {"O2", 18446744073709551615ULL, {1, 0, 1}}});
  const Registry back = Registry::from_json(r.to_json());
  ASSERT_EQ(back.orgs().size(), 2U);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(back.orgs()[i].id, r.orgs()[i].id);
    EXPECT_EQ(back.orgs()[i].seed, r.orgs()[i].seed);
    EXPECT_EQ(back.orgs()[i].fixed_code, r.orgs()[i].fixed_code);
    EXPECT_EQ(matrix_for(back.orgs()[i], 4, 3), matrix_for(r.orgs()[i], 4, 3));
  }
  const auto path = std::filesystem::temp_directory_path() / "dualmark_registry_test.json";
  r.save(path.string());
  EXPECT_EQ(Registry::load(path.string()).to_json(), r.to_json());
  std::filesystem::remove(path);
}

TEST(OrgRegistry, RejectsBadProfiles) {
  Registry r;
  EXPECT_THROW(r.add({"O1", 1, {0, 0}}), RegistryError);
  EXPECT_THROW(r.add({"O1", 1, {1, 0, 1, 0, 1}}), RegistryError);
  EXPECT_THROW(r.add({"", 1, {1}}), RegistryError);
  EXPECT_THROW(Registry::from_json("{\"orgs\": [{\"id\": \"A\"}]}"), RegistryError);
  EXPECT_THROW(r.at("missing"), RegistryError);
  r.add({"O1", 1, {1}});
  r.add({"O1", 2, {1}});
  EXPECT_EQ(r.orgs().size(), 1U);
  EXPECT_EQ(r.at("O1").seed, 2U);
}

TEST(Config, DefaultsAndOverrides) {
  const ToolkitConfig d;
  EXPECT_EQ(d.alpha, 3);
  EXPECT_EQ(d.tau, 2);
  EXPECT_EQ(d.code, CodeId::BCH421);
  EXPECT_NO_THROW(d.validate());
  const auto c = config_from_json(R"({"code": "HAM74", "rules": ["R1", "R6"], "seed": 9, "retry_budget": 4})");
  EXPECT_EQ(c.code, CodeId::HAM74);
  EXPECT_EQ(c.rules, 0x21U);
  EXPECT_EQ(c.seed, 9U);
  EXPECT_EQ(c.retry_budget, 4);
  EXPECT_EQ(config_from_json(config_to_json(c)).rules, c.rules);
}

TEST(Config, Rejections) {
  EXPECT_THROW(config_from_json(R"({"tau": 4, "alpha": 4})"), ConfigError);
  EXPECT_THROW(config_from_json(R"({"tau": 3, "alpha": 2})"), ConfigError);
  EXPECT_THROW(config_from_json(R"({"code": "ORGFIXED"})"), ConfigError);
  EXPECT_THROW(config_from_json(R"({"rules": ["R9"]})"), ConfigError);
  EXPECT_THROW(config_from_json(R"({"colour": 1})"), ConfigError);
  EXPECT_THROW(config_from_json(R"({"suffixes": ["val"]})"), ConfigError);
  EXPECT_THROW(config_from_json("[1"), ConfigError);
}
