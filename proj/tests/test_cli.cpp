#include <gtest/gtest.h>

#include <fstream>

#include "cli.hpp"

using namespace sbc;
using namespace sbc::cli;

namespace {

Json golden(const std::string& name) {
  std::ifstream in(std::string(SBC_GOLDEN_DIR) + "/" + name + ".json");
  EXPECT_TRUE(in.good()) << name;
  return Json::parse(in);
}

}  // namespace

TEST(Golden, RestrictAtFour) {
  EXPECT_EQ(cmd_restrict(4, 0, false).to_json(false), golden("restrict_4_0"));
  EXPECT_EQ(cmd_restrict(4, 1, false).to_json(false), golden("restrict_4_1"));
}

TEST(Golden, ProfilesAtEight) {
  EXPECT_EQ(cmd_restrict(8, 2, true).to_json(false), golden("restrict_8_2_profile"));
  EXPECT_EQ(cmd_restrict(8, 3, true).to_json(false), golden("restrict_8_3_profile"));
}

TEST(Golden, LinearThresholdsHset) {
  EXPECT_EQ(cmd_linear(4, 1).to_json(false), golden("linear_4_1"));
  EXPECT_EQ(cmd_thresholds(8, std::nullopt).to_json(false), golden("thresholds_8"));
  EXPECT_EQ(cmd_thresholds(4, std::nullopt).to_json(false), golden("thresholds_4"));
  EXPECT_EQ(cmd_hset(4, 1).to_json(false), golden("hset_4_1"));
}

TEST(Commands, Deterministic) {
  EXPECT_EQ(cmd_restrict(12, 5, false).to_json(false).dump(), cmd_restrict(12, 5, false).to_json(false).dump());
  EXPECT_EQ(cmd_linear(12, 5).to_json(false).dump(), cmd_linear(12, 5).to_json(false).dump());
  const auto keys = cmd_linear(4, 1).to_json();
  std::vector<std::string> order;
  for (const auto& [k, v] : keys.items()) order.push_back(k);
  EXPECT_EQ(order, (std::vector<std::string>{"command", "inputs", "result", "provenance", "timing"}));
}

TEST(Commands, Linear) {
  EXPECT_EQ(cmd_linear(8, 0).result["bits"], "(0,0,0)");
  const auto r = cmd_linear(12, 5, Mode::both);
  EXPECT_EQ(r.provenance, "both-agree");
  for (const auto& row : r.result["profile"]) EXPECT_EQ(row["multiplicity"], 1);
  EXPECT_EQ(r.result["profile"].size(), 8u);
}

TEST(Commands, Coeff) {
  const auto r = cmd_coeff(3, 1, {1, 0}, Mode::both);
  EXPECT_EQ(r.result["multiplicity"], 1);
  EXPECT_EQ(cmd_coeff(7, 3, {1, 1, 0}, Mode::both).result["multiplicity"], 2);
  EXPECT_THROW(cmd_coeff(7, 3, {1, 1}), input_error);
  EXPECT_THROW(cmd_coeff(7, 3, {4, 0, 0}), input_error);
}

TEST(Commands, RestrictModes) {
  const auto both = cmd_restrict(8, 5, true, Mode::both);
  EXPECT_EQ(both.result["profile"], cmd_restrict(8, 2, true).result["profile"]);
  const auto formula = cmd_restrict(8, 2, false, Mode::formula);
  EXPECT_EQ(formula.result["degree2_distinct"], 2);
  EXPECT_THROW(cmd_restrict(64, 1, true), resource_limit);
  EXPECT_THROW(cmd_restrict(8, 8, true), input_error);
}

TEST(Commands, Thresholds) {
  const auto r = cmd_thresholds(12, 3u);
  ASSERT_EQ(r.result["rows"].size(), 1u);
  EXPECT_EQ(r.result["rows"][0]["T"], 10);
  EXPECT_EQ(r.result["rows"][0]["tau_match"], true);

  const auto big = cmd_thresholds(128, std::nullopt);
  const auto& rows = big.result["rows"];
  EXPECT_EQ(rows.back()["T"], 102);
  bool marked = false;
  for (const auto& row : rows) marked = marked || row["status"] == "needs-oracle@2^6";
  EXPECT_TRUE(marked);

  const auto both = cmd_thresholds(16, std::nullopt, Mode::both);
  EXPECT_EQ(both.result["rows"][5]["T"], 13);
  EXPECT_THROW(cmd_thresholds(12, 4u), input_error);
}

TEST(Commands, Verify) {
  const auto r = cmd_verify(8, {});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.result["passed"], true);
  EXPECT_EQ(r.result["suites"].size(), verify::suite_names().size());
  EXPECT_THROW(cmd_verify(64, {}), resource_limit);
  EXPECT_THROW(cmd_verify(8, {"nope"}), input_error);
}

TEST(Formats, CsvAndPretty) {
  const auto r = cmd_restrict(8, 2, true);
  EXPECT_EQ(format_csv(r.table), "degree,distinct,total\n1,1,1\n2,2,2\n4,3,4\n");
  const auto pretty = format_pretty(r);
  EXPECT_NE(pretty.find("degree  distinct  total"), std::string::npos);
  EXPECT_EQ(format_csv(Table{{"a"}, {{"x,y"}}}), "a\n\"x,y\"\n");
}
