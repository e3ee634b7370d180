#include <gtest/gtest.h>

#include "sbc/branching.hpp"
#include "sbc/oracle.hpp"

using namespace sbc;

namespace {

std::map<unsigned, std::size_t> distinct(const HookPartition& h) { return degree_profile(restrict_oracle(h)).distinct; }

}  // namespace

TEST(Oracle, TrivialHook) {
  const auto d = restrict_oracle(HookPartition(4, 0));
  ASSERT_EQ(d.constituents.size(), 1u);
  EXPECT_EQ(d.constituents.begin()->first, to_product_label({LinearLabel{{0, 0}}}));
  EXPECT_EQ(d.constituents.begin()->second, 1);
}

TEST(Oracle, HookThreeOne) {
  const auto d = restrict_oracle(HookPartition(4, 1));
  ASSERT_EQ(d.constituents.size(), 2u);
  const auto ind = ProductIrrLabel{{IrrLabel{2, static_cast<std::uint32_t>(wreath_level(2).ind_index(0, 1))}}};
  EXPECT_EQ(d.multiplicity(to_product_label({LinearLabel{{0, 1}}})), 1);
  EXPECT_EQ(d.multiplicity(ind), 1);
  EXPECT_EQ(ind.str(), "I(X(0),X(1))");
}

TEST(Oracle, ProfilesAtEight) {
  EXPECT_EQ(distinct(HookPartition(8, 2)), (std::map<unsigned, std::size_t>{{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(distinct(HookPartition(8, 3)), (std::map<unsigned, std::size_t>{{0, 1}, {1, 3}, {2, 5}}));
  EXPECT_EQ(distinct(HookPartition(8, 5)), distinct(HookPartition(8, 2)));
}

TEST(Oracle, DegreePreservedUpToSixteen) {
  for (int n = 1; n <= 16; ++n)
    for (const auto& d : restrict_oracle_all(n)) {
      Integer total = 0;
      for (const auto& [label, mult] : d.constituents) {
        EXPECT_GT(mult, 0);
        total += mult * label.degree();
      }
      EXPECT_EQ(total, hook_degree(d.hook));
      for (const auto& [j, c] : degree_profile(d).distinct) EXPECT_LE(j, alpha(n));
    }
}

TEST(Oracle, NonPowerOfTwo) {
  // n = 3: P_3 = P_2 x P_1, and (2,1) restricts to X(0) + X(1).
  const auto d = restrict_oracle(HookPartition(3, 1));
  EXPECT_EQ(d.constituents.size(), 2u);
  for (const auto& [label, mult] : d.constituents) {
    EXPECT_EQ(label.degree(), 1u);
    EXPECT_EQ(mult, 1);
  }
  const SylowGroup g(12);
  EXPECT_EQ(g.order(), sylow_order(12));
  EXPECT_EQ(g.class_count(), 20u * 5u);
  for (std::size_t l = 0; l < g.label_count(); ++l) EXPECT_EQ(g.label_index(g.label(l)), l);
}

TEST(Oracle, BatchEqualsSingle) {
  const auto all = restrict_oracle_batch(10, all_hooks(10));
  for (const auto& d : all) EXPECT_EQ(d.constituents, restrict_oracle(d.hook).constituents);
}

TEST(Oracle, RejectsMismatchedWeight) {
  EXPECT_THROW(restrict_oracle_batch(8, {HookPartition(4, 1)}), input_error);
}

TEST(Oracle, CapRespected) {
  EXPECT_TRUE(within_oracle_cap(32));
  EXPECT_TRUE(within_oracle_cap(31));
  EXPECT_FALSE(within_oracle_cap(33));
  EXPECT_FALSE(within_oracle_cap(64));
  EXPECT_THROW(restrict_oracle(HookPartition(64, 1)), resource_limit);
}
