#include <gtest/gtest.h>

#include "sbc/partitions.hpp"

using namespace sbc;

TEST(Partition, NormalizesAndValidates) {
  EXPECT_EQ(Partition({3, 1, 0, 0}).parts(), (std::vector<int>{3, 1}));
  EXPECT_THROW(Partition({1, 2}), input_error);
  EXPECT_THROW(Partition({2, -1}), input_error);
  EXPECT_TRUE(Partition{}.empty());
  EXPECT_EQ(Partition{}.weight(), 0);
  EXPECT_EQ(Partition({6, 1, 1}).str(), "(6,1^2)");
  EXPECT_EQ(Partition{}.str(), "()");
}

TEST(Partition, ConjugateIsInvolution) {
  for (int n = 0; n <= 12; ++n)
    for (const auto& p : partitions_of(n)) {
      EXPECT_EQ(p.conjugate().conjugate(), p);
      EXPECT_EQ(p.conjugate().weight(), n);
    }
  EXPECT_EQ(Partition({3, 1}).conjugate(), Partition({2, 1, 1}));
}

TEST(Partition, CountsMatchPartitionNumbers) {
  const std::vector<std::size_t> p{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  for (int n = 0; n <= 12; ++n) EXPECT_EQ(partitions_of(n).size(), p[static_cast<std::size_t>(n)]);
}

TEST(Hook, RoundTrip) {
  for (int n = 1; n <= 20; ++n)
    for (int x = 0; x < n; ++x) {
      const HookPartition h(n, x);
      EXPECT_TRUE(h.to_partition().is_hook());
      EXPECT_EQ(HookPartition::from_partition(h.to_partition()), h);
    }
  EXPECT_EQ(HookPartition(8, 2).str(), "(6,1^2)");
  EXPECT_THROW(HookPartition(4, 4), input_error);
  EXPECT_THROW(HookPartition::from_partition(Partition({2, 2})), input_error);
  EXPECT_FALSE(Partition{}.is_hook());
}

TEST(Hook, Conjugate) {
  EXPECT_EQ(conjugate_hook(HookPartition(8, 2)), HookPartition(8, 5));
  EXPECT_EQ(conjugate_hook(HookPartition(8, 2)).str(), "(3,1^5)");
  for (int n = 1; n <= 64; ++n)
    for (int x = 0; x < n; ++x) {
      const HookPartition h(n, x);
      EXPECT_EQ(conjugate_hook(conjugate_hook(h)), h);
      EXPECT_EQ(conjugate_hook(h).to_partition(), h.to_partition().conjugate());
    }
  EXPECT_EQ(conjugate_hook(HookPartition(5, 0)), HookPartition(5, 4));
}

TEST(BinaryExpansion, Examples) {
  EXPECT_EQ(binary_expansion(12).exponents, (std::vector<unsigned>{3, 2}));
  EXPECT_EQ(binary_expansion(1).exponents, (std::vector<unsigned>{0}));
  for (unsigned k = 0; k < 20; ++k) EXPECT_EQ(binary_expansion(1 << k).exponents, (std::vector<unsigned>{k}));
  for (int n = 1; n <= 500; ++n) {
    const auto e = binary_expansion(n);
    EXPECT_EQ(e.value(), n);
    for (std::size_t i = 1; i < e.size(); ++i) EXPECT_GT(e.exponents[i - 1], e.exponents[i]);
  }
  EXPECT_THROW(binary_expansion(0), input_error);
}

TEST(BinaryDigits, Examples) {
  EXPECT_EQ(binary_digits(1, 2), (std::vector<std::uint8_t>{0, 0, 1}));
  EXPECT_EQ(binary_digits(0, 4), std::vector<std::uint8_t>(5, 0));
  EXPECT_EQ(binary_digits(7, 2), std::vector<std::uint8_t>(3, 1));
  EXPECT_THROW(binary_digits(8, 2), input_error);
  EXPECT_THROW(binary_digits(-1, 2), input_error);
  for (unsigned w = 1; w <= 8; ++w)
    for (long long x = 0; x < (1LL << (w + 1)); ++x) {
      const auto d = binary_digits(x, w);
      ASSERT_EQ(d.size(), w + 1);
      long long v = 0;
      for (auto b : d) v = 2 * v + b;
      EXPECT_EQ(v, x);
    }
}

TEST(Box, Membership) {
  EXPECT_TRUE(in_box(Partition({3, 1}), 3));
  EXPECT_FALSE(in_box(Partition({4}), 3));
  EXPECT_TRUE(in_box(HookPartition(7, 6).to_partition(), 7));
  for (int n = 1; n <= 12; ++n)
    for (const auto& h : all_hooks(n))
      for (int t = 1; t <= n; ++t) EXPECT_EQ(in_box(h, t), in_box(h.to_partition(), t));
}

TEST(Box, HooksInBox) {
  EXPECT_EQ(hooks_in_box(4, 3), (std::vector<HookPartition>{{4, 1}, {4, 2}}));
  EXPECT_EQ(hooks_in_box(8, 8).size(), 8u);
  EXPECT_THROW(hooks_in_box(4, 5), input_error);
  EXPECT_THROW(hooks_in_box(4, 0), input_error);
  for (int n = 1; n <= 64; ++n)
    for (int t = 1; t <= n; ++t) {
      const auto hooks = hooks_in_box(n, t);
      std::size_t brute = 0;
      for (int x = 0; x < n; ++x) brute += in_box(HookPartition(n, x), t);
      EXPECT_EQ(hooks.size(), brute);
      if (2 * t > n) {
        EXPECT_EQ(static_cast<int>(hooks.size()), std::min(2 * t - n, n));
      }
      EXPECT_TRUE(std::is_sorted(hooks.begin(), hooks.end()));
    }
}

TEST(Box, Partitions) {
  for (int n = 1; n <= 10; ++n)
    for (int t = 1; t <= n; ++t) {
      std::size_t brute = 0;
      for (const auto& p : partitions_of(n)) brute += in_box(p, t);
      EXPECT_EQ(box_partitions(n, t).size(), brute);
    }
}

TEST(Binomial, Values) {
  EXPECT_EQ(binomial(1, 0), 1);
  EXPECT_EQ(binomial(3, -1), 0);
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(3, 4), 0);
  EXPECT_EQ(binomial(-1, 0), 0);
  EXPECT_EQ(binomial(100, 50), Integer("100891344545564193334812497256"));
  for (int t = 1; t <= 30; ++t)
    for (int y = 1; y < t; ++y) EXPECT_EQ(binomial(t, y), binomial(t - 1, y - 1) + binomial(t - 1, y));
}

TEST(Composition, Weight) {
  EXPECT_EQ(Composition({3, 0, 2}).weight(), 5);
  EXPECT_THROW(Composition({1, -1}), input_error);
}
