#include <gtest/gtest.h>

#include <map>

#include "bagwl/graph.hpp"
#include "bagwl/interner.hpp"
#include "bagwl/rng.hpp"

using namespace bagwl;

TEST(Interner, DenseIdsInFirstSeenOrder) {
  ColorInterner in;
  EXPECT_EQ(in.intern({1, 5}), 0u);
  EXPECT_EQ(in.intern({1, 6}), 1u);
  EXPECT_EQ(in.intern({1, 5}), 0u);
  EXPECT_EQ(in.size(), 2u);
}

TEST(Interner, BijectionProperty) {
  Rng rng(3);
  ColorInterner in;
  std::map<Key, ColorId> seen;
  std::map<ColorId, Key> back;
  for (int i = 0; i < 5000; ++i) {
    Key k(1 + rng.below(4));
    for (auto& w : k) w = static_cast<std::uint32_t>(rng.below(6));
    const ColorId id = in.intern(k);
    auto [it, fresh] = seen.emplace(k, id);
    EXPECT_EQ(it->second, id);
    auto [jt, fresh_back] = back.emplace(id, k);
    EXPECT_EQ(jt->second, k);
  }
  EXPECT_EQ(in.size(), seen.size());
}

TEST(KeyBuilder, MultisetsAreOrderInsensitiveAndPrefixFree) {
  KeyBuilder a, b;
  std::vector<std::uint32_t> x{3, 1, 2}, y{2, 3, 1};
  a.start(KeyKind::kWl).add(7).add_multiset(x);
  b.start(KeyKind::kWl).add(7).add_multiset(y);
  EXPECT_EQ(a.key(), b.key());
  // {1} followed by {2} must differ from {1, 2} followed by {}.
  std::vector<std::uint32_t> one{1}, two{2}, both{1, 2}, none;
  a.start(KeyKind::kDss).add_multiset(one).add_multiset(two);
  b.start(KeyKind::kDss).add_multiset(both).add_multiset(none);
  EXPECT_NE(a.key(), b.key());
  a.start(KeyKind::kWl).add(1);
  b.start(KeyKind::kFwl).add(1);
  EXPECT_NE(a.key(), b.key());
}

TEST(Partition, FirstSeenNormalForm) {
  const std::vector<ColorId> c{9, 4, 9, 2};
  const auto p = NodePartition::from_colors(c);
  EXPECT_EQ(p.class_of, (std::vector<std::uint32_t>{0, 1, 0, 2}));
  EXPECT_EQ(p.class_count, 3u);
  EXPECT_EQ(count_distinct(c), 3u);
  EXPECT_EQ(sorted_multiset(c), (std::vector<ColorId>{2, 4, 9, 9}));
}

TEST(Partition, EqualityAndRefinement) {
  const auto p = NodePartition::from_colors(std::vector<ColorId>{1, 1, 2, 2});
  const auto q = NodePartition::from_colors(std::vector<ColorId>{7, 7, 3, 3});
  const auto fine = NodePartition::from_colors(std::vector<ColorId>{1, 2, 3, 3});
  EXPECT_TRUE(partitions_equal(p, q));
  EXPECT_FALSE(partitions_equal(p, fine));
  EXPECT_TRUE(partition_refines(fine, p));
  EXPECT_FALSE(partition_refines(p, fine));
  EXPECT_THROW(partitions_equal(p, NodePartition::from_colors(std::vector<ColorId>{1})),
               UsageError);
}

TEST(Partition, EqualityIsAnEquivalenceProperty) {
  Rng rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.below(6);
    auto draw = [&] {
      std::vector<ColorId> c(n);
      for (auto& x : c) x = static_cast<ColorId>(rng.below(3));
      return NodePartition::from_colors(c);
    };
    const auto a = draw(), b = draw(), c = draw();
    EXPECT_TRUE(partitions_equal(a, a));
    EXPECT_EQ(partitions_equal(a, b), partitions_equal(b, a));
    if (partitions_equal(a, b) && partitions_equal(b, c)) { EXPECT_TRUE(partitions_equal(a, c)); }
    // Mutual refinement is equality.
    EXPECT_EQ(partition_refines(a, b) && partition_refines(b, a), partitions_equal(a, b));
  }
}
