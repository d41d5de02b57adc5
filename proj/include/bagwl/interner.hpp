#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

namespace bagwl {

using ColorId = std::uint32_t;

// Leading word of every key. Keeps keys of different shapes disjoint when
// several refiners share one interner.
enum class KeyKind : std::uint32_t {
  kNodeInit = 1,
  kWl = 2,
  kPairInit = 3,
  kFwl = 4,
  kNeedle = 5,
  kDss = 6,
  kSubgraph = 7,
};

/// Canonical key: a flat word sequence. Multisets are written as
/// (length, sorted values...) so the encoding is prefix-free.
using Key = std::vector<std::uint32_t>;

class KeyBuilder {
 public:
  KeyBuilder& start(KeyKind kind) {
    words_.clear();
    words_.push_back(static_cast<std::uint32_t>(kind));
    return *this;
  }
  KeyBuilder& add(std::uint32_t w) {
    words_.push_back(w);
    return *this;
  }
  /// Appends a multiset; `values` is sorted in place.
  KeyBuilder& add_multiset(std::span<std::uint32_t> values);
  KeyBuilder& add_sorted(std::span<const std::uint32_t> values);

  const Key& key() const { return words_; }

 private:
  Key words_;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept;
};

/// Injective map from canonical keys to dense color ids (0, 1, 2, ... in
/// first-seen order). Single owner; not thread-safe.
class ColorInterner {
 public:
  ColorId intern(const Key& key);
  std::size_t size() const { return table_.size(); }

 private:
  std::unordered_map<Key, ColorId, KeyHash> table_;
};

/// Node set partition induced by a coloring, with classes renumbered in
/// first-seen order so equal partitions compare equal element-wise.
struct NodePartition {
  std::vector<std::uint32_t> class_of;
  std::uint32_t class_count = 0;

  static NodePartition from_colors(std::span<const ColorId> colors);
};

/// True iff p and q group the nodes identically. Throws UsageError when the
/// node counts differ.
bool partitions_equal(const NodePartition& p, const NodePartition& q);

/// True iff every class of `finer` lies inside one class of `coarser`.
bool partition_refines(const NodePartition& finer, const NodePartition& coarser);

std::uint32_t count_distinct(std::span<const ColorId> colors);

/// Sorted copy; the multiset of colors of a graph/bag.
std::vector<ColorId> sorted_multiset(std::span<const ColorId> colors);

}  // namespace bagwl
