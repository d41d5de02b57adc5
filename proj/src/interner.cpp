#include "bagwl/interner.hpp"

#include <algorithm>
#include <string>

#include "bagwl/graph.hpp"

namespace bagwl {

KeyBuilder& KeyBuilder::add_multiset(std::span<std::uint32_t> values) {
  std::sort(values.begin(), values.end());
  return add_sorted(values);
}

KeyBuilder& KeyBuilder::add_sorted(std::span<const std::uint32_t> values) {
  words_.push_back(static_cast<std::uint32_t>(values.size()));
  words_.insert(words_.end(), values.begin(), values.end());
  return *this;
}

std::size_t KeyHash::operator()(const Key& k) const noexcept {
  // 64-bit mix per word (splitmix64 finalizer).
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ k.size();
  for (std::uint32_t w : k) {
    std::uint64_t z = h + w + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    h = z ^ (z >> 31);
  }
  return static_cast<std::size_t>(h);
}

ColorId ColorInterner::intern(const Key& key) {
  auto it = table_.find(key);
  if (it != table_.end()) return it->second;
  const auto id = static_cast<ColorId>(table_.size());
  table_.emplace(key, id);
  return id;
}

NodePartition NodePartition::from_colors(std::span<const ColorId> colors) {
  NodePartition p;
  p.class_of.reserve(colors.size());
  std::unordered_map<ColorId, std::uint32_t> renumber;
  for (ColorId c : colors) {
    auto [it, inserted] = renumber.try_emplace(c, p.class_count);
    if (inserted) ++p.class_count;
    p.class_of.push_back(it->second);
  }
  return p;
}

bool partitions_equal(const NodePartition& p, const NodePartition& q) {
  if (p.class_of.size() != q.class_of.size()) {
    throw UsageError("partitions over different node counts (" +
                     std::to_string(p.class_of.size()) + " vs " +
                     std::to_string(q.class_of.size()) + ")");
  }
  // Both are in first-seen normal form.
  return p.class_count == q.class_count && p.class_of == q.class_of;
}

bool partition_refines(const NodePartition& finer, const NodePartition& coarser) {
  if (finer.class_of.size() != coarser.class_of.size()) {
    throw UsageError("partitions over different node counts");
  }
  std::vector<std::int64_t> image(finer.class_count, -1);
  for (std::size_t v = 0; v < finer.class_of.size(); ++v) {
    auto& slot = image[finer.class_of[v]];
    if (slot < 0) {
      slot = coarser.class_of[v];
    } else if (slot != coarser.class_of[v]) {
      return false;
    }
  }
  return true;
}

std::uint32_t count_distinct(std::span<const ColorId> colors) {
  std::vector<ColorId> tmp(colors.begin(), colors.end());
  std::sort(tmp.begin(), tmp.end());
  return static_cast<std::uint32_t>(std::unique(tmp.begin(), tmp.end()) - tmp.begin());
}

std::vector<ColorId> sorted_multiset(std::span<const ColorId> colors) {
  std::vector<ColorId> out(colors.begin(), colors.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bagwl
