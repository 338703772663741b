#pragma once

// Set partitions of [n], n <= 16, packed as canonical block labels (4 bits per
// symbol, blocks numbered in order of first appearance). The single-block
// partition is exactly the key 0.

#include <cstdint>

namespace starfact::detail {

using PackedPartition = std::uint64_t;

inline int packed_label(PackedPartition p, int i) { return static_cast<int>((p >> (4 * i)) & 0xF); }

inline PackedPartition packed_singletons(int n) {
  PackedPartition p = 0;
  for (int i = 0; i < n; ++i) p |= static_cast<PackedPartition>(i) << (4 * i);
  return p;
}

inline PackedPartition packed_canonical(const int* labels, int n) {
  int rename[16];
  for (int& r : rename) r = -1;
  int next = 0;
  PackedPartition p = 0;
  for (int i = 0; i < n; ++i) {
    int& r = rename[labels[i]];
    if (r < 0) r = next++;
    p |= static_cast<PackedPartition>(r) << (4 * i);
  }
  return p;
}

/// Merge the blocks holding the 0-based symbols a and b.
inline PackedPartition packed_join(PackedPartition p, int n, int a, int b) {
  const int la = packed_label(p, a);
  const int lb = packed_label(p, b);
  if (la == lb) return p;
  int labels[16];
  for (int i = 0; i < n; ++i) {
    const int l = packed_label(p, i);
    labels[i] = (l == lb) ? la : l;
  }
  return packed_canonical(labels, n);
}

inline bool packed_is_single_block(PackedPartition p) { return p == 0; }

} // namespace starfact::detail
