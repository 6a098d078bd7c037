#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>

namespace pqc {

/// A total edge coloring of K_k for k <= 5, edges stored in lexicographic
/// order of their endpoint pairs: (0,1),(0,2),...,(k-2,k-1).
struct SmallColoring {
  int k = 0;
  std::array<uint8_t, 10> colors{};

  static constexpr int edge_index(int i, int j, int k) {
    return i * (2 * k - i - 1) / 2 + (j - i - 1);
  }

  int edge_count() const { return k * (k - 1) / 2; }

  uint8_t color(int i, int j) const {
    if (i > j) std::swap(i, j);
    return colors[edge_index(i, j, k)];
  }

  void set_color(int i, int j, uint8_t c) {
    if (i > j) std::swap(i, j);
    colors[edge_index(i, j, k)] = c;
  }

  int distinct() const {
    int n = 0;
    const int m = edge_count();
    for (int e = 0; e < m; ++e) {
      bool seen = false;
      for (int f = 0; f < e; ++f) seen |= colors[f] == colors[e];
      if (!seen) ++n;
    }
    return n;
  }

  friend bool operator==(const SmallColoring&, const SmallColoring&) = default;
};

/// Builds a K_k coloring from raw (possibly large) color ids given in the
/// fixed edge order, relabeling them 1,2,... by first occurrence.
inline SmallColoring densify(int k, std::span<const uint32_t> raw_ids) {
  SmallColoring g;
  g.k = k;
  const int m = k * (k - 1) / 2;
  if (static_cast<int>(raw_ids.size()) != m)
    throw std::invalid_argument("densify: wrong number of edges");
  std::array<uint32_t, 10> seen{};
  int seen_count = 0;
  for (int e = 0; e < m; ++e) {
    int id = -1;
    for (int s = 0; s < seen_count; ++s)
      if (seen[s] == raw_ids[e]) id = s;
    if (id < 0) {
      id = seen_count;
      seen[seen_count++] = raw_ids[e];
    }
    g.colors[e] = static_cast<uint8_t>(id + 1);
  }
  return g;
}

}  // namespace pqc
