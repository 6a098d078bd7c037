#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

#include "pqcoloring/patterns.hpp"
#include "pqcoloring/small_coloring.hpp"

namespace pqc {

/// Color sequence in fixed edge order, minimized over all vertex
/// permutations with colors relabeled by first occurrence. Two colorings
/// share a key iff they differ by a vertex permutation composed with a
/// color bijection.
struct CanonicalKey {
  int k = 0;
  std::array<uint8_t, 10> seq{};

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

inline CanonicalKey canonical_key(const SmallColoring& g) {
  if (g.k < 2 || g.k > 5) throw std::invalid_argument("canonical_key: k");
  // Pre-densify so the per-permutation relabel table stays tiny.
  std::array<uint32_t, 10> raw{};
  for (int e = 0; e < g.edge_count(); ++e) raw[e] = g.colors[e];
  const SmallColoring dense =
      densify(g.k, std::span<const uint32_t>(raw.data(), g.edge_count()));

  CanonicalKey best;
  best.k = g.k;
  bool have = false;
  std::array<uint8_t, 5> perm{};
  for (int i = 0; i < g.k; ++i) perm[i] = static_cast<uint8_t>(i);
  do {
    std::array<uint8_t, 10> seq{};
    std::array<int8_t, 11> relabel;
    relabel.fill(-1);
    uint8_t next = 1;
    int e = 0;
    for (int i = 0; i < g.k; ++i) {
      for (int j = i + 1; j < g.k; ++j, ++e) {
        const uint8_t c = dense.color(perm[i], perm[j]);
        if (relabel[c] < 0) relabel[c] = static_cast<int8_t>(next++);
        seq[e] = static_cast<uint8_t>(relabel[c]);
      }
    }
    if (!have || seq < best.seq) {
      best.seq = seq;
      have = true;
    }
  } while (std::next_permutation(perm.begin(), perm.begin() + g.k));
  return best;
}

inline SmallColoring canonical_form(const SmallColoring& g) {
  const CanonicalKey key = canonical_key(g);
  SmallColoring out;
  out.k = key.k;
  out.colors = key.seq;
  return out;
}

/// Lists, up to color isomorphism, every edge coloring of K_n with at most
/// m colors containing none of the forbidden configurations. Grows level by
/// level: each listed K_{k-1} coloring is extended by one vertex, the new
/// edges are colored in all inequivalent ways, extensions containing a
/// forbidden configuration are dropped, and survivors are deduplicated by
/// canonical key. Results come back sorted by key.
inline std::vector<SmallColoring> enumerate_colorings(
    int n, int m, std::span<const ForbiddenPattern> forbidden) {
  if (n < 2 || n > 5) throw std::invalid_argument("enumerate: n must be 2..5");
  if (m < 1) throw std::invalid_argument("enumerate: m must be >= 1");

  std::vector<SmallColoring> level;
  SmallColoring k2;
  k2.k = 2;
  k2.colors[0] = 1;
  level.push_back(k2);

  for (int k = 3; k <= n; ++k) {
    std::map<CanonicalKey, SmallColoring> accepted;
    std::set<CanonicalKey> seen;
    for (const SmallColoring& h : level) {
      int used = 0;
      for (int e = 0; e < h.edge_count(); ++e)
        used = std::max(used, static_cast<int>(h.colors[e]));
      // Colors beyond used+ (k-1) fresh labels are equivalent to one of
      // these choices under the final color bijection.
      const int limit = std::min(m, used + (k - 1));

      std::array<uint8_t, 4> assign{};
      const int new_edges = k - 1;
      assign.fill(1);
      while (true) {
        SmallColoring g;
        g.k = k;
        for (int i = 0; i < k - 1; ++i)
          for (int j = i + 1; j < k - 1; ++j) g.set_color(i, j, h.color(i, j));
        for (int i = 0; i < new_edges; ++i) g.set_color(i, k - 1, assign[i]);

        const CanonicalKey key = canonical_key(g);
        if (seen.insert(key).second) {
          if (!scan(g, forbidden)) accepted.emplace(key, canonical_form(g));
        }

        int pos = new_edges - 1;
        while (pos >= 0 && assign[pos] == limit) assign[pos--] = 1;
        if (pos < 0) break;
        ++assign[pos];
      }
    }
    level.clear();
    level.reserve(accepted.size());
    for (auto& [key, g] : accepted) level.push_back(g);
  }
  return level;
}

/// One coloring per line: the canonical key sequence, then the names from
/// `annotate` that the coloring contains (if any).
inline void write_enumeration(std::ostream& os,
                              std::span<const SmallColoring> colorings,
                              std::span<const ForbiddenPattern> annotate) {
  for (const SmallColoring& g : colorings) {
    for (int e = 0; e < g.edge_count(); ++e) {
      if (e) os << ' ';
      os << static_cast<int>(g.colors[e]);
    }
    const std::vector<std::string> names = matching_names(g, annotate);
    if (!names.empty()) {
      os << "  # contains:";
      for (const std::string& n : names) os << ' ' << n;
    }
    os << '\n';
  }
}

}  // namespace pqc
