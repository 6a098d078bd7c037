#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pqcoloring/small_coloring.hpp"

namespace pqc {

enum class PatternKind : uint8_t { ClassPattern, MonoOddCycle, ColorCycle };

/// Which projection of the product coloring a pattern is proved against.
/// Every pattern is also sound on the product coloring itself.
enum class ColorScope : uint8_t { Cfls, Algebraic, Product };

struct PatternEdge {
  uint8_t u = 0;
  uint8_t v = 0;

  friend bool operator==(const PatternEdge&, const PatternEdge&) = default;
};

/// A forbidden configuration: either a small colored-graph template whose
/// classes must receive equal colors under some injective vertex map, or one
/// of the two structural detectors.
struct ForbiddenPattern {
  std::string name;
  PatternKind kind = PatternKind::ClassPattern;
  int k = 0;  // vertex count for class patterns
  std::vector<std::vector<PatternEdge>> classes;
  std::vector<std::pair<int, int>> distinct_classes;
  ColorScope scope = ColorScope::Cfls;
};

inline void validate_pattern(const ForbiddenPattern& p) {
  if (p.name.empty()) throw std::invalid_argument("pattern without a name");
  if (p.kind != PatternKind::ClassPattern) return;
  if (p.k < 3 || p.k > 5)
    throw std::invalid_argument(p.name + ": vertex count must be 3..5");
  if (p.classes.empty())
    throw std::invalid_argument(p.name + ": class pattern without classes");
  std::set<std::pair<int, int>> seen;
  for (const auto& cls : p.classes) {
    if (cls.empty()) throw std::invalid_argument(p.name + ": empty class");
    for (const PatternEdge& e : cls) {
      if (e.u == e.v || e.u >= p.k || e.v >= p.k)
        throw std::invalid_argument(p.name + ": edge off the vertex set");
      const int lo = std::min(e.u, e.v), hi = std::max(e.u, e.v);
      if (!seen.insert({lo, hi}).second)
        throw std::invalid_argument(p.name + ": classes are not disjoint");
    }
  }
  const int nc = static_cast<int>(p.classes.size());
  for (auto [a, b] : p.distinct_classes)
    if (a < 0 || b < 0 || a >= nc || b >= nc || a == b)
      throw std::invalid_argument(p.name + ": bad distinct_classes entry");
}

/// True iff some color class restricted to the vertex set contains an odd
/// cycle, i.e. is non-bipartite.
inline bool has_mono_odd_cycle(const SmallColoring& g) {
  std::array<uint8_t, 10> palette{};
  int np = 0;
  for (int e = 0; e < g.edge_count(); ++e) {
    bool seen = false;
    for (int s = 0; s < np; ++s) seen |= palette[s] == g.colors[e];
    if (!seen) palette[np++] = g.colors[e];
  }
  for (int s = 0; s < np; ++s) {
    const uint8_t c = palette[s];
    std::array<int8_t, 5> side;
    side.fill(-1);
    for (int start = 0; start < g.k; ++start) {
      if (side[start] >= 0) continue;
      side[start] = 0;
      std::array<int8_t, 5> stack{};
      int top = 0;
      stack[top++] = static_cast<int8_t>(start);
      while (top > 0) {
        const int v = stack[--top];
        for (int w = 0; w < g.k; ++w) {
          if (w == v || g.color(v, w) != c) continue;
          if (side[w] < 0) {
            side[w] = static_cast<int8_t>(1 - side[v]);
            stack[top++] = static_cast<int8_t>(w);
          } else if (side[w] == side[v]) {
            return true;
          }
        }
      }
    }
  }
  return false;
}

struct AuxArc {
  uint8_t from = 0;
  uint8_t to = 0;
  bool odd = false;

  friend auto operator<=>(const AuxArc&, const AuxArc&) = default;
};

namespace detail {

inline void extend_mono_path(const SmallColoring& g, std::array<uint8_t, 5>& seq,
                             std::array<bool, 5>& used, int len,
                             std::set<AuxArc>& arcs) {
  if (len >= 3) {
    const uint8_t path_color = g.color(seq[0], seq[1]);
    arcs.insert(
        {path_color, g.color(seq[len - 1], seq[0]), (len % 2) == 1});
  }
  if (len == g.k) return;
  for (int t = 0; t < g.k; ++t) {
    if (used[t]) continue;
    if (len >= 2 &&
        g.color(seq[len - 1], t) != g.color(seq[0], seq[1]))
      continue;
    seq[len] = static_cast<uint8_t>(t);
    used[t] = true;
    extend_mono_path(g, seq, used, len + 1, arcs);
    used[t] = false;
  }
}

}  // namespace detail

/// Auxiliary digraph on colors: an arc C_i -> C_j with parity of k exists
/// iff some sequence of k >= 3 distinct vertices has all path edges colored
/// C_i and the closing edge colored C_j.
inline std::vector<AuxArc> aux_color_digraph(const SmallColoring& g) {
  std::set<AuxArc> arcs;
  std::array<uint8_t, 5> seq{};
  std::array<bool, 5> used{};
  for (int a = 0; a < g.k; ++a) {
    for (int b = 0; b < g.k; ++b) {
      if (a == b) continue;
      seq[0] = static_cast<uint8_t>(a);
      seq[1] = static_cast<uint8_t>(b);
      used.fill(false);
      used[a] = used[b] = true;
      detail::extend_mono_path(g, seq, used, 2, arcs);
    }
  }
  return {arcs.begin(), arcs.end()};
}

/// True iff the auxiliary digraph contains a directed cycle (self-loops
/// included) with at least one Odd arc.
inline bool has_odd_color_cycle(const SmallColoring& g) {
  const std::vector<AuxArc> arcs = aux_color_digraph(g);
  std::array<uint8_t, 10> nodes{};
  int nn = 0;
  auto node_id = [&](uint8_t c) {
    for (int i = 0; i < nn; ++i)
      if (nodes[i] == c) return i;
    nodes[nn] = c;
    return nn++;
  };
  bool reach[10][10] = {};
  for (const AuxArc& a : arcs) reach[node_id(a.from)][node_id(a.to)] = true;
  for (int m = 0; m < nn; ++m)
    for (int i = 0; i < nn; ++i)
      for (int j = 0; j < nn; ++j)
        reach[i][j] = reach[i][j] || (reach[i][m] && reach[m][j]);
  for (const AuxArc& a : arcs) {
    if (!a.odd) continue;
    const int u = node_id(a.from), w = node_id(a.to);
    if (u == w || reach[w][u]) return true;
  }
  return false;
}

using VertexMap = std::array<int8_t, 5>;

namespace detail {

struct CompiledEdge {
  uint8_t u, v, cls;
};

struct ClassMatcher {
  const SmallColoring& g;
  const ForbiddenPattern& p;
  std::array<CompiledEdge, 10> edges{};
  std::array<uint8_t, 6> depth_begin{};  // edges with max endpoint == d
  VertexMap map{};
  std::array<bool, 5> used{};
  std::array<int16_t, 10> class_color{};

  ClassMatcher(const SmallColoring& gg, const ForbiddenPattern& pp)
      : g(gg), p(pp) {
    int ne = 0;
    for (int d = 0; d < p.k; ++d) {
      depth_begin[d] = static_cast<uint8_t>(ne);
      for (size_t c = 0; c < p.classes.size(); ++c)
        for (const PatternEdge& e : p.classes[c])
          if (std::max(e.u, e.v) == d)
            edges[ne++] = {std::min(e.u, e.v), std::max(e.u, e.v),
                           static_cast<uint8_t>(c)};
    }
    depth_begin[p.k] = static_cast<uint8_t>(ne);
    class_color.fill(-1);
  }

  bool search(int d) {
    if (d == p.k) {
      for (auto [a, b] : p.distinct_classes)
        if (class_color[a] == class_color[b]) return false;
      return true;
    }
    for (int t = 0; t < g.k; ++t) {
      if (used[t]) continue;
      map[d] = static_cast<int8_t>(t);
      used[t] = true;
      int touched[10];
      int nt = 0;
      bool ok = true;
      for (int e = depth_begin[d]; e < depth_begin[d + 1]; ++e) {
        const CompiledEdge& ce = edges[e];
        const uint8_t col = g.color(map[ce.u], map[ce.v]);
        if (class_color[ce.cls] < 0) {
          class_color[ce.cls] = col;
          touched[nt++] = ce.cls;
        } else if (class_color[ce.cls] != col) {
          ok = false;
          break;
        }
      }
      if (ok && search(d + 1)) return true;
      for (int i = 0; i < nt; ++i) class_color[touched[i]] = -1;
      used[t] = false;
    }
    return false;
  }
};

}  // namespace detail

/// True iff an injective map from pattern vertices to coloring vertices
/// exists under which all edges within each class receive equal colors and
/// any distinct_classes constraints hold. Invariant under relabeling of
/// pattern vertices and renaming of colors.
inline bool matches(const SmallColoring& g, const ForbiddenPattern& p,
                    VertexMap* witness = nullptr) {
  switch (p.kind) {
    case PatternKind::MonoOddCycle:
      return has_mono_odd_cycle(g);
    case PatternKind::ColorCycle:
      return has_odd_color_cycle(g);
    case PatternKind::ClassPattern:
      break;
  }
  validate_pattern(p);
  if (p.k > g.k) return false;
  detail::ClassMatcher m(g, p);
  if (!m.search(0)) return false;
  if (witness) *witness = m.map;
  return true;
}

/// First violated pattern name in list order, or nullopt.
inline std::optional<std::string> scan(
    const SmallColoring& g, std::span<const ForbiddenPattern> patterns) {
  for (const ForbiddenPattern& p : patterns)
    if (matches(g, p)) return p.name;
  return std::nullopt;
}

/// Names of all patterns in the list that the coloring contains.
inline std::vector<std::string> matching_names(
    const SmallColoring& g, std::span<const ForbiddenPattern> patterns) {
  std::vector<std::string> out;
  for (const ForbiddenPattern& p : patterns)
    if (matches(g, p)) out.push_back(p.name);
  return out;
}

}  // namespace pqc
