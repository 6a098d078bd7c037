#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <thread>
#include <vector>

#include "pqcoloring/construction.hpp"

namespace pqc {

inline uint64_t binomial(uint64_t n, uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
  }
  if (acc > ~uint64_t{0}) throw std::overflow_error("binomial overflow");
  return static_cast<uint64_t>(acc);
}

/// A total symmetric edge coloring with opaque dense ids, the common input
/// of the verifier.
class EdgeColoring {
 public:
  explicit EdgeColoring(uint32_t n, uint32_t fill = 0)
      : n_(n), ids_(size_t{n} * n, fill) {
    for (uint32_t u = 0; u < n; ++u) ids_[size_t{u} * n + u] = kNoColor;
  }

  static EdgeColoring rainbow(uint32_t n) {
    EdgeColoring g(n);
    uint32_t next = 0;
    for (uint32_t u = 0; u < n; ++u)
      for (uint32_t v = u + 1; v < n; ++v) g.set_color(u, v, next++);
    return g;
  }

  static EdgeColoring from(const Construction& c) {
    EdgeColoring g(c.vertex_count());
    g.ids_ = c.color_table();
    return g;
  }

  uint32_t n() const { return n_; }
  uint32_t color(uint32_t u, uint32_t v) const {
    return ids_[size_t{u} * n_ + v];
  }
  void set_color(uint32_t u, uint32_t v, uint32_t c) {
    ids_[size_t{u} * n_ + v] = c;
    ids_[size_t{v} * n_ + u] = c;
  }
  const uint32_t* data() const { return ids_.data(); }

  uint32_t distinct_colors() const {
    std::set<uint32_t> seen;
    for (uint32_t u = 0; u < n_; ++u)
      for (uint32_t v = u + 1; v < n_; ++v) seen.insert(color(u, v));
    return static_cast<uint32_t>(seen.size());
  }

 private:
  uint32_t n_;
  std::vector<uint32_t> ids_;
};

struct VerifyReport {
  uint32_t n = 0;
  uint32_t p = 0;
  uint32_t q_min = 0;
  uint64_t cliques_checked = 0;
  uint32_t min_colors_seen = 0;
  std::optional<std::array<uint32_t, 5>> witness;  // first failing p-subset
  uint32_t distinct_colors_total = 0;
  double elapsed_seconds = 0.0;

  bool pass() const { return min_colors_seen >= q_min; }
};

namespace detail {

struct VerifySlice {
  uint32_t min_colors = ~0u;
  std::optional<std::array<uint32_t, 5>> witness;
  uint64_t count = 0;
};

/// Scans all 5-subsets with first index in [a_begin, a_end). Subsets are
/// visited in lexicographic order, so the first recorded witness is the
/// lexicographically least failing subset of the slice.
inline VerifySlice verify_slice_p5(const uint32_t* ids, uint32_t n,
                                   uint32_t q_min, uint32_t a_begin,
                                   uint32_t a_end) {
  VerifySlice out;
  std::array<uint32_t, 10> set{};
  for (uint32_t a = a_begin; a < a_end; ++a) {
    const uint32_t* ra = ids + size_t{a} * n;
    for (uint32_t b = a + 1; b < n; ++b) {
      const uint32_t* rb = ids + size_t{b} * n;
      set[0] = ra[b];
      for (uint32_t c = b + 1; c < n; ++c) {
        const uint32_t* rc = ids + size_t{c} * n;
        uint32_t n3 = 1;
        const uint32_t ac = ra[c], bc = rb[c];
        if (ac != set[0]) set[n3++] = ac;
        if (bc != set[0] && (n3 < 2 || bc != set[1])) set[n3++] = bc;
        for (uint32_t d = c + 1; d < n; ++d) {
          const uint32_t* rd = ids + size_t{d} * n;
          uint32_t n4 = n3;
          const uint32_t nd[3] = {ra[d], rb[d], rc[d]};
          for (uint32_t t = 0; t < 3; ++t) {
            bool fresh = true;
            for (uint32_t s = 0; s < n4; ++s)
              if (set[s] == nd[t]) {
                fresh = false;
                break;
              }
            if (fresh) set[n4++] = nd[t];
          }
          for (uint32_t e = d + 1; e < n; ++e) {
            uint32_t n5 = n4;
            const uint32_t ne[4] = {ra[e], rb[e], rc[e], rd[e]};
            for (uint32_t t = 0; t < 4; ++t) {
              bool fresh = true;
              for (uint32_t s = 0; s < n5; ++s)
                if (set[s] == ne[t]) {
                  fresh = false;
                  break;
                }
              if (fresh) set[n5++] = ne[t];
            }
            ++out.count;
            if (n5 < out.min_colors) out.min_colors = n5;
            if (n5 < q_min && !out.witness)
              out.witness = std::array<uint32_t, 5>{a, b, c, d, e};
          }
        }
      }
    }
  }
  return out;
}

/// Generic subset walk for p != 5.
inline void verify_rec(const uint32_t* ids, uint32_t n, uint32_t p,
                       uint32_t q_min, std::array<uint32_t, 5>& verts,
                       std::array<uint32_t, 10>& set, uint32_t depth,
                       uint32_t nset, VerifySlice& out) {
  if (depth == p) {
    ++out.count;
    if (nset < out.min_colors) out.min_colors = nset;
    if (nset < q_min && !out.witness) {
      out.witness = std::array<uint32_t, 5>{};
      std::copy(verts.begin(), verts.begin() + p, out.witness->begin());
    }
    return;
  }
  const uint32_t first = depth == 0 ? 0 : verts[depth - 1] + 1;
  for (uint32_t v = first; v + (p - depth - 1) < n; ++v) {
    verts[depth] = v;
    uint32_t added = 0;
    for (uint32_t i = 0; i < depth; ++i) {
      const uint32_t c = ids[size_t{verts[i]} * n + v];
      bool fresh = true;
      for (uint32_t s = 0; s < nset + added; ++s)
        if (set[s] == c) {
          fresh = false;
          break;
        }
      if (fresh) set[nset + added++] = c;
    }
    verify_rec(ids, n, p, q_min, verts, set, depth + 1, nset + added, out);
  }
}

}  // namespace detail

/// Exhaustive check that every p-clique spans at least q_min colors.
/// Deterministic: the reported minimum is exact and the witness (when the
/// check fails) is the lexicographically first failing subset, independent
/// of the thread count.
inline VerifyReport verify(const EdgeColoring& coloring, uint32_t p,
                           uint32_t q_min, unsigned threads = 0) {
  const uint32_t n = coloring.n();
  if (p < 2 || p > 5) throw std::invalid_argument("verify: p must be 2..5");
  if (p > n) throw std::invalid_argument("verify: p exceeds vertex count");

  const auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  report.n = n;
  report.p = p;
  report.q_min = q_min;
  report.distinct_colors_total = coloring.distinct_colors();

  detail::VerifySlice merged;
  if (p != 5) {
    std::array<uint32_t, 5> verts{};
    std::array<uint32_t, 10> set{};
    detail::verify_rec(coloring.data(), n, p, q_min, verts, set, 0, 0, merged);
  } else {
    unsigned t = threads ? threads : std::thread::hardware_concurrency();
    t = std::max(1u, std::min<unsigned>(t, n >= 4 ? n - 4 : 1));

    // Split the range of leading indices into chunks of roughly equal work;
    // the slice starting at a covers C(n-1-a, 4) subsets.
    std::vector<uint32_t> cut(t + 1, 0);
    const uint64_t total = binomial(n, 5);
    uint64_t acc = 0;
    unsigned next_cut = 1;
    for (uint32_t a = 0; a + 4 < n && next_cut < t; ++a) {
      acc += binomial(n - 1 - a, 4);
      if (acc * t >= total * next_cut) cut[next_cut++] = a + 1;
    }
    while (next_cut <= t) cut[next_cut++] = n >= 4 ? n - 4 : 0;

    std::vector<detail::VerifySlice> slices(t);
    std::vector<std::thread> workers;
    for (unsigned i = 0; i < t; ++i) {
      workers.emplace_back([&, i] {
        slices[i] = detail::verify_slice_p5(coloring.data(), n, q_min, cut[i],
                                            cut[i + 1]);
      });
    }
    for (std::thread& w : workers) w.join();
    for (const detail::VerifySlice& s : slices) {
      merged.count += s.count;
      merged.min_colors = std::min(merged.min_colors, s.min_colors);
      if (s.witness && (!merged.witness || *s.witness < *merged.witness))
        merged.witness = s.witness;
    }
  }

  report.cliques_checked = merged.count;
  report.min_colors_seen = merged.min_colors == ~0u ? 0 : merged.min_colors;
  report.witness = merged.witness;
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

/// Human-readable report, elapsed time included.
inline void write_report(std::ostream& os, const VerifyReport& r) {
  os << "(p,q)-verification: n=" << r.n << " p=" << r.p << " q_min=" << r.q_min
     << '\n'
     << "cliques_checked=" << r.cliques_checked << '\n'
     << "min_colors_seen=" << r.min_colors_seen << '\n'
     << "distinct_colors_total=" << r.distinct_colors_total << '\n';
  os << "witness=";
  if (r.witness) {
    for (uint32_t i = 0; i < r.p; ++i) os << (i ? " " : "") << (*r.witness)[i];
  } else {
    os << "none";
  }
  os << '\n'
     << "result=" << (r.pass() ? "PASS" : "FAIL") << '\n'
     << "elapsed_seconds=" << r.elapsed_seconds << '\n';
}

/// Machine-readable summary; excludes timing so identical runs produce
/// byte-identical files.
inline void write_summary(std::ostream& os, const VerifyReport& r) {
  os << "n=" << r.n << '\n'
     << "p=" << r.p << '\n'
     << "q_min=" << r.q_min << '\n'
     << "cliques_checked=" << r.cliques_checked << '\n'
     << "min_colors_seen=" << r.min_colors_seen << '\n'
     << "distinct_colors_total=" << r.distinct_colors_total << '\n';
  os << "witness=";
  if (r.witness) {
    for (uint32_t i = 0; i < r.p; ++i) os << (i ? " " : "") << (*r.witness)[i];
  } else {
    os << "none";
  }
  os << '\n' << "result=" << (r.pass() ? "PASS" : "FAIL") << '\n';
}

}  // namespace pqc
