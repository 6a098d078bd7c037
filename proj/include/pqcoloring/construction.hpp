#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pqcoloring/algebraic.hpp"
#include "pqcoloring/bit_vertex.hpp"
#include "pqcoloring/cfls.hpp"
#include "pqcoloring/field.hpp"

namespace pqc {

inline constexpr uint32_t kNoColor = 0xffffffffu;

inline uint32_t ceil_log2(uint32_t q) {
  if (q < 2) throw std::invalid_argument("ceil_log2 needs q >= 2");
  return static_cast<uint32_t>(std::bit_width(q - 1));
}

/// Minimal positive beta with 2*ceil(log2 q) <= beta^2.
inline uint32_t choose_beta(uint32_t q) {
  const uint32_t need = 2 * ceil_log2(q);
  uint32_t beta = 1;
  while (beta * beta < need) ++beta;
  return beta;
}

/// Packs the ranks of the two coordinates into the leading bits of a
/// beta^2-bit string, zero padded. The packing is order preserving: lex
/// order on (x1, x2) equals integer order of the embedded string.
inline BitVertex embed_vertex(const Vector2& v, uint32_t beta) {
  const uint32_t q = v.x1.modulus;
  detail::same_modulus(v.x1, v.x2);
  const uint32_t t = ceil_log2(q);
  const uint32_t len = beta * beta;
  if (len < 2 * t) throw std::invalid_argument("beta too small for the field");
  if (len > 64) throw std::invalid_argument("beta too large");
  const uint64_t bits = (uint64_t{rank(v.x1)} << (len - t)) |
                        (uint64_t{rank(v.x2)} << (len - 2 * t));
  return {bits, beta};
}

struct ProductColor {
  CflsColor cfls;
  AlgColor alg;

  friend auto operator<=>(const ProductColor&, const ProductColor&) = default;
};

/// Evaluates the product color of one edge from scratch.
class ProductColorer {
 public:
  explicit ProductColorer(uint32_t q)
      : field_(q), st_(field_), beta_(choose_beta(q)) {}

  uint32_t q() const { return field_.order(); }
  uint32_t beta() const { return beta_; }
  const PrimeField& field() const { return field_; }
  const StTable& st() const { return st_; }

  ProductColor color(const Vector2& u, const Vector2& v) const {
    return {phi(embed_vertex(u, beta_), embed_vertex(v, beta_)),
            chi(st_, u, v)};
  }

 private:
  PrimeField field_;
  StTable st_;
  uint32_t beta_;
};

inline ProductColor color_edge(const ProductColorer& colorer, const Vector2& u,
                               const Vector2& v) {
  return colorer.color(u, v);
}

inline std::string to_string(const ProductColor& c) {
  return "phi=" + to_string(c.cfls) + " chi=" + to_string(c.alg);
}

/// The full edge coloring of K_{q^2}: vertices in lex order of their
/// vectors, every edge colored, colors interned to dense ids in row-major
/// first-encounter order. Also keeps the two projections interned
/// separately. Immutable once built; parallel readers need no locking.
class Construction {
 public:
  static Construction build(uint32_t q) { return Construction(q); }

  uint32_t q() const { return colorer_.q(); }
  uint32_t beta() const { return colorer_.beta(); }
  uint32_t vertex_count() const { return n_; }
  uint64_t edge_count() const { return uint64_t{n_} * (n_ - 1) / 2; }

  const ProductColorer& colorer() const { return colorer_; }

  Vector2 vertex(uint32_t index) const {
    if (index >= n_) throw std::out_of_range("vertex index");
    const PrimeField& f = colorer_.field();
    return {f.element(index / q()), f.element(index % q())};
  }

  const BitVertex& embedding(uint32_t index) const {
    return embeddings_.at(index);
  }

  uint32_t color_id(uint32_t u, uint32_t v) const {
    return product_table_[size_t{u} * n_ + v];
  }
  uint32_t cfls_id(uint32_t u, uint32_t v) const {
    return cfls_table_[size_t{u} * n_ + v];
  }
  uint32_t alg_id(uint32_t u, uint32_t v) const {
    return alg_table_[size_t{u} * n_ + v];
  }

  uint32_t distinct_colors() const {
    return static_cast<uint32_t>(product_palette_.size());
  }
  uint32_t distinct_cfls_colors() const {
    return static_cast<uint32_t>(cfls_palette_.size());
  }
  uint32_t distinct_alg_colors() const {
    return static_cast<uint32_t>(alg_palette_.size());
  }

  ProductColor color(uint32_t id) const {
    const auto& [cid, aid] = product_palette_.at(id);
    return {cfls_palette_[cid], alg_palette_[aid]};
  }

  const std::vector<uint32_t>& color_table() const { return product_table_; }

  /// One line per edge, `u v color_id`, after a `# q= n= beta= colors=`
  /// header. Byte-identical across runs for the same q.
  void write_edges(std::ostream& os) const {
    write_header(os);
    for (uint32_t u = 0; u < n_; ++u)
      for (uint32_t v = u + 1; v < n_; ++v)
        os << u << ' ' << v << ' ' << color_id(u, v) << '\n';
  }

  /// Sidecar dictionary: `color_id phi=... chi=...` per dense id.
  void write_dictionary(std::ostream& os) const {
    write_header(os);
    for (uint32_t id = 0; id < distinct_colors(); ++id)
      os << id << ' ' << to_string(color(id)) << '\n';
  }

 private:
  explicit Construction(uint32_t q) : colorer_(q), n_(q * q) {
    if (q > 61)
      throw std::invalid_argument(
          "construction supported for odd primes q <= 61");
    embeddings_.reserve(n_);
    for (uint32_t i = 0; i < n_; ++i) {
      embeddings_.push_back(embed_vertex(vertex(i), beta()));
      if (i > 0 && embeddings_[i - 1].value() >= embeddings_[i].value())
        throw std::logic_error("embedding is not order preserving");
    }

    product_table_.assign(size_t{n_} * n_, kNoColor);
    cfls_table_.assign(size_t{n_} * n_, kNoColor);
    alg_table_.assign(size_t{n_} * n_, kNoColor);

    std::map<CflsColor, uint32_t> cfls_ids;
    std::map<AlgColor, uint32_t> alg_ids;
    std::map<std::pair<uint32_t, uint32_t>, uint32_t> product_ids;
    const StTable& st = colorer_.st();
    for (uint32_t u = 0; u < n_; ++u) {
      const Vector2 vu = vertex(u);
      for (uint32_t v = u + 1; v < n_; ++v) {
        const CflsColor pc = phi(embeddings_[u], embeddings_[v]);
        const AlgColor ac = chi(st, vu, vertex(v));
        const uint32_t cid = intern(cfls_ids, cfls_palette_, pc);
        const uint32_t aid = intern(alg_ids, alg_palette_, ac);
        const uint32_t pid =
            intern(product_ids, product_palette_, std::pair{cid, aid});
        put(product_table_, u, v, pid);
        put(cfls_table_, u, v, cid);
        put(alg_table_, u, v, aid);
      }
    }
  }

  template <class Map, class Palette, class Color>
  static uint32_t intern(Map& ids, Palette& palette, const Color& c) {
    auto [it, inserted] =
        ids.emplace(c, static_cast<uint32_t>(palette.size()));
    if (inserted) palette.push_back(c);
    return it->second;
  }

  void put(std::vector<uint32_t>& table, uint32_t u, uint32_t v, uint32_t id) {
    table[size_t{u} * n_ + v] = id;
    table[size_t{v} * n_ + u] = id;
  }

  void write_header(std::ostream& os) const {
    os << "# q=" << q() << " n=" << n_ << " beta=" << beta()
       << " colors=" << distinct_colors() << '\n';
  }

  ProductColorer colorer_;
  uint32_t n_;
  std::vector<BitVertex> embeddings_;
  std::vector<uint32_t> product_table_, cfls_table_, alg_table_;
  std::vector<CflsColor> cfls_palette_;
  std::vector<AlgColor> alg_palette_;
  std::vector<std::pair<uint32_t, uint32_t>> product_palette_;
};

}  // namespace pqc
