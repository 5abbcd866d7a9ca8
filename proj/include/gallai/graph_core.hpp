#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace gallai {

using Vertex = int;
using Color = std::uint8_t;
using VertexSet = std::uint64_t;  // bit v set <=> vertex v present
using ColorMask = std::uint64_t;  // bit c set <=> color c present

inline constexpr int kMaxOrder = 64;
inline constexpr int kMaxColors = 63;
inline constexpr ColorMask kAllColors = ~ColorMask{0};

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnsupportedSize : public std::length_error {
 public:
  using std::length_error::length_error;
};

class NotFound : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline constexpr std::size_t pair_count(int n) {
  return n < 2 ? 0 : static_cast<std::size_t>(n) * (n - 1) / 2;
}

inline constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

inline constexpr VertexSet first_vertices(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

inline int popcount(std::uint64_t x) { return std::popcount(x); }
inline int lowest(std::uint64_t x) { return std::countr_zero(x); }

/// Row-major index of the unordered pair {i, j}, i < j, among the pairs of
/// an n-vertex complete graph.
inline std::size_t edge_index(Vertex i, Vertex j, int n) {
  if (i == j) throw InvalidArgument("edge_index: self-loop");
  if (i < 0 || j < 0 || i >= n || j >= n)
    throw InvalidArgument("edge_index: vertex out of range");
  if (i > j) throw InvalidArgument("edge_index: expects i < j");
  return static_cast<std::size_t>(i) * (2 * n - i - 1) / 2 + (j - i - 1);
}

/// edge_index for a pair given in either order.
inline std::size_t pair_index(Vertex i, Vertex j, int n) {
  return i < j ? edge_index(i, j, n) : edge_index(j, i, n);
}

inline std::pair<Vertex, Vertex> edge_endpoints(std::size_t index, int n) {
  if (index >= pair_count(n))
    throw InvalidArgument("edge_endpoints: index out of range");
  Vertex i = 0;
  std::size_t row = static_cast<std::size_t>(n - 1);
  while (index >= row) {
    index -= row;
    ++i;
    --row;
  }
  return {i, static_cast<Vertex>(i + 1 + index)};
}

/// An edge coloring of K_n with colors drawn from 1..k. Per-color adjacency
/// bitsets are kept in sync with the flat pair array.
class ColoredComplete {
 public:
  ColoredComplete() = default;

  ColoredComplete(int n, int k, std::vector<Color> colors)
      : n_(n), k_(k), colors_(std::move(colors)) {
    validate_shape();
    for (std::size_t e = 0; e < colors_.size(); ++e) {
      if (colors_[e] < 1 || colors_[e] > k_)
        throw InvalidArgument("color " + std::to_string(colors_[e]) +
                              " outside [1.." + std::to_string(k_) + "]");
    }
    rebuild();
  }

  static ColoredComplete monochromatic(int n, int k = 1, Color color = 1) {
    return ColoredComplete(n, k, std::vector<Color>(pair_count(n), color));
  }

  int order() const { return n_; }
  int declared_colors() const { return k_; }

  Color color(Vertex i, Vertex j) const { return colors_[pair_index(i, j, n_)]; }

  void set_color(Vertex i, Vertex j, Color c) {
    if (c < 1 || c > k_) throw InvalidArgument("set_color: color out of range");
    auto e = pair_index(i, j, n_);
    Color old = colors_[e];
    if (old == c) return;
    adj_at(old, i) &= ~bit(j);
    adj_at(old, j) &= ~bit(i);
    adj_at(c, i) |= bit(j);
    adj_at(c, j) |= bit(i);
    colors_[e] = c;
    --class_size_[old];
    ++class_size_[c];
  }

  std::span<const Color> edge_colors() const { return colors_; }

  /// Neighbors of v joined to v by an edge of color c.
  VertexSet neighbors(Color c, Vertex v) const {
    return adj_[static_cast<std::size_t>(c) * n_ + v];
  }
  std::span<const VertexSet> color_class(Color c) const {
    return {adj_.data() + static_cast<std::size_t>(c) * n_,
            static_cast<std::size_t>(n_)};
  }
  int degree(Color c, Vertex v) const { return popcount(neighbors(c, v)); }
  std::size_t class_size(Color c) const { return class_size_[c]; }

  ColorMask used_colors() const {
    ColorMask m = 0;
    for (int c = 1; c <= k_; ++c)
      if (class_size_[c] > 0) m |= ColorMask{1} << c;
    return m;
  }
  int used_color_count() const { return popcount(used_colors()); }
  bool exact() const { return used_color_count() == k_; }

  VertexSet all_vertices() const { return first_vertices(n_); }

  /// Vertices incident with at least one edge of color c.
  VertexSet incident(Color c) const {
    VertexSet s = 0;
    for (Vertex v = 0; v < n_; ++v)
      if (neighbors(c, v)) s |= bit(v);
    return s;
  }

  /// Vertex permutation (new label of v is perm[v]) and optional color
  /// permutation (new color of c is color_perm[c], index 0 unused).
  ColoredComplete permuted(std::span<const Vertex> perm,
                           std::span<const Color> color_perm = {}) const {
    if (static_cast<int>(perm.size()) != n_)
      throw InvalidArgument("permuted: permutation length mismatch");
    std::vector<Color> out(colors_.size());
    for (Vertex i = 0; i < n_; ++i)
      for (Vertex j = i + 1; j < n_; ++j) {
        Color c = color(i, j);
        if (!color_perm.empty()) c = color_perm[c];
        out[pair_index(perm[i], perm[j], n_)] = c;
      }
    return ColoredComplete(n_, k_, std::move(out));
  }

  /// Coloring induced on the listed vertices, relabeled 0..m-1 in order.
  ColoredComplete induced(std::span<const Vertex> vertices) const {
    int m = static_cast<int>(vertices.size());
    std::vector<Color> out(pair_count(m));
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        out[edge_index(a, b, m)] = color(vertices[a], vertices[b]);
    return ColoredComplete(m, k_, std::move(out));
  }

  friend bool operator==(const ColoredComplete& a, const ColoredComplete& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.colors_ == b.colors_;
  }

 private:
  void validate_shape() const {
    if (n_ < 1) throw InvalidArgument("coloring needs at least one vertex");
    if (n_ > kMaxOrder)
      throw UnsupportedSize("coloring order above " + std::to_string(kMaxOrder));
    if (k_ < 1 || k_ > kMaxColors)
      throw InvalidArgument("color count must lie in [1.." +
                            std::to_string(kMaxColors) + "]");
    if (colors_.size() != pair_count(n_))
      throw InvalidArgument("expected " + std::to_string(pair_count(n_)) +
                            " edge colors, got " + std::to_string(colors_.size()));
  }

  VertexSet& adj_at(Color c, Vertex v) {
    return adj_[static_cast<std::size_t>(c) * n_ + v];
  }

  void rebuild() {
    adj_.assign(static_cast<std::size_t>(k_ + 1) * n_, 0);
    class_size_.assign(k_ + 1, 0);
    std::size_t e = 0;
    for (Vertex i = 0; i < n_; ++i)
      for (Vertex j = i + 1; j < n_; ++j, ++e) {
        Color c = colors_[e];
        adj_at(c, i) |= bit(j);
        adj_at(c, j) |= bit(i);
        ++class_size_[c];
      }
  }

  int n_ = 0;
  int k_ = 0;
  std::vector<Color> colors_;
  std::vector<VertexSet> adj_;
  std::vector<std::size_t> class_size_;
};

// ---------------------------------------------------------------------------
// Target graphs

struct Complete {
  int t;
  friend bool operator==(const Complete&, const Complete&) = default;
};
/// Star of order t with r independent edges added between leaves.
struct StarPlus {
  int t;
  int r;
  friend bool operator==(const StarPlus&, const StarPlus&) = default;
};
/// K_omega with t - omega pendant vertices hung on one clique vertex.
struct Pineapple {
  int t;
  int omega;
  friend bool operator==(const Pineapple&, const Pineapple&) = default;
};
/// K_t minus floor(t/2) disjoint edges.
struct CompleteMinusMaxMatching {
  int t;
  friend bool operator==(const CompleteMinusMaxMatching&,
                         const CompleteMinusMaxMatching&) = default;
};
struct Arbitrary {
  int t;
  std::vector<std::pair<Vertex, Vertex>> edges;
  friend bool operator==(const Arbitrary&, const Arbitrary&) = default;
};

class TargetGraph {
 public:
  using Family =
      std::variant<Complete, StarPlus, Pineapple, CompleteMinusMaxMatching, Arbitrary>;

  TargetGraph(Family f) : family_(std::move(f)) { validate(); }  // NOLINT

  static TargetGraph complete(int t) { return TargetGraph(Family{Complete{t}}); }
  static TargetGraph star_plus(int t, int r) { return TargetGraph(Family{StarPlus{t, r}}); }
  static TargetGraph pineapple(int t, int omega) { return TargetGraph(Family{Pineapple{t, omega}}); }
  static TargetGraph complete_minus_matching(int t) {
    return TargetGraph(Family{CompleteMinusMaxMatching{t}});
  }
  static TargetGraph arbitrary(int t, std::vector<std::pair<Vertex, Vertex>> edges) {
    return TargetGraph(Family{Arbitrary{t, std::move(edges)}});
  }

  const Family& family() const { return family_; }

  template <class F>
  bool is() const {
    return std::holds_alternative<F>(family_);
  }
  template <class F>
  const F& as() const {
    return std::get<F>(family_);
  }

  int order() const {
    return std::visit([](const auto& f) { return f.t; }, family_);
  }

  /// Edge list of the pattern on vertices 0..t-1. Closed families use a fixed
  /// labeling: StarPlus center 0 with leaf pairs (1,2),(3,4),...; Pineapple
  /// clique 0..omega-1 with pendants on vertex 0; CompleteMinusMaxMatching
  /// removes (0,1),(2,3),...
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    std::visit(
        [&](const auto& f) {
          using T = std::decay_t<decltype(f)>;
          if constexpr (std::is_same_v<T, Complete>) {
            for (int i = 0; i < f.t; ++i)
              for (int j = i + 1; j < f.t; ++j) out.emplace_back(i, j);
          } else if constexpr (std::is_same_v<T, StarPlus>) {
            for (int j = 1; j < f.t; ++j) out.emplace_back(0, j);
            for (int e = 0; e < f.r; ++e) out.emplace_back(2 * e + 1, 2 * e + 2);
          } else if constexpr (std::is_same_v<T, Pineapple>) {
            for (int i = 0; i < f.omega; ++i)
              for (int j = i + 1; j < f.omega; ++j) out.emplace_back(i, j);
            for (int j = f.omega; j < f.t; ++j) out.emplace_back(0, j);
          } else if constexpr (std::is_same_v<T, CompleteMinusMaxMatching>) {
            for (int i = 0; i < f.t; ++i)
              for (int j = i + 1; j < f.t; ++j)
                if (!(i % 2 == 0 && j == i + 1)) out.emplace_back(i, j);
          } else {
            out = f.edges;
          }
        },
        family_);
    return out;
  }

  std::size_t edge_count() const { return edges().size(); }

  bool is_complete_graph() const {
    return edge_count() == pair_count(order());
  }

  friend bool operator==(const TargetGraph& a, const TargetGraph& b) {
    return a.family_ == b.family_;
  }

 private:
  void validate() {
    std::visit(
        [](auto& f) {
          using T = std::decay_t<decltype(f)>;
          if (f.t < 1) throw InvalidArgument("target order must be positive");
          if (f.t > kMaxOrder) throw UnsupportedSize("target order above 64");
          if constexpr (std::is_same_v<T, Complete>) {
            if (f.t < 2) throw InvalidArgument("K_t needs t >= 2");
          } else if constexpr (std::is_same_v<T, StarPlus>) {
            if (f.t < 2) throw InvalidArgument("S_t^r needs t >= 2");
            if (f.r < 0 || f.t < 2 * f.r + 1)
              throw InvalidArgument("S_t^r needs 0 <= r and t >= 2r+1");
          } else if constexpr (std::is_same_v<T, Pineapple>) {
            if (f.omega < 2) throw InvalidArgument("PA_{t,w} needs w >= 2");
            if (f.t < f.omega + 1) throw InvalidArgument("PA_{t,w} needs t >= w+1");
          } else if constexpr (std::is_same_v<T, CompleteMinusMaxMatching>) {
            if (f.t < 3) throw InvalidArgument("K_t-M needs t >= 3");
          } else {
            std::vector<std::pair<Vertex, Vertex>> seen;
            for (auto& [a, b] : f.edges) {
              if (a == b) throw InvalidArgument("target edge is a self-loop");
              if (a < 0 || b < 0 || a >= f.t || b >= f.t)
                throw InvalidArgument("target edge endpoint out of range");
              if (a > b) std::swap(a, b);
              seen.emplace_back(a, b);
            }
            std::sort(seen.begin(), seen.end());
            if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
              throw InvalidArgument("target edge listed twice");
          }
        },
        family_);
  }

  Family family_;
};

struct TargetProperties {
  int order = 0;
  int max_degree = 0;
  int clique_number = 0;
  friend bool operator==(const TargetProperties&, const TargetProperties&) = default;
};

namespace detail {

inline int max_clique_size(int t, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  std::vector<VertexSet> adj(t, 0);
  for (auto [a, b] : edges) {
    adj[a] |= bit(b);
    adj[b] |= bit(a);
  }
  int best = t > 0 ? 1 : 0;
  // Plain branch and bound; callers keep t small.
  auto grow = [&](auto&& self, VertexSet cand, int size) -> void {
    if (size > best) best = size;
    while (cand) {
      if (size + popcount(cand) <= best) return;
      int v = lowest(cand);
      cand &= cand - 1;
      self(self, cand & adj[v], size + 1);
    }
  };
  grow(grow, first_vertices(t), 0);
  return best;
}

}  // namespace detail

/// Order, maximum degree and clique number. Closed families use their
/// closed forms; arbitrary targets are computed by brute force (t <= 12).
inline TargetProperties target_properties(const TargetGraph& h) {
  return std::visit(
      [&](const auto& f) -> TargetProperties {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Complete>) {
          return {f.t, f.t - 1, f.t};
        } else if constexpr (std::is_same_v<T, StarPlus>) {
          return {f.t, f.t - 1, f.r >= 1 ? 3 : 2};
        } else if constexpr (std::is_same_v<T, Pineapple>) {
          return {f.t, f.t - 1, f.omega};
        } else if constexpr (std::is_same_v<T, CompleteMinusMaxMatching>) {
          // odd t leaves one vertex unmatched with full degree
          return {f.t, f.t % 2 == 1 ? f.t - 1 : f.t - 2, (f.t + 1) / 2};
        } else {
          if (f.t > 12)
            throw UnsupportedSize("arbitrary target properties need t <= 12");
          std::vector<int> deg(f.t, 0);
          for (auto [a, b] : f.edges) {
            ++deg[a];
            ++deg[b];
          }
          int d = f.t > 0 ? *std::max_element(deg.begin(), deg.end()) : 0;
          return {f.t, d, detail::max_clique_size(f.t, f.edges)};
        }
      },
      h.family());
}

}  // namespace gallai
