#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "gallai/graph_core.hpp"

namespace gallai {

enum class PatternKind { rainbow_path, mono_target };

/// A located copy of a pattern. For mono targets vertices[i] hosts pattern
/// vertex i (pattern labeling as in TargetGraph::edges); for rainbow paths
/// the vertices are listed along the path.
struct Embedding {
  PatternKind kind = PatternKind::mono_target;
  std::vector<Vertex> vertices;
  Color color = 0;  // mono only
  std::string pattern;
};

namespace detail {

inline bool distinct(const std::vector<Vertex>& vs) {
  auto s = vs;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

inline bool verify_rainbow_path(const ColoredComplete& c, const Embedding& e, int m) {
  if (static_cast<int>(e.vertices.size()) != m + 1 || !distinct(e.vertices)) return false;
  ColorMask seen = 0;
  for (int i = 0; i < m; ++i) {
    Vertex a = e.vertices[i], b = e.vertices[i + 1];
    if (a < 0 || b < 0 || a >= c.order() || b >= c.order()) return false;
    ColorMask cb = ColorMask{1} << c.color(a, b);
    if (seen & cb) return false;
    seen |= cb;
  }
  return true;
}

inline bool verify_mono(const ColoredComplete& c, const TargetGraph& h, const Embedding& e) {
  if (static_cast<int>(e.vertices.size()) != h.order() || !distinct(e.vertices)) return false;
  for (Vertex v : e.vertices)
    if (v < 0 || v >= c.order()) return false;
  for (auto [a, b] : h.edges())
    if (c.color(e.vertices[a], e.vertices[b]) != e.color) return false;
  return true;
}

}  // namespace detail

/// Re-checks an embedding against the host coloring.
inline bool verify_embedding(const ColoredComplete& c, const Embedding& e,
                             const std::optional<TargetGraph>& h = std::nullopt) {
  if (e.kind == PatternKind::rainbow_path)
    return detail::verify_rainbow_path(c, e, static_cast<int>(e.vertices.size()) - 1);
  return h && detail::verify_mono(c, *h, e);
}

/// Exhaustive DFS for a path with m edges whose colors are pairwise distinct.
/// Vertices are tried in increasing order, so the first path found is the
/// lexicographically least one.
inline std::optional<Embedding> find_rainbow_path(const ColoredComplete& c, int m) {
  const int n = c.order();
  if (m < 1 || m >= n)
    throw InvalidArgument("find_rainbow_path needs 1 <= m <= n-1");
  if (c.used_color_count() < m) return std::nullopt;
  std::vector<Vertex> path;
  path.reserve(m + 1);
  auto dfs = [&](auto&& self, Vertex v, VertexSet used, ColorMask colors) -> bool {
    if (static_cast<int>(path.size()) == m + 1) return true;
    for (Vertex u = 0; u < n; ++u) {
      if (used & bit(u)) continue;
      ColorMask cb = ColorMask{1} << c.color(v, u);
      if (colors & cb) continue;
      path.push_back(u);
      if (self(self, u, used | bit(u), colors | cb)) return true;
      path.pop_back();
    }
    return false;
  };
  for (Vertex s = 0; s < n; ++s) {
    path.assign(1, s);
    if (dfs(dfs, s, bit(s), 0)) {
      Embedding e{PatternKind::rainbow_path, path, 0,
                  "rainbow P" + std::to_string(m + 1)};
      if (!detail::verify_rainbow_path(c, e, m))
        throw InternalInconsistency("rainbow path failed re-verification");
      return e;
    }
  }
  return std::nullopt;
}

inline constexpr int kMaxMatchingSet = 12;

namespace detail {

// True iff the graph induced on `vertices` has a matching with `need` edges.
// Branches on the lowest vertex: left unmatched, or matched to a neighbor.
inline bool has_matching(VertexSet vertices, std::span<const VertexSet> adj, int need) {
  if (need <= 0) return true;
  if (popcount(vertices) < 2 * need) return false;
  // greedy maximal matching: accept early, and 2*greedy bounds the optimum
  int greedy = 0;
  VertexSet rest = vertices;
  while (rest) {
    Vertex v = lowest(rest);
    rest &= ~bit(v);
    VertexSet nb = adj[v] & rest;
    if (nb) {
      rest &= ~bit(lowest(nb));
      ++greedy;
    }
  }
  if (greedy >= need) return true;
  if (2 * greedy < need) return false;
  Vertex v = lowest(vertices);
  VertexSet without = vertices & ~bit(v);
  VertexSet nb = adj[v] & without;
  while (nb) {
    Vertex u = lowest(nb);
    nb &= nb - 1;
    if (has_matching(without & ~bit(u), adj, need - 1)) return true;
  }
  return has_matching(without, adj, need);
}

// One matching of size `need`, as vertex pairs.
inline bool find_matching(VertexSet vertices, std::span<const VertexSet> adj, int need,
                          std::vector<std::pair<Vertex, Vertex>>& out) {
  if (need <= 0) return true;
  if (!has_matching(vertices, adj, need)) return false;
  Vertex v = lowest(vertices);
  VertexSet without = vertices & ~bit(v);
  VertexSet nb = adj[v] & without;
  while (nb) {
    Vertex u = lowest(nb);
    nb &= nb - 1;
    if (has_matching(without & ~bit(u), adj, need - 1)) {
      out.emplace_back(v, u);
      return find_matching(without & ~bit(u), adj, need - 1, out);
    }
  }
  return find_matching(without, adj, need, out);
}

}  // namespace detail

/// Exact maximum matching size of the graph induced on `vertices`.
inline int max_matching(VertexSet vertices, std::span<const VertexSet> adj) {
  if (popcount(vertices) > kMaxMatchingSet)
    throw UnsupportedSize("max_matching supports at most 12 vertices");
  int size = 0;
  while (detail::has_matching(vertices, adj, size + 1)) ++size;
  return size;
}

namespace detail {

// Clique of `size` vertices inside cand, extending `chosen`.
inline bool find_clique(std::span<const VertexSet> adj, VertexSet cand, int size,
                        std::vector<Vertex>& chosen) {
  if (size == 0) return true;
  while (cand) {
    if (popcount(cand) < size) return false;
    Vertex v = lowest(cand);
    cand &= cand - 1;
    chosen.push_back(v);
    if (find_clique(adj, cand & adj[v], size - 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

inline std::optional<Embedding> mono_complete(const ColoredComplete& c, int t,
                                              ColorMask allowed) {
  for (int col = 1; col <= c.declared_colors(); ++col) {
    if (!(allowed & (ColorMask{1} << col))) continue;
    auto adj = c.color_class(static_cast<Color>(col));
    VertexSet cand = 0;
    for (Vertex v = 0; v < c.order(); ++v)
      if (popcount(adj[v]) >= t - 1) cand |= bit(v);
    std::vector<Vertex> chosen;
    if (find_clique(adj, cand, t, chosen))
      return Embedding{PatternKind::mono_target, chosen, static_cast<Color>(col), ""};
  }
  return std::nullopt;
}

inline std::optional<Embedding> mono_star_plus(const ColoredComplete& c, int t, int r,
                                               ColorMask allowed) {
  for (int col = 1; col <= c.declared_colors(); ++col) {
    if (!(allowed & (ColorMask{1} << col))) continue;
    auto adj = c.color_class(static_cast<Color>(col));
    for (Vertex v = 0; v < c.order(); ++v) {
      VertexSet nb = adj[v];
      if (popcount(nb) < t - 1) continue;
      std::vector<std::pair<Vertex, Vertex>> m;
      if (!detail::find_matching(nb, adj, r, m)) continue;
      std::vector<Vertex> verts{v};
      VertexSet used = bit(v);
      for (auto [a, b] : m) {
        verts.push_back(a);
        verts.push_back(b);
        used |= bit(a) | bit(b);
      }
      VertexSet rest = nb & ~used;
      while (static_cast<int>(verts.size()) < t) {
        verts.push_back(lowest(rest));
        rest &= rest - 1;
      }
      return Embedding{PatternKind::mono_target, verts, static_cast<Color>(col), ""};
    }
  }
  return std::nullopt;
}

// A vertex of degree >= t-1 whose neighborhood holds a clique of omega-1
// vertices; the remaining neighbors serve as pendants.
inline std::optional<Embedding> mono_pineapple(const ColoredComplete& c, int t, int omega,
                                               ColorMask allowed) {
  for (int col = 1; col <= c.declared_colors(); ++col) {
    if (!(allowed & (ColorMask{1} << col))) continue;
    auto adj = c.color_class(static_cast<Color>(col));
    for (Vertex v = 0; v < c.order(); ++v) {
      VertexSet nb = adj[v];
      if (popcount(nb) < t - 1) continue;
      std::vector<Vertex> clique;
      if (!find_clique(adj, nb, omega - 1, clique)) continue;
      std::vector<Vertex> verts{v};
      VertexSet used = bit(v);
      for (Vertex u : clique) {
        verts.push_back(u);
        used |= bit(u);
      }
      VertexSet rest = nb & ~used;
      while (static_cast<int>(verts.size()) < t) {
        verts.push_back(lowest(rest));
        rest &= rest - 1;
      }
      return Embedding{PatternKind::mono_target, verts, static_cast<Color>(col), ""};
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Backtracking embedding of an arbitrary pattern into single color classes.
/// Pattern vertices are placed in a connectivity-first, degree-descending
/// order; candidates come from intersecting the host neighborhoods of placed
/// pattern neighbors.
inline std::optional<Embedding> find_mono_copy_generic(const ColoredComplete& c,
                                                       const TargetGraph& h,
                                                       ColorMask allowed = kAllColors) {
  const int t = h.order();
  const int n = c.order();
  if (t > n) return std::nullopt;
  auto edges = h.edges();
  std::vector<VertexSet> padj(t, 0);
  for (auto [a, b] : edges) {
    padj[a] |= bit(b);
    padj[b] |= bit(a);
  }
  if (edges.empty()) {
    std::vector<Vertex> vs(t);
    for (int i = 0; i < t; ++i) vs[i] = i;
    return Embedding{PatternKind::mono_target, vs, 1, ""};
  }
  // placement order
  std::vector<int> order;
  VertexSet placed = 0;
  while (static_cast<int>(order.size()) < t) {
    int best = -1, best_conn = -1, best_deg = -1;
    for (int p = 0; p < t; ++p) {
      if (placed & bit(p)) continue;
      int conn = popcount(padj[p] & placed);
      int deg = popcount(padj[p]);
      if (conn > best_conn || (conn == best_conn && deg > best_deg)) {
        best = p;
        best_conn = conn;
        best_deg = deg;
      }
    }
    order.push_back(best);
    placed |= bit(best);
  }

  std::vector<Vertex> image(t, -1);
  for (int col = 1; col <= c.declared_colors(); ++col) {
    if (!(allowed & (ColorMask{1} << col))) continue;
    if (c.class_size(static_cast<Color>(col)) < edges.size()) continue;
    auto adj = c.color_class(static_cast<Color>(col));
    auto place = [&](auto&& self, std::size_t depth, VertexSet used) -> bool {
      if (depth == order.size()) return true;
      int p = order[depth];
      VertexSet cand = first_vertices(n) & ~used;
      for (int q = 0; q < t; ++q)
        if ((padj[p] & bit(q)) && image[q] >= 0) cand &= adj[image[q]];
      int need = popcount(padj[p]);
      while (cand) {
        Vertex v = lowest(cand);
        cand &= cand - 1;
        if (popcount(adj[v]) < need) continue;
        image[p] = v;
        if (self(self, depth + 1, used | bit(v))) return true;
        image[p] = -1;
      }
      return false;
    };
    std::fill(image.begin(), image.end(), -1);
    if (place(place, 0, 0))
      return Embedding{PatternKind::mono_target, image, static_cast<Color>(col), ""};
  }
  return std::nullopt;
}

inline std::string describe(const TargetGraph& h) {
  return std::visit(
      [](const auto& f) -> std::string {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Complete>) return "K" + std::to_string(f.t);
        else if constexpr (std::is_same_v<T, StarPlus>)
          return "S" + std::to_string(f.t) + "^" + std::to_string(f.r);
        else if constexpr (std::is_same_v<T, Pineapple>)
          return "PA" + std::to_string(f.t) + "," + std::to_string(f.omega);
        else if constexpr (std::is_same_v<T, CompleteMinusMaxMatching>)
          return "K" + std::to_string(f.t) + "-M";
        else
          return "G" + std::to_string(f.t) + "[" + std::to_string(f.edges.size()) + "]";
      },
      h.family());
}

/// Monochromatic copy of h using only colors in `allowed`. Closed families go
/// through dedicated searches (clique, star plus matching, pineapple); other
/// targets through the generic embedding.
inline std::optional<Embedding> find_mono_copy(const ColoredComplete& c, const TargetGraph& h,
                                               ColorMask allowed = kAllColors) {
  if (h.order() > c.order()) return std::nullopt;
  std::optional<Embedding> found = std::visit(
      [&](const auto& f) -> std::optional<Embedding> {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Complete>)
          return detail::mono_complete(c, f.t, allowed);
        else if constexpr (std::is_same_v<T, StarPlus>)
          return detail::mono_star_plus(c, f.t, f.r, allowed);
        else if constexpr (std::is_same_v<T, Pineapple>)
          return detail::mono_pineapple(c, f.t, f.omega, allowed);
        else
          return find_mono_copy_generic(c, h, allowed);
      },
      h.family());
  if (found) {
    found->pattern = "mono " + describe(h);
    if (!detail::verify_mono(c, h, *found))
      throw InternalInconsistency("monochromatic embedding failed re-verification");
  }
  return found;
}

}  // namespace gallai
