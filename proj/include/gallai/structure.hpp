#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gallai/detectors.hpp"
#include "gallai/graph_core.hpp"

namespace gallai {

// ---------------------------------------------------------------------------
// Rainbow-P4-free colorings

enum class P4Case { at_most_two_colors, three_one_factors, rainbow_p4_found, unclassified };

struct P4Classification {
  P4Case kind = P4Case::unclassified;
  std::optional<Embedding> rainbow;
};

inline bool is_perfect_matching(const ColoredComplete& c, Color col) {
  for (Vertex v = 0; v < c.order(); ++v)
    if (c.degree(col, v) != 1) return false;
  return true;
}

inline P4Classification classify_p4free(const ColoredComplete& c) {
  if (c.order() < 4) throw InvalidArgument("classify_p4free needs n >= 4");
  if (c.used_color_count() <= 2) return {P4Case::at_most_two_colors, std::nullopt};
  if (c.order() == 4 && c.used_color_count() == 3) {
    bool all = true;
    ColorMask used = c.used_colors();
    for (int col = 1; col <= c.declared_colors(); ++col)
      if ((used >> col) & 1) all = all && is_perfect_matching(c, static_cast<Color>(col));
    if (all) return {P4Case::three_one_factors, std::nullopt};
  }
  if (auto p = find_rainbow_path(c, 3)) return {P4Case::rainbow_p4_found, p};
  return {P4Case::unclassified, std::nullopt};
}

// ---------------------------------------------------------------------------
// Rainbow-P5-free colorings: the six structural cases, each checked on its own
// and up to renaming of colors.

struct CaseAWitness {
  int colors_used = 0;
};
struct CaseBWitness {
  Color dominant = 0;
  std::vector<std::pair<Color, VertexSet>> classes;  // V^(j) for j != dominant
};
struct CaseCWitness {
  Vertex apex = 0;
  Color color = 0;
};
struct CaseDWitness {
  Vertex a = 0, b = 0, c = 0;
  Color c1 = 0, c2 = 0, c3 = 0, c4 = 0;  // roles of colors 1..4
  std::vector<std::pair<Vertex, Vertex>> e4;
};
struct CaseEWitness {
  Vertex a = 0, b = 0, c = 0, d = 0;
  bool cd_in_e2 = false;
  Color c1 = 0, c2 = 0, c3 = 0, c4 = 0;
};
struct CaseFWitness {
  std::array<Vertex, 5> labeling{};  // vertices playing a, b, c, d, e
  std::array<Color, 4> colors{};     // colors playing 1..4
};

struct StructureReport {
  std::optional<CaseAWitness> a;
  std::optional<CaseBWitness> b;
  std::optional<CaseCWitness> c;
  std::optional<CaseDWitness> d;
  std::optional<CaseEWitness> e;
  std::optional<CaseFWitness> f;

  bool empty() const { return !a && !b && !c && !d && !e && !f; }
  /// Satisfied case letters in order, e.g. "bc".
  std::string cases() const {
    std::string s;
    if (a) s += 'a';
    if (b) s += 'b';
    if (c) s += 'c';
    if (d) s += 'd';
    if (e) s += 'e';
    if (f) s += 'f';
    return s;
  }
};

namespace detail {

inline std::vector<Color> used_list(const ColoredComplete& c) {
  std::vector<Color> out;
  for (int col = 1; col <= c.declared_colors(); ++col)
    if (c.class_size(static_cast<Color>(col)) > 0) out.push_back(static_cast<Color>(col));
  return out;
}

inline std::optional<CaseBWitness> case_b(const ColoredComplete& c) {
  auto used = used_list(c);
  for (Color dom : used) {
    CaseBWitness w{dom, {}};
    VertexSet covered = 0;
    bool ok = true;
    for (Color col : used) {
      if (col == dom) continue;
      VertexSet s = c.incident(col);
      if (s & covered) {
        ok = false;
        break;
      }
      covered |= s;
      w.classes.emplace_back(col, s);
    }
    if (ok) return w;
  }
  return std::nullopt;
}

inline std::optional<CaseCWitness> case_c(const ColoredComplete& c) {
  const int n = c.order();
  for (Vertex a = 0; a < n; ++a) {
    int col = -1;
    bool mono = true;
    for (Vertex i = 0; i < n && mono; ++i) {
      if (i == a) continue;
      for (Vertex j = i + 1; j < n; ++j) {
        if (j == a) continue;
        if (col < 0) col = c.color(i, j);
        else if (c.color(i, j) != col) {
          mono = false;
          break;
        }
      }
    }
    if (mono && col > 0) return CaseCWitness{a, static_cast<Color>(col)};
  }
  return std::nullopt;
}

inline bool edge_set_is(const ColoredComplete& c, Color col,
                        std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  if (c.class_size(col) != edges.size()) return false;
  for (auto [u, v] : edges)
    if (c.color(u, v) != col) return false;
  return true;
}

inline std::optional<CaseDWitness> case_d(const ColoredComplete& c) {
  const int n = c.order();
  if (c.used_color_count() != 4) return std::nullopt;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = 0; b < n; ++b)
      for (Vertex cc = b + 1; cc < n; ++cc) {
        if (a == b || a == cc) continue;
        Color c2 = c.color(a, b), c3 = c.color(a, cc), c4 = c.color(b, cc);
        if (c2 == c3 || c2 == c4 || c3 == c4) continue;
        if (!edge_set_is(c, c2, {{a, b}}) || !edge_set_is(c, c3, {{a, cc}})) continue;
        // remaining color classes: c4 (bc plus edges at a) and the rest in c1
        Color c1 = 0;
        bool ok = true;
        std::vector<std::pair<Vertex, Vertex>> e4;
        for (Vertex i = 0; i < n && ok; ++i)
          for (Vertex j = i + 1; j < n && ok; ++j) {
            Color col = c.color(i, j);
            if (col == c2 || col == c3) continue;
            if (col == c4) {
              bool at_a = i == a || j == a;
              bool is_bc = (i == std::min(b, cc) && j == std::max(b, cc));
              if (!at_a && !is_bc) ok = false;
              else e4.emplace_back(i, j);
              continue;
            }
            if (c1 == 0) c1 = col;
            else if (col != c1) ok = false;
          }
        if (ok && c1 != 0)
          return CaseDWitness{a, b, cc, c1, c2, c3, c4, std::move(e4)};
      }
  return std::nullopt;
}

inline std::optional<CaseEWitness> case_e(const ColoredComplete& c) {
  const int n = c.order();
  if (c.used_color_count() != 4) return std::nullopt;
  std::vector<Vertex> vs(n);
  for (Vertex v = 0; v < n; ++v) vs[v] = v;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = 0; b < n; ++b)
      for (Vertex cc = 0; cc < n; ++cc)
        for (Vertex d = 0; d < n; ++d) {
          if (a == b || a == cc || a == d || b == cc || b == d || cc == d) continue;
          Color c2 = c.color(a, b), c3 = c.color(a, cc), c4 = c.color(a, d);
          if (c2 == c3 || c2 == c4 || c3 == c4) continue;
          if (!edge_set_is(c, c3, {{a, cc}, {b, d}})) continue;
          if (!edge_set_is(c, c4, {{a, d}, {b, cc}})) continue;
          bool cd2 = c.color(cc, d) == c2;
          if (cd2 ? !edge_set_is(c, c2, {{a, b}, {cc, d}}) : !edge_set_is(c, c2, {{a, b}}))
            continue;
          Color c1 = 0;
          bool ok = true;
          for (Vertex i = 0; i < n && ok; ++i)
            for (Vertex j = i + 1; j < n && ok; ++j) {
              Color col = c.color(i, j);
              if (col == c2 || col == c3 || col == c4) continue;
              if (c1 == 0) c1 = col;
              else if (col != c1) ok = false;
            }
          if (ok && c1 != 0) return CaseEWitness{a, b, cc, d, cd2, c1, c2, c3, c4};
        }
  return std::nullopt;
}

inline std::optional<CaseFWitness> case_f(const ColoredComplete& c) {
  if (c.order() != 5 || c.used_color_count() != 4) return std::nullopt;
  // class lists over roles a..e = 0..4
  static constexpr std::array<std::array<std::pair<int, int>, 3>, 3> kTriples{{
      {{{0, 3}, {0, 4}, {1, 2}}},
      {{{1, 3}, {1, 4}, {0, 2}}},
      {{{2, 3}, {2, 4}, {0, 1}}},
  }};
  std::array<Vertex, 5> perm{0, 1, 2, 3, 4};
  do {
    std::array<Color, 4> role{};
    bool ok = true;
    for (int cls = 0; cls < 3 && ok; ++cls) {
      auto [u0, v0] = kTriples[cls][0];
      Color col = c.color(perm[u0], perm[v0]);
      role[cls] = col;
      if (c.class_size(col) != 3) ok = false;
      for (auto [u, v] : kTriples[cls])
        if (c.color(perm[u], perm[v]) != col) ok = false;
    }
    if (!ok) continue;
    role[3] = c.color(perm[3], perm[4]);
    if (c.class_size(role[3]) != 1) continue;
    if (role[0] == role[1] || role[0] == role[2] || role[1] == role[2]) continue;
    return CaseFWitness{perm, role};
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace detail

/// Checks each structural case for a coloring of K_n, n >= 5, and reports all
/// that hold, with witness data. Throws InternalInconsistency if the report
/// disagrees with the rainbow-P5 detector in the direction the structure
/// theorem guarantees (no rainbow P5 but no case holds).
inline StructureReport classify_p5free(const ColoredComplete& c) {
  if (c.order() < 5) throw InvalidArgument("classify_p5free needs n >= 5");
  StructureReport r;
  if (c.used_color_count() <= 3) r.a = CaseAWitness{c.used_color_count()};
  r.b = detail::case_b(c);
  r.c = detail::case_c(c);
  r.d = detail::case_d(c);
  r.e = detail::case_e(c);
  r.f = detail::case_f(c);
  bool rainbow = find_rainbow_path(c, 4).has_value();
  if (!rainbow && r.empty())
    throw InternalInconsistency("rainbow-P5-free coloring matches no structural case");
  if (rainbow && !r.empty())
    throw InternalInconsistency("structural case " + r.cases() +
                                " holds for a coloring with a rainbow P5");
  return r;
}

/// Re-evaluates each recorded witness against its case predicate.
inline bool verify_report(const ColoredComplete& c, const StructureReport& r) {
  if (r.a && (c.used_color_count() > 3 || r.a->colors_used != c.used_color_count())) return false;
  if (r.b) {
    VertexSet seen = 0;
    for (auto [col, s] : r.b->classes) {
      if (col == r.b->dominant || s != c.incident(col) || (s & seen)) return false;
      seen |= s;
    }
    if (static_cast<int>(r.b->classes.size()) + 1 != c.used_color_count()) return false;
  }
  if (r.c) {
    for (Vertex i = 0; i < c.order(); ++i)
      for (Vertex j = i + 1; j < c.order(); ++j)
        if (i != r.c->apex && j != r.c->apex && c.color(i, j) != r.c->color) return false;
  }
  if (r.d) {
    const auto& w = *r.d;
    if (!detail::edge_set_is(c, w.c2, {{w.a, w.b}}) || !detail::edge_set_is(c, w.c3, {{w.a, w.c}}))
      return false;
    if (c.color(w.b, w.c) != w.c4 || c.class_size(w.c4) != w.e4.size()) return false;
    for (auto [u, v] : w.e4)
      if (c.color(u, v) != w.c4) return false;
    if (c.class_size(w.c1) + 2 + w.e4.size() != pair_count(c.order())) return false;
  }
  if (r.e) {
    const auto& w = *r.e;
    if (!detail::edge_set_is(c, w.c3, {{w.a, w.c}, {w.b, w.d}}) ||
        !detail::edge_set_is(c, w.c4, {{w.a, w.d}, {w.b, w.c}}))
      return false;
    if (w.cd_in_e2 ? !detail::edge_set_is(c, w.c2, {{w.a, w.b}, {w.c, w.d}})
                   : !detail::edge_set_is(c, w.c2, {{w.a, w.b}}))
      return false;
    if (c.class_size(w.c1) + 4 + (w.cd_in_e2 ? 2 : 1) != pair_count(c.order())) return false;
  }
  if (r.f) {
    const auto& p = r.f->labeling;
    const auto& col = r.f->colors;
    if (c.order() != 5) return false;
    auto is = [&](int u, int v, int role) { return c.color(p[u], p[v]) == col[role]; };
    bool ok = is(0, 3, 0) && is(0, 4, 0) && is(1, 2, 0) && is(1, 3, 1) && is(1, 4, 1) &&
              is(0, 2, 1) && is(2, 3, 2) && is(2, 4, 2) && is(0, 1, 2) && is(3, 4, 3);
    if (!ok) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Gallai partitions

struct GallaiPartition {
  std::vector<VertexSet> blocks;
};

/// Both conditions: at most two colors between blocks, and each pair of
/// blocks joined in a single color. Rejects non-partitions and the trivial
/// one-block partition.
inline bool verify_gallai_partition(const ColoredComplete& c, const GallaiPartition& p) {
  if (p.blocks.size() < 2) throw InvalidArgument("Gallai partition needs at least two blocks");
  VertexSet seen = 0;
  for (VertexSet b : p.blocks) {
    if (b == 0 || (b & seen)) throw InvalidArgument("blocks must be nonempty and disjoint");
    seen |= b;
  }
  if (seen != c.all_vertices()) throw InvalidArgument("blocks must cover every vertex");
  ColorMask between = 0;
  for (std::size_t i = 0; i < p.blocks.size(); ++i)
    for (std::size_t j = i + 1; j < p.blocks.size(); ++j) {
      int col = -1;
      for (VertexSet x = p.blocks[i]; x; x &= x - 1)
        for (VertexSet y = p.blocks[j]; y; y &= y - 1) {
          int cc = c.color(lowest(x), lowest(y));
          if (col < 0) col = cc;
          else if (cc != col) return false;
        }
      between |= ColorMask{1} << col;
    }
  return popcount(between) <= 2;
}

inline constexpr int kMaxGallaiOrder = 10;

/// Searches set partitions (restricted growth order) with incremental
/// pruning on the single-color-per-block-pair condition.
inline std::optional<GallaiPartition> find_gallai_partition(const ColoredComplete& c) {
  const int n = c.order();
  if (n > kMaxGallaiOrder) throw UnsupportedSize("find_gallai_partition supports n <= 10");
  if (n < 2) return std::nullopt;
  std::vector<int> block_of(n, -1);
  std::vector<VertexSet> blocks;
  // pair_color[i][j]: color joining blocks i and j, 0 when undecided
  std::vector<std::vector<int>> pair_color(n, std::vector<int>(n, 0));
  std::optional<GallaiPartition> found;

  auto assign = [&](auto&& self, Vertex v) -> bool {
    if (v == n) {
      if (blocks.size() < 2) return false;
      GallaiPartition gp{blocks};
      if (verify_gallai_partition(c, gp)) {
        found = gp;
        return true;
      }
      return false;
    }
    const int nb = static_cast<int>(blocks.size());
    for (int b = 0; b <= nb; ++b) {
      if (b == nb) blocks.push_back(0);
      // colors towards vertices of other blocks must agree with the pair color
      std::vector<std::pair<int, int>> touched;
      bool ok = true;
      for (Vertex u = 0; u < v && ok; ++u) {
        int bu = block_of[u];
        if (bu == b) continue;
        int col = c.color(u, v);
        int& pc = pair_color[std::min(bu, b)][std::max(bu, b)];
        if (pc == 0) {
          pc = col;
          touched.emplace_back(std::min(bu, b), std::max(bu, b));
        } else if (pc != col) {
          ok = false;
        }
      }
      if (ok) {
        ColorMask between = 0;
        for (int i = 0; i < static_cast<int>(blocks.size()); ++i)
          for (int j = i + 1; j < static_cast<int>(blocks.size()); ++j)
            if (pair_color[i][j]) between |= ColorMask{1} << pair_color[i][j];
        ok = popcount(between) <= 2;
      }
      if (ok) {
        block_of[v] = b;
        blocks[b] |= bit(v);
        if (self(self, v + 1)) return true;
        blocks[b] &= ~bit(v);
        block_of[v] = -1;
      }
      for (auto [i, j] : touched) pair_color[i][j] = 0;
      if (b == nb) blocks.pop_back();
    }
    return false;
  };
  assign(assign, 0);
  return found;
}

/// True iff some triangle has three distinct colors.
inline bool has_rainbow_triangle(const ColoredComplete& c) {
  for (Vertex i = 0; i < c.order(); ++i)
    for (Vertex j = i + 1; j < c.order(); ++j)
      for (Vertex l = j + 1; l < c.order(); ++l) {
        Color x = c.color(i, j), y = c.color(i, l), z = c.color(j, l);
        if (x != y && x != z && y != z) return true;
      }
  return false;
}

}  // namespace gallai
