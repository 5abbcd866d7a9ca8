#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gallai/detectors.hpp"
#include "gallai/graph_core.hpp"
#include "gallai/witness.hpp"

namespace gallai {

/// Inner rule of a blow-up part: a monochromatic clique, or an explicit
/// coloring of the part (its order must equal the part size).
struct Part {
  int size = 1;
  std::variant<Color, ColoredComplete> inner = Color{1};
};

/// Parts plus a rule for edges between parts: one color for every cross
/// edge, or an explicit coloring of the reduced complete graph over parts.
struct BlowupSpec {
  int k = 1;
  std::vector<Part> parts;
  std::variant<Color, ColoredComplete> between = Color{1};
};

inline ColoredComplete blowup(const BlowupSpec& spec) {
  if (spec.parts.empty()) throw InvalidArgument("blowup needs at least one part");
  auto check_color = [&](int c) {
    if (c < 1 || c > spec.k)
      throw InvalidArgument("blowup color " + std::to_string(c) + " outside [1.." +
                            std::to_string(spec.k) + "]");
  };
  std::vector<int> start;
  int n = 0;
  for (const auto& p : spec.parts) {
    if (p.size < 1) throw InvalidArgument("blowup part sizes must be >= 1");
    if (auto* inner = std::get_if<ColoredComplete>(&p.inner)) {
      if (inner->order() != p.size)
        throw InvalidArgument("inner coloring order differs from part size");
      for (Color c : inner->edge_colors()) check_color(c);
    } else {
      check_color(std::get<Color>(p.inner));
    }
    start.push_back(n);
    n += p.size;
  }
  if (n > kMaxOrder) throw UnsupportedSize("blowup order above 64");
  const int parts = static_cast<int>(spec.parts.size());
  if (auto* reduced = std::get_if<ColoredComplete>(&spec.between)) {
    if (reduced->order() != parts)
      throw InvalidArgument("reduced coloring order differs from part count");
    for (Color c : reduced->edge_colors()) check_color(c);
  } else {
    check_color(std::get<Color>(spec.between));
  }
  std::vector<int> part_of(n);
  for (int p = 0; p < parts; ++p)
    for (int i = 0; i < spec.parts[p].size; ++i) part_of[start[p] + i] = p;

  std::vector<Color> colors(pair_count(n));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      int pu = part_of[u], pv = part_of[v];
      Color c;
      if (pu == pv) {
        const auto& inner = spec.parts[pu].inner;
        if (auto* col = std::get_if<Color>(&inner)) c = *col;
        else c = std::get<ColoredComplete>(inner).color(u - start[pu], v - start[pu]);
      } else if (auto* col = std::get_if<Color>(&spec.between)) {
        c = *col;
      } else {
        c = std::get<ColoredComplete>(spec.between).color(pu, pv);
      }
      colors[pair_index(u, v, n)] = c;
    }
  return ColoredComplete(n, spec.k, std::move(colors));
}

/// K_base in base_color plus one extra vertex whose i-th spoke has
/// spoke_colors[i]. The declared color count is the largest color used.
inline ColoredComplete star_augmented(int base, Color base_color,
                                      const std::vector<Color>& spoke_colors) {
  if (base < 1) throw InvalidArgument("star_augmented needs a base of size >= 1");
  if (static_cast<int>(spoke_colors.size()) != base)
    throw InvalidArgument("star_augmented: spoke color count differs from base size");
  int k = base_color;
  for (Color c : spoke_colors) {
    if (c < 1) throw InvalidArgument("star_augmented: colors start at 1");
    k = std::max<int>(k, c);
  }
  const int n = base + 1;
  auto out = ColoredComplete::monochromatic(n, k, base_color);
  for (int i = 0; i < base; ++i) out.set_color(i, base, spoke_colors[i]);
  return out;
}

/// Sizes of `classes` groups that share `total` items as evenly as possible;
/// the lowest-indexed groups receive the extra items.
inline std::vector<int> balanced_sizes(int total, int classes) {
  std::vector<int> out(classes, total / classes);
  for (int i = 0; i < total % classes; ++i) ++out[i];
  return out;
}

/// 2-coloring of K5: the cycle 0-1-2-3-4 in color 2, the pentagram in color 3.
inline ColoredComplete pentagon_k5(Color cycle = 2, Color chords = 3, int k = 3) {
  auto c = ColoredComplete::monochromatic(5, k, cycle);
  for (int i = 0; i < 5; ++i) c.set_color(i, (i + 2) % 5, chords);
  return c;
}

/// Five copies of K_{t-1} in color 1 joined along the 2-colored K5 without a
/// monochromatic triangle.
inline ColoredComplete pentagon_blowup(int t) {
  if (t < 2) throw InvalidArgument("pentagon_blowup needs t >= 2");
  BlowupSpec spec;
  spec.k = 3;
  for (int i = 0; i < 5; ++i) spec.parts.push_back({t - 1, Color{1}});
  spec.between = pentagon_k5();
  return blowup(spec);
}

/// Two copies of a {1,2}-colored base joined completely in color 3.
inline ColoredComplete doubling(const ColoredComplete& base) {
  for (Color c : base.edge_colors())
    if (c != 1 && c != 2) throw InvalidArgument("doubling needs a base colored by {1,2}");
  BlowupSpec spec;
  spec.k = 3;
  auto inner = ColoredComplete(base.order(), 3,
                               std::vector<Color>(base.edge_colors().begin(),
                                                  base.edge_colors().end()));
  spec.parts = {{base.order(), inner}, {base.order(), inner}};
  spec.between = Color{3};
  return blowup(spec);
}

namespace detail {

inline bool circulant_is_r35(int n, const std::vector<int>& diffs) {
  auto c = ColoredComplete::monochromatic(n, 2, 2);
  for (int i = 0; i < n; ++i)
    for (int d : diffs) {
      int j = (i + d) % n;
      if (i != j) c.set_color(i, j, 1);
    }
  return !find_mono_copy(c, TargetGraph::complete(3), ColorMask{1} << 1) &&
         !find_mono_copy(c, TargetGraph::complete(5), ColorMask{1} << 2);
}

inline ColoredComplete circulant(int n, const std::vector<int>& diffs) {
  auto c = ColoredComplete::monochromatic(n, 2, 2);
  for (int i = 0; i < n; ++i)
    for (int d : diffs) {
      int j = (i + d) % n;
      if (i != j) c.set_color(i, j, 1);
    }
  return c;
}

}  // namespace detail

/// 2-coloring of K13 whose color-1 graph is triangle-free and whose color-2
/// graph is K5-free: the circulant on Z_13 with color 1 on differences
/// {1, 5, 8, 12}. Verified on construction; if the check fails, every
/// symmetric difference set is tried.
inline ColoredComplete r35_witness() {
  const int n = 13;
  std::vector<int> diffs{1, 5, 8, 12};
  if (detail::circulant_is_r35(n, diffs)) return detail::circulant(n, diffs);
  for (int mask = 1; mask < (1 << 6); ++mask) {
    std::vector<int> ds;
    for (int d = 1; d <= 6; ++d)
      if (mask & (1 << (d - 1))) {
        ds.push_back(d);
        ds.push_back(n - d);
      }
    if (detail::circulant_is_r35(n, ds)) return detail::circulant(n, ds);
  }
  throw InternalInconsistency("no circulant R(3,5) witness on 13 vertices");
}

// ---------------------------------------------------------------------------
// Named constructions

inline ColoredComplete coloring_from_table(int n, int k,
                                           const std::vector<std::array<int, 3>>& table) {
  std::vector<Color> colors(pair_count(n), 0);
  for (auto [i, j, c] : table) colors[pair_index(i, j, n)] = static_cast<Color>(c);
  for (Color c : colors)
    if (c == 0) throw InternalInconsistency("sporadic table misses a pair");
  return ColoredComplete(n, k, std::move(colors));
}

namespace constructions {

/// Exact 5-coloring of K4 with color 1 a perfect matching.
inline ColoredComplete g1() {
  return coloring_from_table(4, 5, {{0, 1, 1}, {2, 3, 1}, {0, 2, 2}, {0, 3, 3}, {1, 2, 4}, {1, 3, 5}});
}
/// Rainbow K4.
inline ColoredComplete g2() {
  return coloring_from_table(4, 6, {{0, 1, 1}, {2, 3, 2}, {0, 2, 3}, {0, 3, 4}, {1, 2, 5}, {1, 3, 6}});
}
/// 4-coloring of K5 free of rainbow P5 and of monochromatic S_4^1.
inline ColoredComplete f3() {
  return coloring_from_table(5, 4, {{0, 3, 1}, {0, 4, 1}, {1, 2, 1},
                                    {0, 2, 2}, {1, 3, 2}, {1, 4, 2},
                                    {0, 1, 3}, {2, 3, 3}, {2, 4, 3},
                                    {3, 4, 4}});
}
inline ColoredComplete f9() {
  return coloring_from_table(4, 5, {{1, 2, 1}, {1, 3, 1}, {0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {2, 3, 5}});
}
inline ColoredComplete f10() {
  return coloring_from_table(4, 6, {{1, 2, 1}, {0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {2, 3, 5}, {1, 3, 6}});
}
/// The sporadic K5 of the structure theorem, vertices a..e = 0..4.
inline ColoredComplete tw_case_f() {
  return coloring_from_table(5, 4, {{0, 3, 1}, {0, 4, 1}, {1, 2, 1},
                                    {1, 3, 2}, {1, 4, 2}, {0, 2, 2},
                                    {2, 3, 3}, {2, 4, 3}, {0, 1, 3},
                                    {3, 4, 4}});
}

/// K_{t-1} in color 1 plus an apex with spokes colored 2..t.
inline ColoredComplete g3(int t) {
  if (t < 2) throw InvalidArgument("g3 needs t >= 2");
  std::vector<Color> spokes;
  for (int i = 0; i < t - 1; ++i) spokes.push_back(static_cast<Color>(i + 2));
  return star_augmented(t - 1, 1, spokes);
}

/// a-1 copies of K_{t-1}; the copies share colors 2..k as evenly as possible
/// (lowest colors get the extra copy); every cross edge has color 1.
inline ColoredComplete g4(int a, int t, int k) {
  if (a < 3 || t < 2 || k < 2 || k > a)
    throw InvalidArgument("g4 needs a >= 3, t >= 2 and 2 <= k <= a");
  BlowupSpec spec;
  spec.k = k;
  auto per_color = balanced_sizes(a - 1, k - 1);
  for (int j = 0; j < k - 1; ++j)
    for (int copy = 0; copy < per_color[j]; ++copy)
      spec.parts.push_back({t - 1, static_cast<Color>(j + 2)});
  return blowup(spec);
}

/// K_{t-1} in color 1 plus an apex whose t-1 spokes share colors 2..k evenly.
inline ColoredComplete apex_balanced(int t, int k) {
  if (t < 2 || k < 2 || t - 1 < k - 1)
    throw InvalidArgument("apex_balanced needs t-1 >= k-1 >= 1");
  std::vector<Color> spokes;
  auto sizes = balanced_sizes(t - 1, k - 1);
  for (int j = 0; j < k - 1; ++j)
    for (int s = 0; s < sizes[j]; ++s) spokes.push_back(static_cast<Color>(j + 2));
  return star_augmented(t - 1, 1, spokes);
}

inline ColoredComplete g5(int t, int k) { return apex_balanced(t, k); }

/// Blocks U_2..U_k, block i monochromatic in color i, cross edges color 1,
/// with |U_i| = p+1 for the first q blocks and p otherwise, where
/// max_degree - 1 = p(k-2) + q.
inline ColoredComplete g6(int k, int max_degree) {
  if (k < 3) throw InvalidArgument("g6 needs k >= 3");
  int p = (max_degree - 1) / (k - 2);
  int q = (max_degree - 1) % (k - 2);
  if (p < 1) throw InvalidArgument("g6 needs max_degree - 1 >= k - 2");
  BlowupSpec spec;
  spec.k = k;
  for (int i = 2; i <= k; ++i)
    spec.parts.push_back({i <= q + 1 ? p + 1 : p, static_cast<Color>(i)});
  return blowup(spec);
}

inline ColoredComplete three_blocks(int s2, int s3, int s4) {
  BlowupSpec spec;
  spec.k = 4;
  spec.parts = {{s2, Color{2}}, {s3, Color{3}}, {s4, Color{4}}};
  return blowup(spec);
}

/// k = 4 blocks of sizes p+q, p, p where t-2 = 2p+q.
inline ColoredComplete f1(int t) {
  if (t < 4) throw InvalidArgument("f1 needs t >= 4");
  int p = (t - 2) / 2, q = (t - 2) % 2;
  return three_blocks(p + q, p, p);
}
inline ColoredComplete f2(int t) { return apex_balanced(t, 4); }
inline ColoredComplete f4(int t) {
  if (t % 2 == 0 || t < 5) throw InvalidArgument("f4 needs odd t >= 5");
  return three_blocks((t - 1) / 2, (t - 3) / 2, (t - 3) / 2);
}
inline ColoredComplete f5(int t, int r) {
  if (t < 2 || r < 2) throw InvalidArgument("f5 needs t >= 2 and r >= 2");
  return three_blocks(t - 1, r - 1, r - 1);
}
inline ColoredComplete f6(int t) {
  if (t % 2 == 1 || t < 4) throw InvalidArgument("f6 needs even t >= 4");
  return three_blocks((t - 2) / 2, (t - 2) / 2, (t - 2) / 2);
}
inline ColoredComplete f7(int t) { return pentagon_blowup(t); }
inline ColoredComplete f11() { return star_augmented(4, 1, {2, 3, 4, 5}); }

/// The 13-vertex {1,2}-witness joined in color 1 to two cliques of the
/// given size in colors 3 and 4.
inline ColoredComplete r35_with_cliques(int clique) {
  auto core = r35_witness();
  auto inner = ColoredComplete(13, 4, std::vector<Color>(core.edge_colors().begin(),
                                                         core.edge_colors().end()));
  BlowupSpec spec;
  spec.k = 4;
  spec.parts = {{13, inner}, {clique, Color{3}}, {clique, Color{4}}};
  return blowup(spec);
}
inline ColoredComplete f12() { return r35_with_cliques(5); }
inline ColoredComplete f13() { return r35_with_cliques(6); }

}  // namespace constructions

/// Literal tables by name: G1, G2, F3, F9, F10, F11, TW-case-f.
inline ColoredComplete sporadic(const std::string& name) {
  using namespace constructions;
  if (name == "G1") return g1();
  if (name == "G2") return g2();
  if (name == "F3") return f3();
  if (name == "F9") return f9();
  if (name == "F10") return f10();
  if (name == "F11") return f11();
  if (name == "TW-case-f") return tw_case_f();
  throw NotFound("unknown sporadic construction: " + name);
}

/// Named construction with integer parameters (t, a, k, r, delta as needed).
inline ColoredComplete construction(const std::string& name, const std::map<std::string, int>& args) {
  using namespace constructions;
  auto need = [&](const char* key) {
    auto it = args.find(key);
    if (it == args.end())
      throw InvalidArgument("construction " + name + " needs --" + std::string(key));
    return it->second;
  };
  if (name == "G3") return g3(need("t"));
  if (name == "G4") return g4(need("a"), need("t"), need("k"));
  if (name == "G5") return g5(need("t"), need("k"));
  if (name == "G6") return g6(need("k"), need("delta"));
  if (name == "F1") return f1(need("t"));
  if (name == "F2") return f2(need("t"));
  if (name == "F4") return f4(need("t"));
  if (name == "F5") return f5(need("t"), need("r"));
  if (name == "F6") return f6(need("t"));
  if (name == "F7") return f7(need("t"));
  if (name == "F8") return doubling(r35_witness());
  if (name == "F12") return f12();
  if (name == "F13") return f13();
  if (name == "R35") return r35_witness();
  return sporadic(name);
}

struct Candidate {
  std::string name;
  std::function<ColoredComplete()> build;
  int order;
};

/// Every construction whose source result covers (h, k), largest first.
inline std::vector<Candidate> witness_candidates(const TargetGraph& h, int k) {
  using namespace constructions;
  std::vector<Candidate> out;
  auto add = [&](std::string name, int order, std::function<ColoredComplete()> f) {
    if (order >= 1 && order <= kMaxOrder) out.push_back({std::move(name), std::move(f), order});
  };
  const auto props = target_properties(h);
  const int t = props.order, a = props.clique_number, delta = props.max_degree;

  if (k == 3 && h.is<StarPlus>() && h.as<StarPlus>().r >= 1 && t >= 2)
    add("F7", 5 * (t - 1), [t] { return f7(t); });
  if (k == 5 && k >= t + 1 && t >= 3) add("G1", 4, g1);
  if (k == 6 && k >= t + 1 && t >= 3) add("G2", 4, g2);
  if (k == t && k >= 5 && !h.is_complete_graph()) add("G3", t, [t] { return g3(t); });
  if (a >= 3 && k >= 4 && k <= a)
    add("G4", (a - 1) * (t - 1), [a, t, k] { return g4(a, t, k); });
  if (k >= 5 && k <= t - 1) {
    add("G5", t, [t, k] { return g5(t, k); });
    int p = (delta - 1) / (k - 2), q = (delta - 1) % (k - 2);
    // blocks of size 1 carry no edge of their color, so p = 1 is only
    // exact when every block gets the extra vertex
    if (p >= 2 || (p == 1 && q == k - 2)) {
      add("G6", (k - 1) * p + q, [k, delta] { return g6(k, delta); });
    }
  }
  if (h.is<StarPlus>()) {
    const int r = h.as<StarPlus>().r;
    if (k == 4 && t >= 6 && (r == 1 || r == 2)) {
      int p = (t - 2) / 2, q = (t - 2) % 2;
      add("F1", 3 * p + q, [t] { return f1(t); });
      add("F2", t, [t] { return f2(t); });
    }
    if (k == 4 && (t == 4 || t == 5) && r >= 1) add("F3", 5, f3);
    if (k == 5 && t == 4 && r == 1) add("F9", 4, f9);
    if (k == 6 && t == 4 && r == 1) add("F10", 4, f10);
    if (k == 5 && t == 5 && r == 1) add("F11", 5, f11);
    if (k == 4 && r >= 3) {
      if (t % 2 == 1 && t >= 5) add("F4", (3 * t - 7) / 2, [t] { return f4(t); });
      if (t % 2 == 0 && t >= 4) add("F6", (3 * t - 6) / 2, [t] { return f6(t); });
      add("F5", t + 2 * r - 3, [t, r] { return f5(t, r); });
    }
  }
  if (h.is<Pineapple>() && k == 4 && h.as<Pineapple>().omega == 5) {
    if (t == 6) add("F12", 23, f12);
    if (t == 7) add("F13", 25, f13);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Candidate& x, const Candidate& y) { return x.order > y.order; });
  return out;
}

/// Largest applicable construction for (h, k) that passes verification.
inline std::optional<WitnessCertificate> lower_bound_witness(const TargetGraph& h, int k) {
  for (const auto& cand : witness_candidates(h, k)) {
    auto c = cand.build();
    if (c.declared_colors() != k) continue;
    auto r = verify_witness(c, h, cand.name);
    if (is_certificate(r)) return std::get<WitnessCertificate>(std::move(r));
  }
  return std::nullopt;
}

}  // namespace gallai
