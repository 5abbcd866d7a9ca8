#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "gallai/canonical.hpp"
#include "gallai/constructions.hpp"
#include "gallai/detectors.hpp"
#include "gallai/graph_core.hpp"
#include "gallai/parallel.hpp"
#include "gallai/witness.hpp"

namespace gallai {

class Unsupported : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr int kDefaultEnumerationBound = 9;

struct EnumerationOptions {
  int threads = 0;  // 0: GALLAI_THREADS or hardware concurrency
  int max_order = kDefaultEnumerationBound;
};

struct KeyedColoring {
  CanonicalKey key;
  ColoredComplete coloring;
};

/// Graphs without isolated vertices, up to isomorphism, as 2-colorings of K_s
/// (color 2 = edge, color 1 = non-edge), ordered by canonical key.
inline std::vector<ColoredComplete> graphs_without_isolated_vertices(int s) {
  if (s < 2 || s > 7) throw UnsupportedSize("graph catalog supports 2 <= s <= 7");
  const std::size_t m = pair_count(s);
  std::map<CanonicalKey, ColoredComplete> seen;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<Color> colors(m);
    for (std::size_t e = 0; e < m; ++e) colors[e] = (mask >> e) & 1 ? 2 : 1;
    ColoredComplete g(s, 2, std::move(colors));
    bool isolated = false;
    for (Vertex v = 0; v < s; ++v)
      if (g.degree(2, v) == 0) isolated = true;
    if (isolated) continue;
    auto key = canonical_form(g, CanonMode::vertex_only);
    seen.try_emplace(std::move(key), std::move(g));
  }
  std::vector<ColoredComplete> out;
  for (auto& [key, g] : seen) out.push_back(from_canonical(key));
  return out;
}

namespace detail {

inline const std::vector<ColoredComplete>& graph_catalog(int s) {
  static std::mutex mu;
  static std::map<int, std::vector<ColoredComplete>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(s);
  if (it == cache.end()) it = cache.emplace(s, graphs_without_isolated_vertices(s)).first;
  return it->second;
}

// All nonincreasing sequences of exactly `parts` positive integers summing to
// `total`.
inline void partitions(int total, int parts, int cap, std::vector<int>& cur,
                       std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  for (int x = std::min(cap, total - (parts - 1)); x >= 1; --x) {
    cur.push_back(x);
    partitions(total - x, parts - 1, x, cur, out);
    cur.pop_back();
  }
}

// Case (b): color 1 dominant, V^(2..k) disjoint, each hosting the color-j
// graph (no isolated vertices) of a catalog entry; leftover vertices see
// only color 1.
inline void dominant_candidates(int n, int k, std::vector<ColoredComplete>& out) {
  const int blocks = k - 1;
  const int largest = n - 2 * (blocks - 1);
  if (largest < 2) return;
  struct Entry {
    int size;
    const ColoredComplete* graph;
  };
  std::vector<Entry> catalog;
  for (int s = 2; s <= largest; ++s)
    for (const auto& g : graph_catalog(s)) catalog.push_back({s, &g});

  std::vector<int> pick;
  auto build = [&] {
    auto c = ColoredComplete::monochromatic(n, k, 1);
    int base = 0;
    for (int j = 0; j < blocks; ++j) {
      const auto& e = catalog[pick[j]];
      for (Vertex u = 0; u < e.size; ++u)
        for (Vertex v = u + 1; v < e.size; ++v)
          if (e.graph->color(u, v) == 2) c.set_color(base + u, base + v, static_cast<Color>(j + 2));
      base += e.size;
    }
    out.push_back(std::move(c));
  };
  auto choose = [&](auto&& self, int from, int used) -> void {
    if (static_cast<int>(pick.size()) == blocks) {
      build();
      return;
    }
    int remaining = blocks - static_cast<int>(pick.size()) - 1;
    for (int i = from; i < static_cast<int>(catalog.size()); ++i) {
      if (used + catalog[i].size + 2 * remaining > n) continue;
      pick.push_back(i);
      self(self, i, used + catalog[i].size);
      pick.pop_back();
    }
  };
  choose(choose, 0, 0);
}

// Case (c): K_n minus the apex in color 1; spoke color multiset.
inline void apex_candidates(int n, int k, std::vector<ColoredComplete>& out) {
  const int spokes = n - 1;
  for (int ones = 0; ones + (k - 1) <= spokes; ++ones) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions(spokes - ones, k - 1, spokes, cur, parts);
    for (const auto& p : parts) {
      auto c = ColoredComplete::monochromatic(n, k, 1);
      Vertex v = ones;
      for (int j = 0; j < k - 1; ++j)
        for (int s = 0; s < p[j]; ++s) c.set_color(v++, n - 1, static_cast<Color>(j + 2));
      out.push_back(std::move(c));
    }
  }
}

// Cases (d), (e), (f); only exact 4-colorings.
inline void template_candidates(int n, std::vector<ColoredComplete>& out) {
  for (int extra = 0; extra <= n - 3; ++extra) {
    auto c = ColoredComplete::monochromatic(n, 4, 1);
    c.set_color(0, 1, 2);
    c.set_color(0, 2, 3);
    c.set_color(1, 2, 4);
    for (int x = 0; x < extra; ++x) c.set_color(0, 3 + x, 4);
    out.push_back(std::move(c));
  }
  for (bool cd : {false, true}) {
    auto c = ColoredComplete::monochromatic(n, 4, 1);
    c.set_color(0, 1, 2);
    if (cd) c.set_color(2, 3, 2);
    c.set_color(0, 2, 3);
    c.set_color(1, 3, 3);
    c.set_color(0, 3, 4);
    c.set_color(1, 2, 4);
    out.push_back(std::move(c));
  }
  if (n == 5) out.push_back(constructions::tw_case_f());
}

}  // namespace detail

/// Every exact k-coloring of K_n without a rainbow P5, once per class of
/// simultaneous vertex and color relabeling, sorted by canonical key.
/// Candidates are generated case by case from the structure theorem, then
/// filtered through the rainbow detector and deduplicated.
inline std::vector<KeyedColoring> enumerate_p5free(int n, int k,
                                                   const EnumerationOptions& opt = {}) {
  if (n < 5) throw InvalidArgument("enumerate_p5free needs n >= 5");
  if (k <= 3)
    throw Unsupported("enumerate_p5free needs k >= 4; with at most three colors every "
                      "coloring qualifies");
  if (n > opt.max_order || n > kMaxCanonicalOrder)
    throw UnsupportedSize("enumerate_p5free: n above enumeration bound " +
                          std::to_string(std::min(opt.max_order, kMaxCanonicalOrder)));
  if (static_cast<std::size_t>(k) > pair_count(n) || k > kMaxColors) return {};

  std::vector<ColoredComplete> candidates;
  detail::dominant_candidates(n, k, candidates);
  detail::apex_candidates(n, k, candidates);
  if (k == 4) detail::template_candidates(n, candidates);

  std::vector<std::optional<CanonicalKey>> keys(candidates.size());
  parallel_for(candidates.size(), resolve_threads(opt.threads), [&](std::size_t i) {
    const auto& c = candidates[i];
    if (!c.exact() || has_rainbow_p5(c)) return;
    keys[i] = canonical_form(c, CanonMode::vertex_and_color);
  });
  std::map<CanonicalKey, bool> unique;
  for (auto& k_opt : keys)
    if (k_opt) unique.emplace(std::move(*k_opt), true);
  std::vector<KeyedColoring> out;
  out.reserve(unique.size());
  for (auto& [key, unused] : unique) out.push_back({key, from_canonical(key)});
  return out;
}

}  // namespace gallai
