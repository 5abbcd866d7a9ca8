#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <vector>

#include "gallai/graph_core.hpp"

namespace gallai {

enum class CanonMode {
  vertex_only,       // colors keep their identity
  vertex_and_color,  // colors may be permuted as well
};

/// Byte string that is equal for two colorings iff they are isomorphic under
/// the symmetry group selected by the mode.
struct CanonicalKey {
  std::string bytes;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

inline constexpr int kMaxCanonicalOrder = 10;

namespace detail {

// Individualization-refinement search for the lexicographically least
// adjacency string. Edge (i, j), i < j, sits at column-major position
// j*(j-1)/2 + i, so fixing the first m positions fixes a prefix.
class Canonizer {
 public:
  Canonizer(const ColoredComplete& c, CanonMode mode)
      : n_(c.order()), mode_(mode) {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) m_[i][j] = i == j ? 0 : c.color(i, j);
    color_type_.fill(0);
    if (mode_ == CanonMode::vertex_and_color) {
      // Colors are only told apart by permutation-invariant data: class size
      // and the sorted degree sequence of the class.
      std::map<std::vector<int>, std::vector<int>> by_sig;
      for (int col = 1; col <= c.declared_colors(); ++col) {
        std::vector<int> sig{static_cast<int>(c.class_size(static_cast<Color>(col)))};
        std::vector<int> degs;
        for (int v = 0; v < n_; ++v) degs.push_back(c.degree(static_cast<Color>(col), v));
        std::sort(degs.begin(), degs.end());
        sig.insert(sig.end(), degs.begin(), degs.end());
        by_sig[sig].push_back(col);
      }
      int rank = 1;
      for (auto& [sig, cols] : by_sig) {
        for (int col : cols) color_type_[col] = static_cast<Color>(rank);
        ++rank;
      }
    } else {
      for (int col = 0; col < 64; ++col) color_type_[col] = static_cast<Color>(col);
    }
  }

  std::string run() {
    std::vector<std::vector<int>> cells{std::vector<int>(n_)};
    for (int v = 0; v < n_; ++v) cells[0][v] = v;
    search(std::move(cells));
    return best_;
  }

 private:
  using Cells = std::vector<std::vector<int>>;

  void refine(Cells& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<int> cell_of(n_);
      for (std::size_t ci = 0; ci < cells.size(); ++ci)
        for (int v : cells[ci]) cell_of[v] = static_cast<int>(ci);
      Cells next;
      for (auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<int>, int>> sigs;
        for (int v : cell) sigs.emplace_back(signature(v, cell_of, cells.size()), v);
        std::sort(sigs.begin(), sigs.end());
        std::vector<int> cur{sigs[0].second};
        for (std::size_t i = 1; i < sigs.size(); ++i) {
          if (sigs[i].first != sigs[i - 1].first) {
            next.push_back(std::move(cur));
            cur.clear();
            changed = true;
          }
          cur.push_back(sigs[i].second);
        }
        next.push_back(std::move(cur));
      }
      cells = std::move(next);
    }
  }

  // For every color type: counts of v's neighbors of that type per cell.
  // Flattened as sorted (type, counts...) records.
  std::vector<int> signature(int v, const std::vector<int>& cell_of,
                             std::size_t cell_count) const {
    std::map<int, std::vector<int>> per_color;
    for (int u = 0; u < n_; ++u) {
      if (u == v) continue;
      int col = m_[v][u];
      auto& row = per_color[col];
      if (row.empty()) row.assign(cell_count, 0);
      ++row[cell_of[u]];
    }
    std::vector<std::vector<int>> recs;
    for (auto& [col, row] : per_color) {
      std::vector<int> rec{color_type_[col]};
      rec.insert(rec.end(), row.begin(), row.end());
      recs.push_back(std::move(rec));
    }
    std::sort(recs.begin(), recs.end());
    std::vector<int> flat;
    for (auto& r : recs) flat.insert(flat.end(), r.begin(), r.end());
    return flat;
  }

  // True when every cell is internally one color and every pair of cells is
  // joined in one color, so all orderings inside cells give the same string.
  bool uniform(const Cells& cells) const {
    for (std::size_t a = 0; a < cells.size(); ++a)
      for (std::size_t b = a; b < cells.size(); ++b) {
        int seen = -1;
        for (int u : cells[a])
          for (int w : cells[b]) {
            if (u == w) continue;
            if (seen < 0) seen = m_[u][w];
            else if (m_[u][w] != seen) return false;
          }
      }
    return true;
  }

  // Column-major string of the ordering, truncated to the first `fixed`
  // vertices. Colors are renamed by first occurrence in color mode.
  std::string encode(const std::vector<int>& order, int fixed) const {
    std::string s;
    std::array<int, 64> rename{};
    rename.fill(0);
    int next = 1;
    for (int j = 1; j < fixed; ++j)
      for (int i = 0; i < j; ++i) {
        int col = m_[order[i]][order[j]];
        if (mode_ == CanonMode::vertex_and_color) {
          if (rename[col] == 0) rename[col] = next++;
          col = rename[col];
        }
        s.push_back(static_cast<char>(col));
      }
    return s;
  }

  void search(Cells cells) {
    refine(cells);
    std::vector<int> order;
    int fixed = 0;
    bool prefix_open = true;
    for (auto& cell : cells) {
      for (int v : cell) order.push_back(v);
      if (prefix_open && cell.size() == 1) ++fixed;
      else prefix_open = false;
    }
    bool leaf = fixed == n_ || uniform(cells);
    std::string partial = encode(order, leaf ? n_ : fixed);
    if (have_best_) {
      auto cmp = partial.compare(0, partial.size(), best_, 0, partial.size());
      if (cmp > 0) return;
    }
    if (leaf) {
      if (!have_best_ || partial < best_) {
        best_ = std::move(partial);
        have_best_ = true;
      }
      return;
    }
    std::size_t target = 0;
    while (cells[target].size() == 1) ++target;
    for (int v : cells[target]) {
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        if (ci != target) {
          child.push_back(cells[ci]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        for (int u : cells[ci])
          if (u != v) rest.push_back(u);
        child.push_back(std::move(rest));
      }
      search(std::move(child));
    }
  }

  int n_;
  CanonMode mode_;
  std::array<std::array<Color, kMaxCanonicalOrder>, kMaxCanonicalOrder> m_{};
  std::array<Color, 64> color_type_{};
  std::string best_;
  bool have_best_ = false;
};

}  // namespace detail

/// Exact canonical form for n <= 10 via color-degree refinement followed by
/// exhaustive individualization within cells.
inline CanonicalKey canonical_form(const ColoredComplete& c,
                                   CanonMode mode = CanonMode::vertex_and_color) {
  if (c.order() > kMaxCanonicalOrder)
    throw UnsupportedSize("canonical_form supports n <= 10");
  CanonicalKey key;
  key.bytes.push_back(static_cast<char>(c.order()));
  key.bytes.push_back(static_cast<char>(c.declared_colors()));
  key.bytes.push_back(static_cast<char>(mode == CanonMode::vertex_and_color ? 'c' : 'v'));
  key.bytes += detail::Canonizer(c, mode).run();
  return key;
}

/// Rebuilds the coloring a key describes. Colors in vertex-and-color mode
/// come back renamed in first-occurrence order.
inline ColoredComplete from_canonical(const CanonicalKey& key) {
  if (key.bytes.size() < 3) throw InvalidArgument("canonical key too short");
  int n = static_cast<unsigned char>(key.bytes[0]);
  int k = static_cast<unsigned char>(key.bytes[1]);
  if (key.bytes.size() != 3 + pair_count(n))
    throw InvalidArgument("canonical key length mismatch");
  std::vector<Color> colors(pair_count(n));
  std::size_t pos = 3;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      colors[edge_index(i, j, n)] = static_cast<Color>(key.bytes[pos++]);
  return ColoredComplete(n, k, std::move(colors));
}

}  // namespace gallai
