#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gallai/canonical.hpp"
#include "gallai/detectors.hpp"
#include "gallai/enumerate.hpp"
#include "gallai/graph_core.hpp"
#include "gallai/parallel.hpp"
#include "gallai/witness.hpp"

namespace gallai {

inline constexpr double kBruteForceGuard = 1e8;

/// Calls visit(c) for every exact k-coloring of K_n, in odometer order over
/// the pair array (first pair varies slowest). Refuses when k^C(n,2) > 1e8.
inline void brute_force_colorings(int n, int k,
                                  const std::function<void(const ColoredComplete&)>& visit) {
  const std::size_t m = pair_count(n);
  if (n < 1 || k < 1) throw InvalidArgument("brute_force_colorings needs n, k >= 1");
  if (static_cast<std::size_t>(k) > m) return;  // pigeonhole; also covers K_1
  if (static_cast<double>(m) * std::log10(static_cast<double>(k)) > std::log10(kBruteForceGuard) + 1e-12)
    throw UnsupportedSize("brute_force_colorings: k^C(n,2) exceeds 1e8");
  std::vector<Color> colors(m, 1);
  for (;;) {
    ColoredComplete c(n, k, colors);
    if (c.exact()) visit(c);
    std::size_t pos = m;
    while (pos > 0) {
      --pos;
      if (colors[pos] < k) {
        ++colors[pos];
        break;
      }
      colors[pos] = 1;
      if (pos == 0) return;
    }
  }
}

enum class CheckStatus { all_good, bad, no_exact_colorings };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::all_good: return "all-good";
    case CheckStatus::bad: return "bad";
    case CheckStatus::no_exact_colorings: return "no-exact-colorings";
  }
  return "?";
}

struct CheckOutcome {
  int n = 0;
  int k = 0;
  std::string target;
  CheckStatus status = CheckStatus::all_good;
  std::optional<ColoredComplete> witness;  // present iff bad
  std::size_t examined = 0;                // rainbow-P5-free colorings, up to isomorphism
};

struct SearchOptions {
  int threads = 0;
  int max_order = kDefaultEnumerationBound;
};

namespace detail {

// Rainbow-P5-free exact colorings for n <= 4 (no P5 fits), deduplicated.
inline std::vector<KeyedColoring> small_colorings(int n, int k) {
  std::map<CanonicalKey, bool> keys;
  brute_force_colorings(n, k, [&](const ColoredComplete& c) {
    keys.emplace(canonical_form(c, CanonMode::vertex_and_color), true);
  });
  std::vector<KeyedColoring> out;
  for (auto& [key, unused] : keys) out.push_back({key, from_canonical(key)});
  return out;
}

}  // namespace detail

/// Decides whether every exact k-coloring of K_n without a rainbow P5 holds a
/// monochromatic h. Colorings are examined in canonical-key order and the
/// first counterexample in that order is reported, independent of threads.
inline CheckOutcome check_n(const TargetGraph& h, int k, int n, const SearchOptions& opt = {}) {
  if (k <= 3) throw Unsupported("check_n needs k >= 4");
  if (n < 1) throw InvalidArgument("check_n needs n >= 1");
  if (n > opt.max_order || n > kMaxCanonicalOrder)
    throw UnsupportedSize("check_n: n above enumeration bound");
  CheckOutcome out{n, k, describe(h), CheckStatus::all_good, std::nullopt, 0};
  if (pair_count(n) < static_cast<std::size_t>(k)) {
    out.status = CheckStatus::no_exact_colorings;
    return out;
  }
  auto colorings = n < 5 ? detail::small_colorings(n, k)
                         : enumerate_p5free(n, k, {opt.threads, opt.max_order});
  out.examined = colorings.size();
  std::vector<char> bad(colorings.size(), 0);
  parallel_for(colorings.size(), resolve_threads(opt.threads), [&](std::size_t i) {
    bad[i] = !find_mono_copy(colorings[i].coloring, h).has_value();
  });
  for (std::size_t i = 0; i < colorings.size(); ++i)
    if (bad[i]) {
      out.status = CheckStatus::bad;
      out.witness = colorings[i].coloring;
      break;
    }
  return out;
}

struct GrSearchResult {
  std::optional<int> value;  // absent: inconclusive
  int verified_through = 0;
  std::vector<CheckOutcome> per_n;  // n = 1..verified_through
};

/// Smallest N such that check_n is all-good for every n in [N, n_max]; a
/// missing exact coloring counts as not good. The answer is only claimed for
/// the verified window.
inline GrSearchResult compute_gr(const TargetGraph& h, int k, int n_max,
                                 const SearchOptions& opt = {}) {
  if (k <= 3) throw Unsupported("compute_gr needs k >= 4");
  GrSearchResult r;
  r.verified_through = n_max;
  for (int n = 1; n <= n_max; ++n) r.per_n.push_back(check_n(h, k, n, opt));
  int n = n_max;
  while (n >= 1 && r.per_n[n - 1].status == CheckStatus::all_good) --n;
  if (n < n_max) r.value = n + 1;
  return r;
}

}  // namespace gallai
