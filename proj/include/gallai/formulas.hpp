#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gallai/detectors.hpp"
#include "gallai/graph_core.hpp"

namespace gallai {

struct PQ {
  int p = 0;
  int q = 0;
  friend bool operator==(const PQ&, const PQ&) = default;
};

/// x = p*m + q with 0 <= q < m.
inline PQ pq_decompose(int x, int m) {
  if (m < 1) throw InvalidArgument("pq_decompose needs m >= 1");
  if (x < 0) throw InvalidArgument("pq_decompose needs x >= 0");
  return {x / m, x % m};
}

inline std::int64_t choose2(std::int64_t v) { return v * (v - 1) / 2; }

/// ceil((1 + sqrt(1 + 8k)) / 2), computed as the least v with C(v,2) >= k.
inline int n_k(int k) {
  if (k < 0) throw InvalidArgument("n_k needs k >= 0");
  int v = 1;
  while (choose2(v) < k) ++v;
  return v;
}

// ---------------------------------------------------------------------------
// Known Ramsey numbers

struct RamseyEntry {
  std::vector<std::string> patterns;
  int colors = 0;
  std::optional<std::int64_t> lo;
  std::optional<std::int64_t> hi;
  std::string citation;

  bool exact() const { return lo && hi && *lo == *hi; }
};

inline const std::vector<RamseyEntry>& ramsey_table() {
  static const std::vector<RamseyEntry> table{
      {{"K3", "K5"}, 2, 14, 14, "le3-3"},
      {{"S4^1"}, 3, 17, 17, "le3-3"},
      {{"S5^1"}, 3, 21, 21, "le3-3"},
      {{"S6^1"}, 3, 26, 26, "le3-3"},
  };
  return table;
}

/// Upper bound on R_2(PA_{t,omega}) for a user-supplied constant c > 0.
inline double pineapple_r2_bound(int t, int omega, double c) {
  if (omega < 4) throw InvalidArgument("pineapple R2 bound needs omega >= 4");
  if (!(c > 0)) throw InvalidArgument("the constant c must be positive");
  double binom = 1;
  for (int i = 1; i <= omega - 1; ++i) binom = binom * (omega - 1 + i) / i;
  double l = std::log(static_cast<double>(omega - 1));
  return binom * std::exp(-c * l * l) + static_cast<double>(t - 2) * (omega - 1);
}

/// Table lookup for the given patterns and color count; for a single
/// pineapple with two colors an upper bound is evaluated when c is given.
inline std::optional<RamseyEntry> ramsey_known(const std::vector<TargetGraph>& patterns,
                                               int colors,
                                               std::optional<double> c = std::nullopt) {
  std::vector<std::string> names;
  for (const auto& h : patterns) names.push_back(describe(h));
  for (const auto& e : ramsey_table())
    if (e.colors == colors && e.patterns == names) return e;
  if (c && colors == 2 && patterns.size() == 1 && patterns[0].is<Pineapple>()) {
    const auto& pa = patterns[0].as<Pineapple>();
    if (pa.omega >= 4) {
      auto hi = static_cast<std::int64_t>(std::floor(pineapple_r2_bound(pa.t, pa.omega, *c)));
      return RamseyEntry{names, 2, std::nullopt, hi, "th4-7"};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Evaluator

enum class GrKind { Exact, Bounds, Unknown };

struct GrResult {
  GrKind kind = GrKind::Unknown;
  std::optional<std::int64_t> value;  // Exact
  std::optional<std::int64_t> lo;     // Exact: equals value
  std::optional<std::int64_t> hi;     // absent: no upper bound known
  std::vector<std::string> provenance;
  std::vector<std::string> assumptions;
};

inline const char* to_string(GrKind k) {
  switch (k) {
    case GrKind::Exact: return "Exact";
    case GrKind::Bounds: return "Bounds";
    case GrKind::Unknown: return "Unknown";
  }
  return "?";
}

namespace detail {

struct RuleHit {
  std::string id;
  std::string hypothesis;
  std::optional<std::int64_t> exact;
  std::optional<std::int64_t> lo;
  std::optional<std::int64_t> hi;
};

struct Shape {
  int t = 0;
  int k = 0;
  bool complete = false;
  std::optional<StarPlus> star;
  std::optional<Pineapple> pa;
  bool minus_matching = false;
  TargetProperties props;
};

inline std::string hyp(std::initializer_list<std::string> parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ", ";
    out += p;
  }
  return out;
}

inline std::string kv(const char* name, long long v) { return std::string(name) + "=" + std::to_string(v); }

// R_2(H) >= t+1 holds when some 2-coloring of K_t avoids a monochromatic H.
// Tried: a balanced complete bipartite graph against two disjoint cliques.
inline bool r2_exceeds_order(const TargetGraph& h) {
  const int t = h.order();
  if (t < 2) return false;
  auto c = ColoredComplete::monochromatic(t, 2, 2);
  for (Vertex u = 0; u < t / 2; ++u)
    for (Vertex v = t / 2; v < t; ++v) c.set_color(u, v, 1);
  if (t / 2 == 0) return false;
  return !find_mono_copy(c, h).has_value();
}

inline std::vector<RuleHit> exact_rules(const TargetGraph& h, const Shape& s) {
  std::vector<RuleHit> hits;
  const int t = s.t, k = s.k;
  auto add = [&](const char* id, std::string hy, std::int64_t v) {
    hits.push_back({id, std::move(hy), v, std::nullopt, std::nullopt});
  };
  auto is_star = [&](int tt, int rr) { return s.star && s.star->t == tt && s.star->r == rr; };

  if (is_star(4, 1)) {
    if (k == 3) add("th3-6", "H=S4^1, k=3", 17);
    else if (k == 4) add("th3-6", "H=S4^1, k=4", 6);
    else if (k == 5 || k == 6) add("th3-6", "H=S4^1, k in {5,6}", 5);
    else if (k >= 7) {
      int l = n_k(k);  // C(l-1,2)+1 <= k <= C(l,2)
      if (l >= 5) add("th3-6", "H=S4^1, C(l-1,2)+1<=k<=C(l,2), " + kv("l", l), l);
    }
  }
  if (is_star(5, 1)) {
    if (k == 3) add("th3-7", "H=S5^1, k=3", 21);
    else if (k == 4 || k == 5) add("th3-7", "H=S5^1, k in {4,5}", 6);
    else if (k == 6) add("th3-7", "H=S5^1, k=6", 5);
    else if (k >= 7) add("th3-7", "H=S5^1, k>=7", n_k(k));
  }
  if (is_star(6, 1)) {
    if (k == 3) add("th3-8", "H=S6^1, k=3", 26);
    else if (k >= 4 && k <= 6) add("th3-8", "H=S6^1, 4<=k<=6", 7);
    else if (k >= 7) add("th3-8", "H=S6^1, k>=7", n_k(k));
  }
  if (s.pa && k == 4 && s.pa->omega == 5) {
    if (t == 6) add("th4-3", "H=PA6,5, k=4", 24);
    if (t == 7) add("th4-4", "H=PA7,5, k=4", 26);
    if (t >= 8) add("th4-2", hyp({"H=PA_{t,5}", "k=4", "t>=8"}), 4LL * t - 3);
  }
  if (s.pa && k == s.pa->omega && k >= 4)
    add("th4-1", hyp({"H=PA_{t,w}", "k=w", "k>=4"}),
        static_cast<std::int64_t>(s.pa->omega - 1) * (t - 1) + 1);
  if (is_star(4, 1) && k == 4) add("le3-1", "H=S4^1, k=4", 6);
  if (is_star(5, 1) && k == 4) add("le3-2", "H=S5^1, k=4", 6);
  if (s.star && k == 4 && (s.star->r == 1 || s.star->r == 2)) {
    // the t=4,5 rows only hold for r=1
    if ((t == 4 || t == 5) && s.star->r == 1) add("co3-1", hyp({"k=4", "r=1", "t in {4,5}"}), 6);
    if (t >= 6)
      add("co3-1", hyp({"k=4", "r in {1,2}", "t>=6"}), t + pq_decompose(t - 2, 2).p - 1);
  }
  if (s.star && k == 4 && t >= 6 && (s.star->r == 1 || s.star->r == 2))
    add("th3-2", hyp({"k=4", "t>=6", "r in {1,2}", "t-2=2p+q"}), t + pq_decompose(t - 2, 2).p - 1);
  if (s.star && k == 4 && s.star->r >= 3) {
    const int r = s.star->r;
    if (t % 2 == 1) {
      if (r <= (t - 1) / 4) add("th3-4", hyp({"k=4", "t odd", "3<=r<=floor((t-1)/4)"}), (3 * t - 5) / 2);
      if (r >= (t - 1 + 3) / 4 && 2 * r <= t - 3)
        add("th3-4", hyp({"k=4", "t odd", "ceil((t-1)/4)<=r<=(t-3)/2"}), t + 2 * r - 2);
    } else {
      if (r <= t / 4) add("th3-5", hyp({"k=4", "t even", "3<=r<=floor(t/4)"}), (3 * t - 4) / 2);
      if (r >= (t + 3) / 4 && 2 * r <= t - 2)
        add("th3-5", hyp({"k=4", "t even", "ceil(t/4)<=r<=(t-2)/2"}), t + 2 * r - 2);
    }
  }
  if (s.star && k >= 5 && k <= t - 1 && s.star->r >= 1 && s.star->r <= k - 2) {
    int p = pq_decompose(t - 2, k - 2).p;
    add("th3-1", hyp({"5<=k<=t-1", "1<=r<=k-2", "t-2=p(k-2)+q", kv("p", p)}),
        std::max(t + p - 1, t + 1));
  }
  if (s.star && t >= 6 && (s.star->r == 1 || s.star->r == 2)) {
    if (k >= 4 && k <= t - 1) {
      int p = pq_decompose(t - 2, k - 2).p;
      // read as max{t+p-1, t+1} for k >= 5
      std::int64_t v = k == 4 ? t + p - 1 : std::max(t + p - 1, t + 1);
      add("th3-9", hyp({"t>=6", "r in {1,2}", "4<=k<=t-1", kv("p", p)}), v);
    } else if (k == t) {
      add("th3-9", hyp({"t>=6", "r in {1,2}", "k=t"}), t + 1);
    } else if (k >= t + 1) {
      add("th3-9", hyp({"t>=6", "r in {1,2}", "k>=t+1"}), n_k(k));
    }
  }
  if (h.is<Complete>() && k == t && k >= 5)
    add("th2-4", hyp({"H=K_t", "k=t", "k>=5"}), static_cast<std::int64_t>(t - 1) * (t - 1) + 1);
  if (!s.complete && k == t && k >= 5) add("th2-2", hyp({"H not complete", "k=t", "k>=5"}), t + 1);
  if (s.minus_matching && k >= 5 && k <= t - 1 && 2 * k >= t + 2)
    add("th2-5", hyp({"H=K_t-M", "ceil((t+2)/2)<=k<=t-1", "k>=5"}),
        std::max(n_k(k), t + 1));
  if (k >= 5 && k >= t) {
    if (k >= t + 1) add("coro2-4", hyp({"k>=5", "k>=t+1"}), std::max(n_k(k), 5));
    else if (s.complete)
      add("coro2-4", hyp({"k>=5", "k=t", "H complete"}), static_cast<std::int64_t>(t - 1) * (t - 1) + 1);
    else add("coro2-4", hyp({"k>=5", "k=t", "H not complete"}), t + 1);
  }
  if ((k == 5 || k == 6) && k >= t + 1 && t >= 3) add("th2-2-1", hyp({"k in {5,6}", "k>=t+1", "t>=3"}), 5);
  if (k >= 7 && k >= t + 1) add("th2-1", hyp({"k>=7", "k>=t+1"}), n_k(k));
  if (k == 3)
    if (auto e = ramsey_known({h}, 3); e && e->exact())
      add("le3-3", "k=3, R_3(H) tabulated", *e->lo);
  return hits;
}

inline std::vector<RuleHit> bound_rules(const TargetGraph& h, const Shape& s,
                                        std::optional<double> c) {
  std::vector<RuleHit> hits;
  const int t = s.t, k = s.k;
  const int a = s.props.clique_number;
  const int delta = s.props.max_degree;
  if (a >= 3 && k >= 4 && k <= a)
    hits.push_back({"lem2-1", hyp({"4<=k<=a", "a>=3", kv("a", a)}), std::nullopt,
                    static_cast<std::int64_t>(a - 1) * (t - 1) + 1, std::nullopt});
  if (k >= 5 && k <= t - 1 && delta >= 1) {
    auto [p, q] = pq_decompose(delta - 1, k - 2);
    if (p >= 1 && r2_exceeds_order(h)) {
      RuleHit hit{"th2-6",
                  hyp({"5<=k<=t-1", "Delta-1=p(k-2)+q", kv("p", p), "R_2(H)>=t+1 by explicit coloring"}),
                  std::nullopt, std::max(delta + p, t + 1), std::nullopt};
      if (auto e = ramsey_known({h}, 2); e && e->hi) hit.hi = *e->hi;
      hits.push_back(hit);
    }
  }
  if (s.star && k == 3 && t >= 6 && (s.star->r == 1 || s.star->r == 2)) {
    RuleHit hit{"th3-9", hyp({"k=3", "t>=6", "r in {1,2}"}), std::nullopt, 5LL * t - 4,
                std::nullopt};
    if (auto e = ramsey_known({h}, 2); e && e->exact()) {
      hit.lo = std::max<std::int64_t>(*hit.lo, 2 * *e->lo - 1);
      hit.hi = 3 * *e->lo + 6 * s.star->r - 6;
    }
    hits.push_back(hit);
  }
  if (s.pa && s.pa->omega >= 6) {
    const std::int64_t lo = static_cast<std::int64_t>(s.pa->omega - 1) * (t - 1) + 1;
    std::optional<std::int64_t> r2hi;
    if (c) r2hi = static_cast<std::int64_t>(std::floor(pineapple_r2_bound(t, s.pa->omega, *c)));
    if (k == 4)
      hits.push_back({"th4-5", hyp({"k=4", "w>=6"}), std::nullopt, lo,
                      r2hi ? std::optional<std::int64_t>(3 * *r2hi - 2) : std::nullopt});
    if (k >= 5 && k <= s.pa->omega - 1)
      hits.push_back({"cor4-4", hyp({"5<=k<=w-1", "w>=6"}), std::nullopt, lo, r2hi});
  }
  return hits;
}

}  // namespace detail

/// gr_k(P5 : h) from the theorem table. Every applicable exact rule must give
/// the same value, and that value must sit inside every applicable bound.
/// c is the absolute constant of the pineapple Ramsey bound, if supplied.
inline GrResult evaluate(const TargetGraph& h, int k, std::optional<double> c = std::nullopt) {
  if (k < 1) throw InvalidArgument("evaluate needs k >= 1");
  detail::Shape s;
  s.t = h.order();
  s.k = k;
  s.complete = h.is_complete_graph();
  if (h.is<StarPlus>()) s.star = h.as<StarPlus>();
  if (h.is<Pineapple>()) s.pa = h.as<Pineapple>();
  s.minus_matching = h.is<CompleteMinusMaxMatching>();
  s.props = target_properties(h);

  auto exact = detail::exact_rules(h, s);
  auto bounds = detail::bound_rules(h, s, c);

  GrResult out;
  std::optional<std::int64_t> lo, hi;
  for (const auto& b : bounds) {
    if (b.lo) lo = lo ? std::max(*lo, *b.lo) : *b.lo;
    if (b.hi) hi = hi ? std::min(*hi, *b.hi) : *b.hi;
  }
  if (lo && hi && *lo > *hi)
    throw InternalInconsistency("bounds for " + describe(h) + " k=" + std::to_string(k) +
                                " are empty");
  if (!exact.empty()) {
    const std::int64_t v = *exact.front().exact;
    for (const auto& e : exact) {
      if (*e.exact != v)
        throw InternalInconsistency(exact.front().id + " gives " + std::to_string(v) + " but " +
                                    e.id + " gives " + std::to_string(*e.exact) + " for " +
                                    describe(h) + " k=" + std::to_string(k));
      if (std::find(out.provenance.begin(), out.provenance.end(), e.id) == out.provenance.end())
        out.provenance.push_back(e.id);
      out.assumptions.push_back(e.id + ": " + e.hypothesis);
    }
    for (const auto& b : bounds)
      if ((b.lo && v < *b.lo) || (b.hi && v > *b.hi))
        throw InternalInconsistency("exact value " + std::to_string(v) + " for " + describe(h) +
                                    " k=" + std::to_string(k) + " violates " + b.id);
    out.kind = GrKind::Exact;
    out.value = out.lo = out.hi = v;
    return out;
  }
  if (!bounds.empty()) {
    out.kind = GrKind::Bounds;
    out.lo = lo;
    out.hi = hi;
    for (const auto& b : bounds) {
      out.provenance.push_back(b.id);
      out.assumptions.push_back(b.id + ": " + b.hypothesis);
    }
  }
  return out;
}

}  // namespace gallai
