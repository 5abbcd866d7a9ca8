#pragma once

#include <fstream>
#include <istream>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gallai/formulas.hpp"
#include "gallai/graph_core.hpp"
#include "gallai/structure.hpp"
#include "gallai/witness.hpp"

namespace gallai {

using Json = nlohmann::ordered_json;

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Target specs: "K5", "S4^1", "PA6,5", "K6-M", or {"order":t,"edges":[[i,j],...]}

inline TargetGraph parse_target(const std::string& spec) {
  static const std::regex complete(R"(\s*K(\d+)\s*)");
  static const std::regex star(R"(\s*S(\d+)\^(\d+)\s*)");
  static const std::regex pineapple(R"(\s*PA(\d+),(\d+)\s*)");
  static const std::regex minus(R"(\s*K(\d+)-M\s*)");
  std::smatch m;
  try {
    if (std::regex_match(spec, m, complete)) return TargetGraph::complete(std::stoi(m[1]));
    if (std::regex_match(spec, m, star))
      return TargetGraph::star_plus(std::stoi(m[1]), std::stoi(m[2]));
    if (std::regex_match(spec, m, pineapple))
      return TargetGraph::pineapple(std::stoi(m[1]), std::stoi(m[2]));
    if (std::regex_match(spec, m, minus))
      return TargetGraph::complete_minus_matching(std::stoi(m[1]));
  } catch (const std::out_of_range&) {
    throw ParseError("number out of range in target spec '" + spec + "'");
  }
  auto first = spec.find_first_not_of(" \t");
  if (first != std::string::npos && spec[first] == '{') {
    Json j;
    try {
      j = Json::parse(spec);
    } catch (const Json::parse_error& e) {
      throw ParseError(std::string("target JSON: ") + e.what());
    }
    if (!j.contains("order") || !j.contains("edges") || !j["order"].is_number_integer() ||
        !j["edges"].is_array())
      throw ParseError("target JSON needs integer 'order' and array 'edges'");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer())
        throw ParseError("target JSON edges are pairs of integers");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return TargetGraph::arbitrary(j["order"].get<int>(), std::move(edges));
  }
  throw ParseError("unrecognized target spec '" + spec + "'");
}

// ---------------------------------------------------------------------------
// Colorings: {"n":n,"k":k,"edges":[[i,j,c],...]}, one entry per pair

inline Json to_json(const ColoredComplete& c) {
  Json edges = Json::array();
  const int n = c.order();
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j, c.color(i, j)});
  Json out;
  out["n"] = n;
  out["k"] = c.declared_colors();
  out["edges"] = std::move(edges);
  return out;
}

inline ColoredComplete coloring_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("k") || !j.contains("edges"))
    throw ParseError("coloring JSON needs 'n', 'k' and 'edges'");
  if (!j["n"].is_number_integer() || !j["k"].is_number_integer() || !j["edges"].is_array())
    throw ParseError("coloring JSON: 'n' and 'k' are integers, 'edges' an array");
  const int n = j["n"].get<int>();
  const int k = j["k"].get<int>();
  if (n < 1 || n > kMaxOrder) throw ParseError("coloring JSON: n outside [1..64]");
  if (k < 1 || k > kMaxColors) throw ParseError("coloring JSON: k outside [1..63]");
  std::vector<Color> colors(pair_count(n), 0);
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
        !e[1].is_number_integer() || !e[2].is_number_integer())
      throw ParseError("coloring JSON edges are [i, j, color] triples");
    int a = e[0].get<int>(), b = e[1].get<int>(), col = e[2].get<int>();
    if (a == b) throw ParseError("coloring JSON: self-loop at " + std::to_string(a));
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw ParseError("coloring JSON: vertex outside [0..n-1]");
    if (col < 1 || col > k) throw ParseError("coloring JSON: color outside [1..k]");
    auto& slot = colors[edge_index(std::min(a, b), std::max(a, b), n)];
    if (slot != 0)
      throw ParseError("coloring JSON: duplicate pair (" + std::to_string(a) + "," +
                       std::to_string(b) + ")");
    slot = static_cast<Color>(col);
  }
  for (std::size_t e = 0; e < colors.size(); ++e)
    if (colors[e] == 0) {
      auto [a, b] = edge_endpoints(e, n);
      throw ParseError("coloring JSON: missing pair (" + std::to_string(a) + "," +
                       std::to_string(b) + ")");
    }
  return ColoredComplete(n, k, std::move(colors));
}

inline ColoredComplete load_coloring(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return coloring_from_json(Json::parse(in));
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline void save_coloring(const ColoredComplete& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << to_json(c).dump() << '\n';
}

inline Json to_json(const Embedding& e) {
  Json out;
  out["pattern"] = e.pattern;
  out["vertices"] = e.vertices;
  if (e.color) out["color"] = e.color;
  return out;
}

inline Json to_json(const WitnessCertificate& cert) {
  Json out;
  out["name"] = cert.name;
  out["target"] = describe(cert.target);
  out["order"] = cert.order();
  out["rainbow_p5_absent"] = cert.rainbow_p5_absent;
  out["search_exhausted"] = cert.search_exhausted;
  out["mono_absent"] = cert.mono_absent;
  out["coloring"] = to_json(cert.coloring);
  return out;
}

inline WitnessCertificate certificate_from_json(const Json& j) {
  try {
    WitnessCertificate cert{coloring_from_json(j.at("coloring")),
                            parse_target(j.at("target").get<std::string>()),
                            j.at("name").get<std::string>(),
                            j.at("rainbow_p5_absent").get<bool>(),
                            j.at("search_exhausted").get<bool>(),
                            j.at("mono_absent").get<std::vector<bool>>()};
    if (j.at("order").get<int>() != cert.order())
      throw ParseError("certificate order differs from its coloring");
    return cert;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("certificate JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Formula results

inline Json to_json(const GrResult& r) {
  Json out;
  out["kind"] = to_string(r.kind);
  if (r.kind == GrKind::Exact) {
    out["value"] = *r.value;
  } else if (r.kind == GrKind::Bounds) {
    if (r.lo) out["lo"] = *r.lo;
    if (r.hi) out["hi"] = *r.hi;
  }
  if (r.kind != GrKind::Unknown) out["provenance"] = r.provenance;
  return out;
}

inline GrResult gr_result_from_json(const Json& j) {
  GrResult r;
  try {
    auto kind = j.at("kind").get<std::string>();
    if (kind == "Exact") {
      r.kind = GrKind::Exact;
      r.value = r.lo = r.hi = j.at("value").get<std::int64_t>();
    } else if (kind == "Bounds") {
      r.kind = GrKind::Bounds;
      if (j.contains("lo")) r.lo = j["lo"].get<std::int64_t>();
      if (j.contains("hi")) r.hi = j["hi"].get<std::int64_t>();
    } else if (kind != "Unknown") {
      throw ParseError("unknown result kind '" + kind + "'");
    }
    if (j.contains("provenance")) r.provenance = j["provenance"].get<std::vector<std::string>>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("result JSON: ") + e.what());
  }
  return r;
}

/// "17" for exact values, "[lo,hi]" or "[lo,-]" for bounds, "?" otherwise.
inline std::string value_text(const GrResult& r) {
  switch (r.kind) {
    case GrKind::Exact: return std::to_string(*r.value);
    case GrKind::Bounds:
      return "[" + (r.lo ? std::to_string(*r.lo) : std::string("-")) + "," +
             (r.hi ? std::to_string(*r.hi) : std::string("-")) + "]";
    case GrKind::Unknown: return "?";
  }
  return "?";
}

inline Json to_json(const StructureReport& rep) {
  Json out;
  out["cases"] = rep.cases();
  out["rainbow_p5_free"] = !rep.empty();
  return out;
}

// ---------------------------------------------------------------------------
// Known Ramsey data file: one entry per line,
//   <pattern>[+<pattern>...] <colors> <value | [lo,hi]> <citation>
// with '#' starting a comment.

inline std::vector<RamseyEntry> parse_ramsey_table(std::istream& in) {
  std::vector<RamseyEntry> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string patterns, value, citation;
    int colors = 0;
    if (!(ls >> patterns)) continue;
    auto where = [&] { return "known-Ramsey line " + std::to_string(lineno) + ": "; };
    if (!(ls >> colors >> value >> citation)) throw ParseError(where() + "expected 4 fields");
    std::string extra;
    if (ls >> extra) throw ParseError(where() + "trailing field '" + extra + "'");
    RamseyEntry e;
    std::size_t start = 0;
    while (true) {
      auto plus = patterns.find('+', start);
      auto name = patterns.substr(start, plus == std::string::npos ? plus : plus - start);
      e.patterns.push_back(describe(parse_target(name)));
      if (plus == std::string::npos) break;
      start = plus + 1;
    }
    e.colors = colors;
    static const std::regex interval(R"(\[(\d+),(\d+)\])");
    std::smatch m;
    if (std::regex_match(value, m, interval)) {
      e.lo = std::stoll(m[1]);
      e.hi = std::stoll(m[2]);
      if (*e.lo > *e.hi) throw ParseError(where() + "empty interval");
    } else if (std::regex_match(value, std::regex(R"(\d+)"))) {
      e.lo = e.hi = std::stoll(value);
    } else {
      throw ParseError(where() + "bad value '" + value + "'");
    }
    e.citation = citation;
    out.push_back(std::move(e));
  }
  return out;
}

inline std::vector<RamseyEntry> load_ramsey_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_ramsey_table(in);
}

}  // namespace gallai
