#pragma once

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gallai/gallai.hpp"
#include "grid.hpp"

namespace gallai::cli {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2 };

struct Options {
  std::string target;
  int k = 0;
  int n = 0;
  int n_max = kDefaultEnumerationBound;
  int threads = 0;
  std::uint64_t seed = 20240917;
  std::optional<double> c;
  std::string format = "json";
  std::string queries;
  std::string file;
  std::string out_file;
  std::string construction;
  std::map<std::string, int> params;
  bool no_timing = false;
};

inline std::string format_table_row(const std::string& h, const std::string& k,
                                    const std::string& kind, const std::string& value,
                                    const std::string& provenance) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-8s %3s  %-7s %-10s %s", h.c_str(), k.c_str(), kind.c_str(),
                value.c_str(), provenance.c_str());
  std::string s = buf;
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

inline std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string s;
  for (const auto& x : v) {
    if (!s.empty()) s += sep;
    s += x;
  }
  return s;
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int eval(const Options& o) {
    std::vector<std::pair<std::string, int>> queries;
    if (!o.queries.empty()) {
      std::ifstream in(o.queries);
      if (!in) throw ParseError("cannot open " + o.queries);
      std::string line;
      while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string h;
        int k = 0;
        if (!(ls >> h)) continue;
        if (!(ls >> k)) throw ParseError("query line needs '<H> <k>': " + line);
        queries.emplace_back(h, k);
      }
    } else {
      if (o.target.empty() || o.k < 1) throw ParseError("eval needs --H and --k (or --queries)");
      queries.emplace_back(o.target, o.k);
    }
    if (o.format == "table") out_ << format_table_row("H", "k", "kind", "value", "provenance") << '\n';
    for (const auto& [spec, k] : queries) {
      auto h = parse_target(spec);
      auto r = evaluate(h, k, o.c);
      if (o.format == "table")
        out_ << format_table_row(describe(h), std::to_string(k), to_string(r.kind), value_text(r),
                                 join(r.provenance, ",")) << '\n';
      else
        out_ << to_json(r).dump() << '\n';
    }
    return kOk;
  }

  int witness(const Options& o) {
    auto start = now();
    Json report;
    report["query"] = query_json(o);
    report["status"] = "none";
    std::optional<ColoredComplete> coloring;
    std::optional<WitnessResult> verdict;
    if (!o.construction.empty()) {
      coloring = construction(o.construction, o.params);
      if (!o.target.empty()) verdict = verify_witness(*coloring, parse_target(o.target), o.construction);
    } else {
      if (o.target.empty() || o.k < 1) throw ParseError("witness needs --H and --k, or --construction");
      auto cert = lower_bound_witness(parse_target(o.target), o.k);
      if (cert) {
        coloring = cert->coloring;
        verdict = *cert;
      }
    }
    int code = kOk;
    if (!coloring) {
      code = kFailed;
    } else {
      report["witness"] = to_json(*coloring);
      if (!verdict) {
        report["status"] = "built";
      } else if (is_certificate(*verdict)) {
        report["status"] = "certified";
        auto cert = to_json(std::get<WitnessCertificate>(*verdict));
        cert.erase("coloring");
        report["certificate"] = cert;
      } else {
        const auto& f = std::get<WitnessFailure>(*verdict);
        report["status"] = "failed";
        report["failure"] = f.reason;
        if (f.found) report["found"] = to_json(*f.found);
        code = kFailed;
      }
      if (!o.out_file.empty()) save_coloring(*coloring, o.out_file);
    }
    report["counts"] = Json{{"order", coloring ? coloring->order() : 0}};
    finish(report, start, o);
    return code;
  }

  int check(const Options& o) {
    if (o.target.empty() || o.k < 1 || o.n < 1) throw ParseError("check needs --H, --k and --n");
    auto start = now();
    auto outcome = check_n(parse_target(o.target), o.k, o.n, {o.threads, kDefaultEnumerationBound});
    Json report;
    report["query"] = query_json(o);
    report["status"] = to_string(outcome.status);
    if (outcome.witness) report["witness"] = to_json(*outcome.witness);
    report["counts"] = Json{{"examined", outcome.examined}};
    finish(report, start, o);
    return outcome.status == CheckStatus::bad ? kFailed : kOk;
  }

  int search(const Options& o) {
    if (o.target.empty() || o.k < 1) throw ParseError("search needs --H and --k");
    auto start = now();
    auto r = compute_gr(parse_target(o.target), o.k, o.n_max, {o.threads, kDefaultEnumerationBound});
    Json report;
    report["query"] = query_json(o);
    report["status"] = r.value ? "found" : "inconclusive";
    if (r.value) report["value"] = *r.value;
    report["verified_through"] = r.verified_through;
    Json per = Json::array();
    std::size_t examined = 0;
    for (const auto& c : r.per_n) {
      per.push_back({{"n", c.n}, {"status", to_string(c.status)}, {"examined", c.examined}});
      examined += c.examined;
    }
    report["per_n"] = per;
    report["counts"] = Json{{"examined", examined}};
    finish(report, start, o);
    if (r.value)
      err_ << "gr_" << o.k << "(P5:" << o.target << ") = " << *r.value << ", verified for n <= "
           << r.verified_through << " only\n";
    return r.value ? kOk : kFailed;
  }

  int classify(const Options& o) {
    auto c = load_input(o);
    auto rep = classify_p5free(c);
    Json report = to_json(rep);
    report["n"] = c.order();
    report["k"] = c.declared_colors();
    out_ << report.dump() << '\n';
    return kOk;
  }

  int enumerate(const Options& o) {
    if (o.n < 1 || o.k < 1) throw ParseError("enumerate needs --n and --k");
    for (const auto& kc : enumerate_p5free(o.n, o.k, {o.threads, kDefaultEnumerationBound}))
      out_ << to_json(kc.coloring).dump() << '\n';
    return kOk;
  }

  int verify(const Options& o) {
    if (o.target.empty()) throw ParseError("verify needs --H");
    auto start = now();
    auto c = load_input(o);
    auto r = verify_witness(c, parse_target(o.target), o.file);
    Json report;
    report["query"] = query_json(o);
    if (is_certificate(r)) {
      report["status"] = "certified";
      auto cert = to_json(std::get<WitnessCertificate>(r));
      cert.erase("coloring");
      report["certificate"] = cert;
    } else {
      const auto& f = std::get<WitnessFailure>(r);
      report["status"] = "failed";
      report["failure"] = f.reason;
      if (f.found) report["found"] = to_json(*f.found);
    }
    report["counts"] = Json{{"order", c.order()}};
    finish(report, start, o);
    return is_certificate(r) ? kOk : kFailed;
  }

  int selftest(const Options& o) {
    bool all = true;
    auto line = [&](bool ok, const std::string& what) {
      out_ << (ok ? "PASS " : "FAIL ") << what << '\n';
      all = all && ok;
    };
    for (int k : {4, 5}) {
      std::set<CanonicalKey> brute, structured;
      brute_force_colorings(5, k, [&](const ColoredComplete& c) {
        if (!has_rainbow_p5(c)) brute.insert(canonical_form(c));
      });
      for (const auto& kc : enumerate_p5free(5, k, {o.threads, kDefaultEnumerationBound}))
        structured.insert(kc.key);
      line(brute == structured, "enumerator equals brute force at n=5 k=" + std::to_string(k) +
                                    " (" + std::to_string(brute.size()) + " classes)");
    }
    int failures = 0, rows = 0;
    for (const auto& row : grid::construction_grid()) {
      ++rows;
      auto r = grid::check_row(row);
      if (!r.ok()) {
        ++failures;
        err_ << "grid failure: " << grid::describe_row(row) << " " << r.failure << '\n';
      }
    }
    line(failures == 0, "construction grid (" + std::to_string(rows) + " rows)");
    std::mt19937_64 rng(o.seed);
    int mismatches = 0;
    for (int trial = 0; trial < 2000; ++trial) {
      int n = 5 + static_cast<int>(rng() % 5);
      int k = 2 + static_cast<int>(rng() % 7);
      std::vector<Color> colors(pair_count(n));
      for (auto& col : colors) col = static_cast<Color>(1 + rng() % k);
      ColoredComplete c(n, k, colors);
      if (classify_p5free(c).empty() != find_rainbow_path(c, 4).has_value()) ++mismatches;
    }
    line(mismatches == 0, "structure classification on 2000 random colorings (seed " +
                              std::to_string(o.seed) + ")");
    return all ? kOk : kFailed;
  }

 private:
  using Clock = std::chrono::steady_clock;
  static Clock::time_point now() { return Clock::now(); }

  void finish(Json& report, Clock::time_point start, const Options& o) {
    if (!o.no_timing)
      report["elapsed_ms"] =
          std::chrono::duration_cast<std::chrono::milliseconds>(now() - start).count();
    out_ << report.dump() << '\n';
  }

  static Json query_json(const Options& o) {
    Json q;
    if (!o.target.empty()) q["H"] = o.target;
    if (o.k) q["k"] = o.k;
    if (o.n) q["n"] = o.n;
    if (!o.construction.empty()) q["construction"] = o.construction;
    for (const auto& [key, v] : o.params) q[key] = v;
    return q;
  }

  static ColoredComplete load_input(const Options& o) {
    if (!o.construction.empty()) return construction(o.construction, o.params);
    if (o.file.empty()) throw ParseError("need --file (witness JSON) or --construction");
    return load_coloring(o.file);
  }

  std::ostream& out_;
  std::ostream& err_;
};

/// Parses argv-style arguments (without the program name) and runs the
/// chosen subcommand. Returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gallai-Ramsey toolkit for rainbow P5 versus monochromatic H"};
  app.require_subcommand(1);
  Options o;
  std::optional<int> p_t, p_a, p_r, p_delta;

  auto target = [&](CLI::App* s) { s->add_option("--H", o.target, "target graph: K5, S4^1, PA6,5, K6-M or JSON"); };
  auto threads = [&](CLI::App* s) {
    s->add_option("--threads", o.threads, "worker threads (default: GALLAI_THREADS or all cores)");
  };
  auto timing = [&](CLI::App* s) { s->add_flag("--no-timing", o.no_timing, "omit elapsed_ms"); };
  auto construction_opts = [&](CLI::App* s) {
    s->add_option("--construction", o.construction, "named construction (G1..G6, F1..F13, R35, TW-case-f)");
    s->add_option("--t", p_t);
    s->add_option("--a", p_a);
    s->add_option("--r", p_r);
    s->add_option("--delta", p_delta);
  };

  auto* eval = app.add_subcommand("eval", "closed-form value or bounds for gr_k(P5:H)");
  target(eval);
  eval->add_option("--k", o.k);
  eval->add_option("--c", o.c, "absolute constant of the pineapple Ramsey bound");
  eval->add_option("--format", o.format)->check(CLI::IsMember({"json", "table"}));
  eval->add_option("--queries", o.queries, "file with one '<H> <k>' query per line");

  auto* witness = app.add_subcommand("witness", "build and certify a lower-bound coloring");
  target(witness);
  witness->add_option("--k", o.k);
  construction_opts(witness);
  witness->add_option("--out", o.out_file, "also write the coloring JSON here");
  timing(witness);

  auto* check = app.add_subcommand("check", "decide one n exhaustively");
  target(check);
  check->add_option("--k", o.k);
  check->add_option("--n", o.n);
  threads(check);
  timing(check);

  auto* search = app.add_subcommand("search", "smallest N verified up to nmax");
  target(search);
  search->add_option("--k", o.k);
  search->add_option("--nmax", o.n_max, "largest order checked (default 9)");
  threads(search);
  timing(search);

  auto* classify = app.add_subcommand("classify", "structural cases of a coloring");
  classify->add_option("--file", o.file);
  construction_opts(classify);

  auto* enumerate = app.add_subcommand("enumerate", "rainbow-P5-free exact colorings, one JSON per line");
  enumerate->add_option("--n", o.n);
  enumerate->add_option("--k", o.k);
  threads(enumerate);

  auto* verify = app.add_subcommand("verify", "certify a coloring file against H");
  target(verify);
  verify->add_option("--file", o.file);
  construction_opts(verify);
  timing(verify);

  auto* selftest = app.add_subcommand("selftest", "oracle agreement and construction grid");
  selftest->add_option("--seed", o.seed);
  threads(selftest);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }
  if (p_t) o.params["t"] = *p_t;
  if (p_a) o.params["a"] = *p_a;
  if (p_r) o.params["r"] = *p_r;
  if (p_delta) o.params["delta"] = *p_delta;
  if (o.k && !o.construction.empty()) o.params["k"] = o.k;

  Runner runner(out, err);
  try {
    if (eval->parsed()) return runner.eval(o);
    if (witness->parsed()) return runner.witness(o);
    if (check->parsed()) return runner.check(o);
    if (search->parsed()) return runner.search(o);
    if (classify->parsed()) return runner.classify(o);
    if (enumerate->parsed()) return runner.enumerate(o);
    if (verify->parsed()) return runner.verify(o);
    if (selftest->parsed()) return runner.selftest(o);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NotFound& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UnsupportedSize& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Unsupported& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  out << app.help();
  return kUsage;
}

}  // namespace gallai::cli
