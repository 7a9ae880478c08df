#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hypercop/dismantle.hpp"
#include "hypercop/error.hpp"
#include "hypercop/filling.hpp"
#include "hypercop/game.hpp"
#include "hypercop/generators.hpp"
#include "hypercop/io.hpp"
#include "hypercop/metric.hpp"
#include "hypercop/version.hpp"
#include "report.hpp"

namespace hypercop::cli {

namespace {

/// The analysis is well-formed but declined (size cap, missing structure).
class Refused : public Error {
 public:
  using Error::Error;
};

struct Options {
  // global
  std::string format = "edgelist";
  bool json = false;
  unsigned threads = 0;
  bool timings = false;
  std::string output;

  std::string input;
  std::uint32_t s = 1;
  std::uint32_t sp = 1;
  bool star = false;

  // exact / approx
  std::size_t cap = 400;
  bool force = false;
  bool wm = false;
  bool localized = false;
  bool no_pretest = false;
  bool with_exact = false;

  // base / scan
  std::optional<std::uint64_t> root;
  std::uint32_t radius = 1;

  // copwin
  std::optional<std::string> policy;
  std::uint64_t seed = 0;
  std::uint32_t max_rounds = 1000;
  std::string transcript;

  // fill / verify-order
  std::string loop;
  std::string order_file;

  // gen
  std::string family;
  std::vector<std::uint64_t> params;
  std::optional<std::uint64_t> gen_seed;
};

struct Loaded {
  Graph g;
  DistanceMatrix dm;
};

using Clock = std::chrono::steady_clock;

template <typename F>
auto timed(Report& report, const std::string& op, F&& f) {
  auto start = Clock::now();
  auto result = f();
  report.add_timing(op, std::chrono::duration<double, std::milli>(Clock::now() - start).count());
  return result;
}

Loaded load(const Options& o, Report& report) {
  std::string text;
  if (o.input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    text = read_file(o.input);
  }
  report.set_input(o.input, text);
  Loaded l{parse_graph(text, parse_format(o.format)), {}};
  l.dm = timed(report, "distances", [&] { return all_pairs_distances(l.g, o.threads); });
  report.set_graph(l.g, l.dm);
  return l;
}

Vertex vertex_of(const Graph& g, std::uint64_t label) {
  if (auto v = g.find_label(label)) return *v;
  throw Error("no vertex labelled " + std::to_string(label));
}

std::vector<std::uint64_t> labels_of(const Graph& g, const std::vector<Vertex>& vs) {
  std::vector<std::uint64_t> out;
  out.reserve(vs.size());
  for (Vertex v : vs) out.push_back(g.label(v));
  return out;
}

void add_exact(const Options& o, const Loaded& l, Report& report) {
  if (l.g.size() > o.cap && !o.force) {
    throw Refused("exact hyperbolicity is O(n^4); n = " + std::to_string(l.g.size()) + " exceeds the cap of " +
                  std::to_string(o.cap) + " (use --force or --cap)");
  }
  HalfInt delta = timed(report, "exact_hyperbolicity", [&] { return exact_hyperbolicity(l.g, l.dm, o.threads); });
  report.add("exact_hyperbolicity")["delta"] = delta.to_string();
}

void cmd_exact(const Options& o, Report& report) {
  auto l = load(o, report);
  add_exact(o, l, report);
}

void cmd_base(const Options& o, Report& report) {
  auto l = load(o, report);
  Vertex root = o.root ? vertex_of(l.g, *o.root) : 0;
  HalfInt d = timed(report, "base_point_delta", [&] { return base_point_delta(l.g, l.dm, root); });
  auto& r = report.add("base_point_delta");
  r["root"] = l.g.label(root);
  r["delta"] = d.to_string();
  r["upper"] = (d * 2).to_string();
}

void cmd_approx(const Options& o, Report& report) {
  if (int(o.wm) + int(o.localized) > 1) throw Error("--wm and --localized are mutually exclusive");
  auto l = load(o, report);
  if (!o.no_pretest && timed(report, "block_graph_pretest", [&] { return is_block_graph(l.g); })) {
    auto& r = report.add("block_graph_pretest");
    r["delta"] = "0";
    r["method"] = "block-graph";
  } else {
    std::string op = o.wm ? "sieve_approx_wm" : o.localized ? "sieve_approx_localized" : "sieve_approx";
    if (o.wm) {
      auto wm = is_weakly_modular(l.g, l.dm);
      if (!wm.weakly_modular) {
        throw Refused("graph is not weakly modular (" + wm.failed_condition + " condition fails)");
      }
    }
    SieveResult sr = timed(report, op, [&] {
      if (o.wm) return sieve_approx_wm(l.g, l.dm);
      if (o.localized) return sieve_approx_localized(l.g);
      return sieve_approx(l.g, l.dm);
    });
    auto& r = report.add(op);
    r["alpha"] = sr.alpha;
    r["lower"] = sr.lower.to_string();
    r["upper"] = sr.upper.to_string();
    r["iterations"] = sr.stats.iterations;
    r["pops"] = sr.stats.pops;
    if (!sr.witness_trace.empty()) {
      HalfInt best;
      for (const auto& w : sr.witness_trace) best = std::max(best, witness_lower_bound(l.dm, w));
      r["witness_lower"] = best.to_string();
    }
  }
  if (o.with_exact) add_exact(o, l, report);
}

void cmd_dismantle(const Options& o, Report& report) {
  auto l = load(o, report);
  auto ord = timed(report, "greedy_dismantling", [&] { return greedy_dismantling(l.g, l.dm, o.s, o.sp, o.star); });
  auto& r = report.add("greedy_dismantling");
  r["s"] = o.s;
  r["s_prime"] = o.sp;
  r["star"] = o.star;
  r["dismantlable"] = ord.has_value();
  if (!ord) return;
  r["order"] = labels_of(l.g, ord->order);
  nlohmann::ordered_json elim = nlohmann::ordered_json::array();
  for (Vertex v : ord->order) {
    if (ord->eliminator[v] == kNoVertex) {
      elim.push_back(nullptr);
    } else {
      elim.push_back(l.g.label(ord->eliminator[v]));
    }
  }
  r["eliminators"] = elim;
  if (o.sp < o.s) {
    bool wm = is_weakly_modular(l.g, l.dm).weakly_modular;
    r["hyperbolicity_bound"] = dismantle_to_copwin_bound(*ord, wm).to_string();
    r["bound_basis"] = wm ? "weakly-modular" : o.star ? "star-order" : "order";
  }
}

void cmd_copwin(const Options& o, Report& report) {
  auto l = load(o, report);
  Solution sol = timed(report, "solve_game", [&] { return solve_game(l.g, l.dm, o.s, o.sp); });
  auto& r = report.add("solve_game");
  r["s"] = o.s;
  r["s_prime"] = o.sp;
  r["copwin"] = sol.copwin;
  if (sol.best_start) {
    r["best_start"] = l.g.label(*sol.best_start);
    std::uint32_t worst = 0;
    for (Vertex v = 0; v < l.g.size(); ++v) {
      if (v != *sol.best_start) worst = std::max(worst, sol.steps({*sol.best_start, v, Side::Cop}));
    }
    r["capture_moves"] = worst;
  } else {
    r["best_start"] = nullptr;
  }
  if (!o.policy) return;

  SimulateOptions so;
  so.policy = parse_robber_policy(*o.policy);
  so.seed = o.seed;
  so.max_rounds = o.max_rounds;
  Transcript t = simulate(l.g, l.dm, o.s, o.sp, sol, so);
  auto& sim = report.add("simulate");
  sim["policy"] = to_string(so.policy);
  sim["cop_start"] = l.g.label(t.start.cop);
  sim["robber_start"] = l.g.label(t.start.robber);
  sim["captured"] = t.captured;
  sim["cop_moves"] = t.cop_moves;
  if (!o.transcript.empty()) {
    std::ofstream f(o.transcript, std::ios::binary);
    if (!f) throw Error("cannot write '" + o.transcript + "'");
    f << transcript_to_json_lines(l.g, t);
  }
}

std::vector<std::uint64_t> parse_label_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    try {
      out.push_back(std::stoull(item, &used));
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || item.find_first_not_of(" \t", used) != std::string::npos) {
      throw Error("invalid vertex label '" + item + "' in --loop");
    }
  }
  if (out.empty()) throw Error("--loop is empty");
  return out;
}

void cmd_fill(const Options& o, Report& report) {
  if (o.sp >= o.s) throw Error("fillings need s' < s");
  auto l = load(o, report);
  Loop loop;
  for (auto label : parse_label_list(o.loop)) loop.vertices.push_back(vertex_of(l.g, label));
  check_loop(l.g, loop);
  auto ord = timed(report, "greedy_dismantling", [&] { return greedy_dismantling(l.g, l.dm, o.s, o.sp, true); });
  if (!ord) {
    throw Refused("graph is not (" + std::to_string(o.s) + "," + std::to_string(o.sp) + ")*-dismantlable");
  }
  Filling f = timed(report, "build_filling", [&] { return build_filling(l.g, l.dm, loop, *ord); });
  auto rep = validate_filling(l.g, l.dm, loop, f, o.s + o.sp, 1, 2 * std::uint64_t{o.s - o.sp});
  auto& r = report.add("build_filling");
  r["s"] = o.s;
  r["s_prime"] = o.sp;
  r["loop_length"] = loop.length();
  r["faces"] = rep.faces;
  r["max_face"] = rep.max_face;
  r["area_bound"] = rep.area_bound;
  r["valid"] = rep.ok();
  r["failures"] = rep.failures;
  r["filling"] = nlohmann::ordered_json::parse(filling_to_json(l.g, f));
}

void cmd_scan(const Options& o, Report& report) {
  auto l = load(o, report);
  HalfInt d = timed(report, "local_hyperbolicity_scan",
                    [&] { return local_hyperbolicity_scan(l.g, l.dm, o.radius); });
  auto& r = report.add("local_hyperbolicity_scan");
  r["radius"] = o.radius;
  r["delta"] = d.to_string();
}

void cmd_census(const Options& o, Report& report) {
  auto l = load(o, report);
  auto census = timed(report, "metric_triangle_census", [&] { return metric_triangle_census(l.g, l.dm); });
  auto& r = report.add("metric_triangle_census");
  r["mu_max"] = census.mu_max;
  r["triangles"] = census.triangles.size();
  r["equilateral"] = std::count_if(census.triangles.begin(), census.triangles.end(),
                                   [](const MetricTriangle& t) { return t.equilateral(); });
  auto nu = timed(report, "interval_thinness", [&] { return interval_thinness(l.g, l.dm); });
  report.add("interval_thinness")["nu"] = nu;
}

EliminationOrder read_order(const Options& o, const Graph& g) {
  EliminationOrder ord;
  ord.s = o.s;
  ord.s_prime = o.sp;
  ord.star = o.star;
  ord.eliminator.assign(g.size(), kNoVertex);
  std::stringstream in(read_file(o.order_file));
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::stringstream words(line.substr(0, line.find('#')));
    std::vector<std::string> w{std::istream_iterator<std::string>(words), std::istream_iterator<std::string>()};
    if (w.empty()) continue;
    if (w.size() > 2) throw ParseError(line_no, "expected \"vertex [eliminator]\"");
    std::vector<Vertex> vs;
    for (const auto& word : w) {
      std::size_t used = 0;
      std::uint64_t label = 0;
      try {
        label = std::stoull(word, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != word.size()) throw ParseError(line_no, "invalid vertex label '" + word + "'");
      auto v = g.find_label(label);
      if (!v) throw ParseError(line_no, "no vertex labelled " + word);
      vs.push_back(*v);
    }
    if (ord.order.empty() != (vs.size() == 1)) {
      throw ParseError(line_no, ord.order.empty() ? "the first vertex takes no eliminator"
                                                  : "missing eliminator");
    }
    if (vs.size() == 2) ord.eliminator[vs[0]] = vs[1];
    ord.order.push_back(vs[0]);
  }
  return ord;
}

void cmd_verify_order(const Options& o, Report& report) {
  auto l = load(o, report);
  EliminationOrder ord = read_order(o, l.g);
  auto bad = timed(report, "verify_order", [&] { return verify_order(l.g, l.dm, ord); });
  auto& r = report.add("verify_order");
  r["s"] = o.s;
  r["s_prime"] = o.sp;
  r["star"] = o.star;
  r["valid"] = !bad.has_value();
  if (bad) {
    r["vertex"] = bad->v < l.g.size() ? nlohmann::ordered_json(l.g.label(bad->v)) : nlohmann::ordered_json(nullptr);
    r["reason"] = bad->reason;
    r["escaping"] = labels_of(l.g, bad->escaping);
  }
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f || !(f << text)) throw Error("cannot write '" + o.output + "'");
}

void cmd_gen(const Options& o, std::ostream& out) {
  FamilySpec spec{parse_family(o.family), o.params, o.gen_seed};
  GeneratedGraph gg = generate(spec);
  emit(o, parse_format(o.format) == GraphFormat::Dimacs ? emit_dimacs(gg.graph) : to_edgelist(gg), out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Gromov hyperbolicity, dismantling orders and cop-and-robber games on finite graphs", "hypercop"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Graph format: edgelist or dimacs")
      ->check(CLI::IsMember({"edgelist", "dimacs"}));
  app.add_flag("--json", o.json, "Write the report as JSON");
  app.add_option("--threads", o.threads, "Worker threads (0 = HYPERCOP_THREADS or all cores)");
  app.add_flag("--timings", o.timings, "Include wall-clock timings in the report");
  app.add_option("-o,--output", o.output, "Write output to a file instead of stdout");

  auto with_input = [&](CLI::App* sub) {
    sub->add_option("graph", o.input, "Graph file, '-' for stdin")->required();
  };
  auto with_speeds = [&](CLI::App* sub, bool star) {
    sub->add_option("--s", o.s, "Robber speed s")->required()->check(CLI::PositiveNumber);
    sub->add_option("--sp", o.sp, "Cop speed s'")->required()->check(CLI::PositiveNumber);
    if (star) sub->add_flag("--star", o.star, "Use the (s,s')* variant");
  };

  auto* exact = app.add_subcommand("exact", "Exact hyperbolicity by the four-point condition");
  with_input(exact);
  exact->add_option("--cap", o.cap, "Refuse graphs with more vertices than this");
  exact->add_flag("--force", o.force, "Ignore the size cap");

  auto* base = app.add_subcommand("base", "Base-point hyperbolicity (2-approximation)");
  with_input(base);
  base->add_option("--root", o.root, "Base vertex label (default: smallest)");

  auto* approx = app.add_subcommand("approx", "Sieve approximation with block-graph pretest");
  with_input(approx);
  approx->add_flag("--wm", o.wm, "Weakly modular variant");
  approx->add_flag("--localized", o.localized, "Adjacency-list variant");
  approx->add_flag("--no-pretest", o.no_pretest, "Skip the block-graph pretest");
  approx->add_flag("--with-exact", o.with_exact, "Also run the exact oracle");
  approx->add_option("--cap", o.cap, "Size cap for --with-exact");
  approx->add_flag("--force", o.force, "Ignore the size cap");

  auto* dismantle = app.add_subcommand("dismantle", "Greedy (s,s')-dismantling");
  with_input(dismantle);
  with_speeds(dismantle, true);

  auto* copwin = app.add_subcommand("copwin", "Solve the (s,s') cop-and-robber game");
  with_input(copwin);
  with_speeds(copwin, false);
  copwin->add_option("--simulate", o.policy, "Play a game: greedy-evader, random or adversarial-optimal");
  copwin->add_option("--seed", o.seed, "Seed for the random robber");
  copwin->add_option("--max-rounds", o.max_rounds, "Round limit for --simulate");
  copwin->add_option("--transcript", o.transcript, "Write the simulated game as JSON lines");

  auto* fill = app.add_subcommand("fill", "Build and validate an (s+s')-filling of a loop");
  with_input(fill);
  with_speeds(fill, false);
  fill->add_option("--loop", o.loop, "Comma-separated vertex labels")->required();

  auto* scan = app.add_subcommand("scan", "Largest four-point value inside balls of a given radius");
  with_input(scan);
  scan->add_option("--radius", o.radius, "Ball radius")->required();

  auto* census = app.add_subcommand("census", "Metric triangle census and interval thinness");
  with_input(census);

  auto* gen = app.add_subcommand("gen", "Generate a graph family");
  gen->add_option("family", o.family, "path, cycle, complete, grid, subdivided_grid, hypercube, random_tree, "
                                      "random_gnp, random_block")
      ->required();
  gen->add_option("params", o.params, "Family parameters");
  gen->add_option("--seed", o.gen_seed, "Seed for random families");

  auto* verify = app.add_subcommand("verify-order", "Check an elimination order file");
  with_input(verify);
  with_speeds(verify, true);
  verify->add_option("--order-file", o.order_file, "Lines \"vertex [eliminator]\", minimum first")->required();

  std::vector<const char*> argv{"hypercop"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (gen->parsed()) {
      cmd_gen(o, out);
      return kExitOk;
    }
    Report report;
    if (o.timings) report.enable_timings();
    if (exact->parsed()) cmd_exact(o, report);
    else if (base->parsed()) cmd_base(o, report);
    else if (approx->parsed()) cmd_approx(o, report);
    else if (dismantle->parsed()) cmd_dismantle(o, report);
    else if (copwin->parsed()) cmd_copwin(o, report);
    else if (fill->parsed()) cmd_fill(o, report);
    else if (scan->parsed()) cmd_scan(o, report);
    else if (census->parsed()) cmd_census(o, report);
    else if (verify->parsed()) cmd_verify_order(o, report);
    emit(o, o.json ? report.to_json() : report.to_text(), out);
    return kExitOk;
  } catch (const Refused& e) {
    err << "hypercop: refused: " << e.what() << "\n";
    return kExitRefused;
  } catch (const std::exception& e) {
    err << "hypercop: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace hypercop::cli
