#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "twq/energy.hpp"
#include "twq/energy_tw.hpp"
#include "twq/errors.hpp"
#include "twq/generators.hpp"
#include "twq/io.hpp"
#include "twq/mincycle.hpp"
#include "twq/oracles.hpp"
#include "twq/ratio.hpp"
#include "twq/treedec.hpp"

namespace twq::cli {

namespace {

using Json = nlohmann::ordered_json;

struct InputOptions {
  std::string file;
  std::string format;
  std::string heuristic = "min-degree";
  bool json = false;
  bool stats = false;
};

void add_input(CLI::App* sub, InputOptions& in) {
  sub->add_option("file", in.file, "graph file")->required();
  sub->add_option("--format", in.format, "dimacs, edgelist or dot; guessed when omitted")
      ->check(CLI::IsMember({"dimacs", "edgelist", "dot"}));
  sub->add_option("--heuristic", in.heuristic, "elimination order for the decomposition")
      ->check(CLI::IsMember({"min-degree", "min-fill"}));
  sub->add_flag("--json", in.json, "JSON output");
  sub->add_flag("--stats", in.stats, "counters on standard error");
}

WeightedDigraph load(const InputOptions& in, std::ostream& err) {
  std::optional<GraphFormat> fmt;
  if (!in.format.empty()) fmt = format_from_name(in.format);
  ParsedGraph parsed = read_graph_file(in.file, fmt);
  for (const auto& w : parsed.warnings) err << "warning: " << w << '\n';
  return std::move(parsed.graph);
}

EliminationHeuristic heuristic_of(const InputOptions& in) {
  return in.heuristic == "min-fill" ? EliminationHeuristic::kMinFill : EliminationHeuristic::kMinDegree;
}

DecompositionBuilder builder_of(const InputOptions& in) {
  EliminationHeuristic h = heuristic_of(in);
  return [h](const WeightedDigraph& g) { return build_decomposition(g, h); };
}

Json header(const char* command) {
  Json j;
  j["schema"] = 1;
  j["command"] = command;
  return j;
}

std::string text(const std::optional<Rational>& v) { return v ? v->str() : "inf"; }
std::string text(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "inf"; }

Json json_value(const std::optional<Rational>& v) { return text(v); }
Json json_value(const std::optional<std::int64_t>& v) { return v ? Json(*v) : Json("inf"); }

template <class T>
void print_values(const WeightedDigraph& g, const std::vector<std::optional<T>>& values, bool json, Json doc,
                  std::ostream& out) {
  if (json) {
    Json rows = Json::array();
    for (NodeId u = 0; u < g.n(); ++u) rows.push_back({{"node", g.label(u)}, {"value", json_value(values[u])}});
    doc["values"] = std::move(rows);
    out << doc.dump(2) << '\n';
    return;
  }
  for (NodeId u = 0; u < g.n(); ++u) out << g.label(u) << '\t' << text(values[u]) << '\n';
}

void print_search_stats(const SearchStats& s, std::ostream& err) {
  err << "calls\t" << s.calls << "\nzero_test\t" << s.zero_test << "\nexponential\t" << s.exponential
      << "\nbinary\t" << s.binary << "\nrefine\t" << s.refine << "\nverify\t" << s.verify << "\napprox_steps\t"
      << s.approx_steps << '\n';
}

NodeId node_of(const WeightedDigraph& g, const std::string& label) {
  if (auto u = g.find_node(label)) return *u;
  throw DomainError("unknown node '" + label + "'");
}

// mean / ratio ---------------------------------------------------------------

struct ValueOptions {
  InputOptions in;
  std::string algo = "tw";
  std::string approx;
  std::string refine = "bisection";
};

int cmd_values(const ValueOptions& o, Objective objective, std::ostream& out, std::ostream& err) {
  WeightedDigraph g = load(o.in, err);
  const char* name = objective == Objective::kMean ? "mean" : "ratio";
  Refinement refinement = o.refine == "stern-brocot" ? Refinement::kSternBrocot : Refinement::kBisection;
  NodeValues result;
  if (!o.approx.empty()) {
    if (objective != Objective::kMean || o.algo != "tw") throw DomainError("--approx needs mean with --algo tw");
    result = approx_mean_all_nodes(g, builder_of(o.in), Rational::parse(o.approx));
  } else if (o.algo == "tw") {
    result = ratio_values_all_nodes(g, builder_of(o.in), objective, refinement);
  } else if (o.algo == "karp") {
    if (objective != Objective::kMean) throw DomainError("karp computes mean values only");
    result = karp_values_all_nodes(g);
  } else {
    result.values = cycle_values_all_nodes(g, objective);
  }
  Json doc = header(name);
  doc["algo"] = o.algo;
  if (!o.approx.empty()) doc["approx"] = o.approx;
  if (o.in.json && o.in.stats)
    doc["stats"] = {{"calls", result.stats.calls}, {"zero_test", result.stats.zero_test},
                    {"exponential", result.stats.exponential}, {"binary", result.stats.binary},
                    {"refine", result.stats.refine}, {"verify", result.stats.verify},
                    {"approx_steps", result.stats.approx_steps}};
  print_values(g, result.values, o.in.json, std::move(doc), out);
  if (o.in.stats) print_search_stats(result.stats, err);
  return kOk;
}

// energy ---------------------------------------------------------------------

struct EnergyOptions {
  InputOptions in;
  std::string algo = "general";
  std::vector<std::string> decide;
};

int cmd_energy(const EnergyOptions& o, std::ostream& out, std::ostream& err) {
  WeightedDigraph g = load(o.in, err);
  if (!o.decide.empty()) {
    NodeId u = node_of(g, o.decide[0]);
    std::int64_t credit = 0;
    try {
      credit = std::stoll(o.decide[1]);
    } catch (const std::exception&) {
      throw DomainError("credit must be an integer: '" + o.decide[1] + "'");
    }
    if (credit < 0) throw DomainError("credit must be >= 0");
    bool yes = false;
    if (o.algo == "general") {
      yes = decide_energy(g, u, credit);
    } else {
      auto values = o.algo == "tw" ? energy_values_tw(g, build_decomposition(g, heuristic_of(o.in))).values
                                   : energy_fixpoint(g);
      yes = values[u] && *values[u] <= credit;
    }
    if (o.in.json) {
      Json doc = header("energy");
      doc["algo"] = o.algo;
      doc["node"] = o.decide[0];
      doc["credit"] = credit;
      doc["answer"] = yes;
      out << doc.dump(2) << '\n';
    } else {
      out << (yes ? "yes" : "no") << '\n';
    }
    return yes ? kOk : kDecideNo;
  }

  EnergyVector values;
  Json stats;
  if (o.algo == "general") {
    EnergyResult r = energy_values(g);
    values = std::move(r.values);
    stats = {{"zero_nodes", r.zero.zero_nodes.size()}, {"passes", r.zero.passes}};
  } else if (o.algo == "tw") {
    TreeDecomposition t = build_decomposition(g, heuristic_of(o.in));
    EnergyTwResult r = energy_values_tw(g, t);
    values = std::move(r.values);
    const EnergyTwStats& s = r.zero.stats;
    stats = {{"zero_nodes", r.zero.zero_nodes.size()}, {"kills", s.kills},
             {"killed_edges", s.killed_edges}, {"recomputations", s.recomputations},
             {"update_path_total", s.update_path_total}, {"height", s.height}, {"width", t.width()}};
  } else {
    values = energy_fixpoint(g);
  }
  Json doc = header("energy");
  doc["algo"] = o.algo;
  if (o.in.json && o.in.stats && !stats.is_null()) doc["stats"] = stats;
  print_values(g, values, o.in.json, std::move(doc), out);
  if (o.in.stats && !stats.is_null())
    for (auto& [k, v] : stats.items()) err << k << '\t' << v.dump() << '\n';
  return kOk;
}

// mincycle / treedec -----------------------------------------------------------

int cmd_mincycle(const InputOptions& in, std::ostream& out, std::ostream& err) {
  WeightedDigraph g = load(in, err);
  TreeDecomposition t = build_decomposition(g, heuristic_of(in));
  auto r = min_cycle(g, t);
  std::string c = r.c ? r.c->str() : "inf";
  if (in.json) {
    Json doc = header("mincycle");
    doc["c"] = c;
    doc["exact"] = r.exact();
    doc["height"] = r.height;
    doc["peak_maps"] = r.peak_maps;
    doc["bags"] = r.bags;
    out << doc.dump(2) << '\n';
  } else {
    out << "c\t" << c << '\n';
  }
  if (in.stats)
    err << "height\t" << r.height << "\npeak_maps\t" << r.peak_maps << "\nbags\t" << r.bags << "\nwidth\t"
        << t.width() << '\n';
  return kOk;
}

struct TreedecOptions {
  InputOptions in;
  bool validate = false;
  bool raw = false;
};

int cmd_treedec(const TreedecOptions& o, std::ostream& out, std::ostream& err) {
  WeightedDigraph g = load(o.in, err);
  TreeDecomposition raw = eliminate(g, heuristic_of(o.in));
  TreeDecomposition t = o.raw ? raw : balance_and_binarize(raw);
  std::optional<Violation> v;
  if (o.validate) v = validate(t, g, o.raw ? ValidateOptions{false, false} : ValidateOptions{});
  if (o.in.json) {
    Json doc = header("treedec");
    doc["width"] = t.width();
    doc["height"] = t.height();
    doc["height_bound"] = height_bound(g.n());
    doc["elimination_width"] = raw.width();
    Json bags = Json::array();
    for (BagId b = 0; b < t.size(); ++b) {
      Json nodes = Json::array();
      for (NodeId u : t.bag(b).nodes) nodes.push_back(u < g.n() ? g.label(u) : "z");
      bags.push_back({{"id", b},
                      {"parent", t.bag(b).parent == kNoBag ? Json(nullptr) : Json(t.bag(b).parent)},
                      {"nodes", std::move(nodes)}});
    }
    doc["bags"] = std::move(bags);
    if (o.validate) doc["valid"] = !v.has_value();
    out << doc.dump(2) << '\n';
  } else {
    out << format_decomposition(t, g);
  }
  if (o.in.stats)
    err << "width\t" << t.width() << "\nheight\t" << t.height() << "\nheight_bound\t" << height_bound(g.n())
        << "\nelimination_width\t" << raw.width() << "\nbags\t" << t.size() << '\n';
  if (v) {
    err << "invalid decomposition: " << to_string(v->kind) << ": " << v->message << '\n';
    return kUserError;
  }
  return kOk;
}

// gen ------------------------------------------------------------------------

struct GenCommand {
  std::string kind;
  GenOptions opt;
  std::string output;
  std::string format = "dimacs";
};

int cmd_gen(const GenCommand& c, std::ostream& out) {
  auto kind = graph_kind_from_name(c.kind);
  if (!kind) throw DomainError("unknown generator '" + c.kind + "'");
  WeightedDigraph g = generate(*kind, c.opt);
  std::string body = write_graph(g, *format_from_name(c.format));
  if (c.output.empty()) {
    out << body;
    return kOk;
  }
  std::ofstream f(c.output, std::ios::binary);
  if (!f) throw DomainError("cannot write '" + c.output + "'");
  f << body;
  return kOk;
}

int guarded(const std::function<int()>& fn, std::ostream& err) {
  try {
    return fn();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const OracleTooBig& e) {
    err << "error: oracle refused the instance: " << e.what() << '\n';
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kUserError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mean, ratio and energy values of weighted digraphs", "twq"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "help for every subcommand");
  app.failure_message(CLI::FailureMessage::help);

  ValueOptions mean, ratio;
  auto* mean_cmd = app.add_subcommand("mean", "minimum mean cycle value per node");
  add_input(mean_cmd, mean.in);
  mean_cmd->add_option("--algo", mean.algo, "tw, karp or oracle")->check(CLI::IsMember({"tw", "karp", "oracle"}));
  mean_cmd->add_option("--approx", mean.approx, "relative error in (0,1)");
  mean_cmd->add_option("--refine", mean.refine, "bisection or stern-brocot")
      ->check(CLI::IsMember({"bisection", "stern-brocot"}));

  auto* ratio_cmd = app.add_subcommand("ratio", "minimum ratio cycle value per node");
  add_input(ratio_cmd, ratio.in);
  ratio_cmd->add_option("--algo", ratio.algo, "tw or oracle")->check(CLI::IsMember({"tw", "oracle"}));
  ratio_cmd->add_option("--refine", ratio.refine, "bisection or stern-brocot")
      ->check(CLI::IsMember({"bisection", "stern-brocot"}));

  EnergyOptions energy;
  auto* energy_cmd = app.add_subcommand("energy", "minimum initial credit per node");
  add_input(energy_cmd, energy.in);
  energy_cmd->add_option("--algo", energy.algo, "general, tw or oracle")
      ->check(CLI::IsMember({"general", "tw", "oracle"}));
  energy_cmd->add_option("--decide", energy.decide, "node and credit; exit 0 if the credit suffices, 3 if not")
      ->expected(2);

  InputOptions mc;
  auto* mc_cmd = app.add_subcommand("mincycle", "bottom-up minimum cycle bound c");
  add_input(mc_cmd, mc);

  TreedecOptions td;
  auto* td_cmd = app.add_subcommand("treedec", "balanced binary tree decomposition");
  add_input(td_cmd, td.in);
  td_cmd->add_flag("--validate", td.validate, "exit 1 if the decomposition is invalid");
  td_cmd->add_flag("--raw", td.raw, "skip balancing and binarization");

  GenCommand gen;
  auto* gen_cmd = app.add_subcommand("gen", "synthetic graph generator");
  gen_cmd->add_option("kind", gen.kind, "ktree, sparse-random or cfg-like")->required();
  gen_cmd->add_option("n", gen.opt.n, "node count")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("k", gen.opt.k, "k-tree width")->check(CLI::Range(1, 5));
  gen_cmd->add_option("--seed", gen.opt.seed, "random seed");
  gen_cmd->add_option("--min-weight", gen.opt.min_weight);
  gen_cmd->add_option("--max-weight", gen.opt.max_weight);
  gen_cmd->add_option("--max-transit", gen.opt.max_transit)->check(CLI::PositiveNumber);
  gen_cmd->add_option("--both-directions", gen.opt.both_directions)->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--density", gen.opt.edges_per_node, "edges per node for sparse-random");
  gen_cmd->add_flag("--strong", gen.opt.strongly_connected, "make the graph strongly connected");
  gen_cmd->add_option("--format", gen.format)->check(CLI::IsMember({"dimacs", "edgelist", "dot"}));
  gen_cmd->add_option("-o,--output", gen.output, "write to a file instead of standard output");

  BenchOptions bo;
  std::string algos;
  auto* bench_cmd = app.add_subcommand("bench", "cross-checked timings over a corpus directory");
  bench_cmd->add_option("corpus", bo.corpus)->required();
  bench_cmd->add_option("--problem", bo.problem)->check(CLI::IsMember({"mean", "ratio", "energy"}));
  bench_cmd->add_option("--algo,--algos", algos, "comma separated, the first is the reference");
  bench_cmd->add_option("--reps", bo.reps)->check(CLI::PositiveNumber);
  bench_cmd->add_flag("--json", bo.json);

  SelftestOptions so;
  auto* self_cmd = app.add_subcommand("selftest", "differential suites against the oracles");
  self_cmd->add_option("--cases", so.cases, "instances per suite")->check(CLI::PositiveNumber);
  self_cmd->add_option("--seed", so.seed);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUserError;
  }

  return guarded(
      [&]() -> int {
        if (*mean_cmd) return cmd_values(mean, Objective::kMean, out, err);
        if (*ratio_cmd) return cmd_values(ratio, Objective::kRatio, out, err);
        if (*energy_cmd) return cmd_energy(energy, out, err);
        if (*mc_cmd) return cmd_mincycle(mc, out, err);
        if (*td_cmd) return cmd_treedec(td, out, err);
        if (*gen_cmd) return cmd_gen(gen, out);
        if (*bench_cmd) {
          std::stringstream ss(algos);
          for (std::string a; std::getline(ss, a, ',');)
            if (!a.empty()) bo.algos.push_back(a);
          return bench(bo, out, err);
        }
        return selftest(so, out, err);
      },
      err);
}

}  // namespace twq::cli
