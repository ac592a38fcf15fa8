#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <ostream>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "twq/energy.hpp"
#include "twq/energy_tw.hpp"
#include "twq/errors.hpp"
#include "twq/io.hpp"
#include "twq/mincycle.hpp"
#include "twq/oracles.hpp"
#include "twq/ratio.hpp"
#include "twq/treedec.hpp"

namespace twq::cli {

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;
using Values = std::variant<std::vector<std::optional<Rational>>, EnergyVector>;

struct Run {
  Values values;
  std::size_t calls = 0;
  std::size_t peak_maps = 0;
  std::size_t kills = 0;
};

struct Row {
  std::string instance;
  std::size_t n = 0, m = 0;
  std::int64_t width = 0;
  std::uint32_t height = 0;
  std::string algo;
  double ms = 0;
  Run run;
};

std::vector<std::string> default_algos(const std::string& problem) {
  if (problem == "mean") return {"tw", "karp"};
  if (problem == "ratio") return {"tw", "oracle"};
  return {"general", "tw", "oracle"};
}

std::function<Run()> solver(const std::string& problem, const std::string& algo, const WeightedDigraph& g,
                            const TreeDecomposition& t) {
  DecompositionBuilder builder = [](const WeightedDigraph& h) { return build_decomposition(h); };
  if (problem == "energy") {
    if (algo == "general") return [&g] { return Run{energy_values(g).values}; };
    if (algo == "tw")
      return [&g, &t] {
        EnergyTwResult r = energy_values_tw(g, t);
        return Run{std::move(r.values), 0, r.zero.stats.bags, r.zero.stats.kills};
      };
    if (algo == "oracle") return [&g] { return Run{energy_fixpoint(g)}; };
  } else {
    Objective obj = problem == "mean" ? Objective::kMean : Objective::kRatio;
    if (algo == "tw" || algo == "tw-sb") {
      Refinement refine = algo == "tw" ? Refinement::kBisection : Refinement::kSternBrocot;
      return [&g, builder, obj, refine] {
        NodeValues r = ratio_values_all_nodes(g, builder, obj, refine);
        return Run{std::move(r.values), r.stats.calls};
      };
    }
    if (algo == "karp" && obj == Objective::kMean) return [&g] { return Run{karp_values_all_nodes(g).values}; };
    if (algo == "oracle") return [&g, obj] { return Run{cycle_values_all_nodes(g, obj)}; };
  }
  throw DomainError("algorithm '" + algo + "' does not solve " + problem);
}

std::string fmt_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

}  // namespace

int bench(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.problem != "mean" && opt.problem != "ratio" && opt.problem != "energy")
    throw DomainError("unknown problem '" + opt.problem + "'");
  if (!fs::is_directory(opt.corpus)) throw DomainError("corpus '" + opt.corpus + "' is not a directory");
  const std::vector<std::string> algos = opt.algos.empty() ? default_algos(opt.problem) : opt.algos;
  const std::size_t reps = std::max<std::size_t>(1, opt.reps);

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(opt.corpus))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  std::vector<Row> rows;
  for (const fs::path& path : files) {
    ParsedGraph parsed = read_graph_file(path.string());
    const WeightedDigraph& g = parsed.graph;
    TreeDecomposition t = build_decomposition(g);
    std::size_t peak = 0;
    if (g.n() > 0) peak = min_cycle(g, t).peak_maps;

    std::optional<Values> reference;
    std::vector<Row> pending;
    for (const std::string& algo : algos) {
      auto solve = solver(opt.problem, algo, g, t);
      Row row{path.filename().string(), g.n(), g.m(), t.width(), t.height(), algo, 0, solve()};
      if (!reference) {
        reference = row.run.values;
      } else if (row.run.values != *reference) {
        err << "mismatch on " << path.string() << ": " << algo << " disagrees with " << algos.front() << '\n';
        return kInternalError;
      }
      double total = 0;
      for (std::size_t r = 0; r < reps; ++r) {
        auto start = Clock::now();
        Run again = solve();
        total += std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        if (again.values != *reference) {
          err << "mismatch on " << path.string() << ": " << algo << " is not deterministic\n";
          return kInternalError;
        }
      }
      row.ms = total / static_cast<double>(reps);
      if (row.run.peak_maps == 0 && (algo == "tw" || algo == "tw-sb")) row.run.peak_maps = peak;
      pending.push_back(std::move(row));
    }
    for (Row& r : pending) rows.push_back(std::move(r));
  }

  if (opt.json) {
    nlohmann::ordered_json doc;
    doc["schema"] = 1;
    doc["command"] = "bench";
    doc["problem"] = opt.problem;
    doc["reps"] = reps;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const Row& r : rows)
      doc["rows"].push_back({{"instance", r.instance}, {"n", r.n}, {"m", r.m}, {"width", r.width},
                             {"height", r.height}, {"algo", r.algo}, {"ms", r.ms}, {"calls", r.run.calls},
                             {"peak_maps", r.run.peak_maps}, {"kills", r.run.kills}});
    out << doc.dump(2) << '\n';
    return kOk;
  }
  out << "instance\tn\tm\twidth\theight\talgo\tms\tcalls\tpeak_maps\tkills\n";
  for (const Row& r : rows)
    out << r.instance << '\t' << r.n << '\t' << r.m << '\t' << r.width << '\t' << r.height << '\t' << r.algo << '\t'
        << fmt_ms(r.ms) << '\t' << r.run.calls << '\t' << r.run.peak_maps << '\t' << r.run.kills << '\n';
  return kOk;
}

}  // namespace twq::cli
