#include <ostream>
#include <random>
#include <string>

#include "cli.hpp"
#include "twq/energy.hpp"
#include "twq/energy_tw.hpp"
#include "twq/generators.hpp"
#include "twq/mincycle.hpp"
#include "twq/oracles.hpp"
#include "twq/ratio.hpp"
#include "twq/treedec.hpp"

namespace twq::cli {

namespace {

struct Suite {
  explicit Suite(const char* n) : name(n) {}

  const char* name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
};

GenOptions instance_options(std::mt19937_64& rng, std::size_t i) {
  GenOptions o;
  o.n = std::uniform_int_distribution<std::size_t>(2, 10)(rng);
  o.k = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
  o.min_weight = -20;
  o.max_weight = 20;
  o.max_transit = 5;
  o.seed = rng();
  o.strongly_connected = i % 2 == 0;
  return o;
}

}  // namespace

int selftest(const SelftestOptions& opt, std::ostream& out, std::ostream& err) {
  std::mt19937_64 rng(opt.seed);
  DecompositionBuilder builder = [](const WeightedDigraph& h) { return build_decomposition(h); };
  Suite mean("mean"), ratio("ratio"), mincycle("mincycle"), energy("energy"), treedec("treedec");

  for (std::size_t i = 0; i < opt.cases; ++i) {
    GenOptions o = instance_options(rng, i);
    GraphKind kind = i % 3 == 2 ? GraphKind::kSparseRandom : GraphKind::kKTree;
    if (kind == GraphKind::kSparseRandom) o.edges_per_node = 1.5;
    WeightedDigraph g = generate(kind, o);
    std::string tag = std::string(to_string(kind)) + " n=" + std::to_string(o.n) + " seed=" + std::to_string(o.seed);
    TreeDecomposition t = build_decomposition(g);

    treedec.check(!validate(t, g).has_value(), tag);
    treedec.check(!validate(extend_with_z(t), make_graph(g.n() + 1, g.edges()), ValidateOptions{}).has_value(),
                  tag + " extended");

    auto oracle_mean = cycle_values_all_nodes(g, Objective::kMean);
    mean.check(ratio_values_all_nodes(g, builder, Objective::kMean).values == oracle_mean, tag);
    mean.check(karp_values_all_nodes(g).values == oracle_mean, tag + " karp");
    mean.check(ratio_values_all_nodes(g, builder, Objective::kMean, Refinement::kSternBrocot).values == oracle_mean,
               tag + " stern-brocot");
    ratio.check(ratio_values_all_nodes(g, builder, Objective::kRatio).values ==
                    cycle_values_all_nodes(g, Objective::kRatio),
                tag);

    CycleSummary s = summarize_cycles(enumerate_cycles(g));
    auto c = min_cycle(g, t);
    if (!s.min_weight) {
      mincycle.check(!c.c, tag);
    } else if (*s.min_weight >= 0) {
      mincycle.check(c.c && *c.c == *s.min_weight, tag);
    } else {
      mincycle.check(c.c && *c.c <= *s.min_weight, tag);
    }

    EnergyVector expected = energy_fixpoint(g);
    energy.check(energy_values(g).values == expected, tag + " general");
    energy.check(energy_values_tw(g, t).values == expected, tag + " tw");
  }

  bool ok = true;
  out << "suite\tcases\tfailures\n";
  for (const Suite* s : {&mean, &ratio, &mincycle, &energy, &treedec}) {
    out << s->name << '\t' << s->cases << '\t' << s->failures << '\n';
    if (s->failures == 0) continue;
    ok = false;
    err << s->name << ": first failure on " << s->first_failure << '\n';
  }
  return ok ? kOk : kInternalError;
}

}  // namespace twq::cli
