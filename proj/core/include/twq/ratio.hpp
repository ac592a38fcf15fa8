#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "twq/graph.hpp"
#include "twq/mincycle.hpp"
#include "twq/rational.hpp"
#include "twq/treedec.hpp"

namespace twq {

// Decision calls made by a search, split by phase. Each call is one
// min_cycle run on reweighted edges.
struct SearchStats {
  std::size_t calls = 0;
  std::size_t zero_test = 0;
  std::size_t exponential = 0;
  std::size_t binary = 0;
  std::size_t refine = 0;
  std::size_t verify = 0;
  std::size_t approx_steps = 0;  // bisection steps of approx_mean

  SearchStats& operator+=(const SearchStats& o);
};

enum class Objective { kRatio, kMean };  // kMean treats every transit weight as 1

// How the fractional part is pinned down once the integer part is known.
//  kBisection:   halve to width < 1/D^2 (D = n * max transit), then take the
//                simplest fraction inside.
//  kSternBrocot: walk the Stern-Brocot tree with galloping steps until a
//                mediant hits the value exactly; no denominator bound needed.
enum class Refinement { kBisection, kSternBrocot };

enum class Comparison { kBelow, kEqual, kAbove };  // value relative to the probe

// Threshold decisions on one graph: value >= nu iff no cycle is negative
// under q*wt - p*wt', and value == nu iff min_cycle returns exactly 0.
class RatioOracle {
 public:
  RatioOracle(const WeightedDigraph& g, const TreeDecomposition& t, Objective objective = Objective::kRatio,
              BigInt shift = 0);

  Comparison compare(const Rational& nu);
  std::size_t calls() const { return calls_; }
  const MinCycleResult<BigInt>& last() const { return last_; }

 private:
  const WeightedDigraph& g_;
  const TreeDecomposition& t_;
  Objective objective_;
  BigInt shift_;  // added to every weight before the comparison
  std::vector<BigInt> scratch_;
  MinCycleResult<BigInt> last_;
  std::size_t calls_ = 0;
};

bool decide_ratio_geq(const WeightedDigraph& g, const TreeDecomposition& t, const Rational& nu,
                      Objective objective = Objective::kRatio);
bool decide_ratio_eq(const WeightedDigraph& g, const TreeDecomposition& t, const Rational& nu,
                     Objective objective = Objective::kRatio);

struct ValueResult {
  Rational value;
  SearchStats stats;
};

// Minimum over all cycles of g. Throws DomainError when g is acyclic.
ValueResult ratio_value(const WeightedDigraph& g, const TreeDecomposition& t, Objective objective = Objective::kRatio,
                        Refinement refinement = Refinement::kBisection);

struct ApproxResult {
  Rational value;
  SearchStats stats;
  std::int64_t step_bound = 0;  // ceil(log2 n + log2(1/eps')) + 1
  Rational eps_prime;
  bool shifted = false;  // the negative-cycle branch ran
};

// |value - mean| <= eps * |mean| for eps in (0,1). Transit weights are ignored.
ApproxResult approx_mean(const WeightedDigraph& g, const TreeDecomposition& t, const Rational& eps);

using DecompositionBuilder = std::function<TreeDecomposition(const WeightedDigraph&)>;

struct NodeValues {
  std::vector<std::optional<Rational>> values;  // nullopt: no cycle reachable
  SearchStats stats;
};

// Per node: minimum over cycles reachable from it, solved per strongly
// connected component and propagated.
NodeValues ratio_values_all_nodes(const WeightedDigraph& g, const DecompositionBuilder& builder,
                                  Objective objective = Objective::kRatio,
                                  Refinement refinement = Refinement::kBisection);

// Same, with approx_mean per component.
NodeValues approx_mean_all_nodes(const WeightedDigraph& g, const DecompositionBuilder& builder, const Rational& eps);

}  // namespace twq
