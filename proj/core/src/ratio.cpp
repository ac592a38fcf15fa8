#include "twq/ratio.hpp"

#include "twq/errors.hpp"
#include "twq/scc.hpp"

namespace twq {

SearchStats& SearchStats::operator+=(const SearchStats& o) {
  calls += o.calls;
  zero_test += o.zero_test;
  exponential += o.exponential;
  binary += o.binary;
  refine += o.refine;
  verify += o.verify;
  approx_steps += o.approx_steps;
  return *this;
}

RatioOracle::RatioOracle(const WeightedDigraph& g, const TreeDecomposition& t, Objective objective, BigInt shift)
    : g_(g), t_(t), objective_(objective), shift_(std::move(shift)), scratch_(g.m()) {}

Comparison RatioOracle::compare(const Rational& nu) {
  const BigInt& p = nu.num();
  const BigInt& q = nu.den();
  for (EdgeId e = 0; e < g_.m(); ++e) {
    const Edge& ed = g_.edge(e);
    BigInt transit = objective_ == Objective::kMean ? BigInt(1) : BigInt(ed.transit);
    scratch_[e] = q * (BigInt(ed.weight) + shift_) - p * transit;
  }
  ++calls_;
  last_ = min_cycle<BigInt>(g_, t_, scratch_);
  if (!last_.c) throw DomainError("graph is acyclic; the cycle value is undefined");
  int s = last_.c->sign();
  return s > 0 ? Comparison::kAbove : s == 0 ? Comparison::kEqual : Comparison::kBelow;
}

bool decide_ratio_geq(const WeightedDigraph& g, const TreeDecomposition& t, const Rational& nu, Objective objective) {
  return RatioOracle(g, t, objective).compare(nu) != Comparison::kBelow;
}

bool decide_ratio_eq(const WeightedDigraph& g, const TreeDecomposition& t, const Rational& nu, Objective objective) {
  return RatioOracle(g, t, objective).compare(nu) == Comparison::kEqual;
}

namespace {

std::int64_t exponential_cap(const WeightedDigraph& g) {
  BigInt nw = BigInt(std::max<std::size_t>(g.n(), 1)) * BigInt(std::max<std::int64_t>(g.max_abs_weight(), 1));
  return ceil_log2(Rational(nw)) + 2;
}

// Brackets the value strictly inside (lo, lo+1) or returns it exactly.
struct IntegerSearch {
  std::optional<Rational> exact;
  BigInt lo;
};

IntegerSearch integer_part(RatioOracle& oracle, const WeightedDigraph& g, SearchStats& stats) {
  auto ask = [&](const Rational& v, std::size_t& phase) {
    ++phase;
    ++stats.calls;
    return oracle.compare(v);
  };
  Comparison sign = ask(Rational(0), stats.zero_test);
  if (sign == Comparison::kEqual) return {Rational(0), 0};

  const std::int64_t cap = exponential_cap(g);
  const bool positive = sign == Comparison::kAbove;
  BigInt lo, hi;
  if (positive) lo = 0;
  else hi = 0;
  for (std::int64_t i = 0;; ++i) {
    if (i > cap) throw InternalError("exponential search exceeded its iteration cap");
    BigInt v = BigInt(1) << static_cast<unsigned>(i);
    if (!positive) v = -v;
    Comparison c = ask(Rational(v), stats.exponential);
    if (c == Comparison::kEqual) return {Rational(v), 0};
    if (positive) {
      if (c == Comparison::kAbove) {
        lo = v;
      } else {
        hi = v;
        break;
      }
    } else {
      if (c == Comparison::kBelow) {
        hi = v;
      } else {
        lo = v;
        break;
      }
    }
  }
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (mid * 2 > lo + hi) --mid;  // floor for negative sums
    Comparison c = ask(Rational(mid), stats.binary);
    if (c == Comparison::kEqual) return {Rational(mid), 0};
    if (c == Comparison::kAbove) lo = mid;
    else hi = mid;
  }
  return {std::nullopt, lo};
}

Rational refine_bisection(RatioOracle& oracle, const WeightedDigraph& g, Objective objective, Rational lo,
                          Rational hi, SearchStats& stats) {
  BigInt d = BigInt(std::max<std::size_t>(g.n(), 1)) *
             BigInt(objective == Objective::kMean ? std::int64_t{1} : g.max_transit());
  Rational width(BigInt(1), d * d);
  while (!(hi - lo < width)) {
    Rational mid = (lo + hi) / Rational(2);
    ++stats.refine;
    ++stats.calls;
    Comparison c = oracle.compare(mid);
    if (c == Comparison::kEqual) return mid;
    if (c == Comparison::kAbove) lo = mid;
    else hi = mid;
  }
  Rational candidate = simplest_between(lo, hi);
  ++stats.verify;
  ++stats.calls;
  if (oracle.compare(candidate) != Comparison::kEqual)
    throw InternalError("reconstructed fraction " + candidate.str() + " failed the equality check");
  return candidate;
}

Rational refine_stern_brocot(RatioOracle& oracle, const WeightedDigraph& g, Objective objective, const BigInt& f,
                             SearchStats& stats) {
  BigInt bound = BigInt(std::max<std::size_t>(g.n(), 1)) *
                 BigInt(objective == Objective::kMean ? std::int64_t{1} : g.max_transit());
  // lo = a/b < value < c/d with b*c - a*d == 1.
  BigInt a = f, b = 1, c = f + 1, d = 1;
  auto ask = [&](const BigInt& p, const BigInt& q) {
    ++stats.refine;
    ++stats.calls;
    return oracle.compare(Rational(p, q));
  };
  for (;;) {
    if (b + d > bound) throw InternalError("Stern-Brocot search passed the denominator bound");
    Comparison first = ask(a + c, b + d);
    if (first == Comparison::kEqual) return Rational(a + c, b + d);
    const bool up = first == Comparison::kAbove;
    // Steps j move one end towards the other: up moves lo towards c/d.
    auto point = [&](const BigInt& j) -> std::pair<BigInt, BigInt> {
      return up ? std::pair{a + j * c, b + j * d} : std::pair{j * a + c, j * b + d};
    };
    auto beyond = [&](Comparison r) { return up ? r == Comparison::kAbove : r == Comparison::kBelow; };
    BigInt good = 1, bad = 0;
    BigInt jmax = (bound - (up ? b : d)) / (up ? d : b);
    for (BigInt j = 2;; j *= 2) {
      if (j > jmax) j = jmax;
      if (j <= good) {
        bad = good + 1;
        break;
      }
      auto [p, q] = point(j);
      Comparison r = ask(p, q);
      if (r == Comparison::kEqual) return Rational(p, q);
      if (beyond(r)) {
        good = j;
      } else {
        bad = j;
        break;
      }
    }
    while (bad - good > 1) {
      BigInt mid = (good + bad) / 2;
      auto [p, q] = point(mid);
      Comparison r = ask(p, q);
      if (r == Comparison::kEqual) return Rational(p, q);
      if (beyond(r)) good = mid;
      else bad = mid;
    }
    auto [gp, gq] = point(good);
    auto [bp, bq] = point(bad);
    if (up) {
      a = gp, b = gq, c = bp, d = bq;
    } else {
      a = bp, b = bq, c = gp, d = gq;
    }
  }
}

}  // namespace

ValueResult ratio_value(const WeightedDigraph& g, const TreeDecomposition& t, Objective objective,
                        Refinement refinement) {
  RatioOracle oracle(g, t, objective);
  ValueResult out;
  IntegerSearch ip = integer_part(oracle, g, out.stats);
  if (ip.exact) {
    out.value = *ip.exact;
    return out;
  }
  if (refinement == Refinement::kBisection)
    out.value = refine_bisection(oracle, g, objective, Rational(ip.lo), Rational(ip.lo + 1), out.stats);
  else
    out.value = refine_stern_brocot(oracle, g, objective, ip.lo, out.stats);
  return out;
}

ApproxResult approx_mean(const WeightedDigraph& g, const TreeDecomposition& t, const Rational& eps) {
  if (eps.sign() <= 0 || !(eps < Rational(1))) throw DomainError("approximation factor must lie in (0,1)");
  ApproxResult out;
  out.eps_prime = eps;

  auto base = min_cycle(g, t);
  ++out.stats.calls;
  ++out.stats.zero_test;
  if (!base.c) throw DomainError("graph is acyclic; the mean value is undefined");
  if (base.c->is_zero()) return out;

  BigInt shift = 0;
  BigInt upper = *base.c;
  if (base.c->sign() < 0) {
    // Shifting by |c| removes every negative cycle.
    shift = -*base.c;
    out.shifted = true;
    std::vector<BigInt> w(g.m());
    for (EdgeId e = 0; e < g.m(); ++e) w[e] = BigInt(g.edge(e).weight) + shift;
    auto again = min_cycle<BigInt>(g, t, w);
    ++out.stats.calls;
    ++out.stats.zero_test;
    if (!again.c || again.c->sign() < 0) throw InternalError("shifted weights still have a negative cycle");
    if (again.c->is_zero()) {
      out.value = Rational(-shift);
      return out;
    }
    upper = *again.c;
    BigInt alpha = 1 + BigInt(g.n()) * BigInt(g.m()) * (BigInt(1) << static_cast<unsigned>(t.height()));
    out.eps_prime = eps / Rational(alpha);
  }

  out.step_bound = ceil_log2(Rational(BigInt(std::max<std::size_t>(g.n(), 1))) / out.eps_prime) + 1;
  RatioOracle oracle(g, t, Objective::kMean, shift);
  Rational lo(0), hi(upper);
  for (std::int64_t i = 0; i < out.step_bound; ++i) {
    Rational mid = (lo + hi) / Rational(2);
    ++out.stats.approx_steps;
    ++out.stats.calls;
    Comparison c = oracle.compare(mid);
    if (c == Comparison::kEqual) {
      out.value = mid - Rational(shift);
      return out;
    }
    if (c == Comparison::kAbove) lo = mid;
    else hi = mid;
  }
  out.value = hi - Rational(shift);
  return out;
}

namespace {

template <class Solve>
NodeValues per_component(const WeightedDigraph& g, Solve&& solve) {
  SccPartition scc = tarjan_scc(g);
  NodeValues out;
  std::vector<std::optional<Rational>> comp(scc.count());
  for (std::uint32_t c = 0; c < scc.count(); ++c) {
    if (!scc.cyclic[c]) continue;
    Subgraph sub = induced_subgraph(g, scc.members[c]);
    comp[c] = solve(sub.graph, out.stats);
  }
  out.values = propagate_component_values(g, scc, comp);
  return out;
}

}  // namespace

NodeValues ratio_values_all_nodes(const WeightedDigraph& g, const DecompositionBuilder& builder, Objective objective,
                                  Refinement refinement) {
  return per_component(g, [&](const WeightedDigraph& sub, SearchStats& stats) {
    TreeDecomposition t = builder(sub);
    ValueResult r = ratio_value(sub, t, objective, refinement);
    stats += r.stats;
    return r.value;
  });
}

NodeValues approx_mean_all_nodes(const WeightedDigraph& g, const DecompositionBuilder& builder, const Rational& eps) {
  return per_component(g, [&](const WeightedDigraph& sub, SearchStats& stats) {
    TreeDecomposition t = builder(sub);
    ApproxResult r = approx_mean(sub, t, eps);
    stats += r.stats;
    return r.value;
  });
}

}  // namespace twq
