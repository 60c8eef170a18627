#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

#include "udg/decide.hpp"
#include "udg/graph.hpp"

namespace udg::harness {

/// A named three-valued decision procedure. `decide` receives the sampled
/// graph and a per-trial seed for any stochastic stage.
struct Decider {
  std::string id;
  std::size_t dimension = 1;
  std::function<realize::Answer(const Graph&, std::uint64_t)> decide;
};

Decider one_d_exact();
Decider pipeline(std::size_t d, std::size_t embed_restarts = 50);
/// Always returns `answer`; useful for degenerate-bracket checks.
Decider constant(realize::Answer answer);

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
  bool contains(double x) const { return lo <= x && x <= hi; }
};

/// Wilson score interval; z = 1.96 gives 95% coverage.
Interval wilson(std::size_t successes, std::size_t trials, double z = 1.959963984540054);

struct ProbabilityEstimate {
  std::size_t n = 0;
  double p = 0.0;
  std::size_t trials = 0;
  std::size_t yes = 0;
  std::size_t no = 0;
  std::size_t unknown = 0;
  std::string decider;
  std::size_t dimension = 1;
  std::uint64_t seed = 0;

  double frac_yes() const;
  double frac_no() const;
  double frac_unknown() const;
  Interval ci_yes() const { return wilson(yes, trials); }
  Interval ci_no() const { return wilson(no, trials); }
  Interval ci_unknown() const { return wilson(unknown, trials); }
  /// The true probability of YES lies in [frac_yes, 1 - frac_no].
  Interval bounds() const { return {frac_yes(), 1.0 - frac_no()}; }
};

/// Trial t decides G(n, p) sampled with seed derive_seed(seed, t); the
/// decider gets that seed too. Graphs of one trial are nested in p, so
/// estimates at different p with one seed are coupled. The result does not
/// depend on `workers`.
ProbabilityEstimate estimate_probability(std::size_t n, double p, std::size_t trials, const Decider& decider,
                                         std::uint64_t seed, std::size_t workers = 1);

}  // namespace udg::harness
