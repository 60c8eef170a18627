#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "udg/probability.hpp"

namespace udg::harness {

struct ThresholdOptions {
  std::size_t trials = 2000;  // per probe, before growth
  double tol = 0.02;          // stop when p_hi - p_lo <= tol * p_hi
  /// A probe whose Wilson interval contains 1/2 is rerun with doubled
  /// trials up to this multiple of `trials`.
  std::size_t max_growth = 4;
  std::size_t max_probes = 200;
  std::size_t workers = 1;
};

struct ThresholdEstimate {
  std::size_t n = 0;
  std::size_t dimension = 1;
  std::string decider;
  std::uint64_t seed = 0;
  std::size_t trials = 0;  // base trials per probe
  double tol = 0.0;
  double p_star_hat = 0.0;
  double p_lo = 0.0;  // certified-YES fraction > 1/2
  double p_hi = 0.0;  // certified-YES fraction <= 1/2
  double scaled_constant = 0.0;  // p_star_hat * n^{4/3} on the line, p_star_hat * n otherwise
  /// Bracket collapsed at p = 1 (YES fraction above 1/2 everywhere) or
  /// at the smallest probed p (never above 1/2).
  bool degenerate = false;
  /// Set for incomplete deciders: the estimate is a threshold of the
  /// certified-YES probability and so a lower bound on the true one.
  bool lower_bound = false;
  std::vector<ProbabilityEstimate> probes;  // in probe order
};

/// Bisection on p for the point where the certified-YES probability drops
/// through 1/2. Every probe uses the same master seed, so trial t sees nested
/// graphs across probes. The bracket starts at min(1, 1/n) and moves by
/// factors of two. Throws NonMonotoneSignal when a smaller p has a Wilson
/// interval entirely below that of a larger p.
ThresholdEstimate find_threshold(std::size_t n, const Decider& decider, std::uint64_t seed,
                                 const ThresholdOptions& options = {});

double scaled_constant(double p, std::size_t n, std::size_t dimension);

}  // namespace udg::harness
