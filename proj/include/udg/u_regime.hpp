#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "udg/catalog.hpp"
#include "udg/u_estimate.hpp"

namespace udg::harness {

struct URegimeOptions {
  bool connected = false;
  std::size_t exact_limit = diam::kDefaultExactLimit;
  std::size_t workers = 1;
  double alpha = 0.25;  // exponent of the p n^alpha regime indicator
};

struct URegimeResult {
  std::size_t n = 0;
  double p = 0.0;
  std::size_t d = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  bool connected = false;
  std::size_t exact_limit = 0;
  bool all_exact = true;
  std::vector<std::size_t> k_hat;            // per trial
  std::map<std::size_t, std::size_t> histogram;  // k_hat -> trial count
  std::size_t mode = 0;  // most frequent k_hat, smallest on ties
  double mean = 0.0;
  double frac_zero = 0.0;
  diam::RegimeSpec regime;
  std::optional<diam::UBounds> bounds;  // absent when p is 0 or 1
};

/// estimate_u on `trials` fresh samples, trial t using seed derive_seed(seed, t).
URegimeResult u_regime_experiment(std::size_t n, double p, std::size_t d, std::size_t trials,
                                  const std::vector<diam::CatalogEntry>& catalog, std::uint64_t seed,
                                  const URegimeOptions& options = {});

}  // namespace udg::harness
