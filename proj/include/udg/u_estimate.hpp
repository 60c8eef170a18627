#pragma once

#include <cstddef>
#include <vector>

#include "json.hpp"
#include "udg/catalog.hpp"
#include "udg/graph.hpp"

namespace udg::diam {

inline constexpr std::size_t kDefaultExactLimit = 40;
/// Path extensions per root vertex in heuristic mode.
inline constexpr std::size_t kHeuristicNodesPerRoot = 20000;

struct UEstimate {
  std::size_t n = 0;
  double p = 0.0;
  std::size_t d = 0;
  std::size_t k_hat = 0;
  bool connected_variant = false;
  bool exact = true;
  std::size_t trials = 1;
  double frac_success = 0.0;  // share of trials with k_hat > 0
  std::vector<Vertex> witness;  // sorted W with g[W] isomorphic to a catalog graph
};

/// Largest |W| such that g[W] is isomorphic to the claimed graph of a
/// validated catalog entry with claimed_chi == d + 1 (and connected when
/// `connected` is set). Entries of the form C_L joined with K_{d-2} are found
/// by scanning (d-2)-cliques and searching their common neighborhood for the
/// largest induced cycle of a catalog length; other entries by pattern search.
/// A subproblem is solved exactly when its vertex count is at most
/// exact_limit and heuristically otherwise; `exact` records whether every
/// subproblem was exact.
UEstimate estimate_u(const Graph& g, std::size_t d, const std::vector<CatalogEntry>& catalog, bool connected = false,
                     std::size_t exact_limit = kDefaultExactLimit);

/// Reference lines at epsilon = 0, with q = 1 - p and log base 1/q.
struct UBounds {
  double L1 = 0.0;                 // 2 log(np)
  double L2 = 0.0;                 // (2 + 4 ln p / ln(np)) log(np)
  double U_gen = 0.0;              // (d + 1) L1
  double U_const_p = 0.0;          // floor(d / 2) L1
  double zero_regime_bound = 0.0;  // 2 (d - 1) ln(d - 1) for d >= 3, 1 for d = 2
};

/// Throws InvalidInput unless 0 < p < 1 and d >= 2.
UBounds theoretical_u_bounds(std::size_t n, double p, std::size_t d);

/// Regime indicators evaluated at (n, p).
struct RegimeSpec {
  double tau_pn = 0.0;       // p n
  double tau_alpha = 0.0;    // p n^alpha
  double tau_quarter = 0.0;  // p n^{1/4} / ln n
  double sigma = 0.0;        // q ln n
  double alpha = 0.0;
  double C = 0.0;  // the upper constant of the regime, 0 when unused
};

RegimeSpec evaluate_regime(std::size_t n, double p, double alpha = 0.25, double C = 0.0);

nlohmann::json to_json(const UEstimate& e);
nlohmann::json to_json(const UBounds& b);
nlohmann::json to_json(const RegimeSpec& r);

}  // namespace udg::diam
