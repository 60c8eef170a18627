#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "udg/graph.hpp"

namespace udg {

/// Erdős–Rényi parameters. Throws InvalidInput unless 0 <= p <= 1.
struct GnpParams {
  GnpParams(std::size_t n, double p, std::uint64_t seed);

  std::size_t n;
  double p;
  std::uint64_t seed;
};

/// A vertex pair together with its coupling variate: the pair is an edge of
/// G(n, p) for this seed exactly when `arrival <= p`.
struct TimedEdge {
  Edge edge;
  double arrival;
};

/// Every pair whose arrival variate is <= p_max, in pair-index order.
///
/// Each of the C(n,2) pairs carries an independent Uniform(0,1] arrival
/// variate. They are materialized band by band on the dyadic ladder
/// 2^-64, 2^-63, ..., 1/2, 1: band j selects, among pairs not yet selected,
/// each pair independently with probability (b_j - b_{j-1}) / (1 - b_{j-1})
/// using geometric skips drawn from stream derive_seed(seed, j), and gives
/// the selected pairs arrivals uniform on (b_{j-1}, b_j]. The bands needed
/// for a given p_max are a prefix of the bands needed for any larger value,
/// so samples with one seed are nested in p and cost O(p * C(n,2)).
std::vector<TimedEdge> sample_arrivals(std::size_t n, double p_max, std::uint64_t seed);

/// G(n, p) sample: pairs with arrival <= p. Graphs for one seed are
/// monotone in p (edge sets are nested).
Graph sample_gnp(const GnpParams& params);

}  // namespace udg
