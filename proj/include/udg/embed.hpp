#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "udg/graph.hpp"
#include "udg/point_config.hpp"

namespace udg::geom {

struct EmbedOptions {
  /// Success requires max_e |len_e^2 - 1| <= residual_tol ...
  double residual_tol = 1e-9;
  /// ... and all points at least this far apart.
  double separation_tol = 1e-6;
  /// Non-adjacent pairs closer than this are pushed apart.
  double repulsion_radius = 0.05;
  double repulsion_weight = 1.0;
  std::size_t max_iterations = 400;
};

struct EmbedResult {
  PointConfig config;
  double residual = 0.0;
  /// Starts consumed by the hardest component (1 = first start succeeded).
  std::size_t restarts_used = 0;
};

/// Finds a placement of g in R^d with every edge at unit length.
///
/// Components are embedded independently and laid side by side along the
/// first axis. Each component is started from uniform random positions in
/// a box of side 2*sqrt(size) and refined by Levenberg-Marquardt on
///   sum_edges (|x_u - x_v|^2 - 1)^2
///     + w * sum_{non-adjacent, |x_u - x_v| < r} (r^2 - |x_u - x_v|^2)^2,
/// with up to `restarts` starts whose seeds are derived from `seed` and the
/// start index. nullopt means no start met the success thresholds; it is
/// not evidence of non-realizability.
std::optional<EmbedResult> embed_unit_distance(const Graph& g, std::size_t d, std::size_t restarts,
                                               std::uint64_t seed, const EmbedOptions& options = {});

/// max over edges of | |x_u - x_v|^2 - 1 |. Throws InvalidInput on a size mismatch.
double residual(const Graph& g, const PointConfig& config);

/// The least-squares objective minimized by the embedder at flat coordinates
/// `x` (n*d values); fills `gradient` when non-null.
double embedding_objective(const Graph& g, std::size_t d, std::span<const double> x, const EmbedOptions& options,
                           std::vector<double>* gradient = nullptr);

}  // namespace udg::geom
