#pragma once

#include "udg/graph.hpp"
#include "udg/point_config.hpp"

namespace udg::geom {

inline constexpr double kDefaultDiameterRelTol = 1e-9;

/// Graph on the points whose edges are the pairs at distance
/// >= (1 - rel_tol) * diam. Throws InvalidInput for fewer than two points
/// and DegenerateDiameter when diam <= 10 * min_separation * rel_tol.
Graph compute_diameter_graph(const PointConfig& config, double rel_tol = kDefaultDiameterRelTol);

/// Edges are the pairs with |distance - 1| <= tol.
Graph unit_distance_graph(const PointConfig& config, double tol = 1e-9);

}  // namespace udg::geom
