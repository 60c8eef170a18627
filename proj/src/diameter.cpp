#include "udg/diameter.hpp"

#include <cmath>
#include <vector>

#include "udg/errors.hpp"

namespace udg::geom {

Graph compute_diameter_graph(const PointConfig& config, double rel_tol) {
  const std::size_t n = config.size();
  if (n < 2) throw InvalidInput("diameter graph needs at least two points");
  const double diam = config.diameter();
  if (diam <= 10.0 * config.min_separation() * rel_tol) {
    throw DegenerateDiameter("diameter too small relative to point separation for the requested tolerance");
  }
  const double cut = (1.0 - rel_tol) * diam;
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (config.distance(u, v) >= cut) es.push_back({u, v});
    }
  }
  return Graph(n, es);
}

Graph unit_distance_graph(const PointConfig& config, double tol) {
  const std::size_t n = config.size();
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (std::abs(config.distance(u, v) - 1.0) <= tol) es.push_back({u, v});
    }
  }
  return Graph(n, es);
}

}  // namespace udg::geom
