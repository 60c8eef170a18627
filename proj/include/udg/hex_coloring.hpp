#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "json.hpp"
#include "udg/graph.hpp"
#include "udg/point_config.hpp"

namespace udg::plane {

inline constexpr std::size_t kHexColors = 7;
inline constexpr double kKappa = 4.36;

/// Periodic 7-coloring of the plane by pointy-top regular hexagons of side
/// s. Cell (q, r) in axial coordinates gets color (q + 3r) mod 7, so every
/// cell and its six neighbors carry all seven colors. Points are mapped to
/// the frame rotated by `rotation` around `offset` before cell lookup.
struct HexColoring {
  double side = 0.45;
  std::array<double, 2> offset{0.0, 0.0};
  double rotation = 0.0;

  /// 1/sqrt(7) < side < 1/2: cells have diameter below 1 and same-colored
  /// cells are more than 1 apart.
  bool admissible() const;
  std::uint32_t color_of(double x, double y) const;
};

/// Pairs with |distance - 1| <= tol. Throws InvalidInput unless d == 2.
Graph build_unit_distance_graph(const geom::PointConfig& points, double tol = 1e-9);

/// Throws InadmissibleColoring if the side is out of range and InvalidInput
/// unless d == 2.
std::vector<std::uint32_t> color_points(const geom::PointConfig& points, const HexColoring& coloring);

struct ExtractionResult {
  std::vector<Vertex> selected;       // sorted
  std::vector<std::uint32_t> color;   // per selected vertex, in [0, k): a proper coloring of the induced graph
  std::vector<std::uint32_t> classes; // hexagon colors kept, largest first
  std::size_t k = 0;
  std::size_t n = 0;
  double captured_fraction = 0.0;
  bool guarantee_met = false;  // |S| >= ceil(k n / 7)
  double kappa_ratio = 0.0;    // |S| / (k n / kappa)
  HexColoring coloring;        // parameters of the best trial
  std::size_t best_trial = 0;
  std::size_t trials = 0;
};

/// Best union of the k largest color classes over `trials` random admissible
/// colorings; trial t draws its side, offset and rotation from stream
/// derive_seed(seed, t). Throws InvalidInput unless 1 <= k <= 7 and trials >= 1.
ExtractionResult extract_low_chromatic_subgraph(const geom::PointConfig& points, std::size_t k, std::size_t trials,
                                                std::uint64_t seed);

nlohmann::json to_json(const ExtractionResult& r);

}  // namespace udg::plane
