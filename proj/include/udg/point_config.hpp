#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

namespace udg::geom {

/// Finite set of pairwise distinct points in R^d, stored row-major.
/// Distances are dimensionless; the unit distance is 1.
class PointConfig {
 public:
  /// Throws InvalidInput if d == 0, the coordinate count is not a multiple
  /// of d, any coordinate is non-finite, or two points coincide.
  PointConfig(std::size_t d, std::vector<double> coords);

  std::size_t dimension() const { return d_; }
  std::size_t size() const { return coords_.size() / d_; }
  std::span<const double> point(std::size_t i) const { return {coords_.data() + i * d_, d_}; }
  const std::vector<double>& coordinates() const { return coords_; }

  double squared_distance(std::size_t i, std::size_t j) const;
  double distance(std::size_t i, std::size_t j) const;
  /// Smallest pairwise distance; +inf for fewer than two points.
  double min_separation() const { return min_separation_; }
  double diameter() const;

 private:
  std::size_t d_;
  std::vector<double> coords_;
  double min_separation_;
};

/// Text format: "n d" then n lines of d coordinates. Output uses 17
/// significant digits so coordinates round-trip exactly.
PointConfig read_points(std::istream& in);
void write_points(std::ostream& out, const PointConfig& config);

}  // namespace udg::geom
