#include "udg/point_config.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <string>

#include "udg/errors.hpp"

namespace udg::geom {

PointConfig::PointConfig(std::size_t d, std::vector<double> coords)
    : d_(d), coords_(std::move(coords)), min_separation_(std::numeric_limits<double>::infinity()) {
  if (d_ == 0) throw InvalidInput("point dimension must be positive");
  if (coords_.size() % d_ != 0) throw InvalidInput("coordinate count is not a multiple of the dimension");
  for (double c : coords_) {
    if (!std::isfinite(c)) throw InvalidInput("non-finite coordinate");
  }
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) min_separation_ = std::min(min_separation_, squared_distance(i, j));
  }
  min_separation_ = std::sqrt(min_separation_);
  if (!(min_separation_ > 0.0)) throw InvalidInput("points must be pairwise distinct");
}

double PointConfig::squared_distance(std::size_t i, std::size_t j) const {
  double s = 0.0;
  const double* a = coords_.data() + i * d_;
  const double* b = coords_.data() + j * d_;
  for (std::size_t k = 0; k < d_; ++k) {
    const double t = a[k] - b[k];
    s += t * t;
  }
  return s;
}

double PointConfig::distance(std::size_t i, std::size_t j) const { return std::sqrt(squared_distance(i, j)); }

double PointConfig::diameter() const {
  double best = 0.0;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) best = std::max(best, squared_distance(i, j));
  }
  return std::sqrt(best);
}

PointConfig read_points(std::istream& in) {
  long long n = -1;
  long long d = -1;
  if (!(in >> n >> d) || n < 0 || d <= 0) throw InvalidInput("point file header must be \"n d\"");
  std::vector<double> coords;
  coords.reserve(static_cast<std::size_t>(std::min<long long>(n * d, 1 << 22)));
  for (long long i = 0; i < n * d; ++i) {
    double c = 0.0;
    if (!(in >> c)) throw InvalidInput("expected " + std::to_string(n) + " points of dimension " + std::to_string(d));
    coords.push_back(c);
  }
  std::string rest;
  if (in >> rest) throw InvalidInput("trailing data after point list");
  return PointConfig(static_cast<std::size_t>(d), std::move(coords));
}

void write_points(std::ostream& out, const PointConfig& config) {
  const auto old = out.precision(17);
  out << config.size() << ' ' << config.dimension() << '\n';
  for (std::size_t i = 0; i < config.size(); ++i) {
    const auto p = config.point(i);
    for (std::size_t k = 0; k < p.size(); ++k) out << (k ? " " : "") << p[k];
    out << '\n';
  }
  out.precision(old);
}

}  // namespace udg::geom
