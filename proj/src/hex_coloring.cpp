#include "udg/hex_coloring.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "udg/diameter.hpp"
#include "udg/errors.hpp"
#include "udg/rng.hpp"

namespace udg::plane {

namespace {

const double kMinSide = 1.0 / std::sqrt(7.0);
constexpr double kMaxSide = 0.5;

void require_plane(const geom::PointConfig& points) {
  if (points.dimension() != 2) throw InvalidInput("plane coloring needs 2-dimensional points");
}

}  // namespace

bool HexColoring::admissible() const { return side > kMinSide && side < kMaxSide; }

std::uint32_t HexColoring::color_of(double x, double y) const {
  const double c = std::cos(rotation);
  const double s = std::sin(rotation);
  const double dx = x - offset[0];
  const double dy = y - offset[1];
  const double px = c * dx + s * dy;
  const double py = -s * dx + c * dy;
  // Fractional axial coordinates, then cube rounding.
  const double fq = (std::sqrt(3.0) / 3.0 * px - py / 3.0) / side;
  const double fr = (2.0 / 3.0 * py) / side;
  const double fs = -fq - fr;
  double q = std::round(fq);
  double r = std::round(fr);
  const double rs = std::round(fs);
  const double eq = std::abs(q - fq);
  const double er = std::abs(r - fr);
  const double es = std::abs(rs - fs);
  if (eq > er && eq > es) {
    q = -r - rs;
  } else if (er > es) {
    r = -q - rs;
  }
  const auto qi = static_cast<long long>(q);
  const auto ri = static_cast<long long>(r);
  const long long col = ((qi + 3 * ri) % 7 + 7) % 7;
  return static_cast<std::uint32_t>(col);
}

Graph build_unit_distance_graph(const geom::PointConfig& points, double tol) {
  require_plane(points);
  return geom::unit_distance_graph(points, tol);
}

std::vector<std::uint32_t> color_points(const geom::PointConfig& points, const HexColoring& coloring) {
  require_plane(points);
  if (!coloring.admissible()) {
    throw InadmissibleColoring("hexagon side " + std::to_string(coloring.side) + " outside (1/sqrt(7), 1/2)");
  }
  std::vector<std::uint32_t> colors(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto p = points.point(i);
    colors[i] = coloring.color_of(p[0], p[1]);
  }
  return colors;
}

ExtractionResult extract_low_chromatic_subgraph(const geom::PointConfig& points, std::size_t k, std::size_t trials,
                                                std::uint64_t seed) {
  require_plane(points);
  if (k < 1 || k > kHexColors) throw InvalidInput("class count k must be in [1, 7]");
  if (trials < 1) throw InvalidInput("extraction needs at least one trial");
  const std::size_t n = points.size();

  ExtractionResult best;
  std::size_t best_size = 0;
  bool have = false;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, t));
    HexColoring hc;
    do {
      hc.side = rng.uniform(kMinSide, kMaxSide);
    } while (!hc.admissible());
    hc.offset = {rng.uniform(0.0, 3.0 * hc.side), rng.uniform(0.0, 3.0 * hc.side)};
    hc.rotation = rng.uniform(0.0, std::numbers::pi / 3.0);

    const auto colors = color_points(points, hc);
    std::array<std::size_t, kHexColors> count{};
    for (auto c : colors) ++count[c];
    std::array<std::uint32_t, kHexColors> order{};
    std::iota(order.begin(), order.end(), 0U);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return count[a] > count[b]; });
    std::size_t size = 0;
    for (std::size_t i = 0; i < k; ++i) size += count[order[i]];
    if (have && size <= best_size) continue;

    have = true;
    best_size = size;
    best.coloring = hc;
    best.best_trial = t;
    best.classes.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
    std::array<std::int32_t, kHexColors> slot;
    slot.fill(-1);
    for (std::size_t i = 0; i < k; ++i) slot[order[i]] = static_cast<std::int32_t>(i);
    best.selected.clear();
    best.color.clear();
    for (std::size_t v = 0; v < n; ++v) {
      if (slot[colors[v]] >= 0) {
        best.selected.push_back(static_cast<Vertex>(v));
        best.color.push_back(static_cast<std::uint32_t>(slot[colors[v]]));
      }
    }
  }

  best.k = k;
  best.n = n;
  best.trials = trials;
  const double sz = static_cast<double>(best.selected.size());
  const double nd = static_cast<double>(n);
  best.captured_fraction = n == 0 ? 0.0 : sz / nd;
  best.guarantee_met = best.selected.size() * kHexColors >= k * n;
  best.kappa_ratio = n == 0 ? 0.0 : sz / (static_cast<double>(k) * nd / kKappa);
  return best;
}

nlohmann::json to_json(const ExtractionResult& r) {
  return {{"n", r.n},
          {"k", r.k},
          {"size", r.selected.size()},
          {"selected", r.selected},
          {"color", r.color},
          {"classes", r.classes},
          {"captured_fraction", r.captured_fraction},
          {"guarantee_bound", (r.k * r.n + kHexColors - 1) / kHexColors},
          {"guarantee_met", r.guarantee_met},
          {"kappa", kKappa},
          {"kappa_ratio", r.kappa_ratio},
          {"trials", r.trials},
          {"best_trial", r.best_trial},
          {"coloring",
           {{"side", r.coloring.side}, {"offset", r.coloring.offset}, {"rotation", r.coloring.rotation}}}};
}

}  // namespace udg::plane
