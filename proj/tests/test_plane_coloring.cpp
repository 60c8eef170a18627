#include <cmath>
#include <numbers>

#include "doctest.h"
#include "udg/errors.hpp"
#include "udg/exact_solvers.hpp"
#include "udg/hex_coloring.hpp"
#include "udg/rng.hpp"

using namespace udg;
using geom::PointConfig;
using plane::HexColoring;

namespace {

const double kSqrt3 = std::sqrt(3.0);

/// Color of the nearest cell center, found by scanning a window of cells.
std::uint32_t nearest_center_color(const HexColoring& h, double x, double y) {
  const double c = std::cos(h.rotation);
  const double s = std::sin(h.rotation);
  const double px = c * (x - h.offset[0]) + s * (y - h.offset[1]);
  const double py = -s * (x - h.offset[0]) + c * (y - h.offset[1]);
  const long long r0 = std::llround(py / (1.5 * h.side));
  const long long q0 = std::llround(px / (kSqrt3 * h.side) - static_cast<double>(r0) / 2.0);
  double best = INFINITY;
  long long bq = 0;
  long long br = 0;
  for (long long r = r0 - 3; r <= r0 + 3; ++r) {
    for (long long q = q0 - 3; q <= q0 + 3; ++q) {
      const double cx = h.side * kSqrt3 * (static_cast<double>(q) + static_cast<double>(r) / 2.0);
      const double cy = h.side * 1.5 * static_cast<double>(r);
      const double dist = std::hypot(px - cx, py - cy);
      if (dist < best) {
        best = dist;
        bq = q;
        br = r;
      }
    }
  }
  return static_cast<std::uint32_t>(((bq + 3 * br) % 7 + 7) % 7);
}

HexColoring random_coloring(Rng& rng) {
  HexColoring h;
  h.side = rng.uniform(1.0 / std::sqrt(7.0) + 1e-6, 0.5 - 1e-6);
  h.offset = {rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)};
  h.rotation = rng.uniform(0.0, std::numbers::pi);
  return h;
}

/// Unit triangular lattice patch: every interior point has six unit neighbors.
PointConfig triangular_patch(std::size_t rows, std::size_t cols) {
  std::vector<double> xs;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      xs.push_back(static_cast<double>(c) + 0.5 * static_cast<double>(r % 2));
      xs.push_back(static_cast<double>(r) * kSqrt3 / 2.0);
    }
  }
  return PointConfig(2, xs);
}

/// Random points, each followed by a unit-distance partner at a random angle.
PointConfig random_pairs(std::size_t pairs, double spread, Rng& rng) {
  std::vector<double> xs;
  for (std::size_t i = 0; i < pairs; ++i) {
    const double x = rng.uniform(0.0, spread);
    const double y = rng.uniform(0.0, spread);
    const double a = rng.uniform(0.0, 2.0 * std::numbers::pi);
    xs.insert(xs.end(), {x, y, x + std::cos(a), y + std::sin(a)});
  }
  return PointConfig(2, xs);
}

}  // namespace

TEST_CASE("unit distance graph examples") {
  CHECK(plane::build_unit_distance_graph(PointConfig(2, {0, 0, 1, 0, 0.5, kSqrt3 / 2})) == graphs::complete(3));
  const auto lattice = plane::build_unit_distance_graph(triangular_patch(5, 5));
  CHECK(lattice.edge_count() == 5 * 4 + 4 * 9);  // within rows, then between adjacent rows
  CHECK(plane::build_unit_distance_graph(PointConfig(2, {0, 0, 1.0 + 1e-6, 0})).edge_count() == 0);
  CHECK(plane::build_unit_distance_graph(PointConfig(2, {0, 0, 1.0 + 1e-6, 0}), 1e-5).edge_count() == 1);
  CHECK_THROWS_AS(plane::build_unit_distance_graph(PointConfig(3, {0, 0, 0, 1, 0, 0})), InvalidInput);
}

TEST_CASE("admissibility") {
  HexColoring h;
  CHECK(h.admissible());
  const PointConfig pts(2, {0, 0, 1, 0});
  for (double side : {0.3, 1.0 / std::sqrt(7.0), 0.5, 0.7}) {
    h.side = side;
    CHECK_FALSE(h.admissible());
    CHECK_THROWS_AS(plane::color_points(pts, h), InadmissibleColoring);
  }
  h.side = 0.45;
  CHECK_THROWS_AS(plane::color_points(PointConfig(1, {0, 1}), h), InvalidInput);
  CHECK_THROWS_AS(plane::extract_low_chromatic_subgraph(pts, 0, 1, 1), InvalidInput);
  CHECK_THROWS_AS(plane::extract_low_chromatic_subgraph(pts, 8, 1, 1), InvalidInput);
  CHECK_THROWS_AS(plane::extract_low_chromatic_subgraph(pts, 2, 0, 1), InvalidInput);
}

TEST_CASE("cell lookup agrees with the nearest cell center") {
  Rng rng(71);
  std::size_t mismatches = 0;
  for (int i = 0; i < 200; ++i) {
    const HexColoring h = random_coloring(rng);
    for (int j = 0; j < 200; ++j) {
      const double x = rng.uniform(-20.0, 20.0);
      const double y = rng.uniform(-20.0, 20.0);
      mismatches += h.color_of(x, y) != nearest_center_color(h, x, y) ? 1 : 0;
    }
  }
  CHECK(mismatches == 0);
}

TEST_CASE("nearby points share a color and all seven colors occur") {
  HexColoring h;
  h.side = 0.45;
  std::vector<bool> seen(7, false);
  for (long long q = -3; q <= 3; ++q) {
    for (long long r = -3; r <= 3; ++r) {
      const double cx = h.side * kSqrt3 * (static_cast<double>(q) + static_cast<double>(r) / 2.0);
      const double cy = h.side * 1.5 * static_cast<double>(r);
      const auto c = h.color_of(cx, cy);
      CHECK(c == static_cast<std::uint32_t>(((q + 3 * r) % 7 + 7) % 7));
      CHECK(h.color_of(cx + 1e-3, cy - 1e-3) == c);
      CHECK(h.color_of(cx - 1e-3, cy + 1e-3) == c);
      seen[c] = true;
    }
  }
  CHECK(std::count(seen.begin(), seen.end(), true) == 7);
}

TEST_CASE("admissible colorings have no monochromatic unit edge") {
  Rng rng(8);
  std::vector<PointConfig> configs{triangular_patch(12, 12), random_pairs(300, 6.0, rng)};
  std::size_t bad = 0;
  std::size_t edges = 0;
  for (const auto& pts : configs) {
    const Graph g = plane::build_unit_distance_graph(pts);
    REQUIRE(g.edge_count() > 0);
    for (int t = 0; t < 100; ++t) {
      const auto colors = plane::color_points(pts, random_coloring(rng));
      for (const auto& e : g.edges()) {
        ++edges;
        bad += colors[e.u] == colors[e.v] ? 1 : 0;
      }
    }
  }
  CHECK(edges > 10000);
  CHECK(bad == 0);
}

TEST_CASE("extraction meets the pigeonhole guarantee") {
  Rng rng(700);
  const PointConfig pts = random_pairs(350, 8.0, rng);
  REQUIRE(pts.size() == 700);
  const Graph g = plane::build_unit_distance_graph(pts);
  for (std::size_t k = 1; k <= 4; ++k) {
    const auto r = plane::extract_low_chromatic_subgraph(pts, k, 20, 42);
    CHECK(r.k == k);
    CHECK(r.n == 700);
    CHECK(r.guarantee_met);
    CHECK(r.selected.size() * 7 >= k * 700);
    CHECK(r.classes.size() == k);
    CHECK(r.captured_fraction == doctest::Approx(static_cast<double>(r.selected.size()) / 700.0));
    CHECK(r.kappa_ratio == doctest::Approx(static_cast<double>(r.selected.size()) / (k * 700.0 / plane::kKappa)));
    CHECK(std::is_sorted(r.selected.begin(), r.selected.end()));
    REQUIRE(r.color.size() == r.selected.size());
    const Graph sub = g.induced(r.selected);
    CHECK(is_proper_coloring(sub, r.color));
    for (auto c : r.color) CHECK(c < k);
    CHECK(r.coloring.admissible());
    CHECK(r.best_trial < 20);
    const auto again = plane::extract_low_chromatic_subgraph(pts, k, 20, 42);
    CHECK(again.selected == r.selected);
    CHECK(plane::to_json(r) == plane::to_json(again));
  }
  CHECK(plane::extract_low_chromatic_subgraph(pts, 7, 1, 1).selected.size() == 700);
}

TEST_CASE("small extractions have chromatic number at most k") {
  Rng rng(40);
  for (int i = 0; i < 30; ++i) {
    const PointConfig pts = random_pairs(20, 1.5, rng);
    const Graph g = plane::build_unit_distance_graph(pts);
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto r = plane::extract_low_chromatic_subgraph(pts, k, 5, static_cast<std::uint64_t>(i));
      REQUIRE(r.selected.size() <= 40);
      CHECK(chromatic_number(g.induced(r.selected)) <= k);
    }
  }
}

TEST_CASE("more trials never shrink the selection") {
  Rng rng(3);
  const PointConfig pts = random_pairs(100, 4.0, rng);
  const auto few = plane::extract_low_chromatic_subgraph(pts, 2, 5, 9);
  const auto many = plane::extract_low_chromatic_subgraph(pts, 2, 50, 9);
  CHECK(many.selected.size() >= few.selected.size());
  const auto j = plane::to_json(many);
  CHECK(j.contains("guarantee_bound"));
  CHECK(j.at("trials") == 50);
}
