#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "udg/catalog.hpp"
#include "udg/diameter.hpp"
#include "udg/embed.hpp"
#include "udg/errors.hpp"

using namespace udg;
using geom::PointConfig;

namespace {

constexpr double kPi = std::numbers::pi;

bool edge_set_equal(const Graph& g, const std::vector<Edge>& want) {
  auto es = g.edges();
  auto w = want;
  for (auto& e : w) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(w.begin(), w.end());
  return es == w;
}

PointConfig transform(const PointConfig& c, const Eigen::MatrixXd& rot, const Eigen::VectorXd& shift, double scale) {
  const auto d = static_cast<Eigen::Index>(c.dimension());
  std::vector<double> xs;
  for (std::size_t i = 0; i < c.size(); ++i) {
    Eigen::VectorXd p(d);
    for (Eigen::Index k = 0; k < d; ++k) p(k) = c.point(i)[static_cast<std::size_t>(k)];
    const Eigen::VectorXd q = scale * (rot * p) + shift;
    for (Eigen::Index k = 0; k < d; ++k) xs.push_back(q(k));
  }
  return PointConfig(c.dimension(), xs);
}

Eigen::MatrixXd random_rotation(std::size_t d, Rng& rng) {
  Eigen::MatrixXd a(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = rng.normal();
  }
  return Eigen::HouseholderQR<Eigen::MatrixXd>(a).householderQ();
}

void check_success(const Graph& g, const geom::EmbedResult& r) {
  CHECK(geom::residual(g, r.config) <= 1e-9);
  CHECK(r.config.min_separation() >= 1e-6);
  CHECK(r.residual == doctest::Approx(geom::residual(g, r.config)));
}

}  // namespace

TEST_CASE("PointConfig validation and text format") {
  CHECK_THROWS_AS(PointConfig(0, {}), InvalidInput);
  CHECK_THROWS_AS(PointConfig(2, {1.0, 2.0, 3.0}), InvalidInput);
  CHECK_THROWS_AS(PointConfig(2, {0.0, 0.0, 0.0, 0.0}), InvalidInput);
  CHECK_THROWS_AS(PointConfig(1, {std::nan("")}), InvalidInput);

  const PointConfig c(2, {0.1, 1.0 / 3.0, -2.5e-7, std::sqrt(2.0)});
  std::stringstream ss;
  geom::write_points(ss, c);
  const PointConfig back = geom::read_points(ss);
  CHECK(back.coordinates() == c.coordinates());
  for (const char* bad : {"2", "2 2\n0 0\n1", "1 2\n0 0 7", "-1 2"}) {
    std::istringstream in(bad);
    CHECK_THROWS_AS(geom::read_points(in), InvalidInput);
  }
}

TEST_CASE("residual examples") {
  const Graph edge = graphs::path(2);
  CHECK(geom::residual(edge, PointConfig(2, {0, 0, 1, 0})) == 0.0);
  CHECK(geom::residual(edge, PointConfig(2, {0, 0, 2, 0})) == doctest::Approx(3.0));
  const double h = std::sqrt(3.0) / 2.0;
  CHECK(geom::residual(graphs::complete(3), PointConfig(2, {0, 0, 1, 0, 0.5, h})) <= 1e-12);
  CHECK_THROWS_AS(geom::residual(graphs::complete(3), PointConfig(2, {0, 0, 1, 0})), InvalidInput);
}

TEST_CASE("embedder examples") {
  auto p3 = geom::embed_unit_distance(graphs::path(3), 2, 50, 1);
  REQUIRE(p3);
  check_success(graphs::path(3), *p3);

  auto tri = geom::embed_unit_distance(graphs::complete(3), 2, 50, 1);
  REQUIRE(tri);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) CHECK(std::abs(tri->config.distance(i, j) - 1.0) <= 1e-9);
  }

  auto tet = geom::embed_unit_distance(graphs::complete(4), 3, 50, 1);
  REQUIRE(tet);
  check_success(graphs::complete(4), *tet);
  CHECK_FALSE(geom::embed_unit_distance(graphs::complete(4), 2, 5, 1));

  const Graph moser = graphs::moser_spindle();
  auto m = geom::embed_unit_distance(moser, 2, 200, 7);
  REQUIRE(m);
  check_success(moser, *m);

  CHECK_THROWS_AS(geom::embed_unit_distance(graphs::path(2), 0, 1, 1), InvalidInput);
  CHECK_THROWS_AS(geom::embed_unit_distance(Graph(0), 2, 1, 1), InvalidInput);

  const auto a = geom::embed_unit_distance(graphs::petersen(), 2, 50, 99);
  const auto b = geom::embed_unit_distance(graphs::petersen(), 2, 50, 99);
  REQUIRE(a.has_value() == b.has_value());
  if (a) CHECK(a->config.coordinates() == b->config.coordinates());
}

TEST_CASE("embedder succeeds on every free tree with at most 9 vertices in the plane") {
  std::size_t failures = 0;
  std::size_t total = 0;
  for (std::size_t n = 1; n <= 9; ++n) {
    for (const auto& t : oracle::free_trees(n)) {
      ++total;
      const auto r = geom::embed_unit_distance(t, 2, 50, n);
      if (!r || geom::residual(t, r->config) > 1e-9 || r->config.min_separation() < 1e-6) ++failures;
    }
  }
  CHECK(total == 95);
  CHECK(failures == 0);
}

TEST_CASE("embedding soundness on random graphs") {
  Rng rng(31);
  for (int i = 0; i < 60; ++i) {
    const Graph g = oracle::random_graph(4 + static_cast<std::size_t>(i % 5), 0.4, rng);
    const std::size_t d = 2 + static_cast<std::size_t>(i % 2);
    if (auto r = geom::embed_unit_distance(g, d, 5, static_cast<std::uint64_t>(i))) {
      CHECK(r->config.dimension() == d);
      CHECK(r->config.size() == g.order());
      check_success(g, *r);
    }
  }
}

TEST_CASE("analytic gradient matches central differences on 100 random instances") {
  Rng rng(404);
  geom::EmbedOptions opts;
  opts.repulsion_radius = 0.3;  // makes the repulsion term active on random instances
  std::size_t bad = 0;
  for (int inst = 0; inst < 100; ++inst) {
    const std::size_t n = 5 + rng.below(6);
    const std::size_t d = 2 + rng.below(2);
    const Graph g = oracle::random_graph(n, 0.4, rng);
    std::vector<double> x(n * d);
    for (auto& v : x) v = rng.uniform(-1.0, 1.0);
    std::vector<double> grad;
    geom::embedding_objective(g, d, x, opts, &grad);
    REQUIRE(grad.size() == x.size());
    double diff2 = 0.0;
    double norm2 = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
      const double h = 1e-6;
      auto xp = x;
      auto xm = x;
      xp[k] += h;
      xm[k] -= h;
      const double fd = (geom::embedding_objective(g, d, xp, opts) - geom::embedding_objective(g, d, xm, opts)) / (2 * h);
      diff2 += (fd - grad[k]) * (fd - grad[k]);
      norm2 += grad[k] * grad[k];
    }
    if (std::sqrt(diff2) > 1e-5 * std::max(std::sqrt(norm2), 1e-3)) ++bad;
  }
  CHECK(bad == 0);
}

TEST_CASE("diameter graph examples") {
  const double h = std::sqrt(3.0) / 2.0;
  CHECK(geom::compute_diameter_graph(PointConfig(2, {0, 0, 1, 0, 0.5, h})) == graphs::complete(3));

  std::vector<double> pent;
  for (int i = 0; i < 5; ++i) {
    pent.push_back(std::cos(2 * kPi * i / 5));
    pent.push_back(std::sin(2 * kPi * i / 5));
  }
  CHECK(edge_set_equal(geom::compute_diameter_graph(PointConfig(2, pent)),
                       {{0, 2}, {1, 3}, {2, 4}, {3, 0}, {4, 1}}));

  for (std::size_t d = 1; d <= 8; ++d) {
    const auto pts = diam::simplex(d).points();
    CHECK(geom::compute_diameter_graph(pts) == graphs::complete(d + 1));
    for (std::size_t i = 0; i <= d; ++i) {
      for (std::size_t j = i + 1; j <= d; ++j) CHECK(pts.distance(i, j) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }

  CHECK_THROWS_AS(geom::compute_diameter_graph(PointConfig(2, {0, 0})), InvalidInput);
  CHECK_THROWS_AS(geom::compute_diameter_graph(PointConfig(2, {0, 0, 1, 0}), 0.2), DegenerateDiameter);
}

TEST_CASE("diameter graphs are invariant under isometries and scaling") {
  Rng rng(17);
  std::vector<PointConfig> configs;
  for (std::size_t k = 1; k <= 6; ++k) configs.push_back(diam::odd_polygon(k).points());
  configs.push_back(diam::apex_stack(2, 1).points());
  configs.push_back(diam::apex_stack(3, 2).points());
  configs.push_back(diam::triangle_pendant().points());
  for (int i = 0; i < 10; ++i) {
    std::vector<double> xs(24);
    for (auto& v : xs) v = rng.uniform(-3.0, 3.0);
    configs.emplace_back(3, xs);
  }
  for (const auto& c : configs) {
    const Graph base = geom::compute_diameter_graph(c);
    const std::size_t d = c.dimension();
    for (int rep = 0; rep < 5; ++rep) {
      Eigen::VectorXd shift(static_cast<Eigen::Index>(d));
      for (Eigen::Index k = 0; k < shift.size(); ++k) shift(k) = rng.uniform(-10.0, 10.0);
      CHECK(geom::compute_diameter_graph(transform(c, random_rotation(d, rng), shift, 1.0)) == base);
    }
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    const Eigen::VectorXd zero = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(d));
    for (double lambda : {1e-3, 0.5, 7.5, 1e4}) CHECK(geom::compute_diameter_graph(transform(c, id, zero, lambda)) == base);
  }
}

TEST_CASE("unit distance graph of explicit points") {
  CHECK(geom::unit_distance_graph(PointConfig(2, {0, 0, 1, 0, 2, 0})) == graphs::path(3));
  CHECK(edge_set_equal(geom::unit_distance_graph(PointConfig(2, {0, 0, 1, 0, 1, 1, 0, 1})),
                       {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
}
