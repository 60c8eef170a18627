#include "udg/catalog.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "udg/errors.hpp"
#include "udg/exact_solvers.hpp"
#include "udg/induced.hpp"

namespace udg::diam {

namespace {

constexpr double kPi = std::numbers::pi;

// Polygon radius 1; longest diagonal of the regular (2k+1)-gon.
double polygon_diameter(std::size_t k) {
  const double m = static_cast<double>(2 * k + 1);
  return 2.0 * std::sin(kPi * static_cast<double>(k) / m);
}

// Rows of a factor X with X X^T = gram; throws GeometryInfeasible when gram
// is not positive semidefinite.
Eigen::MatrixXd factor_gram(const Eigen::MatrixXd& gram) {
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram);
  const Eigen::VectorXd vals = eig.eigenvalues();
  const double scale = std::max(1.0, vals.cwiseAbs().maxCoeff());
  if (vals.minCoeff() < -1e-12 * scale) throw GeometryInfeasible("apex Gram matrix is not positive semidefinite");
  return eig.eigenvectors() * vals.cwiseMax(0.0).cwiseSqrt().asDiagonal();
}

}  // namespace

const char* to_string(Family f) {
  switch (f) {
    case Family::OddPolygon: return "odd_polygon";
    case Family::Simplex: return "simplex";
    case Family::ApexStack: return "apex_stack";
    case Family::TrianglePendant: return "triangle_pendant";
  }
  return "?";
}

CatalogEntry odd_polygon(std::size_t k) {
  if (k < 1) throw InvalidInput("odd_polygon needs k >= 1");
  return {Family::OddPolygon, k, 0, 2, graphs::cycle(2 * k + 1), 3, false};
}

CatalogEntry simplex(std::size_t d) {
  if (d < 1) throw InvalidInput("simplex needs d >= 1");
  return {Family::Simplex, 0, 0, d, graphs::complete(d + 1), d + 1, false};
}

CatalogEntry apex_stack(std::size_t k, std::size_t a) {
  if (k < 1 || a < 1) throw InvalidInput("apex_stack needs k >= 1 and a >= 1");
  CatalogEntry e{Family::ApexStack, k, a, 2 + a, graphs::cycle_join_clique(2 * k + 1, a), 3 + a, false};
  (void)e.points();  // surfaces GeometryInfeasible at construction
  return e;
}

CatalogEntry triangle_pendant() { return {Family::TrianglePendant, 0, 0, 2, graphs::paw(), 3, false}; }

geom::PointConfig CatalogEntry::points() const {
  std::vector<double> xs;
  switch (family) {
    case Family::OddPolygon:
    case Family::ApexStack: {
      const std::size_t m = 2 * k + 1;
      const std::size_t dim = family == Family::OddPolygon ? 2 : 2 + a;
      // Vertex i sits at angle 2*pi*i*k/m so that consecutive vertices are
      // diametral and the claimed cycle 0-1-...-(m-1) is the diameter graph.
      for (std::size_t i = 0; i < m; ++i) {
        const double t = 2.0 * kPi * static_cast<double>((i * k) % m) / static_cast<double>(m);
        xs.push_back(std::cos(t));
        xs.push_back(std::sin(t));
        for (std::size_t j = 2; j < dim; ++j) xs.push_back(0.0);
      }
      if (family == Family::ApexStack) {
        const double diam = polygon_diameter(k);
        const double height2 = diam * diam - 1.0;
        if (height2 <= 0.0) throw GeometryInfeasible("apex height has no real solution");
        const Eigen::MatrixXd gram =
            Eigen::MatrixXd::Constant(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(a),
                                      height2 - diam * diam / 2.0) +
            Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(a)) * (diam * diam / 2.0);
        const Eigen::MatrixXd apex = factor_gram(gram);
        for (Eigen::Index i = 0; i < apex.rows(); ++i) {
          xs.push_back(0.0);
          xs.push_back(0.0);
          for (Eigen::Index j = 0; j < apex.cols(); ++j) xs.push_back(apex(i, j));
        }
      }
      return geom::PointConfig(dim, std::move(xs));
    }
    case Family::Simplex: {
      // v_0 = 0; v_1..v_d from the Cholesky factor of the Gram matrix of
      // edge vectors (1 on the diagonal, 1/2 off it).
      const auto n = static_cast<Eigen::Index>(d);
      Eigen::MatrixXd gram = Eigen::MatrixXd::Constant(n, n, 0.5);
      gram.diagonal().setOnes();
      const Eigen::MatrixXd l = gram.llt().matrixL();
      xs.assign(d, 0.0);
      for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) xs.push_back(l(i, j));
      }
      return geom::PointConfig(d, std::move(xs));
    }
    case Family::TrianglePendant: {
      // Unit equilateral triangle 0,1,2 and a point on the arc of radius 1
      // around vertex 0 between vertices 1 and 2.
      const double s3 = std::sqrt(3.0);
      xs = {0.0, 0.0, 1.0, 0.0, 0.5, s3 / 2.0, s3 / 2.0, 0.5};
      return geom::PointConfig(2, std::move(xs));
    }
  }
  throw InvalidInput("unknown family");
}

Generated generate(const CatalogEntry& e) { return {e.claimed_graph, e.points()}; }

bool validate_entry(CatalogEntry& e, double rel_tol) {
  e.validated = false;
  const auto pts = e.points();
  const Graph dg = geom::compute_diameter_graph(pts, rel_tol);
  if (!are_isomorphic(dg, e.claimed_graph)) return false;
  const std::size_t budget = std::max(kDefaultSolverBudget, e.claimed_graph.order());
  e.validated = chromatic_number(e.claimed_graph, budget) == e.claimed_chi;
  return e.validated;
}

nlohmann::json to_json(const CatalogEntry& e) {
  nlohmann::json params = nlohmann::json::object();
  switch (e.family) {
    case Family::OddPolygon: params["k"] = e.k; break;
    case Family::Simplex: params["d"] = e.d; break;
    case Family::ApexStack:
      params["k"] = e.k;
      params["a"] = e.a;
      break;
    case Family::TrianglePendant: break;
  }
  return {{"family", to_string(e.family)},
          {"params", params},
          {"d", e.d},
          {"claimed_chi", e.claimed_chi},
          {"validated", e.validated}};
}

CatalogEntry entry_from_json(const nlohmann::json& j) {
  try {
    const auto family = j.at("family").get<std::string>();
    const auto& params = j.at("params");
    CatalogEntry e;
    if (family == "odd_polygon") {
      e = odd_polygon(params.at("k").get<std::size_t>());
    } else if (family == "simplex") {
      e = simplex(params.at("d").get<std::size_t>());
    } else if (family == "apex_stack") {
      e = apex_stack(params.at("k").get<std::size_t>(), params.at("a").get<std::size_t>());
    } else if (family == "triangle_pendant") {
      e = triangle_pendant();
    } else {
      throw InvalidInput("unknown catalog family \"" + family + "\"");
    }
    e.claimed_chi = j.at("claimed_chi").get<std::size_t>();
    e.validated = false;
    return e;
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidInput(std::string("malformed catalog entry: ") + ex.what());
  }
}

std::vector<CatalogEntry> default_catalog(std::size_t d, std::size_t max_vertices) {
  if (d < 2) throw InvalidInput("catalog dimension must be at least 2");
  std::vector<CatalogEntry> out;
  if (d + 1 <= max_vertices) out.push_back(simplex(d));
  if (d == 2) {
    for (std::size_t k = 2; 2 * k + 1 <= max_vertices; ++k) out.push_back(odd_polygon(k));
    if (max_vertices >= 4) out.push_back(triangle_pendant());
  } else {
    for (std::size_t k = 2; 2 * k + 1 + (d - 2) <= max_vertices; ++k) out.push_back(apex_stack(k, d - 2));
  }
  std::vector<CatalogEntry> valid;
  for (auto& e : out) {
    if (validate_entry(e)) valid.push_back(std::move(e));
  }
  return valid;
}

}  // namespace udg::diam
