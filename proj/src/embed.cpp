#include "udg/embed.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>
#include <algorithm>
#include <cmath>
#include <limits>

#include "udg/components.hpp"
#include "udg/errors.hpp"
#include "udg/rng.hpp"

namespace udg::geom {

namespace {

using Triplets = std::vector<Eigen::Triplet<double>>;

double sq_dist(std::span<const double> x, std::size_t d, Vertex u, Vertex v) {
  double s = 0.0;
  for (std::size_t k = 0; k < d; ++k) {
    const double t = x[u * d + k] - x[v * d + k];
    s += t * t;
  }
  return s;
}

// Stacked residuals: one per edge, then one per active repulsion pair.
void evaluate(const Graph& g, std::size_t d, std::span<const double> x, const EmbedOptions& opt,
              std::vector<double>& r, Triplets* jac) {
  r.clear();
  if (jac) jac->clear();
  const auto push_row = [&](Vertex u, Vertex v, double scale) {
    const auto row = static_cast<int>(r.size() - 1);
    for (std::size_t k = 0; k < d; ++k) {
      const double t = scale * 2.0 * (x[u * d + k] - x[v * d + k]);
      jac->emplace_back(row, static_cast<int>(u * d + k), t);
      jac->emplace_back(row, static_cast<int>(v * d + k), -t);
    }
  };
  for (const Edge& e : g.edges()) {
    r.push_back(sq_dist(x, d, e.u, e.v) - 1.0);
    if (jac) push_row(e.u, e.v, 1.0);
  }
  const double r2 = opt.repulsion_radius * opt.repulsion_radius;
  const double sw = std::sqrt(opt.repulsion_weight);
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const double s = sq_dist(x, d, u, v);
      if (s >= r2 || g.adjacent(u, v)) continue;
      r.push_back(sw * (r2 - s));
      if (jac) push_row(u, v, -sw);
    }
  }
}

double sum_squares(const std::vector<double>& r) {
  double s = 0.0;
  for (double t : r) s += t * t;
  return s;
}

double max_edge_residual(const Graph& g, std::size_t d, std::span<const double> x) {
  double worst = 0.0;
  for (const Edge& e : g.edges()) worst = std::max(worst, std::abs(sq_dist(x, d, e.u, e.v) - 1.0));
  return worst;
}

double min_separation(std::size_t n, std::size_t d, std::span<const double> x) {
  double best = std::numeric_limits<double>::infinity();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) best = std::min(best, sq_dist(x, d, u, v));
  }
  return std::sqrt(best);
}

// Levenberg-Marquardt with sparse normal equations; returns the final point.
std::vector<double> refine(const Graph& g, std::size_t d, std::vector<double> x, const EmbedOptions& opt) {
  const auto dim = static_cast<Eigen::Index>(x.size());
  std::vector<double> r;
  std::vector<double> r_trial;
  Triplets trips;
  evaluate(g, d, x, opt, r, &trips);
  double cost = sum_squares(r);
  double lambda = 1e-3;
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver;
  for (std::size_t it = 0; it < opt.max_iterations && cost > 1e-30; ++it) {
    Eigen::SparseMatrix<double> jac(static_cast<Eigen::Index>(r.size()), dim);
    jac.setFromTriplets(trips.begin(), trips.end());
    const Eigen::Map<const Eigen::VectorXd> rv(r.data(), static_cast<Eigen::Index>(r.size()));
    const Eigen::VectorXd grad = jac.transpose() * rv;
    Eigen::SparseMatrix<double> normal = jac.transpose() * jac;

    bool accepted = false;
    while (!accepted && lambda < 1e12) {
      Eigen::SparseMatrix<double> damped = normal;
      for (Eigen::Index i = 0; i < dim; ++i) damped.coeffRef(i, i) += lambda;
      solver.compute(damped);
      if (solver.info() != Eigen::Success) {
        lambda *= 10.0;
        continue;
      }
      const Eigen::VectorXd step = solver.solve(-grad);
      std::vector<double> trial(x);
      for (Eigen::Index i = 0; i < dim; ++i) trial[static_cast<std::size_t>(i)] += step[i];
      evaluate(g, d, trial, opt, r_trial, nullptr);
      const double trial_cost = sum_squares(r_trial);
      if (trial_cost < cost) {
        x.swap(trial);
        lambda = std::max(lambda / 3.0, 1e-12);
        accepted = true;
      } else {
        lambda *= 4.0;
      }
    }
    if (!accepted) break;
    evaluate(g, d, x, opt, r, &trips);
    const double new_cost = sum_squares(r);
    const bool stalled = cost - new_cost <= 1e-16 * cost;
    cost = new_cost;
    if (stalled && max_edge_residual(g, d, x) > opt.residual_tol) break;
  }
  return x;
}

struct ComponentFit {
  std::vector<double> x;
  std::size_t starts = 0;
};

std::optional<ComponentFit> fit_component(const Graph& g, std::size_t d, std::size_t restarts, std::uint64_t seed,
                                          const EmbedOptions& opt) {
  const std::size_t n = g.order();
  const double half = std::sqrt(static_cast<double>(n));
  for (std::size_t start = 0; start < restarts; ++start) {
    Rng rng(derive_seed(seed, start));
    std::vector<double> x(n * d);
    for (double& c : x) c = rng.uniform(-half, half);
    if (n > 1) x = refine(g, d, std::move(x), opt);
    if (max_edge_residual(g, d, x) <= opt.residual_tol && min_separation(n, d, x) >= opt.separation_tol) {
      return ComponentFit{std::move(x), start + 1};
    }
  }
  return std::nullopt;
}

}  // namespace

double embedding_objective(const Graph& g, std::size_t d, std::span<const double> x, const EmbedOptions& options,
                           std::vector<double>* gradient) {
  std::vector<double> r;
  Triplets trips;
  evaluate(g, d, x, options, r, gradient ? &trips : nullptr);
  if (gradient) {
    gradient->assign(x.size(), 0.0);
    for (const auto& t : trips) (*gradient)[static_cast<std::size_t>(t.col())] += 2.0 * t.value() * r[static_cast<std::size_t>(t.row())];
  }
  return sum_squares(r);
}

double residual(const Graph& g, const PointConfig& config) {
  if (config.size() != g.order()) throw InvalidInput("graph and point configuration differ in size");
  double worst = 0.0;
  for (const Edge& e : g.edges()) worst = std::max(worst, std::abs(config.squared_distance(e.u, e.v) - 1.0));
  return worst;
}

std::optional<EmbedResult> embed_unit_distance(const Graph& g, std::size_t d, std::size_t restarts,
                                               std::uint64_t seed, const EmbedOptions& options) {
  if (d == 0) throw InvalidInput("dimension must be positive");
  if (g.order() == 0) throw InvalidInput("cannot embed an empty vertex set");

  const auto comps = components(g);
  std::vector<double> coords(g.order() * d, 0.0);
  double cursor = 0.0;
  std::size_t worst_starts = 0;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const auto& verts = comps[c].vertices;
    const Graph local = g.induced(verts);
    const auto fit = fit_component(local, d, restarts, derive_seed(seed, c), options);
    if (!fit) return std::nullopt;
    worst_starts = std::max(worst_starts, fit->starts);

    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      lo = std::min(lo, fit->x[i * d]);
      hi = std::max(hi, fit->x[i * d]);
    }
    const double shift = c == 0 ? 0.0 : cursor - lo;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      for (std::size_t k = 0; k < d; ++k) coords[verts[i] * d + k] = fit->x[i * d + k] + (k == 0 ? shift : 0.0);
    }
    cursor = hi + shift + 2.0;
  }

  PointConfig config(d, std::move(coords));
  const double res = residual(g, config);
  if (res > options.residual_tol || config.min_separation() < options.separation_tol) return std::nullopt;
  return EmbedResult{std::move(config), res, worst_starts};
}

}  // namespace udg::geom
