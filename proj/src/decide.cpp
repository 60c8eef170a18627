#include "udg/decide.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "udg/components.hpp"
#include "udg/errors.hpp"
#include "udg/exact_solvers.hpp"

namespace udg::realize {

namespace {

Verdict yes(std::size_t d, Certificate c) { return {Answer::Yes, d, std::move(c)}; }
Verdict no(std::size_t d, Certificate c) { return {Answer::No, d, std::move(c)}; }

std::optional<std::vector<Vertex>> high_degree_witness(const Graph& g, std::span<const Vertex> among) {
  for (Vertex v : among) {
    if (g.degree(v) >= 3) {
      const auto nb = g.neighbors(v);
      return std::vector<Vertex>{v, nb[0], nb[1], nb[2]};
    }
  }
  return std::nullopt;
}

std::vector<Vertex> all_vertices(const Graph& g) {
  std::vector<Vertex> vs(g.order());
  for (Vertex v = 0; v < g.order(); ++v) vs[v] = v;
  return vs;
}

// Paths of a linear forest, each listed from its smaller endpoint.
std::vector<std::vector<Vertex>> forest_paths(const Graph& g) {
  std::vector<std::vector<Vertex>> paths;
  std::vector<char> seen(g.order(), 0);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s] || g.degree(s) > 1) continue;
    std::vector<Vertex> path{s};
    seen[s] = 1;
    Vertex prev = s;
    Vertex cur = s;
    for (;;) {
      Vertex next = cur;
      for (Vertex w : g.neighbors(cur)) {
        if (w != prev && !seen[w]) next = w;
      }
      if (next == cur) break;
      seen[next] = 1;
      path.push_back(next);
      prev = cur;
      cur = next;
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

class LineLabeling {
 public:
  LineLabeling(const Graph& g, std::vector<Vertex> comp) : g_(g), order_(std::move(comp)) {
    // BFS order from the smallest vertex, with each vertex's BFS parent.
    std::vector<Vertex> bfs{order_.front()};
    std::vector<char> seen(g.order(), 0);
    seen[order_.front()] = 1;
    parent_.assign(g.order(), order_.front());
    for (std::size_t head = 0; head < bfs.size(); ++head) {
      for (Vertex w : g.neighbors(bfs[head])) {
        if (!seen[w]) {
          seen[w] = 1;
          parent_[w] = bfs[head];
          bfs.push_back(w);
        }
      }
    }
    order_ = std::move(bfs);
    label_.assign(g.order(), 0);
  }

  bool solve() {
    label_[order_[0]] = 0;
    return place(1);
  }

  long long label(Vertex v) const { return label_[v]; }

 private:
  bool place(std::size_t i) {
    if (i == order_.size()) return true;
    const Vertex v = order_[i];
    for (long long step : {-1LL, 1LL}) {
      const long long x = label_[parent_[v]] + step;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        const Vertex u = order_[j];
        if (label_[u] == x) ok = false;
        if (g_.adjacent(u, v) && std::llabs(label_[u] - x) != 1) ok = false;
      }
      if (!ok) continue;
      label_[v] = x;
      if (place(i + 1)) return true;
    }
    return false;
  }

  const Graph& g_;
  std::vector<Vertex> order_;
  std::vector<Vertex> parent_;
  std::vector<long long> label_;
};

bool distinct(std::span<const Vertex> vs, std::size_t n) {
  std::vector<char> seen(n, 0);
  for (Vertex v : vs) {
    if (v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool check_forbidden(const Graph& g, std::size_t d, const Certificate& c) {
  const auto& w = c.witness;
  if (!distinct(w, g.order())) return false;
  if (c.name == "K2,3") {
    if (d != 2 || w.size() != 5) return false;
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 2; j < 5; ++j) {
        if (!g.adjacent(w[i], w[j])) return false;
      }
    }
    return true;
  }
  if (c.name != "K" + std::to_string(d + 2) || w.size() != d + 2) return false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (!g.adjacent(w[i], w[j])) return false;
    }
  }
  return true;
}

bool check_linear_forest(const Graph& g, const Certificate& c) {
  std::vector<Vertex> all;
  std::size_t path_edges = 0;
  for (const auto& p : c.paths) {
    if (p.empty()) return false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (p[i] >= g.order() || p[i + 1] >= g.order() || !g.adjacent(p[i], p[i + 1])) return false;
    }
    path_edges += p.size() - 1;
    all.insert(all.end(), p.begin(), p.end());
  }
  return all.size() == g.order() && distinct(all, g.order()) && path_edges == g.edge_count();
}

}  // namespace

Verdict decide_1d(const Graph& g) {
  if (auto w = high_degree_witness(g, all_vertices(g))) {
    return no(1, {CertificateKind::HighDegreeIn1D, "", std::move(*w), {}, {}, {}});
  }
  if (auto cyc = find_cycle(g)) {
    return no(1, {CertificateKind::CycleIn1D, "", std::move(*cyc), {}, {}, {}});
  }
  return yes(1, {CertificateKind::LinearForest, "", {}, forest_paths(g), {}, {}});
}

Verdict decide_1d_oracle(const Graph& g) {
  if (g.order() > kOracleBudget) {
    throw BudgetExceeded("decide_1d_oracle: " + std::to_string(g.order()) + " vertices exceed the oracle budget of " +
                         std::to_string(kOracleBudget));
  }
  std::vector<double> coords(g.order(), 0.0);
  const auto comps = components(g);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    LineLabeling search(g, comps[c].vertices);
    if (!search.solve()) {
      // The decision is made; extract a witness for the certificate.
      if (auto w = high_degree_witness(g, comps[c].vertices)) {
        return no(1, {CertificateKind::HighDegreeIn1D, "", std::move(*w), {}, {}, {}});
      }
      if (auto cyc = find_cycle(g.induced(comps[c].vertices))) {
        for (auto& v : *cyc) v = comps[c].vertices[v];
        return no(1, {CertificateKind::CycleIn1D, "", std::move(*cyc), {}, {}, {}});
      }
      throw std::logic_error("decide_1d_oracle: unlabelable component without degree-3 vertex or cycle");
    }
    // Components sit in disjoint integer windows of width 2n + 2.
    const double offset = static_cast<double>(c) * static_cast<double>(2 * g.order() + 2);
    for (Vertex v : comps[c].vertices) coords[v] = offset + static_cast<double>(search.label(v));
  }
  geom::PointConfig config(1, std::move(coords));
  const double res = geom::residual(g, config);
  return yes(1, {CertificateKind::NumericalEmbedding, "", {}, {}, std::move(config), res});
}

std::optional<std::vector<Vertex>> find_k23(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  std::vector<std::vector<Vertex>> common(n);
  std::vector<Vertex> touched;
  std::optional<std::vector<Vertex>> best_set;
  std::vector<Vertex> best;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex w : g.neighbors(u)) {
      for (Vertex v : g.neighbors(w)) {
        if (v <= u) continue;
        if (common[v].empty()) touched.push_back(v);
        common[v].push_back(w);
      }
    }
    std::sort(touched.begin(), touched.end());
    for (Vertex v : touched) {
      auto& c = common[v];
      if (c.size() >= 3) {
        std::vector<Vertex> set{u, v, c[0], c[1], c[2]};
        std::sort(set.begin(), set.end());
        if (!best_set || set < *best_set) {
          best_set = set;
          best = {u, v, c[0], c[1], c[2]};
        }
      }
      c.clear();
    }
    touched.clear();
  }
  if (!best_set) return std::nullopt;
  return best;
}

Verdict decide(const Graph& g, std::size_t d, const PipelineOptions& options) {
  if (d < 2) throw InvalidInput("pipeline decider needs d >= 2; use decide_1d on the line");
  if (auto k = find_clique(g, d + 2)) {
    return no(d, {CertificateKind::ForbiddenSubgraph, "K" + std::to_string(d + 2), std::move(*k), {}, {}, {}});
  }
  if (d == 2) {
    if (auto w = find_k23(g)) return no(d, {CertificateKind::ForbiddenSubgraph, "K2,3", std::move(*w), {}, {}, {}});
  }
  bool sparse = true;
  for (const auto& c : components(g)) sparse = sparse && c.kind != ComponentKind::Multicyclic;
  if (sparse) return yes(d, {CertificateKind::TreeUnicyclic, "", {}, {}, {}, {}});
  if (g.order() > 0) {
    if (auto fit = geom::embed_unit_distance(g, d, options.embed_restarts, options.seed, options.embed)) {
      return yes(d, {CertificateKind::NumericalEmbedding, "", {}, {}, std::move(fit->config), fit->residual});
    }
  }
  return {Answer::Unknown, d, std::nullopt};
}

bool validate_certificate(const Graph& g, const Verdict& v) {
  if (v.answer == Answer::Unknown || !v.certificate) return false;
  const Certificate& c = *v.certificate;
  const bool yes_kind = c.kind == CertificateKind::LinearForest || c.kind == CertificateKind::TreeUnicyclic ||
                        c.kind == CertificateKind::NumericalEmbedding;
  if (yes_kind != (v.answer == Answer::Yes)) return false;
  const std::size_t d = v.dimension;
  switch (c.kind) {
    case CertificateKind::LinearForest:
      return d == 1 && check_linear_forest(g, c);
    case CertificateKind::TreeUnicyclic: {
      if (d < 2) return false;
      for (const auto& comp : components(g)) {
        if (comp.edge_count > comp.vertices.size()) return false;
      }
      return true;
    }
    case CertificateKind::NumericalEmbedding: {
      if (!c.embedding || c.embedding->dimension() != d || c.embedding->size() != g.order()) return false;
      const geom::EmbedOptions defaults;
      return geom::residual(g, *c.embedding) <= defaults.residual_tol &&
             c.embedding->min_separation() >= defaults.separation_tol;
    }
    case CertificateKind::ForbiddenSubgraph:
      return check_forbidden(g, d, c);
    case CertificateKind::CycleIn1D: {
      const auto& w = c.witness;
      if (d != 1 || w.size() < 3 || !distinct(w, g.order())) return false;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (!g.adjacent(w[i], w[(i + 1) % w.size()])) return false;
      }
      return true;
    }
    case CertificateKind::HighDegreeIn1D: {
      const auto& w = c.witness;
      if (d != 1 || w.size() != 4 || !distinct(w, g.order())) return false;
      return g.adjacent(w[0], w[1]) && g.adjacent(w[0], w[2]) && g.adjacent(w[0], w[3]);
    }
  }
  return false;
}

}  // namespace udg::realize
