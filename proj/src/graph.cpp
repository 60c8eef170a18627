#include "udg/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <string>

#include "udg/errors.hpp"

namespace udg {

Graph::Graph(std::size_t n) : adj_(n) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adj_(n) {
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw InvalidInput("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                         ") out of range for n = " + std::to_string(n));
    }
    if (e.u == e.v) throw InvalidInput("self-loop at vertex " + std::to_string(e.u));
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& row : adj_) {
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end()) {
      throw InvalidInput("duplicate edge");
    }
  }
  edge_count_ = edges.size();
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& row : adj_) best = std::max(best, row.size());
  return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& row = adj_[u];
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adj_.size(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

Graph Graph::induced(std::span<const Vertex> vs) const {
  std::vector<Edge> es;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (adjacent(vs[i], vs[j])) es.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    }
  }
  return Graph(vs.size(), es);
}

Graph Graph::complement() const {
  std::vector<Edge> es;
  const auto n = static_cast<Vertex>(order());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!adjacent(u, v)) es.push_back({u, v});
    }
  }
  return Graph(n, es);
}

Graph Graph::disjoint_union(const Graph& other) const {
  auto es = edges();
  const auto shift = static_cast<Vertex>(order());
  for (const Edge& e : other.edges()) es.push_back({e.u + shift, e.v + shift});
  return Graph(order() + other.order(), es);
}

namespace graphs {

Graph empty(std::size_t n) { return Graph(n); }

Graph complete(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) es.push_back({u, v});
  }
  return Graph(n, es);
}

Graph path(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex v = 1; v < n; ++v) es.push_back({v - 1, v});
  return Graph(n, es);
}

Graph cycle(std::size_t n) {
  if (n < 3) throw InvalidInput("cycle needs at least 3 vertices");
  std::vector<Edge> es;
  for (Vertex v = 1; v < n; ++v) es.push_back({v - 1, v});
  es.push_back({0, static_cast<Vertex>(n - 1)});
  return Graph(n, es);
}

Graph star(std::size_t leaves) {
  std::vector<Edge> es;
  for (Vertex v = 1; v <= leaves; ++v) es.push_back({0, v});
  return Graph(leaves + 1, es);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> es;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = 0; v < b; ++v) es.push_back({u, static_cast<Vertex>(a + v)});
  }
  return Graph(a + b, es);
}

Graph petersen() {
  std::vector<Edge> es;
  for (Vertex i = 0; i < 5; ++i) {
    es.push_back({i, (i + 1) % 5});
    es.push_back({i, i + 5});
    es.push_back({5 + i, 5 + (i + 2) % 5});
  }
  for (auto& e : es) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  return Graph(10, es);
}

Graph cycle_join_clique(std::size_t rim, std::size_t hubs) {
  std::vector<Edge> es = cycle(rim).edges();
  for (Vertex h = 0; h < hubs; ++h) {
    const auto hv = static_cast<Vertex>(rim + h);
    for (Vertex v = 0; v < rim; ++v) es.push_back({v, hv});
    for (Vertex h2 = h + 1; h2 < hubs; ++h2) es.push_back({hv, static_cast<Vertex>(rim + h2)});
  }
  return Graph(rim + hubs, es);
}

Graph paw() {
  const Edge es[] = {{0, 1}, {0, 2}, {1, 2}, {0, 3}};
  return Graph(4, es);
}

Graph moser_spindle() {
  const Edge es[] = {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {0, 4},
                     {0, 5}, {4, 5}, {4, 6}, {5, 6}, {3, 6}};
  return Graph(7, es);
}

}  // namespace graphs

Graph read_graph(std::istream& in) {
  long long n = -1;
  long long m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) throw InvalidInput("graph header must be \"n m\"");
  std::vector<Edge> es;
  es.reserve(static_cast<std::size_t>(std::min<long long>(m, 1 << 20)));
  for (long long i = 0; i < m; ++i) {
    long long u = -1;
    long long v = -1;
    if (!(in >> u >> v)) throw InvalidInput("expected " + std::to_string(m) + " edge lines");
    if (u < 0 || v >= n || u >= v) {
      throw InvalidInput("edge line " + std::to_string(i + 1) + " violates 0 <= u < v < n");
    }
    es.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  std::string rest;
  if (in >> rest) throw InvalidInput("trailing data after edge list");
  return Graph(static_cast<std::size_t>(n), es);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace udg
