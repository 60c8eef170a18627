#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace udg {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable once built. Adjacency lists are kept sorted so that
/// `adjacent()` is a binary search and neighbor iteration is ordered,
/// which the exact solvers rely on for lexicographic witnesses.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  /// Throws InvalidInput on self-loops, out-of-range endpoints or duplicate edges.
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const { return adj_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  std::size_t max_degree() const;
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Induced subgraph; vertex i of the result is vs[i].
  Graph induced(std::span<const Vertex> vs) const;
  Graph complement() const;
  /// Disjoint union; vertices of `other` are shifted by order().
  Graph disjoint_union(const Graph& other) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

namespace graphs {

Graph empty(std::size_t n);
Graph complete(std::size_t n);
Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph star(std::size_t leaves);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph petersen();
/// Odd or even cycle 0..rim-1 plus hub vertices rim..rim+hubs-1 forming a
/// clique, each hub adjacent to every rim vertex.
Graph cycle_join_clique(std::size_t rim, std::size_t hubs);
/// Triangle {0,1,2} with a pendant vertex 3 attached to 0.
Graph paw();
/// Seven-vertex Moser spindle.
Graph moser_spindle();

}  // namespace graphs

/// Text format: "n m" then m lines "u v" with 0 <= u < v < n.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

}  // namespace udg
