#include "udg/components.hpp"

#include <algorithm>
#include <limits>

namespace udg {

namespace {

constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

// Vertices left after repeatedly stripping degree-1 vertices of one component.
std::size_t core_size(const Graph& g, const std::vector<Vertex>& comp) {
  std::vector<std::size_t> deg(g.order(), 0);
  std::vector<Vertex> stack;
  std::vector<char> removed(g.order(), 0);
  for (Vertex v : comp) {
    deg[v] = g.degree(v);
    if (deg[v] <= 1) stack.push_back(v);
  }
  std::size_t left = comp.size();
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    if (removed[v]) continue;
    removed[v] = 1;
    --left;
    for (Vertex w : g.neighbors(v)) {
      if (!removed[w] && --deg[w] == 1) stack.push_back(w);
    }
  }
  return left;
}

}  // namespace

const char* to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::Tree: return "tree";
    case ComponentKind::Unicyclic: return "unicyclic";
    case ComponentKind::Multicyclic: return "multicyclic";
  }
  return "?";
}

std::vector<std::size_t> component_labels(const Graph& g) {
  std::vector<std::size_t> label(g.order(), kUnset);
  std::vector<Vertex> stack;
  std::size_t next = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (label[s] != kUnset) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (label[w] == kUnset) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

std::vector<ComponentClass> components(const Graph& g) {
  const auto label = component_labels(g);
  std::size_t count = 0;
  for (auto l : label) count = std::max(count, l + 1);
  std::vector<ComponentClass> out(count);
  for (Vertex v = 0; v < g.order(); ++v) {
    out[label[v]].vertices.push_back(v);
    out[label[v]].edge_count += g.degree(v);
  }
  for (auto& c : out) {
    c.edge_count /= 2;
    if (c.edge_count + 1 == c.vertices.size()) {
      c.kind = ComponentKind::Tree;
    } else if (c.edge_count == c.vertices.size()) {
      c.kind = ComponentKind::Unicyclic;
      c.cycle_length = core_size(g, c.vertices);
    } else {
      c.kind = ComponentKind::Multicyclic;
    }
  }
  return out;
}

std::optional<std::vector<Vertex>> find_cycle(const Graph& g) {
  // Iterative DFS; the first back edge closes a cycle along the parent chain.
  std::vector<std::size_t> parent(g.order(), kUnset);
  std::vector<std::size_t> depth(g.order(), kUnset);
  std::vector<std::size_t> next_edge(g.order(), 0);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (depth[s] != kUnset) continue;
    depth[s] = 0;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      const Vertex v = stack.back();
      const auto nbrs = g.neighbors(v);
      if (next_edge[v] == nbrs.size()) {
        stack.pop_back();
        continue;
      }
      const Vertex w = nbrs[next_edge[v]++];
      if (w == parent[v]) continue;
      if (depth[w] == kUnset) {
        depth[w] = depth[v] + 1;
        parent[w] = v;
        stack.push_back(w);
      } else if (depth[w] < depth[v]) {
        std::vector<Vertex> cyc;
        for (Vertex x = v; x != w; x = static_cast<Vertex>(parent[x])) cyc.push_back(x);
        cyc.push_back(w);
        std::reverse(cyc.begin(), cyc.end());
        return cyc;
      }
    }
  }
  return std::nullopt;
}

bool is_linear_forest(const Graph& g) {
  if (g.max_degree() > 2) return false;
  for (const auto& c : components(g)) {
    if (c.kind != ComponentKind::Tree) return false;
  }
  return true;
}

}  // namespace udg
