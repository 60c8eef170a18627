#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "udg/graph.hpp"

namespace udg {

enum class ComponentKind { Tree, Unicyclic, Multicyclic };

const char* to_string(ComponentKind kind);

/// Connected component classified by its cyclomatic number
/// (edges - vertices + 1): 0 tree, 1 unicyclic, more multicyclic.
struct ComponentClass {
  std::vector<Vertex> vertices;  // sorted
  std::size_t edge_count = 0;
  ComponentKind kind = ComponentKind::Tree;
  std::optional<std::size_t> cycle_length;  // set iff unicyclic
};

/// Components ordered by their smallest vertex.
std::vector<ComponentClass> components(const Graph& g);

/// Component index of each vertex, numbered as in components().
std::vector<std::size_t> component_labels(const Graph& g);

/// A cycle (vertices in cyclic order) in the component with the smallest
/// vertex that has one, or nullopt for a forest.
std::optional<std::vector<Vertex>> find_cycle(const Graph& g);

/// Disjoint union of simple paths: max degree <= 2 and no cycle component.
bool is_linear_forest(const Graph& g);

}  // namespace udg
