#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "udg/graph.hpp"

namespace udg {

/// Default vertex budget of the exponential solvers (chromatic number,
/// independence number, maximum clique). Exceeding the budget throws
/// BudgetExceeded; there is no heuristic fallback.
inline constexpr std::size_t kDefaultSolverBudget = 40;

struct Coloring {
  std::size_t colors = 0;
  std::vector<std::uint32_t> color;  // per vertex, in [0, colors)
};

/// Optimal proper coloring by DSATUR branch and bound, seeded with a
/// maximum-clique lower bound (raised to 3 for non-bipartite graphs) and
/// the greedy DSATUR upper bound.
Coloring optimal_coloring(const Graph& g, std::size_t budget = kDefaultSolverBudget);
std::size_t chromatic_number(const Graph& g, std::size_t budget = kDefaultSolverBudget);

/// A maximum clique (vertices sorted).
std::vector<Vertex> maximum_clique(const Graph& g, std::size_t budget = kDefaultSolverBudget);
std::size_t independence_number(const Graph& g, std::size_t budget = kDefaultSolverBudget);

/// Lexicographically smallest k-clique, if any. Uses sorted adjacency
/// lists, so it stays cheap on large sparse graphs.
std::optional<std::vector<Vertex>> find_clique(const Graph& g, std::size_t k);

bool is_bipartite(const Graph& g);
bool is_proper_coloring(const Graph& g, std::span<const std::uint32_t> color);

}  // namespace udg
