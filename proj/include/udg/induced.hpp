#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "udg/graph.hpp"

namespace udg {

/// Vertex budget for the bitset-row induced searches.
inline constexpr std::size_t kDefaultInducedBudget = 64;
/// Pattern size limit for contains_induced.
inline constexpr std::size_t kMaxPatternOrder = 12;

enum class CycleParity { Odd, Even, Any };

struct InducedCycle {
  std::size_t length = 0;
  /// Cycle order, starting at the smallest vertex and continuing towards
  /// its smaller cycle neighbor.
  std::vector<Vertex> vertices;
};

/// Longest chordless cycle with the requested parity. Among cycles of
/// maximum length the lexicographically smallest vertex set is returned.
/// Throws BudgetExceeded when g has more than `budget` vertices.
std::optional<InducedCycle> largest_induced_cycle(const Graph& g, CycleParity parity,
                                                  std::size_t budget = kDefaultInducedBudget);

/// Same search restricted to cycle lengths L with allowed[L] true
/// (lengths beyond allowed.size() are rejected).
std::optional<InducedCycle> largest_induced_cycle(const Graph& g, const std::vector<bool>& allowed,
                                                  std::size_t budget = kDefaultInducedBudget);

/// Truncated variant without a vertex budget: the search rooted at each
/// vertex stops after `nodes_per_root` path extensions. The result is an
/// induced cycle with an allowed length but carries no optimality claim.
std::optional<InducedCycle> induced_cycle_heuristic(const Graph& g, const std::vector<bool>& allowed,
                                                    std::size_t nodes_per_root);

/// Lexicographically smallest sorted vertex set S with g[S] isomorphic to h.
/// Throws BudgetExceeded if h has more than kMaxPatternOrder vertices or g
/// more than `budget`.
std::optional<std::vector<Vertex>> contains_induced(const Graph& g, const Graph& h,
                                                    std::size_t budget = kDefaultInducedBudget);

/// Isomorphism as a map from vertices of h to vertices of g.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h);
bool are_isomorphic(const Graph& g, const Graph& h);

}  // namespace udg
