#pragma once

#include <cstddef>
#include <cstdint>

#include "udg/embed.hpp"
#include "udg/graph.hpp"
#include "udg/verdict.hpp"

namespace udg::realize {

inline constexpr std::size_t kOracleBudget = 12;

/// Exact decision on the line: YES iff g is a linear forest. Never Unknown.
Verdict decide_1d(const Graph& g);

/// Independent check of decide_1d: per component, backtracking over integer
/// labelings with every edge at difference +-1 and all labels distinct.
/// Throws BudgetExceeded above kOracleBudget vertices.
Verdict decide_1d_oracle(const Graph& g);

struct PipelineOptions {
  std::size_t embed_restarts = 50;
  std::uint64_t seed = 0;
  geom::EmbedOptions embed;
};

/// Realizability in R^d (d >= 2) as a unit-distance graph with subset
/// semantics. First firing rule wins:
///   1. K_{d+2} subgraph                  -> NO
///   2. d = 2 and a K_{2,3} subgraph      -> NO
///   3. all components tree or unicyclic  -> YES
///   4. numerical embedding found         -> YES
///   5. otherwise                         -> UNKNOWN
Verdict decide(const Graph& g, std::size_t d, const PipelineOptions& options = {});

/// Re-derives the certificate's claim from g alone. False for Unknown
/// verdicts and for certificates whose kind does not match the answer.
bool validate_certificate(const Graph& g, const Verdict& v);

/// Lexicographically smallest vertex set spanning a K_{2,3}; the result is
/// ordered {a, b, x, y, z} with a, b the two-vertex side.
std::optional<std::vector<Vertex>> find_k23(const Graph& g);

}  // namespace udg::realize
