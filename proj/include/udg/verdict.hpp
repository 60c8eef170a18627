#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "udg/graph.hpp"
#include "udg/point_config.hpp"
#include "json.hpp"

namespace udg::realize {

enum class Answer { Yes, No, Unknown };

enum class CertificateKind {
  LinearForest,        // YES, d = 1: `paths` partition the vertices
  TreeUnicyclic,       // YES, d >= 2: every component has edges <= vertices
  NumericalEmbedding,  // YES: `embedding` places every edge at unit length
  ForbiddenSubgraph,   // NO: `witness` spans `name` (K_m with m = d + 2, or K2,3 in the plane)
  CycleIn1D,           // NO, d = 1: `witness` is a cycle in cyclic order
  HighDegreeIn1D,      // NO, d = 1: witness[0] is adjacent to witness[1..3]
};

const char* to_string(Answer a);
const char* to_string(CertificateKind k);

struct Certificate {
  CertificateKind kind = CertificateKind::TreeUnicyclic;
  std::string name;
  std::vector<Vertex> witness;
  std::vector<std::vector<Vertex>> paths;
  std::optional<geom::PointConfig> embedding;
  std::optional<double> residual;
};

struct Verdict {
  Answer answer = Answer::Unknown;
  std::size_t dimension = 2;
  std::optional<Certificate> certificate;  // absent iff Unknown
};

/// {answer, dimension, certificate: {kind, name?, witness, residual?} | null}.
/// NumericalEmbedding witnesses are coordinate rows, LinearForest witnesses
/// are the paths, all others are vertex lists.
nlohmann::json to_json(const Verdict& v);
Verdict verdict_from_json(const nlohmann::json& j);

}  // namespace udg::realize
