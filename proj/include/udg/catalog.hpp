#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "udg/diameter.hpp"
#include "udg/graph.hpp"
#include "udg/point_config.hpp"

namespace udg::diam {

enum class Family {
  OddPolygon,       // regular (2k+1)-gon in the plane; diameter graph C_{2k+1}
  Simplex,          // regular unit d-simplex; diameter graph K_{d+1}
  ApexStack,        // (2k+1)-gon plus a apexes in the orthogonal complement, ambient 2 + a
  TrianglePendant,  // Reuleaux triangle vertices plus one point on an arc; diameter graph is the paw
};

const char* to_string(Family f);

/// A parametric diameter-graph family member with the graph and chromatic
/// number it claims. Only entries that passed validate_entry feed estimation.
struct CatalogEntry {
  Family family = Family::Simplex;
  std::size_t k = 0;  // OddPolygon/ApexStack: polygon has 2k+1 vertices
  std::size_t a = 0;  // ApexStack: number of apexes
  std::size_t d = 0;  // ambient dimension
  Graph claimed_graph;
  std::size_t claimed_chi = 0;
  bool validated = false;

  /// Deterministic coordinates of the family member.
  geom::PointConfig points() const;
};

struct Generated {
  Graph graph;
  geom::PointConfig points;
};

CatalogEntry odd_polygon(std::size_t k);
CatalogEntry simplex(std::size_t d);
/// Throws GeometryInfeasible when the apexes cannot all sit at distance
/// diam from the polygon and from each other.
CatalogEntry apex_stack(std::size_t k, std::size_t a);
CatalogEntry triangle_pendant();

/// Claimed graph together with generated coordinates.
Generated generate(const CatalogEntry& e);

/// True iff the diameter graph of the generated coordinates is isomorphic
/// to claimed_graph and chromatic_number(claimed_graph) == claimed_chi.
/// Records the outcome in e.validated.
bool validate_entry(CatalogEntry& e, double rel_tol = geom::kDefaultDiameterRelTol);

/// {family, params, d, claimed_chi, validated}; coordinates are not stored.
nlohmann::json to_json(const CatalogEntry& e);
CatalogEntry entry_from_json(const nlohmann::json& j);

/// Validated entries with chromatic number d + 1 and at most max_vertices
/// vertices: for d = 2 odd polygons, the triangle and the paw; for d >= 3
/// the d-simplex and apex stacks with d - 2 apexes.
std::vector<CatalogEntry> default_catalog(std::size_t d, std::size_t max_vertices);

}  // namespace udg::diam
