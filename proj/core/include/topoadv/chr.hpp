#pragma once

#include <cstddef>
#include <map>
#include <set>

#include "topoadv/complex.hpp"
#include "topoadv/geometry.hpp"
#include "topoadv/instant_graph.hpp"

namespace topoadv {

inline constexpr std::size_t kDefaultFacetBudget = 1000000;

/// Provenance of a subdivision vertex: its process color and the set of
/// previous-stage vertices it saw. The color's own vertex is in the view.
struct ChrVertex {
  int color = 0;
  Simplex view;

  bool operator==(const ChrVertex&) const = default;
  auto operator<=>(const ChrVertex&) const = default;
};

/// A subdivision stage: the complex, exact coordinates of every vertex over
/// the original base complex, and per-vertex provenance where applicable
/// (vertices inherited unchanged have no provenance entry).
struct Subdivision {
  Complex cpx;
  std::map<VertexId, BaryPoint> coords;
  std::map<VertexId, ChrVertex> provenance;
  /// Colors of the previous stage's vertices, the ids views refer to.
  std::map<VertexId, int> view_colors;

  /// Base simplex the vertex lies in: support of its coordinates.
  Simplex carrier(VertexId v) const { return coords.at(v).carrier(); }

  /// Positions of a facet's vertices, ordered by color.
  GeoSimplex geo_facet(const Simplex& facet) const;
};

/// The identity stage of a chromatic complex: every vertex at its own unit
/// coordinate.
Subdivision identity_stage(const Complex& c);

/// Standard chromatic subdivision. For every facet s of the stage and every
/// instant graph on colors(s) there is one facet whose vertex of color i has
/// view In(i), placed at the zeta average of the viewed positions. Vertices
/// are merged across facets by (color, view). Simplices of the result are
/// the faces of these facets.
Subdivision chr(const Subdivision& stage, std::size_t facet_budget = kDefaultFacetBudget);
Subdivision chr(const Complex& c, std::size_t facet_budget = kDefaultFacetBudget);

/// r-fold chromatic subdivision; r = 0 is the identity stage.
Subdivision iterate_chr(const Complex& c, int rounds,
                        std::size_t facet_budget = kDefaultFacetBudget);

/// Subdivision with terminated vertices: facets fully inside the live part
/// u = V(c) \ t are subdivided, facets fully inside t are kept, and mixed
/// facets become joins of the subdivided live face with the frozen part.
/// t = {} gives chr, t = V(c) gives the identity.
Subdivision echr(const std::set<VertexId>& t, const Subdivision& stage,
                 std::size_t facet_budget = kDefaultFacetBudget);
Subdivision echr(const std::set<VertexId>& t, const Complex& c,
                 std::size_t facet_budget = kDefaultFacetBudget);

/// A stage of an iterated-with-termination subdivision process.
struct TerminatingStage {
  Subdivision stage;
  std::set<VertexId> terminated;
};

/// The facet of sub corresponding to graph g on facet sigma of the previous
/// stage: vertex of color i has view {vertices of sigma with colors In(i)}.
Simplex graph_to_simplex(const InstantGraph& g, const Simplex& sigma,
                         const Subdivision& sub);

/// Inverse: reads the views of a graph-induced facet back into in-sets.
/// Throws InvalidInput when the simplex is not such a facet.
InstantGraph simplex_to_graph(const Simplex& facet, const Subdivision& sub);

}  // namespace topoadv
