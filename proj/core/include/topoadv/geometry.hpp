#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "topoadv/complex.hpp"
#include "topoadv/instant_graph.hpp"
#include "topoadv/rational.hpp"

namespace topoadv {

/// Exact barycentric point over base-complex vertices: weight per vertex,
/// weights nonnegative, summing to one. Zero weights are not stored, so the
/// key set is the carrier simplex.
class BaryPoint {
 public:
  BaryPoint() = default;
  explicit BaryPoint(std::map<VertexId, Rat> w);

  static BaryPoint unit(VertexId v);

  const std::map<VertexId, Rat>& weights() const { return w_; }
  Rat weight(VertexId v) const;

  /// Support of the weights, sorted: the minimal simplex containing the point.
  Simplex carrier() const;

  bool operator==(const BaryPoint&) const = default;
  auto operator<=>(const BaryPoint&) const = default;

 private:
  std::map<VertexId, Rat> w_;
};

BaryPoint affine_combination(const std::vector<std::pair<Rat, BaryPoint>>& terms);

/// L1 distance between weight vectors.
Rat l1_distance(const BaryPoint& a, const BaryPoint& b);

/// One position per participating process.
using GeoSimplex = std::map<int, BaryPoint>;

/// zeta over the point list: the i-th point pulled toward the others,
/// weight 1/(2d+1) on itself and 2/(2d+1) on each other point, d = |v|-1.
BaryPoint zeta(const std::vector<BaryPoint>& v, std::size_t i);

/// One round of per-process averaging: process i with view in_g(i) of size
/// d+1 moves to 1/(2d+1) of itself plus 2/(2d+1) of each seen position.
GeoSimplex chromatic_average_step(const GeoSimplex& positions, const InstantGraph& g);

/// Left fold of the averaging step; an empty prefix returns the base.
GeoSimplex geo_prefix(const std::vector<InstantGraph>& prefix, const GeoSimplex& base);

GeoSimplex unit_geo_simplex(const std::vector<int>& participants);

Rat geo_diameter(const GeoSimplex& s);

BaryPoint isobarycenter(const std::vector<BaryPoint>& pts);
BaryPoint iso_of_simplex(const Simplex& s);

/// Equal-weight center of a geometric simplex.
BaryPoint iso(const GeoSimplex& s);

struct UPWord;  // adversary.hpp

/// Shrinks the simplex by repeated cycle application until its diameter is
/// below eps; returns the isobarycenter and the final diameter as a radius
/// bound. Throws InvalidInput if a full cycle pass fails to contract.
struct GeoLimit {
  BaryPoint center;
  Rat radius;
  GeoSimplex final_simplex;
  int rounds = 0;
};
GeoLimit geo_limit(const UPWord& w, const Rat& eps);

/// Volume of the simplex spanned by pts relative to the base simplex,
/// as the absolute determinant of the barycentric coordinate matrix.
/// pts.size() must equal base.size().
Rat volume_ratio(const std::vector<BaryPoint>& pts, const Simplex& base);

/// Barycentric coordinates of p in the hull of pts if p lies inside it.
std::optional<std::vector<Rat>> coords_in_hull(const BaryPoint& p,
                                               const std::vector<BaryPoint>& pts);

bool in_hull(const BaryPoint& p, const std::vector<BaryPoint>& pts);

/// Membership in the t-resilient round-0 geometrization: p is in |i| minus
/// the (n-t-1)-skeleton, i.e. its carrier has dimension at least n-t.
/// Throws InvalidInput when p is not in |i|. n is the facet dimension of i.
bool restricted_membership(const BaryPoint& p, const Complex& i, int t);

/// Depth-bounded test for the fractal t-resilient geometrization: p must
/// avoid the geometric (n-t-1)-skeleton of every iterated subdivision stage
/// up to the given depth. False answers are sound; true is depth-bounded.
bool fractal_membership(const BaryPoint& p, const Complex& i, int t, int depth,
                        std::size_t facet_budget = 1000000);

/// The inclusion chain of base simplices determined by p's barycentric
/// expression: prefixes of the support ordered by strictly descending
/// weight, tied weights merged. p is a convex combination of the chain
/// members' isobarycenters with positive coefficients.
std::vector<Simplex> carrier_chain(const BaryPoint& p);

/// Radial projection away from iso(sigma) onto the link of iso(sigma) in the
/// barycentric subdivision: drops sigma from p's chain expression and
/// renormalizes. Identity when sigma is not in the chain but compatible with
/// it (p already on the link side). Throws InvalidInput when p = iso(sigma)
/// or p lies outside the closed star.
BaryPoint radial_retract(const BaryPoint& p, const Simplex& sigma);

/// Composed radial retractions along a strictly increasing chain.
BaryPoint chain_retract(const BaryPoint& p, const std::vector<Simplex>& chain);

}  // namespace topoadv
