#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "topoadv/simplex.hpp"

namespace topoadv {

/// Optional per-vertex payload: a process color and/or a value label.
struct VertexData {
  std::optional<int> color;
  std::optional<std::string> value;

  bool operator==(const VertexData&) const = default;
};

/// An abstract simplicial complex stored by its facets. Simplex membership
/// is a subset-of-some-facet query, so the downward closure is implicit.
/// Instances are immutable after construction.
class Complex {
 public:
  Complex() = default;

  /// Vertices are inferred from the facets; no payloads.
  explicit Complex(std::vector<Simplex> facets);

  /// Explicit vertex set with payloads. Every vertex must appear in some
  /// facet, every facet vertex must be declared.
  Complex(std::map<VertexId, VertexData> vertices, std::vector<Simplex> facets);

  bool empty() const { return facets_.empty(); }
  int dimension() const;
  std::size_t num_vertices() const { return vertex_ids_.size(); }
  std::size_t num_facets() const { return facets_.size(); }

  /// Sorted ascending.
  const std::vector<VertexId>& vertices() const { return vertex_ids_; }
  /// Sorted lexicographically; no facet contains another.
  const std::vector<Simplex>& facets() const { return facets_; }

  bool has_vertex(VertexId v) const;
  bool has_simplex(const Simplex& s) const;

  const VertexData& data(VertexId v) const;
  std::optional<int> color(VertexId v) const { return data(v).color; }
  std::optional<std::string> value(VertexId v) const { return data(v).value; }

  /// True when every vertex is colored and colors are distinct within
  /// each facet.
  bool is_chromatic() const;

  /// Colors of a simplex, sorted; requires payloads present.
  std::vector<int> colors_of(const Simplex& s) const;

  /// Vertex of s carrying the given color, if any.
  std::optional<VertexId> vertex_with_color(const Simplex& s, int c) const;

  bool operator==(const Complex&) const = default;

 private:
  void normalize_and_check();

  std::vector<VertexId> vertex_ids_;
  std::map<VertexId, VertexData> data_;
  std::vector<Simplex> facets_;
};

/// Simplices of dimension <= l; l = -1 gives the empty complex.
Complex skeleton(const Complex& c, int l);

/// Union of the simplices containing s, with their faces.
Complex star(const Simplex& s, const Complex& c);

/// Simplices of the star disjoint from s.
Complex link(const Simplex& s, const Complex& c);

/// The codimension-1 faces of s as a complex.
Complex boundary_complex(const Simplex& s, const Complex& c);

/// {a ∪ b | a facet of x, b facet of y}; join with an empty complex
/// returns the other argument.
Complex join_complexes(const Complex& x, const Complex& y);

/// Every simplex of c including the empty one, lexicographic by
/// (size, contents). Exponential in facet dimension; desk scale only.
std::vector<Simplex> all_simplices(const Complex& c);
std::vector<Simplex> all_nonempty_simplices(const Complex& c);

/// Barycentric subdivision: one vertex per nonempty simplex of c,
/// simplices are strict inclusion chains. labels[v] is the source simplex
/// of vertex v.
struct LabeledComplex {
  Complex cpx;
  std::vector<Simplex> labels;
};
LabeledComplex barycentric(const Complex& c);

/// Colored complex of all assignments of values of i to processes 0..n:
/// vertex (p, v) for every process p and vertex v of i; a set with distinct
/// colors is a simplex iff the held vertices span a simplex of i.
/// base_vertex[u] is the i-vertex held by pseudosphere vertex u.
struct PseudosphereComplex {
  Complex cpx;
  std::vector<VertexId> base_vertex;
  int n = 0;
};
PseudosphereComplex pseudosphere(const Complex& i, int n);

/// Set of distinct held values of a colored simplex of a pseudosphere,
/// as a simplex of the underlying value complex.
Simplex giv(const PseudosphereComplex& p, const Simplex& s);

/// The same complex with colors assigned in ascending order of the given
/// enumeration (defaults to ascending vertex id).
Complex unique_value_complex(const Complex& i,
                             const std::vector<VertexId>& order = {});

/// Total vertex map between complexes.
using VertexMap = std::map<VertexId, VertexId>;

Simplex map_simplex(const VertexMap& f, const Simplex& s);

/// f maps every simplex of src onto a simplex of dst (facets suffice).
bool check_simplicial(const VertexMap& f, const Complex& src, const Complex& dst);

/// A carrier assignment: simplex -> generating facets of the allowed
/// subcomplex of the target.
using CarrierFn = std::function<std::vector<Simplex>(const Simplex&)>;

/// s is allowed by the carrier value gens iff s is a face of a generator.
bool carrier_allows(const std::vector<Simplex>& gens, const Simplex& s);

/// f(s) ∈ carrier(s) for every simplex s of src (all simplices checked).
bool check_carried(const VertexMap& f, const Complex& src, const CarrierFn& carrier);

/// The full complex on vertices 0..n (one n-dimensional facet).
Complex standard_simplex(int n);

/// Same with color(i) = i.
Complex standard_chromatic_simplex(int n);

}  // namespace topoadv
