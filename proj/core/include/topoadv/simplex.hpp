#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace topoadv {

using VertexId = int;

/// A simplex is a sorted duplicate-free list of vertex ids.
/// The empty simplex (dimension -1) is a valid value.
using Simplex = std::vector<VertexId>;

inline Simplex normalized(Simplex s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline int dim(const Simplex& s) { return static_cast<int>(s.size()) - 1; }

/// Subset test; both arguments must be normalized.
inline bool is_face(const Simplex& a, const Simplex& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool is_proper_face(const Simplex& a, const Simplex& b) {
  return a.size() < b.size() && is_face(a, b);
}

inline Simplex simplex_union(const Simplex& a, const Simplex& b) {
  Simplex out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline Simplex simplex_intersection(const Simplex& a, const Simplex& b) {
  Simplex out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline Simplex simplex_difference(const Simplex& a, const Simplex& b) {
  Simplex out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool contains_vertex(const Simplex& s, VertexId v) {
  return std::binary_search(s.begin(), s.end(), v);
}

/// All nonempty subsets of s, lexicographically ordered.
std::vector<Simplex> nonempty_subsets(const Simplex& s);

/// All subsets of s of the given size.
std::vector<Simplex> subsets_of_size(const Simplex& s, std::size_t size);

}  // namespace topoadv
