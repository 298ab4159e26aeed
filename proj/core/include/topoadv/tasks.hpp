#pragma once

#include <map>
#include <string>
#include <vector>

#include "topoadv/chr.hpp"
#include "topoadv/complex.hpp"

namespace topoadv {

/// A colorless task: input and output complexes plus a monotone carrier map
/// given by generators (delta(s) lists the facets of the allowed output
/// subcomplex; the downward closure is implicit). delta({}) = {{}}.
struct ColorlessTask {
  Complex input;
  Complex output;
  CarrierFn delta;

  std::vector<Simplex> allowed(const Simplex& s) const { return delta(s); }
};

/// k-set agreement on an ordered value set: input is the full complex on the
/// values, outputs are the nonempty value sets of size at most k, and a
/// simplex may decide any nonempty subset of its values of size at most k.
/// Vertex ids are value indices; value payloads carry the labels.
ColorlessTask make_kset(const std::vector<std::string>& values, int k);

/// Restricts delta to outputs of dimension at most the input dimension
/// (solvability is unchanged; any simplicial solution already obeys this).
/// Throws InvalidInput when some delta(s) is empty.
ColorlessTask nonexpanding(const ColorlessTask& task);

bool is_nonexpanding(const ColorlessTask& task);

/// Pins each input vertex to one chosen allowed output vertex, leaving
/// higher simplices unchanged. task must be non-expanding and the choice
/// total and pointwise allowed.
ColorlessTask vertex_deterministic(const ColorlessTask& task, const VertexMap& choice);

/// All total allowed vertex choices, lexicographic. Exponential; desk scale.
std::vector<VertexMap> enumerate_vertex_choices(const ColorlessTask& task);

/// delta(f(s)) ⊆ delta(s) for every simplex s of the domain subcomplex.
bool check_delta_compatible(const ColorlessTask& task, const VertexMap& f,
                            const Complex& domain);

/// Verifies a decision map on a subdivision stage: the map must be
/// simplicial into the output complex and every simplex must land inside
/// delta of its carrier (the value set of the base simplex carrying it).
/// carrier_of maps each stage vertex to a simplex of task.input.
bool check_solution(const ColorlessTask& task, const Complex& k,
                    const std::map<VertexId, Simplex>& carrier_of,
                    const VertexMap& decision);

}  // namespace topoadv
