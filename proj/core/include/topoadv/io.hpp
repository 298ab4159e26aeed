#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "topoadv/adversary.hpp"
#include "topoadv/chr.hpp"
#include "topoadv/complex.hpp"
#include "topoadv/condition.hpp"
#include "topoadv/geometry.hpp"
#include "topoadv/solvability.hpp"
#include "topoadv/tasks.hpp"

namespace topoadv {

using Json = nlohmann::ordered_json;

// Complexes: {"vertices":[{"id":int,"color"?:int,"value"?:string}],
// "facets":[[int,...],...]} with vertices by id and facets lexicographic.
Json complex_to_json(const Complex& c);
Complex complex_from_json(const Json& j);

// Instant graphs: {"participants":[...],"in":{"p":[...]}}.
Json graph_to_json(const InstantGraph& g);
InstantGraph graph_from_json(const Json& j);

// Words: {"head":[graph,...],"cycle":[graph,...]}.
Json word_to_json(const UPWord& w);
UPWord word_from_json(const Json& j);

// Points: {"coords":{"id":"num/den",...}}.
Json point_to_json(const BaryPoint& p);
BaryPoint point_from_json(const Json& j);

// Geometric stages: complex plus per-vertex exact coordinates.
Json subdivision_to_json(const Subdivision& s);

// Conditions: {"ambient":{"n":int,"t":int,"values":[...]},
// "members":[[{"proc":int,"value":string},...],...]}.
Json condition_to_json(const Condition& c);
Condition condition_from_json(const Json& j);

// Tasks: either {"kind":"kset","values":[...],"k":int} or the explicit
// {"input":complex,"output":complex,"delta":[{"simplex":[...],
// "allowed":[[...],...]},...]} form.
Json task_to_json_kset(const std::vector<std::string>& values, int k);
ColorlessTask task_from_json(const Json& j);

// Condition complexes: complex JSON (labels in vertex values) plus tags.
Json ucomplex_to_json(const UComplex& u);

// Decide outcomes: {"result":"solvable"|"unsolvable"|"budget",
// "witness":{"vertex":output,...}?}.
Json decide_to_json(const DecideResult& r);

/// Wavefront OBJ dump of a geometric stage for external viewers; simplex
/// dimension is capped at 2 (triangles), edges are emitted as lines.
std::string subdivision_to_obj(const Subdivision& s);

/// Serialize with a trailing newline, 2-space indent; byte-deterministic.
std::string to_pretty_string(const Json& j);

Json parse_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace topoadv
