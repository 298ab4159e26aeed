#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "doctest.h"
#include "topoadv/chr.hpp"
#include "topoadv/complex.hpp"
#include "topoadv/errors.hpp"
#include "topoadv/tasks.hpp"

using namespace topoadv;

namespace {

std::vector<Simplex> sorted_gens(std::vector<Simplex> gens) {
  std::sort(gens.begin(), gens.end());
  return gens;
}

// Input edge, output triangle, and a carrier map that always offers the
// whole triangle: deliberately dimension-expanding.
ColorlessTask expanding_task() {
  ColorlessTask task;
  task.input = Complex({{0, 1}});
  task.output = Complex({{0, 1, 2}});
  task.delta = [](const Simplex& s) -> std::vector<Simplex> {
    if (s.empty()) return {Simplex{}};
    return {{0, 1, 2}};
  };
  return task;
}

// Input edge, output two lone vertices, every input allows either output.
ColorlessTask free_choice_task() {
  ColorlessTask task;
  task.input = Complex({{0, 1}});
  task.output = Complex({{0}, {1}});
  task.delta = [](const Simplex& s) -> std::vector<Simplex> {
    if (s.empty()) return {Simplex{}};
    return {{0}, {1}};
  };
  return task;
}

// Decide the smallest color in this stage vertex's view.
VertexMap min_of_view(const Subdivision& sub) {
  VertexMap decision;
  for (VertexId v : sub.cpx.vertices()) decision[v] = sub.carrier(v).front();
  return decision;
}

std::map<VertexId, Simplex> view_carriers(const Subdivision& sub) {
  std::map<VertexId, Simplex> out;
  for (VertexId v : sub.cpx.vertices()) out[v] = sub.carrier(v);
  return out;
}

}  // namespace

TEST_SUITE("tasks") {

TEST_CASE("k-set agreement tasks carry the right complexes and carrier map") {
  const ColorlessTask consensus = make_kset({"a", "b"}, 1);
  CHECK(consensus.input.facets() == std::vector<Simplex>{{0, 1}});
  CHECK(consensus.output.facets() == std::vector<Simplex>{{0}, {1}});
  CHECK(consensus.input.value(0) == "a");
  CHECK(consensus.output.value(1) == "b");
  CHECK(sorted_gens(consensus.delta({0, 1})) == std::vector<Simplex>{{0}, {1}});
  CHECK(consensus.delta({0}) == std::vector<Simplex>{{0}});
  CHECK(consensus.delta({}) == std::vector<Simplex>{{}});
  CHECK(consensus.allowed({0, 1}) == consensus.delta({0, 1}));

  const ColorlessTask two_of_three = make_kset({"x", "y", "z"}, 2);
  CHECK(two_of_three.output.facets() ==
        std::vector<Simplex>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(sorted_gens(two_of_three.delta({0, 1, 2})) ==
        std::vector<Simplex>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(two_of_three.delta({0, 2}) == std::vector<Simplex>{{0, 2}});
  CHECK(two_of_three.delta({1}) == std::vector<Simplex>{{1}});

  const ColorlessTask anything = make_kset({"x", "y", "z"}, 3);
  CHECK(anything.output.facets() == std::vector<Simplex>{{0, 1, 2}});

  CHECK_THROWS_AS(make_kset({"a", "b"}, 0), InvalidInput);
  CHECK_THROWS_AS(make_kset({"a", "b"}, 3), InvalidInput);
}

TEST_CASE("the non-expanding restriction trims oversized outputs only") {
  const ColorlessTask wild = expanding_task();
  CHECK_FALSE(is_nonexpanding(wild));

  const ColorlessTask tame = nonexpanding(wild);
  CHECK(is_nonexpanding(tame));
  CHECK(sorted_gens(tame.delta({0})) == std::vector<Simplex>{{0}, {1}, {2}});
  CHECK(sorted_gens(tame.delta({0, 1})) ==
        std::vector<Simplex>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(tame.delta({}) == std::vector<Simplex>{{}});
  CHECK(tame.input == wild.input);
  CHECK(tame.output == wild.output);

  const ColorlessTask kset = make_kset({"a", "b", "c"}, 2);
  CHECK(is_nonexpanding(kset));
  const ColorlessTask same = nonexpanding(kset);
  for (const auto& s : all_nonempty_simplices(kset.input))
    CHECK(sorted_gens(same.delta(s)) == sorted_gens(kset.delta(s)));

  ColorlessTask hollow = expanding_task();
  hollow.delta = [](const Simplex&) -> std::vector<Simplex> { return {}; };
  CHECK_THROWS_AS(nonexpanding(hollow), InvalidInput);
  hollow.delta = [](const Simplex&) -> std::vector<Simplex> { return {Simplex{}}; };
  CHECK_THROWS_AS(nonexpanding(hollow), InvalidInput);
}

TEST_CASE("vertex choices enumerate allowed pins and freeze the map") {
  const ColorlessTask consensus = make_kset({"a", "b"}, 1);
  const auto choices = enumerate_vertex_choices(consensus);
  REQUIRE(choices.size() == 1);
  CHECK(choices[0] == VertexMap{{0, 0}, {1, 1}});

  const ColorlessTask pinned = vertex_deterministic(consensus, choices[0]);
  CHECK(pinned.delta({0}) == std::vector<Simplex>{{0}});
  CHECK(pinned.delta({1}) == std::vector<Simplex>{{1}});
  CHECK(sorted_gens(pinned.delta({0, 1})) == std::vector<Simplex>{{0}, {1}});
  CHECK(pinned.delta({}) == std::vector<Simplex>{{}});

  CHECK(enumerate_vertex_choices(make_kset({"x", "y", "z"}, 2)).size() == 1);

  const ColorlessTask free = free_choice_task();
  CHECK(enumerate_vertex_choices(free).size() == 4);
  const ColorlessTask crossed =
      vertex_deterministic(free, VertexMap{{0, 1}, {1, 0}});
  CHECK(crossed.delta({0}) == std::vector<Simplex>{{1}});
  CHECK(crossed.delta({1}) == std::vector<Simplex>{{0}});
  CHECK(sorted_gens(crossed.delta({0, 1})) == std::vector<Simplex>{{0}, {1}});

  CHECK_THROWS_AS(vertex_deterministic(consensus, VertexMap{{0, 1}, {1, 1}}),
                  InvalidInput);
  CHECK_THROWS_AS(vertex_deterministic(consensus, VertexMap{{0, 0}}),
                  InvalidInput);
  CHECK_THROWS_AS(vertex_deterministic(expanding_task(), VertexMap{{0, 0}, {1, 0}}),
                  InvalidInput);

  ColorlessTask stuck;
  stuck.input = Complex({Simplex{0}});
  stuck.output = Complex({Simplex{5}});
  stuck.delta = [](const Simplex& s) -> std::vector<Simplex> {
    if (s.empty()) return {Simplex{}};
    return {Simplex{}};
  };
  CHECK(enumerate_vertex_choices(stuck).empty());
}

TEST_CASE("carrier compatibility of simplicial maps") {
  const ColorlessTask consensus = make_kset({"a", "b"}, 1);
  CHECK(check_delta_compatible(consensus, VertexMap{{0, 0}, {1, 1}},
                               consensus.input));
  // Collapsing b-inputs onto a widens nothing for the image, but the source
  // vertex {1} may only decide b, so the collapse is not compatible.
  CHECK_FALSE(check_delta_compatible(consensus, VertexMap{{0, 0}, {1, 0}},
                                     consensus.input));

  // Sending an edge onto a value neither endpoint holds breaks the carrier.
  const ColorlessTask pick_one = make_kset({"x", "y", "z"}, 1);
  CHECK_FALSE(check_delta_compatible(pick_one, VertexMap{{0, 2}, {1, 2}, {2, 2}},
                                     pick_one.input));

  const Complex lone_vertex({Simplex{0}});
  CHECK(check_delta_compatible(pick_one, VertexMap{{0, 0}}, lone_vertex));
  CHECK_FALSE(check_delta_compatible(pick_one, VertexMap{{0, 1}}, lone_vertex));

  CHECK_THROWS_AS(check_delta_compatible(consensus, VertexMap{{0, 0}},
                                         consensus.input),
                  InvalidInput);
  CHECK_THROWS_AS(check_delta_compatible(consensus, VertexMap{{0, 7}, {1, 1}},
                                         consensus.input),
                  InvalidInput);
}

TEST_CASE("solution checking accepts decide-your-own on a lone vertex") {
  const ColorlessTask consensus = make_kset({"a", "b"}, 1);
  const Complex stage({Simplex{10}});
  const std::map<VertexId, Simplex> tags = {{10, {0}}};
  CHECK(check_solution(consensus, stage, tags, VertexMap{{10, 0}}));
  CHECK_FALSE(check_solution(consensus, stage, tags, VertexMap{{10, 1}}));
}

TEST_CASE("solution checking separates one round of two-value agreement") {
  const ColorlessTask task = make_kset({"a", "b"}, 2);
  const Subdivision sub = chr(standard_chromatic_simplex(1));
  CHECK(check_solution(task, sub.cpx, view_carriers(sub), min_of_view(sub)));
}

TEST_CASE("deciding the minimum view after one round breaks 2-agreement on three values") {
  const ColorlessTask task = make_kset({"a", "b", "c"}, 2);
  const Subdivision sub = chr(standard_chromatic_simplex(2));
  // The fully ordered facet sees three different minima.
  CHECK_FALSE(check_solution(task, sub.cpx, view_carriers(sub), min_of_view(sub)));
}

TEST_CASE("no zero-round decision map solves consensus on the square") {
  const ColorlessTask consensus = make_kset({"a", "b"}, 1);
  const PseudosphereComplex ps = pseudosphere(consensus.input, 1);
  REQUIRE(ps.cpx.vertices().size() == 4);

  std::map<VertexId, Simplex> tags;
  for (VertexId v : ps.cpx.vertices())
    tags[v] = {ps.base_vertex[static_cast<std::size_t>(v)]};

  const auto& vs = ps.cpx.vertices();
  for (std::uint32_t mask = 0; mask < 16; ++mask) {
    VertexMap decision;
    for (std::size_t i = 0; i < vs.size(); ++i)
      decision[vs[i]] = (mask >> i) & 1;
    CHECK_FALSE(check_solution(consensus, ps.cpx, tags, decision));
  }
}

TEST_CASE("solution checking rejects bad carrier tags loudly") {
  const ColorlessTask consensus = make_kset({"a", "b"}, 1);
  const Complex stage({{10, 11}});
  const VertexMap decide_a = {{10, 0}, {11, 0}};

  CHECK_THROWS_AS(
      check_solution(consensus, stage, {{10, {0}}}, decide_a),
      InvalidInput);
  CHECK_THROWS_AS(
      check_solution(consensus, stage, {{10, {0}}, {11, {5}}}, decide_a),
      InvalidInput);
  CHECK_THROWS_AS(
      check_solution(consensus, stage, {{10, {0, 5}}, {11, {0}}}, decide_a),
      InvalidInput);

  // Valid tags that do not join into one input simplex: the per-vertex and
  // simpliciality checks pass, so the edge's joint carrier is what fails.
  ColorlessTask path_task;
  path_task.input = Complex({{0, 1}, {1, 2}});
  path_task.output = Complex({{0, 2}, {1, 2}});
  path_task.delta = [](const Simplex& s) -> std::vector<Simplex> {
    if (s.empty()) return {Simplex{}};
    return {s};
  };
  CHECK_THROWS_AS(check_solution(path_task, stage, {{10, {0}}, {11, {2}}},
                                 VertexMap{{10, 0}, {11, 2}}),
                  InvalidInput);

  // A non-simplicial decision is a plain failure, not an error.
  CHECK_FALSE(check_solution(consensus, stage, {{10, {0}}, {11, {1}}},
                             VertexMap{{10, 0}, {11, 1}}));
}

}  // TEST_SUITE
