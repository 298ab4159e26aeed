#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "topoadv/complex.hpp"
#include "topoadv/errors.hpp"

using namespace topoadv;

namespace {

// Independent chain oracle: maximal strict-inclusion chains of the nonempty
// simplices, counted by depth-first extension.
long count_maximal_chains(const Complex& c) {
  const auto simplices = all_nonempty_simplices(c);
  long total = 0;
  auto extend = [&](auto&& self, const Simplex& top) -> void {
    bool maximal = true;
    for (const auto& s : simplices)
      if (is_proper_face(top, s)) {
        maximal = false;
        bool cover = true;
        for (const auto& mid : simplices)
          if (is_proper_face(top, mid) && is_proper_face(mid, s)) cover = false;
        if (cover) self(self, s);
      }
    if (maximal) ++total;
  };
  for (const auto& s : simplices) {
    bool minimal = true;
    for (const auto& other : simplices)
      if (is_proper_face(other, s)) minimal = false;
    if (minimal) extend(extend, s);
  }
  return total;
}

}  // namespace

TEST_SUITE("complex") {

TEST_CASE("construction normalizes facets and validates vertices") {
  const Complex c({{1, 0}, {0}, {1, 2}});
  CHECK(c.facets() == std::vector<Simplex>{{0, 1}, {1, 2}});
  CHECK(c.vertices() == std::vector<VertexId>{0, 1, 2});
  CHECK(c.dimension() == 1);
  CHECK(c.has_simplex({0}));
  CHECK(c.has_simplex({}));
  CHECK_FALSE(c.has_simplex({0, 2}));

  const std::map<VertexId, VertexData> only_zero{{0, {}}};
  CHECK_THROWS_AS(Complex(only_zero, {{0, 1}}), InvalidInput);
  const std::map<VertexId, VertexData> with_orphan{{0, {}}, {5, {}}};
  CHECK_THROWS_AS(Complex(with_orphan, {{0}}), InvalidInput);
}

TEST_CASE("downward closure on every returned simplex") {
  const Complex c = standard_simplex(2);
  for (const auto& s : all_nonempty_simplices(c))
    for (const auto& sub : nonempty_subsets(s)) CHECK(c.has_simplex(sub));
  CHECK(all_nonempty_simplices(c).size() == 7);
  CHECK(all_simplices(c).size() == 8);
}

TEST_CASE("skeleton") {
  const Complex s2 = standard_simplex(2);
  const Complex hollow = skeleton(s2, 1);
  CHECK(hollow.num_vertices() == 3);
  CHECK(hollow.num_facets() == 3);
  CHECK(hollow.dimension() == 1);
  CHECK(skeleton(s2, 2) == s2);
  CHECK(skeleton(s2, -1).empty());

  const Complex two_triangles({{1, 2, 3}, {2, 3, 4}});
  const Complex verts = skeleton(two_triangles, 0);
  CHECK(verts.num_facets() == 4);
  CHECK(verts.dimension() == 0);
  CHECK(verts.vertices() == std::vector<VertexId>{1, 2, 3, 4});
}

TEST_CASE("star, link, boundary") {
  const Complex tri = standard_simplex(2);
  const Complex lk = link({1}, tri);
  CHECK(lk.facets() == std::vector<Simplex>{{0, 2}});

  CHECK(boundary_complex({0, 1, 2}, tri).facets() ==
        std::vector<Simplex>{{0, 1}, {0, 2}, {1, 2}});

  // Bary(S^1) has the center vertex adjacent to both half-edges.
  const LabeledComplex bary = barycentric(standard_simplex(1));
  VertexId center = -1;
  for (VertexId v = 0; v < static_cast<VertexId>(bary.labels.size()); ++v)
    if (bary.labels[v].size() == 2) center = v;
  REQUIRE(center >= 0);
  CHECK(star({center}, bary.cpx).num_facets() == 2);
  CHECK(link({center}, bary.cpx).num_vertices() == 2);

  CHECK_THROWS_AS(link({7}, tri), InvalidInput);
}

TEST_CASE("join") {
  const Complex a({Simplex{0}});
  const Complex b({{1}, {2}});
  CHECK(join_complexes(a, b).facets() == std::vector<Simplex>{{0, 1}, {0, 2}});
  CHECK(join_complexes(Complex(), b) == b);
  CHECK(join_complexes(a, Complex()) == a);
}

TEST_CASE("barycentric subdivision counts") {
  const LabeledComplex b1 = barycentric(standard_simplex(1));
  CHECK(b1.cpx.num_vertices() == 3);
  CHECK(b1.cpx.num_facets() == 2);

  CHECK(barycentric(standard_simplex(2)).cpx.num_facets() == 6);
  CHECK(barycentric(standard_simplex(3)).cpx.num_facets() == 24);

  for (int n = 1; n <= 3; ++n)
    CHECK(barycentric(standard_simplex(n)).cpx.num_facets() ==
          static_cast<std::size_t>(count_maximal_chains(standard_simplex(n))));

  // Twice-iterated subdivision against the independent chain oracle.
  for (int n = 1; n <= 2; ++n) {
    const Complex once = barycentric(standard_simplex(n)).cpx;
    CHECK(barycentric(once).cpx.num_facets() ==
          static_cast<std::size_t>(count_maximal_chains(once)));
  }
}

TEST_CASE("barycentric labels are the source simplices") {
  const Complex c = standard_simplex(2);
  const LabeledComplex b = barycentric(c);
  REQUIRE(b.labels.size() == 7);
  std::set<Simplex> labels(b.labels.begin(), b.labels.end());
  const std::vector<Simplex> expected = all_nonempty_simplices(c);
  CHECK(labels == std::set<Simplex>(expected.begin(), expected.end()));
  for (const auto& facet : b.cpx.facets()) {
    REQUIRE(facet.size() == 3);
    // Every facet is a maximal chain.
    std::vector<Simplex> chain;
    for (VertexId v : facet) chain.push_back(b.labels[v]);
    std::sort(chain.begin(), chain.end(),
              [](const Simplex& x, const Simplex& y) { return x.size() < y.size(); });
    CHECK(is_proper_face(chain[0], chain[1]));
    CHECK(is_proper_face(chain[1], chain[2]));
  }
}

TEST_CASE("pseudosphere") {
  // Square: two processes over a connected binary edge.
  const PseudosphereComplex square = pseudosphere(standard_simplex(1), 1);
  CHECK(square.cpx.num_vertices() == 4);
  CHECK(square.cpx.num_facets() == 4);
  CHECK(square.cpx.dimension() == 1);

  const PseudosphereComplex solo = pseudosphere(Complex({Simplex{7}}), 2);
  CHECK(solo.cpx.num_vertices() == 3);
  CHECK(solo.cpx.num_facets() == 1);
  CHECK(solo.cpx.dimension() == 2);

  // Disconnected values admit only monochromatic pairs.
  const PseudosphereComplex mono = pseudosphere(Complex({{0}, {1}}), 1);
  CHECK(mono.cpx.num_vertices() == 4);
  CHECK(mono.cpx.num_facets() == 2);
  for (const auto& f : mono.cpx.facets()) {
    REQUIRE(f.size() == 2);
    CHECK(mono.base_vertex[f[0]] == mono.base_vertex[f[1]]);
  }

  // Facet census against direct construction for small instances.
  for (int base_facets = 1; base_facets <= 3; ++base_facets)
    for (int n = 0; n <= 2; ++n) {
      Simplex all;
      for (int v = 0; v < base_facets; ++v) all.push_back(v);
      const Complex i(std::vector<Simplex>{all});
      const PseudosphereComplex p = pseudosphere(i, n);
      std::size_t expect = 1;
      for (int q = 0; q <= n; ++q) expect *= base_facets;
      CHECK(p.cpx.num_facets() == expect);
    }
}

TEST_CASE("giv and unique values") {
  const PseudosphereComplex p = pseudosphere(standard_simplex(1), 2);
  auto vertex_holding = [&](int proc, VertexId value) {
    for (VertexId u : p.cpx.vertices())
      if (p.cpx.color(u) == proc && p.base_vertex[u] == value) return u;
    REQUIRE(false);
    return VertexId{-1};
  };
  const Simplex mixed = normalized(
      {vertex_holding(0, 1), vertex_holding(1, 1), vertex_holding(2, 0)});
  CHECK(giv(p, mixed) == Simplex{0, 1});
  CHECK(giv(p, {vertex_holding(0, 0)}) == Simplex{0});
  const Simplex mono = normalized(
      {vertex_holding(0, 1), vertex_holding(1, 1), vertex_holding(2, 1)});
  CHECK(giv(p, mono) == Simplex{1});

  const Complex uniq = unique_value_complex(Complex({{4, 9}}));
  CHECK(uniq.color(4) == 0);
  CHECK(uniq.color(9) == 1);
  CHECK(uniq.facets() == std::vector<Simplex>{{4, 9}});
  CHECK(uniq.is_chromatic());
}

TEST_CASE("simplicial and carried checks") {
  const Complex s2 = standard_chromatic_simplex(2);
  VertexMap ident;
  for (VertexId v : s2.vertices()) ident[v] = v;
  CHECK(check_simplicial(ident, s2, s2));
  const CarrierFn trivial = [&](const Simplex&) { return s2.facets(); };
  CHECK(check_carried(ident, s2, trivial));

  // Collapsing an edge endpoint is simplicial.
  const Complex edge = standard_simplex(1);
  const VertexMap collapse{{0, 0}, {1, 0}};
  CHECK(check_simplicial(collapse, edge, edge));

  // Binary consensus: two isolated output vertices reject the mixed edge.
  const Complex output({{0}, {1}});
  const VertexMap crossing{{0, 0}, {1, 1}};
  CHECK_FALSE(check_simplicial(crossing, edge, output));

  CHECK_THROWS_AS(check_simplicial(VertexMap{{0, 0}}, edge, edge), InvalidInput);
  CHECK_THROWS_AS(check_simplicial(VertexMap{{0, 9}, {1, 9}}, edge, edge),
                  InvalidInput);

  // The trivial carrier makes check_carried equal check_simplicial.
  const CarrierFn everything = [&](const Simplex&) { return output.facets(); };
  CHECK(check_carried(collapse, edge, everything) ==
        check_simplicial(collapse, edge, output));
}

TEST_CASE("carrier_allows") {
  CHECK(carrier_allows({{0, 1}, {2}}, {0}));
  CHECK(carrier_allows({{0, 1}, {2}}, {0, 1}));
  CHECK(carrier_allows({{0, 1}, {2}}, {}));
  CHECK_FALSE(carrier_allows({{0, 1}, {2}}, {0, 2}));
  CHECK_FALSE(carrier_allows({}, {0}));
  CHECK_FALSE(carrier_allows({}, {}));  // no generators admit nothing
}

}  // TEST_SUITE
