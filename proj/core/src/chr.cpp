#include "topoadv/chr.hpp"

#include <algorithm>

#include "topoadv/errors.hpp"

namespace topoadv {

GeoSimplex Subdivision::geo_facet(const Simplex& facet) const {
  GeoSimplex out;
  for (VertexId v : facet) {
    auto c = cpx.color(v);
    if (!c) throw InvalidInput("uncolored vertex in a geometric facet");
    out[*c] = coords.at(v);
  }
  if (out.size() != facet.size()) throw InvalidInput("repeated color in a facet");
  return out;
}

Subdivision identity_stage(const Complex& c) {
  Subdivision s;
  s.cpx = c;
  for (VertexId v : c.vertices()) s.coords.emplace(v, BaryPoint::unit(v));
  return s;
}

namespace {

std::map<VertexId, int> color_map(const Complex& c) {
  std::map<VertexId, int> m;
  for (VertexId v : c.vertices()) {
    auto col = c.color(v);
    if (!col) throw InvalidInput("subdivision requires a chromatic complex");
    m.emplace(v, *col);
  }
  return m;
}

/// Shared facet machinery for chr and echr: subdivides each facet's live
/// face by all instant graphs, joining the frozen face back on.
Subdivision subdivide(const std::set<VertexId>& frozen, const Subdivision& stage,
                      std::size_t facet_budget) {
  const Complex& c = stage.cpx;
  if (!c.is_chromatic()) throw InvalidInput("subdivision requires a chromatic complex");
  const auto colors = color_map(c);

  Subdivision out;
  out.view_colors = colors;
  std::map<ChrVertex, VertexId> ids;
  std::map<VertexId, VertexData> vertex_data;
  std::vector<Simplex> facets;
  VertexId next_id = 0;

  auto keep_vertex = [&](VertexId v) {
    if (!vertex_data.count(v)) {
      vertex_data.emplace(v, c.data(v));
      out.coords.emplace(v, stage.coords.at(v));
    }
    return v;
  };

  // Frozen vertices keep their ids; fresh ids start above all of them.
  for (VertexId v : frozen) next_id = std::max(next_id, v + 1);

  auto new_vertex = [&](int color, const Simplex& view) {
    ChrVertex cv{color, view};
    auto it = ids.find(cv);
    if (it != ids.end()) return it->second;
    const VertexId id = next_id++;
    ids.emplace(std::move(cv), id);
    out.provenance.emplace(id, ChrVertex{color, view});
    vertex_data.emplace(id, VertexData{color, std::nullopt});
    std::vector<BaryPoint> pts;
    pts.reserve(view.size());
    std::size_t self = 0;
    for (std::size_t k = 0; k < view.size(); ++k) {
      pts.push_back(stage.coords.at(view[k]));
      if (colors.at(view[k]) == color) self = k;
    }
    out.coords.emplace(id, zeta(pts, self));
    return id;
  };

  for (const auto& f : c.facets()) {
    Simplex live, dead;
    for (VertexId v : f) (frozen.count(v) ? dead : live).push_back(v);
    if (live.empty()) {
      Simplex kept;
      for (VertexId v : dead) kept.push_back(keep_vertex(v));
      facets.push_back(normalized(kept));
      continue;
    }
    std::vector<int> live_colors;
    std::map<int, VertexId> by_color;
    for (VertexId v : live) {
      live_colors.push_back(colors.at(v));
      by_color.emplace(colors.at(v), v);
    }
    std::sort(live_colors.begin(), live_colors.end());
    for (const auto& g : enumerate_ims(live_colors)) {
      Simplex nf;
      for (int i : live_colors) {
        Simplex view;
        for (int j : g.in(i)) view.push_back(by_color.at(j));
        nf.push_back(new_vertex(i, normalized(view)));
      }
      for (VertexId v : dead) nf.push_back(keep_vertex(v));
      facets.push_back(normalized(nf));
      if (facets.size() > facet_budget)
        throw BudgetError("facet budget exceeded during subdivision");
    }
  }

  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  out.cpx = Complex(std::move(vertex_data), std::move(facets));
  return out;
}

}  // namespace

Subdivision chr(const Subdivision& stage, std::size_t facet_budget) {
  return subdivide({}, stage, facet_budget);
}

Subdivision chr(const Complex& c, std::size_t facet_budget) {
  return chr(identity_stage(c), facet_budget);
}

Subdivision iterate_chr(const Complex& c, int rounds, std::size_t facet_budget) {
  if (rounds < 0) throw InvalidInput("negative round count");
  Subdivision s = identity_stage(c);
  for (int r = 0; r < rounds; ++r) s = chr(s, facet_budget);
  return s;
}

Subdivision echr(const std::set<VertexId>& t, const Subdivision& stage,
                 std::size_t facet_budget) {
  for (VertexId v : t)
    if (!stage.cpx.has_vertex(v)) throw InvalidInput("terminated vertex not in complex");
  return subdivide(t, stage, facet_budget);
}

Subdivision echr(const std::set<VertexId>& t, const Complex& c,
                 std::size_t facet_budget) {
  return echr(t, identity_stage(c), facet_budget);
}

Simplex graph_to_simplex(const InstantGraph& g, const Simplex& sigma,
                         const Subdivision& sub) {
  validate(g);
  std::map<int, VertexId> by_color;
  for (VertexId v : sigma) {
    auto it = sub.view_colors.find(v);
    if (it == sub.view_colors.end())
      throw InvalidInput("simplex vertex unknown to the previous stage");
    by_color.emplace(it->second, v);
  }
  std::vector<int> colors;
  for (const auto& [c, v] : by_color) {
    (void)v;
    colors.push_back(c);
  }
  if (by_color.size() != sigma.size() || colors != g.participants)
    throw InvalidInput("graph participants must match the simplex colors");

  std::map<ChrVertex, VertexId> reverse;
  for (const auto& [id, cv] : sub.provenance) reverse.emplace(cv, id);
  Simplex out;
  for (int i : g.participants) {
    Simplex view;
    for (int j : g.in(i)) view.push_back(by_color.at(j));
    auto it = reverse.find(ChrVertex{i, normalized(view)});
    if (it == reverse.end())
      throw InvalidInput("graph does not correspond to a subdivision facet");
    out.push_back(it->second);
  }
  return normalized(out);
}

InstantGraph simplex_to_graph(const Simplex& facet, const Subdivision& sub) {
  InstantGraph g;
  Simplex sigma;
  for (VertexId v : facet) {
    auto it = sub.provenance.find(v);
    if (it == sub.provenance.end())
      throw InvalidInput("vertex carries no subdivision provenance");
    std::set<int> in;
    for (VertexId u : it->second.view) {
      auto cu = sub.view_colors.find(u);
      if (cu == sub.view_colors.end())
        throw InvalidInput("view vertex unknown to the previous stage");
      in.insert(cu->second);
      sigma.push_back(u);
    }
    if (in.size() != it->second.view.size())
      throw InvalidInput("view colors are not distinct");
    if (!g.in_sets.emplace(it->second.color, std::move(in)).second)
      throw InvalidInput("repeated color in the simplex");
    g.participants.push_back(it->second.color);
  }
  std::sort(g.participants.begin(), g.participants.end());
  sigma = normalized(sigma);
  if (sigma.size() != facet.size())
    throw InvalidInput("views do not cover a matching carrier facet");
  validate(g);
  if (graph_to_simplex(g, sigma, sub) != normalized(facet))
    throw InvalidInput("simplex is not graph-induced");
  return g;
}

}  // namespace topoadv
