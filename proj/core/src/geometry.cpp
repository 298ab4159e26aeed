#include "topoadv/geometry.hpp"

#include <algorithm>

#include "topoadv/adversary.hpp"
#include "topoadv/chr.hpp"
#include "topoadv/errors.hpp"

namespace topoadv {

BaryPoint::BaryPoint(std::map<VertexId, Rat> w) : w_(std::move(w)) {
  Rat sum = 0;
  for (auto it = w_.begin(); it != w_.end();) {
    if (it->second < 0) throw InvalidInput("negative barycentric weight");
    sum += it->second;
    it = it->second == 0 ? w_.erase(it) : std::next(it);
  }
  if (sum != 1) throw InvalidInput("barycentric weights must sum to 1");
}

BaryPoint BaryPoint::unit(VertexId v) { return BaryPoint({{v, Rat(1)}}); }

Rat BaryPoint::weight(VertexId v) const {
  auto it = w_.find(v);
  return it == w_.end() ? Rat(0) : it->second;
}

Simplex BaryPoint::carrier() const {
  Simplex s;
  s.reserve(w_.size());
  for (const auto& [v, w] : w_) {
    (void)w;
    s.push_back(v);
  }
  return s;
}

BaryPoint affine_combination(const std::vector<std::pair<Rat, BaryPoint>>& terms) {
  std::map<VertexId, Rat> w;
  for (const auto& [coef, pt] : terms)
    for (const auto& [v, wv] : pt.weights()) w[v] += coef * wv;
  return BaryPoint(std::move(w));
}

Rat l1_distance(const BaryPoint& a, const BaryPoint& b) {
  Rat d = 0;
  for (const auto& [v, w] : a.weights()) d += rat_abs(w - b.weight(v));
  for (const auto& [v, w] : b.weights())
    if (a.weight(v) == 0) d += w;
  return d;
}

BaryPoint zeta(const std::vector<BaryPoint>& v, std::size_t i) {
  if (v.empty()) throw InvalidInput("zeta of an empty point list");
  if (i >= v.size()) throw InvalidInput("zeta index out of range");
  const Rat den(2 * static_cast<long>(v.size()) - 1);
  std::vector<std::pair<Rat, BaryPoint>> terms;
  terms.reserve(v.size());
  for (std::size_t j = 0; j < v.size(); ++j)
    terms.emplace_back(Rat(j == i ? 1 : 2) / den, v[j]);
  return affine_combination(terms);
}

GeoSimplex chromatic_average_step(const GeoSimplex& positions, const InstantGraph& g) {
  validate(g);
  GeoSimplex out;
  for (int p : g.participants) {
    const auto& in = g.in(p);
    if (!positions.count(p)) throw InvalidInput("missing position for a participant");
    const Rat den(2 * static_cast<long>(in.size()) - 1);
    std::vector<std::pair<Rat, BaryPoint>> terms;
    for (int q : in) {
      auto it = positions.find(q);
      if (it == positions.end()) throw InvalidInput("missing position for a participant");
      terms.emplace_back(Rat(q == p ? 1 : 2) / den, it->second);
    }
    out[p] = affine_combination(terms);
  }
  return out;
}

GeoSimplex geo_prefix(const std::vector<InstantGraph>& prefix, const GeoSimplex& base) {
  GeoSimplex cur = base;
  for (const auto& g : prefix) cur = chromatic_average_step(cur, g);
  return cur;
}

GeoSimplex unit_geo_simplex(const std::vector<int>& participants) {
  GeoSimplex out;
  for (int p : participants) out[p] = BaryPoint::unit(p);
  return out;
}

Rat geo_diameter(const GeoSimplex& s) {
  Rat d = 0;
  for (auto a = s.begin(); a != s.end(); ++a)
    for (auto b = std::next(a); b != s.end(); ++b)
      d = std::max(d, l1_distance(a->second, b->second));
  return d;
}

BaryPoint isobarycenter(const std::vector<BaryPoint>& pts) {
  if (pts.empty()) throw InvalidInput("isobarycenter of nothing");
  const Rat coef = Rat(1) / Rat(static_cast<long>(pts.size()));
  std::vector<std::pair<Rat, BaryPoint>> terms;
  terms.reserve(pts.size());
  for (const auto& p : pts) terms.emplace_back(coef, p);
  return affine_combination(terms);
}

BaryPoint iso_of_simplex(const Simplex& s) {
  std::vector<BaryPoint> pts;
  pts.reserve(s.size());
  for (VertexId v : s) pts.push_back(BaryPoint::unit(v));
  return isobarycenter(pts);
}

BaryPoint iso(const GeoSimplex& s) {
  std::vector<BaryPoint> pts;
  pts.reserve(s.size());
  for (const auto& [p, pt] : s) {
    (void)p;
    pts.push_back(pt);
  }
  return isobarycenter(pts);
}

GeoLimit geo_limit(const UPWord& w, const Rat& eps) {
  if (eps <= 0) throw InvalidInput("eps must be positive");
  validate(w);
  GeoSimplex cur = geo_prefix(w.head, unit_geo_simplex(w.participants()));
  int rounds = static_cast<int>(w.head.size());
  Rat diameter = geo_diameter(cur);
  while (diameter >= eps) {
    cur = geo_prefix(w.cycle, cur);
    rounds += static_cast<int>(w.cycle.size());
    Rat next = geo_diameter(cur);
    if (next != 0 && next >= diameter)
      throw InvalidInput("cycle fails to contract the simplex");
    diameter = next;
  }
  GeoLimit out;
  out.center = iso(cur);
  out.radius = diameter;
  out.final_simplex = std::move(cur);
  out.rounds = rounds;
  return out;
}

namespace {

/// Gaussian elimination, exact. Returns the solution of a (rows x cols)
/// system given as an augmented matrix, or nullopt when inconsistent;
/// free variables are set to zero.
std::optional<std::vector<Rat>> solve_linear(std::vector<std::vector<Rat>> a,
                                             std::size_t cols) {
  const std::size_t rows = a.size();
  std::vector<std::size_t> pivot_col_of_row;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t piv = row;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[row]);
    const Rat lead = a[row][col];
    for (auto& x : a[row]) x /= lead;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const Rat f = a[r][col];
      for (std::size_t cidx = 0; cidx <= cols; ++cidx) a[r][cidx] -= f * a[row][cidx];
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r)
    if (a[r][cols] != 0) return std::nullopt;
  std::vector<Rat> x(cols, Rat(0));
  for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
    x[pivot_col_of_row[r]] = a[r][cols];
  return x;
}

Rat determinant(std::vector<std::vector<Rat>> m) {
  const std::size_t n = m.size();
  Rat det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return Rat(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const Rat lead = m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Rat f = m[r][col] / lead;
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

}  // namespace

Rat volume_ratio(const std::vector<BaryPoint>& pts, const Simplex& base) {
  if (pts.size() != base.size())
    throw InvalidInput("volume ratio needs as many points as base vertices");
  std::vector<std::vector<Rat>> m(pts.size(), std::vector<Rat>(base.size()));
  for (std::size_t r = 0; r < pts.size(); ++r)
    for (std::size_t c = 0; c < base.size(); ++c) m[r][c] = pts[r].weight(base[c]);
  return rat_abs(determinant(std::move(m)));
}

std::optional<std::vector<Rat>> coords_in_hull(const BaryPoint& p,
                                               const std::vector<BaryPoint>& pts) {
  if (pts.empty()) return std::nullopt;
  // Unknowns: one coefficient per point; equations: one per base vertex in
  // play plus the sum-to-one row.
  std::set<VertexId> support;
  for (const auto& q : pts)
    for (const auto& [v, w] : q.weights()) {
      (void)w;
      support.insert(v);
    }
  for (const auto& [v, w] : p.weights()) {
    (void)w;
    if (!support.count(v)) return std::nullopt;
  }
  std::vector<std::vector<Rat>> a;
  for (VertexId v : support) {
    std::vector<Rat> row;
    row.reserve(pts.size() + 1);
    for (const auto& q : pts) row.push_back(q.weight(v));
    row.push_back(p.weight(v));
    a.push_back(std::move(row));
  }
  {
    std::vector<Rat> row(pts.size(), Rat(1));
    row.push_back(Rat(1));
    a.push_back(std::move(row));
  }
  auto sol = solve_linear(std::move(a), pts.size());
  if (!sol) return std::nullopt;
  for (const auto& c : *sol)
    if (c < 0) return std::nullopt;
  // Verify (guards the free-variable-zero convention).
  std::map<VertexId, Rat> acc;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (const auto& [v, w] : pts[i].weights()) acc[v] += (*sol)[i] * w;
  for (auto& [v, w] : acc)
    if (w != p.weight(v)) return std::nullopt;
  return sol;
}

bool in_hull(const BaryPoint& p, const std::vector<BaryPoint>& pts) {
  return coords_in_hull(p, pts).has_value();
}

bool restricted_membership(const BaryPoint& p, const Complex& i, int t) {
  const Simplex carrier = p.carrier();
  if (!i.has_simplex(carrier)) throw InvalidInput("point outside the complex");
  return dim(carrier) >= i.dimension() - t;
}

bool fractal_membership(const BaryPoint& p, const Complex& i, int t, int depth,
                        std::size_t facet_budget) {
  if (depth < 0) throw InvalidInput("negative depth");
  if (!i.has_simplex(p.carrier())) throw InvalidInput("point outside the complex");
  const int skel_dim = i.dimension() - t - 1;
  if (skel_dim < 0) return true;
  Subdivision stage = identity_stage(i);
  for (int level = 0;; ++level) {
    for (const auto& f : stage.cpx.facets()) {
      for (const auto& s : nonempty_subsets(f)) {
        if (dim(s) > skel_dim) continue;
        std::vector<BaryPoint> pts;
        pts.reserve(s.size());
        for (VertexId v : s) pts.push_back(stage.coords.at(v));
        if (in_hull(p, pts)) return false;
      }
    }
    if (level == depth) return true;
    stage = chr(stage, facet_budget);
  }
}

std::vector<Simplex> carrier_chain(const BaryPoint& p) {
  std::vector<std::pair<Rat, VertexId>> by_weight;
  for (const auto& [v, w] : p.weights()) by_weight.emplace_back(w, v);
  std::sort(by_weight.begin(), by_weight.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<Simplex> chain;
  Simplex prefix;
  for (std::size_t i = 0; i < by_weight.size(); ++i) {
    prefix.push_back(by_weight[i].second);
    const bool tie = i + 1 < by_weight.size() &&
                     by_weight[i + 1].first == by_weight[i].first;
    if (!tie) chain.push_back(normalized(prefix));
  }
  return chain;
}

BaryPoint radial_retract(const BaryPoint& p, const Simplex& sigma) {
  const auto chain = carrier_chain(p);
  const auto it = std::find(chain.begin(), chain.end(), sigma);
  if (it == chain.end()) {
    // Identity on the closed star boundary, error outside the star.
    for (const auto& member : chain) {
      const bool comparable = is_face(member, sigma) || is_face(sigma, member);
      if (!comparable) throw InvalidInput("point outside the star of the simplex");
    }
    return p;
  }
  if (chain.size() == 1) throw InvalidInput("cannot retract the center itself");
  return chain_retract(p, {sigma});
}

BaryPoint chain_retract(const BaryPoint& p, const std::vector<Simplex>& chain_to_drop) {
  if (chain_to_drop.empty()) return p;
  for (std::size_t i = 0; i + 1 < chain_to_drop.size(); ++i)
    if (!is_proper_face(chain_to_drop[i], chain_to_drop[i + 1]))
      throw InvalidInput("retraction chain must strictly increase");

  const auto chain = carrier_chain(p);
  // Decompose p over the isobarycenters of its chain: with the support
  // ordered by descending weight, the prefix of size m contributes
  // m * (w_m - w_{m+1}) at its isobarycenter.  w_i below is the (shared)
  // weight of the vertices chain[i] adds on top of chain[i-1].
  std::vector<Rat> level(chain.size());
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const Simplex& cur = chain[i];
    const Simplex* prev = i == 0 ? nullptr : &chain[i - 1];
    VertexId fresh = cur.front();
    if (prev)
      for (VertexId v : cur)
        if (!contains_vertex(*prev, v)) {
          fresh = v;
          break;
        }
    level[i] = p.weight(fresh);
  }
  std::vector<Rat> coef(chain.size());
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const Rat next = i + 1 < chain.size() ? level[i + 1] : Rat(0);
    coef[i] = Rat(static_cast<long>(chain[i].size())) * (level[i] - next);
  }

  Rat kept = 0;
  std::vector<std::pair<Rat, BaryPoint>> terms;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const bool drop =
        std::find(chain_to_drop.begin(), chain_to_drop.end(), chain[i]) !=
        chain_to_drop.end();
    if (drop) continue;
    if (coef[i] == 0) continue;
    kept += coef[i];
    terms.emplace_back(coef[i], iso_of_simplex(chain[i]));
  }
  for (const auto& sigma : chain_to_drop) {
    const bool in_chain = std::find(chain.begin(), chain.end(), sigma) != chain.end();
    if (!in_chain) {
      for (const auto& member : chain)
        if (!is_face(member, sigma) && !is_face(sigma, member))
          throw InvalidInput("point outside the star of a chain member");
    }
  }
  if (kept == 0) throw InvalidInput("cannot retract the center itself");
  for (auto& [c, pt] : terms) {
    (void)pt;
    c /= kept;
  }
  return affine_combination(terms);
}

}  // namespace topoadv
