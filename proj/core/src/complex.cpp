#include "topoadv/complex.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "topoadv/errors.hpp"

namespace topoadv {

std::vector<Simplex> nonempty_subsets(const Simplex& s) {
  std::vector<Simplex> out;
  const std::size_t m = s.size();
  out.reserve((std::size_t{1} << m) - 1);
  for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
    Simplex sub;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (std::size_t{1} << i)) sub.push_back(s[i]);
    out.push_back(std::move(sub));
  }
  std::sort(out.begin(), out.end(), [](const Simplex& a, const Simplex& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<Simplex> subsets_of_size(const Simplex& s, std::size_t size) {
  std::vector<Simplex> out;
  if (size > s.size()) return out;
  std::vector<std::size_t> idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    Simplex sub(size);
    for (std::size_t i = 0; i < size; ++i) sub[i] = s[idx[i]];
    out.push_back(std::move(sub));
    std::size_t i = size;
    while (i > 0) {
      --i;
      if (idx[i] != i + s.size() - size) break;
      if (i == 0) return out;
    }
    ++idx[i];
    for (std::size_t j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Complex::Complex(std::vector<Simplex> facets) {
  for (auto& f : facets) {
    f = normalized(f);
    for (VertexId v : f) data_.try_emplace(v);
  }
  facets_ = std::move(facets);
  normalize_and_check();
}

Complex::Complex(std::map<VertexId, VertexData> vertices, std::vector<Simplex> facets)
    : data_(std::move(vertices)) {
  for (auto& f : facets) f = normalized(f);
  facets_ = std::move(facets);
  normalize_and_check();
}

void Complex::normalize_and_check() {
  std::sort(facets_.begin(), facets_.end());
  facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());

  // Drop facets contained in another.
  std::vector<Simplex> pruned;
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < facets_.size() && !dominated; ++j)
      dominated = i != j && facets_[i].size() < facets_[j].size() &&
                  is_face(facets_[i], facets_[j]);
    if (!dominated) pruned.push_back(facets_[i]);
  }
  facets_ = std::move(pruned);

  std::set<VertexId> covered;
  for (const auto& f : facets_) {
    for (VertexId v : f) {
      if (!data_.count(v))
        throw InvalidInput("facet vertex " + std::to_string(v) + " is not declared");
      covered.insert(v);
    }
  }
  for (const auto& [v, d] : data_) {
    (void)d;
    if (!covered.count(v))
      throw InvalidInput("vertex " + std::to_string(v) + " belongs to no facet");
    vertex_ids_.push_back(v);
  }
}

int Complex::dimension() const {
  int d = -1;
  for (const auto& f : facets_) d = std::max(d, dim(f));
  return d;
}

bool Complex::has_vertex(VertexId v) const { return data_.count(v) > 0; }

bool Complex::has_simplex(const Simplex& s) const {
  if (s.empty()) return !facets_.empty();
  for (const auto& f : facets_)
    if (is_face(s, f)) return true;
  return false;
}

const VertexData& Complex::data(VertexId v) const {
  auto it = data_.find(v);
  if (it == data_.end())
    throw InvalidInput("unknown vertex " + std::to_string(v));
  return it->second;
}

bool Complex::is_chromatic() const {
  for (const auto& [v, d] : data_)
    if (!d.color) return false;
  for (const auto& f : facets_) {
    std::set<int> seen;
    for (VertexId v : f)
      if (!seen.insert(*data_.at(v).color).second) return false;
  }
  return true;
}

std::vector<int> Complex::colors_of(const Simplex& s) const {
  std::vector<int> out;
  out.reserve(s.size());
  for (VertexId v : s) {
    auto c = data(v).color;
    if (!c) throw InvalidInput("vertex " + std::to_string(v) + " has no color");
    out.push_back(*c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<VertexId> Complex::vertex_with_color(const Simplex& s, int c) const {
  for (VertexId v : s)
    if (data(v).color == c) return v;
  return std::nullopt;
}

namespace {

Complex sub_view(const Complex& c, const std::vector<Simplex>& facets) {
  std::map<VertexId, VertexData> verts;
  for (const auto& f : facets)
    for (VertexId v : f) verts.emplace(v, c.data(v));
  return Complex(std::move(verts), facets);
}

}  // namespace

Complex skeleton(const Complex& c, int l) {
  if (l < -1) throw InvalidInput("skeleton level below -1");
  if (l == -1) return Complex();
  if (l >= c.dimension()) return c;
  std::set<Simplex> facets;
  for (const auto& f : c.facets()) {
    if (dim(f) <= l) {
      facets.insert(f);
    } else {
      for (auto& s : subsets_of_size(f, static_cast<std::size_t>(l) + 1))
        facets.insert(std::move(s));
    }
  }
  return sub_view(c, {facets.begin(), facets.end()});
}

Complex star(const Simplex& s, const Complex& c) {
  if (!c.has_simplex(s)) throw InvalidInput("star of a simplex outside the complex");
  std::vector<Simplex> facets;
  for (const auto& f : c.facets())
    if (is_face(s, f)) facets.push_back(f);
  return sub_view(c, facets);
}

Complex link(const Simplex& s, const Complex& c) {
  if (!c.has_simplex(s)) throw InvalidInput("link of a simplex outside the complex");
  std::vector<Simplex> facets;
  for (const auto& f : c.facets())
    if (is_face(s, f)) {
      Simplex rest = simplex_difference(f, s);
      if (!rest.empty()) facets.push_back(std::move(rest));
    }
  return sub_view(c, facets);
}

Complex boundary_complex(const Simplex& s, const Complex& c) {
  if (!c.has_simplex(s)) throw InvalidInput("boundary of a simplex outside the complex");
  if (s.size() < 2) return Complex();
  std::vector<Simplex> facets;
  for (std::size_t i = 0; i < s.size(); ++i) {
    Simplex face = s;
    face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
    facets.push_back(std::move(face));
  }
  return sub_view(c, facets);
}

Complex join_complexes(const Complex& x, const Complex& y) {
  if (x.empty()) return y;
  if (y.empty()) return x;
  std::map<VertexId, VertexData> verts;
  for (VertexId v : x.vertices()) verts.emplace(v, x.data(v));
  for (VertexId v : y.vertices()) verts.emplace(v, y.data(v));
  std::vector<Simplex> facets;
  for (const auto& a : x.facets())
    for (const auto& b : y.facets()) facets.push_back(simplex_union(a, b));
  return Complex(std::move(verts), std::move(facets));
}

std::vector<Simplex> all_simplices(const Complex& c) {
  std::set<Simplex> seen;
  for (const auto& f : c.facets())
    for (auto& s : nonempty_subsets(f)) seen.insert(std::move(s));
  std::vector<Simplex> out;
  out.reserve(seen.size() + 1);
  out.emplace_back();
  out.insert(out.end(), seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const Simplex& a, const Simplex& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<Simplex> all_nonempty_simplices(const Complex& c) {
  auto out = all_simplices(c);
  out.erase(out.begin());
  return out;
}

LabeledComplex barycentric(const Complex& c) {
  const auto simplices = all_nonempty_simplices(c);
  std::map<Simplex, VertexId> id_of;
  std::vector<Simplex> labels(simplices.size());
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    id_of[simplices[i]] = static_cast<VertexId>(i);
    labels[i] = simplices[i];
  }

  // Maximal chains descend one dimension per step, so enumerate them by
  // peeling one vertex at a time from each facet.
  std::vector<Simplex> facets;
  std::vector<VertexId> stack;
  auto peel = [&](auto&& self, const Simplex& cur) -> void {
    stack.push_back(id_of.at(cur));
    if (cur.size() == 1) {
      facets.emplace_back(normalized(stack));
    } else {
      for (std::size_t i = 0; i < cur.size(); ++i) {
        Simplex face = cur;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        self(self, face);
      }
    }
    stack.pop_back();
  };
  for (const auto& f : c.facets()) peel(peel, f);

  return LabeledComplex{Complex(std::move(facets)), std::move(labels)};
}

PseudosphereComplex pseudosphere(const Complex& i, int n) {
  if (n < 0) throw InvalidInput("negative process count");
  const auto& base = i.vertices();
  const auto m = static_cast<VertexId>(base.size());
  std::map<VertexId, VertexData> verts;
  std::vector<VertexId> base_vertex(static_cast<std::size_t>(m) * (n + 1));
  auto id_of = [&](int p, std::size_t rank) {
    return static_cast<VertexId>(p) * m + static_cast<VertexId>(rank);
  };
  for (int p = 0; p <= n; ++p) {
    for (std::size_t r = 0; r < base.size(); ++r) {
      VertexData d;
      d.color = p;
      d.value = i.data(base[r]).value ? i.data(base[r]).value
                                      : std::optional<std::string>(std::to_string(base[r]));
      VertexId u = id_of(p, r);
      verts.emplace(u, std::move(d));
      base_vertex[static_cast<std::size_t>(u)] = base[r];
    }
  }

  // Facets are the full-process assignments into a facet of i; any partial
  // assignment whose held set spans a simplex of i is a face of one.
  std::set<Simplex> facets;
  std::map<VertexId, std::size_t> rank;
  for (std::size_t r = 0; r < base.size(); ++r) rank[base[r]] = r;
  for (const auto& f : i.facets()) {
    std::vector<std::size_t> choice(static_cast<std::size_t>(n) + 1, 0);
    while (true) {
      Simplex s;
      for (int p = 0; p <= n; ++p) s.push_back(id_of(p, rank.at(f[choice[static_cast<std::size_t>(p)]])));
      facets.insert(normalized(s));
      int p = 0;
      for (; p <= n; ++p) {
        auto& cp = choice[static_cast<std::size_t>(p)];
        if (++cp < f.size()) break;
        cp = 0;
      }
      if (p > n) break;
    }
  }

  PseudosphereComplex out;
  out.cpx = Complex(std::move(verts), {facets.begin(), facets.end()});
  out.base_vertex = std::move(base_vertex);
  out.n = n;
  return out;
}

Simplex giv(const PseudosphereComplex& p, const Simplex& s) {
  Simplex out;
  for (VertexId v : s) {
    if (v < 0 || static_cast<std::size_t>(v) >= p.base_vertex.size())
      throw InvalidInput("vertex outside the pseudosphere");
    out.push_back(p.base_vertex[static_cast<std::size_t>(v)]);
  }
  return normalized(out);
}

Complex unique_value_complex(const Complex& i, const std::vector<VertexId>& order) {
  std::vector<VertexId> enumeration = order.empty() ? i.vertices() : order;
  if (enumeration.size() != i.vertices().size())
    throw InvalidInput("enumeration does not cover the vertex set");
  std::map<VertexId, VertexData> verts;
  for (std::size_t r = 0; r < enumeration.size(); ++r) {
    VertexId v = enumeration[r];
    VertexData d = i.data(v);
    d.color = static_cast<int>(r);
    verts.emplace(v, std::move(d));
  }
  if (verts.size() != i.vertices().size())
    throw InvalidInput("enumeration repeats a vertex");
  return Complex(std::move(verts), i.facets());
}

Simplex map_simplex(const VertexMap& f, const Simplex& s) {
  Simplex out;
  out.reserve(s.size());
  for (VertexId v : s) {
    auto it = f.find(v);
    if (it == f.end()) throw InvalidInput("vertex map not total on " + std::to_string(v));
    out.push_back(it->second);
  }
  return normalized(out);
}

bool check_simplicial(const VertexMap& f, const Complex& src, const Complex& dst) {
  for (VertexId v : src.vertices()) {
    auto it = f.find(v);
    if (it == f.end()) throw InvalidInput("vertex map not total on " + std::to_string(v));
    if (!dst.has_vertex(it->second))
      throw InvalidInput("image vertex " + std::to_string(it->second) +
                         " outside the target complex");
  }
  for (const auto& facet : src.facets())
    if (!dst.has_simplex(map_simplex(f, facet))) return false;
  return true;
}

bool carrier_allows(const std::vector<Simplex>& gens, const Simplex& s) {
  for (const auto& g : gens)
    if (is_face(s, g)) return true;
  return false;
}

bool check_carried(const VertexMap& f, const Complex& src, const CarrierFn& carrier) {
  for (const auto& s : all_simplices(src))
    if (!carrier_allows(carrier(s), map_simplex(f, s))) return false;
  return true;
}

Complex standard_simplex(int n) {
  if (n < 0) throw InvalidInput("negative dimension");
  Simplex top(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) top[static_cast<std::size_t>(i)] = i;
  return Complex({top});
}

Complex standard_chromatic_simplex(int n) {
  Complex plain = standard_simplex(n);
  std::map<VertexId, VertexData> verts;
  for (VertexId v : plain.vertices()) verts[v].color = v;
  return Complex(std::move(verts), plain.facets());
}

}  // namespace topoadv
