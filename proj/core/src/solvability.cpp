#include "topoadv/solvability.hpp"

#include <algorithm>

#include "topoadv/errors.hpp"

namespace topoadv {

std::optional<VertexId> UComplex::vertex_of_member(const CSimplex& m) const {
  for (std::size_t i = 0; i < member_of.size(); ++i)
    if (member_of[i] == m) return static_cast<VertexId>(i);
  return std::nullopt;
}

std::optional<VertexId> UComplex::vertex_of_value_set(const Simplex& s) const {
  for (std::size_t i = 0; i < giv_of.size(); ++i)
    if (giv_of[i] == s) return static_cast<VertexId>(i);
  return std::nullopt;
}

namespace {

/// Facets of the chain complex over an inclusion poset: saturated chains
/// from minimal to maximal elements. less(i, j) means strict inclusion.
std::vector<Simplex> maximal_chains(std::size_t count,
                                    const std::function<bool(std::size_t, std::size_t)>& less) {
  std::vector<std::vector<std::size_t>> covers(count);
  std::vector<bool> has_lower(count, false);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j) {
      if (!less(i, j)) continue;
      has_lower[j] = true;
      bool cover = true;
      for (std::size_t k = 0; k < count && cover; ++k)
        cover = !(less(i, k) && less(k, j));
      if (cover) covers[i].push_back(j);
    }
  std::vector<Simplex> facets;
  Simplex path;
  auto dfs = [&](auto&& self, std::size_t v) -> void {
    path.push_back(static_cast<VertexId>(v));
    if (covers[v].empty())
      facets.push_back(normalized(path));
    else
      for (std::size_t w : covers[v]) self(self, w);
    path.pop_back();
  };
  for (std::size_t v = 0; v < count; ++v)
    if (!has_lower[v]) dfs(dfs, v);
  return facets;
}

std::string label_of(const CSimplex& m, const std::vector<std::string>& values) {
  std::string out;
  for (const auto& [p, v] : m) {
    if (!out.empty()) out += ",";
    out += std::to_string(p) + "=" + values[v];
  }
  return out;
}

std::string label_of(const Simplex& s) {
  std::string out;
  for (VertexId v : s) {
    if (!out.empty()) out += ",";
    out += std::to_string(v);
  }
  return out;
}

Complex chain_complex(std::size_t count,
                      const std::function<bool(std::size_t, std::size_t)>& less,
                      const std::function<std::string(std::size_t)>& label) {
  std::map<VertexId, VertexData> vd;
  for (std::size_t i = 0; i < count; ++i)
    vd.emplace(static_cast<VertexId>(i), VertexData{std::nullopt, label(i)});
  if (count == 0) return Complex();
  return Complex(std::move(vd), maximal_chains(count, less));
}

}  // namespace

UComplex build_u(const Condition& c) {
  validate(c);
  UComplex u;
  u.colored = true;
  u.n = c.n;
  u.t = c.t;
  u.values = c.values;
  for (const auto& m : c.members) {
    u.member_of.push_back(m);
    u.giv_of.push_back(csimplex_values(m));
  }
  u.cpx = chain_complex(
      u.member_of.size(),
      [&](std::size_t i, std::size_t j) {
        return u.member_of[i] != u.member_of[j] &&
               csimplex_face(u.member_of[i], u.member_of[j]);
      },
      [&](std::size_t i) { return label_of(u.member_of[i], u.values); });
  return u;
}

UComplex build_u(const Complex& i, int t) {
  if (t < 0) throw InvalidInput("t must be nonnegative");
  UComplex u;
  u.n = i.dimension();
  u.t = t;
  for (const auto& s : all_nonempty_simplices(i))
    if (dim(s) >= i.dimension() - t) u.giv_of.push_back(s);
  u.cpx = chain_complex(
      u.giv_of.size(),
      [&](std::size_t a, std::size_t b) {
        return u.giv_of[a] != u.giv_of[b] && is_face(u.giv_of[a], u.giv_of[b]);
      },
      [&](std::size_t a) { return label_of(u.giv_of[a]); });
  return u;
}

namespace {

UComplex skeletonize(UComplex u, int k) {
  u.cpx = skeleton(u.cpx, k);
  return u;
}

}  // namespace

UComplex kin(const Condition& c, int k) { return skeletonize(build_u(c), k); }

UComplex kin(const Complex& i, int t, int k) { return skeletonize(build_u(i, t), k); }

CarrierFn carrier_on_u(const ColorlessTask& task, const UComplex& u) {
  const CarrierFn delta = task.delta;
  const std::vector<Simplex> giv = u.giv_of;
  return [delta, giv](const Simplex& chain) -> std::vector<Simplex> {
    if (chain.empty()) return {Simplex{}};
    VertexId top = chain.front();
    for (VertexId v : chain) {
      if (static_cast<std::size_t>(v) >= giv.size())
        throw InvalidInput("vertex lacks a member tag");
      if (giv[v].size() > giv[top].size()) top = v;
    }
    return delta(giv[top]);
  };
}

DecideResult decide(const ColorlessTask& task, const UComplex& u,
                    std::uint64_t budget) {
  if (!is_nonexpanding(task)) throw InvalidInput("task must be non-expanding");
  const CarrierFn carrier = carrier_on_u(task, u);

  const auto chains = all_nonempty_simplices(u.cpx);
  std::map<VertexId, std::size_t> degree;
  for (const auto& s : chains)
    for (VertexId v : s) ++degree[v];

  std::vector<VertexId> vars(u.cpx.vertices());
  std::stable_sort(vars.begin(), vars.end(),
                   [&](VertexId a, VertexId b) { return degree[a] > degree[b]; });
  std::map<VertexId, std::size_t> rank;
  for (std::size_t i = 0; i < vars.size(); ++i) rank[vars[i]] = i;

  std::vector<std::vector<VertexId>> domains(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    std::set<VertexId> dom;
    for (const auto& g : carrier({vars[i]}))
      for (VertexId o : g) dom.insert(o);
    domains[i].assign(dom.begin(), dom.end());
  }

  // Each chain is checked as soon as its last variable is assigned.
  std::vector<std::vector<const Simplex*>> checks(vars.size());
  std::vector<std::vector<std::vector<Simplex>>> check_gens(vars.size());
  for (const auto& s : chains) {
    std::size_t latest = 0;
    for (VertexId v : s) latest = std::max(latest, rank.at(v));
    checks[latest].push_back(&s);
    check_gens[latest].push_back(carrier(s));
  }

  DecideResult result;
  std::map<VertexId, VertexId> assign;
  auto search = [&](auto&& self, std::size_t i) -> bool {
    if (i == vars.size()) return true;
    for (VertexId value : domains[i]) {
      if (++result.nodes > budget) throw BudgetError("search budget exceeded");
      assign[vars[i]] = value;
      bool ok = true;
      for (std::size_t c = 0; c < checks[i].size() && ok; ++c) {
        Simplex image;
        for (VertexId v : *checks[i][c]) image.push_back(assign.at(v));
        ok = carrier_allows(check_gens[i][c], normalized(image));
      }
      if (ok && self(self, i + 1)) return true;
    }
    assign.erase(vars[i]);
    return false;
  };

  try {
    if (!search(search, 0)) {
      result.status = DecideStatus::Unsolvable;
      return result;
    }
  } catch (const BudgetError&) {
    result.status = DecideStatus::Budget;
    return result;
  }

  result.status = DecideStatus::Solvable;
  result.witness = VertexMap(assign.begin(), assign.end());
  if (!u.cpx.vertices().empty()) {
    if (!check_simplicial(result.witness, u.cpx, task.output))
      throw std::logic_error("witness fails the simplicial check");
    if (!check_carried(result.witness, u.cpx, carrier))
      throw std::logic_error("witness escapes its carrier");
  }
  return result;
}

MaximalityResult is_maximal(const ColorlessTask& task, const Condition& c,
                            std::uint64_t budget) {
  validate(c);
  MaximalityResult out;

  const auto base = decide(task, build_u(c), budget);
  if (base.status == DecideStatus::Budget) {
    out.budget_exceeded = true;
    return out;
  }
  if (base.status == DecideStatus::Unsolvable) return out;

  // Candidate extensions: absent full-process assignments, largest values
  // first.
  const int m = static_cast<int>(c.values.size());
  std::vector<int> vec(static_cast<std::size_t>(c.n) + 1, m - 1);
  while (true) {
    CSimplex candidate;
    for (int p = 0; p <= c.n; ++p) candidate.emplace_back(p, vec[p]);
    if (!c.is_member(candidate)) {
      const auto extended = decide(task, build_u(extend_condition(c, candidate)), budget);
      if (extended.status == DecideStatus::Budget) {
        out.budget_exceeded = true;
        return out;
      }
      if (extended.status == DecideStatus::Solvable) {
        out.counterexample = candidate;
        return out;
      }
    }
    std::size_t i = vec.size();
    while (i > 0 && --vec[i - 1] < 0) vec[--i] = m - 1;
    if (i == 0) break;
  }
  out.maximal = true;
  return out;
}

}  // namespace topoadv
