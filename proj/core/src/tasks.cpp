#include "topoadv/tasks.hpp"

#include <algorithm>

#include "topoadv/errors.hpp"

namespace topoadv {

ColorlessTask make_kset(const std::vector<std::string>& values, int k) {
  const int m = static_cast<int>(values.size());
  if (k < 1 || k > m) throw InvalidInput("k must be between 1 and the value count");
  std::map<VertexId, VertexData> vd;
  Simplex all;
  for (int i = 0; i < m; ++i) {
    vd.emplace(i, VertexData{std::nullopt, values[i]});
    all.push_back(i);
  }
  ColorlessTask task;
  task.input = Complex(vd, {all});
  task.output = Complex(vd, subsets_of_size(all, static_cast<std::size_t>(k)));
  task.delta = [k](const Simplex& s) -> std::vector<Simplex> {
    if (s.empty()) return {Simplex{}};
    const std::size_t size = std::min<std::size_t>(s.size(), static_cast<std::size_t>(k));
    return subsets_of_size(s, size);
  };
  return task;
}

namespace {

std::vector<Simplex> dedupe_generators(std::vector<Simplex> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Simplex> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < gens.size() && !dominated; ++j)
      dominated = i != j && gens[i].size() < gens[j].size() && is_face(gens[i], gens[j]);
    if (!dominated) out.push_back(gens[i]);
  }
  return out;
}

std::vector<Simplex> restrict_generators(const std::vector<Simplex>& gens,
                                         std::size_t max_size) {
  std::vector<Simplex> out;
  for (const auto& g : gens) {
    if (g.size() <= max_size)
      out.push_back(g);
    else
      for (auto& s : subsets_of_size(g, max_size)) out.push_back(std::move(s));
  }
  return dedupe_generators(std::move(out));
}

}  // namespace

ColorlessTask nonexpanding(const ColorlessTask& task) {
  const CarrierFn base = task.delta;
  CarrierFn filtered = [base](const Simplex& s) -> std::vector<Simplex> {
    if (s.empty()) return {Simplex{}};
    return restrict_generators(base(s), s.size());
  };
  for (const auto& s : all_nonempty_simplices(task.input)) {
    bool any = false;
    for (const auto& g : filtered(s)) any = any || !g.empty();
    if (!any) throw InvalidInput("no allowed output of admissible dimension");
  }
  ColorlessTask out;
  out.input = task.input;
  out.output = task.output;
  out.delta = std::move(filtered);
  return out;
}

bool is_nonexpanding(const ColorlessTask& task) {
  for (const auto& s : all_nonempty_simplices(task.input))
    for (const auto& g : task.delta(s))
      if (g.size() > s.size()) return false;
  return true;
}

namespace {

std::vector<VertexId> allowed_output_vertices(const ColorlessTask& task, VertexId v) {
  std::set<VertexId> out;
  for (const auto& g : task.delta({v}))
    for (VertexId u : g) out.insert(u);
  return {out.begin(), out.end()};
}

}  // namespace

ColorlessTask vertex_deterministic(const ColorlessTask& task, const VertexMap& choice) {
  if (!is_nonexpanding(task)) throw InvalidInput("task must be non-expanding");
  for (VertexId v : task.input.vertices()) {
    auto it = choice.find(v);
    if (it == choice.end()) throw InvalidInput("choice must cover every input vertex");
    if (!carrier_allows(task.delta({v}), {it->second}))
      throw InvalidInput("chosen output vertex is not allowed");
  }
  const CarrierFn base = task.delta;
  const VertexMap pinned = choice;
  ColorlessTask out;
  out.input = task.input;
  out.output = task.output;
  out.delta = [base, pinned](const Simplex& s) -> std::vector<Simplex> {
    if (s.empty()) return {Simplex{}};
    if (s.size() == 1) return {Simplex{pinned.at(s.front())}};
    return base(s);
  };
  return out;
}

std::vector<VertexMap> enumerate_vertex_choices(const ColorlessTask& task) {
  const auto& vs = task.input.vertices();
  std::vector<std::vector<VertexId>> options;
  options.reserve(vs.size());
  for (VertexId v : vs) {
    options.push_back(allowed_output_vertices(task, v));
    if (options.back().empty()) return {};
  }
  std::vector<VertexMap> out;
  std::vector<std::size_t> idx(vs.size(), 0);
  while (true) {
    VertexMap m;
    for (std::size_t i = 0; i < vs.size(); ++i) m.emplace(vs[i], options[i][idx[i]]);
    out.push_back(std::move(m));
    std::size_t i = vs.size();
    while (i > 0 && ++idx[i - 1] == options[i - 1].size()) idx[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

bool check_delta_compatible(const ColorlessTask& task, const VertexMap& f,
                            const Complex& domain) {
  if (!check_simplicial(f, domain, task.input))
    throw InvalidInput("map must be simplicial");
  for (const auto& s : all_nonempty_simplices(domain)) {
    const Simplex image = map_simplex(f, s);
    for (const auto& g : task.delta(image))
      if (!carrier_allows(task.delta(s), g)) return false;
  }
  return true;
}

bool check_solution(const ColorlessTask& task, const Complex& k,
                    const std::map<VertexId, Simplex>& carrier_of,
                    const VertexMap& decision) {
  for (VertexId v : k.vertices()) {
    auto it = carrier_of.find(v);
    if (it == carrier_of.end()) throw InvalidInput("vertex lacks a carrier tag");
    if (!task.input.has_simplex(it->second))
      throw InvalidInput("carrier tag is not a simplex of the input");
  }
  if (!check_simplicial(decision, k, task.output)) return false;
  for (const auto& s : all_nonempty_simplices(k)) {
    Simplex carrier;
    for (VertexId v : s) carrier = simplex_union(carrier, carrier_of.at(v));
    if (!task.input.has_simplex(carrier))
      throw InvalidInput("carrier tags do not join into an input simplex");
    if (!carrier_allows(task.delta(carrier), map_simplex(decision, s))) return false;
  }
  return true;
}

}  // namespace topoadv
