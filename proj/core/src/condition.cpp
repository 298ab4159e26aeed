#include "topoadv/condition.hpp"

#include <algorithm>

#include "topoadv/errors.hpp"

namespace topoadv {

Simplex csimplex_procs(const CSimplex& s) {
  Simplex out;
  out.reserve(s.size());
  for (const auto& [p, v] : s) {
    (void)v;
    out.push_back(p);
  }
  return out;
}

Simplex csimplex_values(const CSimplex& s) {
  Simplex out;
  out.reserve(s.size());
  for (const auto& [p, v] : s) {
    (void)p;
    out.push_back(v);
  }
  return normalized(out);
}

bool csimplex_face(const CSimplex& a, const CSimplex& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void validate(const Condition& c) {
  if (c.n < 0) throw InvalidInput("process count must be positive");
  if (c.t < 0 || c.t > c.n) throw InvalidInput("t must be between 0 and n");
  if (c.values.empty()) throw InvalidInput("value table must be nonempty");
  for (const auto& m : c.members) {
    if (static_cast<int>(m.size()) < c.min_size())
      throw InvalidInput("member has fewer processes than n+1-t");
    int prev = -1;
    for (const auto& [p, v] : m) {
      if (p <= prev) throw InvalidInput("member processes must be sorted and distinct");
      prev = p;
      if (p < 0 || p > c.n) throw InvalidInput("member process out of range");
      if (v < 0 || v >= static_cast<int>(c.values.size()))
        throw InvalidInput("member value out of range");
    }
  }
}

std::vector<CSimplex> enumerate_proper_simplices(int n, int min_size,
                                                 std::size_t value_count) {
  if (n < 0 || value_count == 0) throw InvalidInput("empty ambient");
  std::vector<CSimplex> out;
  const int procs = n + 1;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << procs); ++mask) {
    Simplex ps;
    for (int p = 0; p < procs; ++p)
      if (mask & (std::uint32_t{1} << p)) ps.push_back(p);
    if (static_cast<int>(ps.size()) < min_size) continue;
    std::vector<int> assign(ps.size(), 0);
    while (true) {
      CSimplex s;
      s.reserve(ps.size());
      for (std::size_t i = 0; i < ps.size(); ++i) s.emplace_back(ps[i], assign[i]);
      out.push_back(std::move(s));
      std::size_t i = ps.size();
      while (i > 0 && ++assign[i - 1] == static_cast<int>(value_count)) assign[--i] = 0;
      if (i == 0) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

/// Multiplicity of each value present, keyed by value index.
std::map<int, int> value_multiplicities(const CSimplex& s) {
  std::map<int, int> mult;
  for (const auto& [p, v] : s) {
    (void)p;
    ++mult[v];
  }
  return mult;
}

Condition filter_condition(int n, int t, std::vector<std::string> values,
                           const std::function<bool(const CSimplex&)>& keep) {
  Condition c;
  c.n = n;
  c.t = t;
  c.values = std::move(values);
  validate(c);
  for (auto& s : enumerate_proper_simplices(n, c.min_size(), c.values.size()))
    if (keep(s)) c.members.insert(std::move(s));
  return c;
}

}  // namespace

Condition condition_c1(int n, int t, int k, std::vector<std::string> values) {
  if (k < 1) throw InvalidInput("k must be at least 1");
  return filter_condition(n, t, std::move(values), [k, t](const CSimplex& s) {
    const auto mult = value_multiplicities(s);
    int sum = 0, taken = 0;
    for (auto it = mult.rbegin(); it != mult.rend() && taken < k; ++it, ++taken)
      sum += it->second;
    return sum > t;
  });
}

Condition condition_c2(int n, int t, int k, std::vector<std::string> values) {
  if (k < 1) throw InvalidInput("k must be at least 1");
  return filter_condition(n, t, std::move(values), [k, t](const CSimplex& s) {
    std::vector<int> counts;
    for (const auto& [v, m] : value_multiplicities(s)) {
      (void)v;
      counts.push_back(m);
    }
    std::sort(counts.rbegin(), counts.rend());
    int sum = 0;
    for (int i = 0; i < k && i < static_cast<int>(counts.size()); ++i) sum += counts[i];
    const int next = k < static_cast<int>(counts.size()) ? counts[k] : 0;
    return sum - next * k > t;
  });
}

Condition full_condition(int n, int t, std::vector<std::string> values) {
  return filter_condition(n, t, std::move(values), [](const CSimplex&) { return true; });
}

Condition selection_condition(int n, int t, int k, std::vector<std::string> values,
                              const SelectorFn& selector) {
  if (k < 1) throw InvalidInput("k must be at least 1");
  if (!selector) throw InvalidInput("selector must be callable");
  const std::size_t subset = static_cast<std::size_t>(n + 1 - t);
  return filter_condition(n, t, std::move(values), [&, k](const CSimplex& s) {
    std::set<int> elected;
    for (const auto& procs : subsets_of_size(csimplex_procs(s), subset)) {
      CSimplex restricted;
      for (const auto& pv : s)
        if (contains_vertex(procs, pv.first)) restricted.push_back(pv);
      elected.insert(selector(restricted));
    }
    return static_cast<int>(elected.size()) <= k;
  });
}

Condition extend_condition(const Condition& c, const CSimplex& extra) {
  validate(c);
  Condition out = c;
  out.members.insert(extra);
  validate(out);
  const Simplex procs = csimplex_procs(extra);
  for (std::size_t size = static_cast<std::size_t>(c.min_size()); size < extra.size();
       ++size)
    for (const auto& sub : subsets_of_size(procs, size)) {
      CSimplex face;
      for (const auto& pv : extra)
        if (contains_vertex(sub, pv.first)) face.push_back(pv);
      out.members.insert(std::move(face));
    }
  return out;
}

}  // namespace topoadv
