#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "topoadv/errors.hpp"
#include "topoadv/instant_graph.hpp"

using namespace topoadv;

namespace {

std::vector<int> procs(int n) {
  std::vector<int> out;
  for (int p = 0; p <= n; ++p) out.push_back(p);
  return out;
}

// Independent oracle: every in-set assignment with self-loops, filtered by a
// from-scratch check of Immediacy and Containment.
std::vector<std::map<int, std::set<int>>> brute_force_ims(int n) {
  const auto ps = procs(n);
  const int m = n + 1;
  const int free_arcs = m * n;  // ordered pairs (from, to), from != to
  std::vector<std::pair<int, int>> arcs;
  for (int from : ps)
    for (int to : ps)
      if (from != to) arcs.emplace_back(from, to);

  std::vector<std::map<int, std::set<int>>> found;
  for (unsigned long mask = 0; mask < (1ul << free_arcs); ++mask) {
    std::map<int, std::set<int>> in;
    for (int p : ps) in[p] = {p};
    for (int i = 0; i < free_arcs; ++i)
      if (mask & (1ul << i)) in[arcs[i].second].insert(arcs[i].first);

    bool ok = true;
    for (int a : ps)
      for (int b : ps)
        for (int c : ps)
          if (in[b].count(a) && in[c].count(b) && !in[c].count(a)) ok = false;
    for (int a : ps)
      for (int b : ps) {
        const bool ab = std::includes(in[b].begin(), in[b].end(), in[a].begin(),
                                      in[a].end());
        const bool ba = std::includes(in[a].begin(), in[a].end(), in[b].begin(),
                                      in[b].end());
        if (!ab && !ba) ok = false;
      }
    if (ok) found.push_back(std::move(in));
  }
  return found;
}

// Independent count oracle for ordered set partitions:
// a(m) = sum_j C(m,j) a(m-j).
long ordered_partition_count(int m) {
  std::vector<std::vector<long>> choose(m + 1, std::vector<long>(m + 1, 0));
  for (int i = 0; i <= m; ++i) {
    choose[i][0] = 1;
    for (int j = 1; j <= i; ++j)
      choose[i][j] = choose[i - 1][j - 1] + (j <= i - 1 ? choose[i - 1][j] : 0);
  }
  std::vector<long> a(m + 1, 0);
  a[0] = 1;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= i; ++j) a[i] += choose[i][j] * a[i - j];
  return a[m];
}

}  // namespace

TEST_SUITE("instant_graph") {

TEST_CASE("enumeration counts follow the ordered-partition numbers") {
  CHECK(enumerate_ims(procs(0)).size() == 1);
  CHECK(enumerate_ims(procs(1)).size() == 3);
  CHECK(enumerate_ims(procs(2)).size() == 13);
  CHECK(enumerate_ims(procs(3)).size() == 75);
  for (int n = 0; n <= 3; ++n)
    CHECK(enumerate_ims(procs(n)).size() ==
          static_cast<std::size_t>(ordered_partition_count(n + 1)));
}

TEST_CASE("enumeration matches the brute-force arc filter") {
  for (int n = 0; n <= 2; ++n) {
    const auto oracle = brute_force_ims(n);
    const auto graphs = enumerate_ims(procs(n));
    REQUIRE(graphs.size() == oracle.size());
    std::set<std::map<int, std::set<int>>> seen;
    for (const auto& g : graphs) seen.insert(g.in_sets);
    for (const auto& in : oracle) CHECK(seen.count(in) == 1);
  }
}

TEST_CASE("two participants give the three one-round graphs") {
  const auto graphs = enumerate_ims(procs(1));
  std::set<std::map<int, std::set<int>>> seen;
  for (const auto& g : graphs) seen.insert(g.in_sets);
  CHECK(seen.count({{0, {0, 1}}, {1, {0, 1}}}) == 1);
  CHECK(seen.count({{0, {0}}, {1, {0, 1}}}) == 1);
  CHECK(seen.count({{0, {0, 1}}, {1, {1}}}) == 1);
}

TEST_CASE("validation rejects each broken property") {
  InstantGraph g;
  g.participants = {0, 1, 2};
  g.in_sets = {{0, {1, 2}}, {1, {0, 1, 2}}, {2, {0, 1, 2}}};
  CHECK_THROWS_AS(validate(g), InvalidInput);  // missing self-loop

  g.in_sets = {{0, {0, 1}}, {1, {1, 2}}, {2, {2}}};
  CHECK_FALSE(is_valid_instant_graph(g));  // 2 -> 1 -> 0 without 2 -> 0

  g.in_sets = {{0, {0, 1}}, {1, {1}}, {2, {0, 2}}};
  CHECK_FALSE(is_valid_instant_graph(g));  // in(0), in(2) incomparable

  g.in_sets = {{0, {0}}, {1, {0, 1}}, {2, {0, 1, 2}}};
  CHECK(is_valid_instant_graph(g));
}

TEST_CASE("ordered partition round trip") {
  const auto g = from_ordered_partition({{1}, {0, 2}});
  CHECK(g.in(1) == std::set<int>{1});
  CHECK(g.in(0) == std::set<int>{0, 1, 2});
  CHECK(g.in(2) == std::set<int>{0, 1, 2});
  CHECK(to_ordered_partition(g) == std::vector<std::vector<int>>{{1}, {0, 2}});

  for (int n = 0; n <= 3; ++n) {
    std::set<std::vector<std::vector<int>>> parts;
    for (const auto& graph : enumerate_ims(procs(n))) {
      const auto blocks = to_ordered_partition(graph);
      CHECK(from_ordered_partition(blocks) == graph);
      parts.insert(blocks);
    }
    CHECK(parts.size() == enumerate_ims(procs(n)).size());
  }
}

TEST_CASE("complete graph is the single-block partition") {
  const auto g = complete_graph(procs(2));
  for (int p : procs(2)) CHECK(g.in(p) == std::set<int>{0, 1, 2});
  CHECK(to_ordered_partition(g) == std::vector<std::vector<int>>{{0, 1, 2}});
}

}  // TEST_SUITE
