#include "topoadv/instant_graph.hpp"

#include <algorithm>

#include "topoadv/errors.hpp"

namespace topoadv {

bool InstantGraph::has_arc(int from, int to) const {
  auto it = in_sets.find(to);
  return it != in_sets.end() && it->second.count(from) > 0;
}

void validate(const InstantGraph& g) {
  if (g.participants.empty()) throw InvalidInput("instant graph without participants");
  if (!std::is_sorted(g.participants.begin(), g.participants.end()) ||
      std::adjacent_find(g.participants.begin(), g.participants.end()) !=
          g.participants.end())
    throw InvalidInput("participants must be sorted and distinct");
  const std::set<int> parts(g.participants.begin(), g.participants.end());
  if (g.in_sets.size() != parts.size())
    throw InvalidInput("in-sets must cover exactly the participants");
  for (const auto& [p, in] : g.in_sets) {
    if (!parts.count(p)) throw InvalidInput("in-set for a non-participant");
    if (!in.count(p)) throw InvalidInput("missing self-loop on " + std::to_string(p));
    for (int q : in)
      if (!parts.count(q)) throw InvalidInput("arc from a non-participant");
  }
  // Containment: in-sets totally ordered by inclusion.
  for (const auto& [a, ia] : g.in_sets)
    for (const auto& [b, ib] : g.in_sets) {
      if (a >= b) continue;
      bool ab = std::includes(ib.begin(), ib.end(), ia.begin(), ia.end());
      bool ba = std::includes(ia.begin(), ia.end(), ib.begin(), ib.end());
      if (!ab && !ba)
        throw InvalidInput("containment fails between " + std::to_string(a) + " and " +
                           std::to_string(b));
    }
  // Immediacy: (a,b),(b,c) arcs imply (a,c).
  for (const auto& [b, ib] : g.in_sets)
    for (int a : ib)
      for (const auto& [c, ic] : g.in_sets)
        if (ic.count(b) && !ic.count(a))
          throw InvalidInput("immediacy fails: " + std::to_string(a) + "->" +
                             std::to_string(b) + "->" + std::to_string(c));
}

bool is_valid_instant_graph(const InstantGraph& g) {
  try {
    validate(g);
    return true;
  } catch (const InvalidInput&) {
    return false;
  }
}

InstantGraph from_ordered_partition(const std::vector<std::vector<int>>& blocks) {
  InstantGraph g;
  std::set<int> heard;
  for (const auto& block : blocks) {
    if (block.empty()) throw InvalidInput("empty partition block");
    for (int p : block) {
      if (!heard.insert(p).second) throw InvalidInput("repeated process in partition");
      g.participants.push_back(p);
    }
    for (int p : block) g.in_sets[p] = heard;
  }
  std::sort(g.participants.begin(), g.participants.end());
  return g;
}

std::vector<std::vector<int>> to_ordered_partition(const InstantGraph& g) {
  validate(g);
  std::vector<std::pair<std::size_t, int>> by_size;
  by_size.reserve(g.in_sets.size());
  for (const auto& [p, in] : g.in_sets) by_size.emplace_back(in.size(), p);
  std::sort(by_size.begin(), by_size.end());
  std::vector<std::vector<int>> blocks;
  std::size_t prev = 0;
  for (const auto& [size, p] : by_size) {
    if (blocks.empty() || size != prev) blocks.emplace_back();
    blocks.back().push_back(p);
    prev = size;
  }
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  return blocks;
}

namespace {

void enumerate_partitions(const std::vector<int>& remaining,
                          std::vector<std::vector<int>>& blocks,
                          std::vector<InstantGraph>& out) {
  if (remaining.empty()) {
    out.push_back(from_ordered_partition(blocks));
    return;
  }
  // Choose the next block: any nonempty subset of what is left.
  const std::size_t m = remaining.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
    std::vector<int> block, rest;
    for (std::size_t i = 0; i < m; ++i)
      ((mask >> i) & 1 ? block : rest).push_back(remaining[i]);
    blocks.push_back(std::move(block));
    enumerate_partitions(rest, blocks, out);
    blocks.pop_back();
  }
}

}  // namespace

std::vector<InstantGraph> enumerate_ims(const std::vector<int>& participants) {
  if (participants.empty()) throw InvalidInput("empty participant set");
  std::vector<int> sorted = participants;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::vector<int>> blocks;
  std::vector<InstantGraph> out;
  enumerate_partitions(sorted, blocks, out);
  return out;
}

InstantGraph complete_graph(const std::vector<int>& participants) {
  std::vector<int> sorted = participants;
  std::sort(sorted.begin(), sorted.end());
  return from_ordered_partition({sorted});
}

}  // namespace topoadv
