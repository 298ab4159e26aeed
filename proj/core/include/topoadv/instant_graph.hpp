#pragma once

#include <map>
#include <set>
#include <vector>

#include "topoadv/simplex.hpp"

namespace topoadv {

/// One communication round on a participant set: in_sets[p] is the set of
/// processes whose message p receives (always including p itself).
/// Valid instances satisfy both
///   Immediacy:   (a,b) and (b,c) arcs imply the (a,c) arc, and
///   Containment: in-sets are totally ordered by inclusion.
/// These graphs are in bijection with ordered set partitions of the
/// participants: a process in block j hears exactly blocks 1..j.
struct InstantGraph {
  std::vector<int> participants;            // sorted
  std::map<int, std::set<int>> in_sets;

  const std::set<int>& in(int p) const { return in_sets.at(p); }
  bool has_arc(int from, int to) const;

  bool operator==(const InstantGraph&) const = default;
  auto operator<=>(const InstantGraph&) const = default;
};

/// Throws InvalidInput when self-loops, Immediacy or Containment fail.
void validate(const InstantGraph& g);

bool is_valid_instant_graph(const InstantGraph& g);

/// Graph of the ordered partition blocks[0] | blocks[1] | ...
InstantGraph from_ordered_partition(const std::vector<std::vector<int>>& blocks);

/// The blocks of the graph's ordered partition, by increasing in-set.
std::vector<std::vector<int>> to_ordered_partition(const InstantGraph& g);

/// All instant graphs on the participant set, in a deterministic order
/// (lexicographic by ordered partition). Counts follow the Fubini numbers:
/// 1, 3, 13, 75 for 1..4 participants.
std::vector<InstantGraph> enumerate_ims(const std::vector<int>& participants);

/// Complete graph (single-block partition).
InstantGraph complete_graph(const std::vector<int>& participants);

}  // namespace topoadv
