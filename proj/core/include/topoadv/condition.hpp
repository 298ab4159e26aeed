#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "topoadv/complex.hpp"

namespace topoadv {

/// A colored simplex of a pseudosphere: sorted (process, value-index) pairs
/// with distinct processes. Value indices refer to an ordered value table.
using CSimplex = std::vector<std::pair<int, int>>;

Simplex csimplex_procs(const CSimplex& s);
Simplex csimplex_values(const CSimplex& s);
bool csimplex_face(const CSimplex& a, const CSimplex& b);

/// A set of allowed input configurations over processes 0..n and an ordered
/// value table: the proper members (at least n+1-t processes) of a
/// sub-pseudosphere. Membership need not be closed under proper faces (the
/// classical multiplicity-based conditions are not).
struct Condition {
  int n = 0;
  int t = 0;
  std::vector<std::string> values;  // user-supplied total order, ascending
  std::set<CSimplex> members;

  int min_size() const { return n + 1 - t; }
  bool is_member(const CSimplex& s) const { return members.count(s) > 0; }
};

/// Throws InvalidInput when a member uses an unknown process/value or has
/// fewer than n+1-t processes.
void validate(const Condition& c);

/// All colored simplices on processes 0..n over the value table with at
/// least min_size processes, lexicographically ordered.
std::vector<CSimplex> enumerate_proper_simplices(int n, int min_size,
                                                 std::size_t value_count);

/// Multiplicity-of-largest-values condition: a proper simplex is a member
/// iff the multiplicities of its k largest distinct values sum to more
/// than t.
Condition condition_c1(int n, int t, int k, std::vector<std::string> values);

/// Occurrence-count condition: with a_1 >= a_2 >= ... the sorted value
/// multiplicities (a_i = 0 past the end), a proper simplex is a member iff
/// a_1 + ... + a_k - a_{k+1} * k > t.
Condition condition_c2(int n, int t, int k, std::vector<std::string> values);

/// Everything proper is allowed.
Condition full_condition(int n, int t, std::vector<std::string> values);

/// Per-subset election: the selector receives the member restricted to a
/// process subset of size n+1-t and returns an elected value index. A proper
/// simplex is kept iff its elections span at most k distinct values.
using SelectorFn = std::function<int(const CSimplex&)>;
Condition selection_condition(int n, int t, int k, std::vector<std::string> values,
                              const SelectorFn& selector);

/// c plus the given simplex and its faces of dimension >= n-t.
Condition extend_condition(const Condition& c, const CSimplex& extra);

}  // namespace topoadv
