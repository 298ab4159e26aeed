#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "topoadv/condition.hpp"
#include "topoadv/geometry.hpp"
#include "topoadv/tasks.hpp"

namespace topoadv {

inline constexpr std::uint64_t kDefaultSearchBudget = 10000000;

/// The condition complex: one vertex per member, simplices are strict
/// inclusion chains of members. Each vertex is tagged with its member and
/// the member's value set; the complex itself carries the tag as a value
/// label. Geometrically a vertex sits at the isobarycenter of its member.
struct UComplex {
  Complex cpx;
  std::vector<Simplex> giv_of;      // per vertex: value set of the member
  std::vector<CSimplex> member_of;  // per vertex; meaningful when colored
  bool colored = false;
  int n = 0;
  int t = 0;
  std::vector<std::string> values;  // value table when colored

  std::optional<VertexId> vertex_of_member(const CSimplex& m) const;
  std::optional<VertexId> vertex_of_value_set(const Simplex& s) const;
};

/// Condition complex of a colored condition.
UComplex build_u(const Condition& c);

/// Colorless variant: members are the simplices of i of dimension at least
/// n - t, n the facet dimension of i (the fully resilient condition on i).
UComplex build_u(const Complex& i, int t);

/// k-skeletons of the above.
UComplex kin(const Condition& c, int k);
UComplex kin(const Complex& i, int t, int k);

/// Carrier on chains: a chain is allowed whatever delta allows on the value
/// set of its maximal member.
CarrierFn carrier_on_u(const ColorlessTask& task, const UComplex& u);

enum class DecideStatus { Solvable, Unsolvable, Budget };

struct DecideResult {
  DecideStatus status = DecideStatus::Unsolvable;
  VertexMap witness;        // U vertex -> output vertex, when solvable
  std::uint64_t nodes = 0;  // search nodes visited
};

/// Backtracking search for a simplicial map from the condition complex to
/// the task output carried by carrier_on_u. Solvable results carry a
/// verified witness; unsolvable means exhaustive refutation; the budget
/// outcome reports an exhausted node allowance, distinct from both.
DecideResult decide(const ColorlessTask& task, const UComplex& u,
                    std::uint64_t budget = kDefaultSearchBudget);

struct MaximalityResult {
  bool maximal = false;
  std::optional<CSimplex> counterexample;
  bool budget_exceeded = false;
};

/// c is maximal when it is solvable and adding any absent input configuration
/// (a full-process value assignment, together with its faces of dimension at
/// least n-t) makes the task unsolvable. Candidates are scanned in descending
/// lexicographic value order; the first solvable extension is reported.
MaximalityResult is_maximal(const ColorlessTask& task, const Condition& c,
                            std::uint64_t budget = kDefaultSearchBudget);

}  // namespace topoadv
