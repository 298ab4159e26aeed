#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "topoadv/condition.hpp"
#include "topoadv/instant_graph.hpp"

namespace topoadv {

/// Ultimately periodic word head . cycle^omega; all letters share one
/// participant set, the cycle is nonempty.
struct UPWord {
  std::vector<InstantGraph> head;
  std::vector<InstantGraph> cycle;

  std::vector<int> participants() const;
  /// 1-based letter access.
  const InstantGraph& letter(std::size_t r) const;

  bool operator==(const UPWord&) const = default;
};

void validate(const UPWord& w);

/// Processes seen by every process infinitely often; decided on the cycle:
/// p is in q_of(w) iff for every process q some cycle letter delivers p to q.
std::set<int> q_of(const UPWord& w);

/// Processes never seen by some process in any letter strictly past
/// position r (positions are 1-based).
std::set<int> k_r(const UPWord& w, int r);

/// Inclusion-closed family of crashable sets; always contains the empty set.
struct CoreCollection {
  std::vector<std::set<int>> sets;

  bool contains(const std::set<int>& s) const;
};

void validate(const CoreCollection& p);

/// All subsets of participants of size <= t.
CoreCollection cores_up_to_size(const std::vector<int>& participants, int t);

struct AdversarySpec;

struct IISSpec {};
struct TResilientSpec { int t = 0; };
struct CoreResilientSpec { CoreCollection p; };
struct RestrictedTResilientSpec { int t = 0; int r = 0; };
struct RestrictedCoreSpec { CoreCollection p; int r = 0; };
struct ConditionBasedSpec {
  Condition condition;
  std::shared_ptr<AdversarySpec> inner;
};
struct InputDependentSpec {
  Condition condition;  // facets of this condition key the map
  std::function<std::shared_ptr<AdversarySpec>(const CSimplex&)> by_input;
};

struct AdversarySpec {
  std::variant<IISSpec, TResilientSpec, CoreResilientSpec, RestrictedTResilientSpec,
               RestrictedCoreSpec, ConditionBasedSpec, InputDependentSpec>
      variant;

  bool needs_input() const;
};

/// Exact membership of an ultimately periodic word. input must be supplied
/// exactly for condition-based and input-dependent specs; an input outside
/// the condition throws InputOutsideCondition.
bool membership(const AdversarySpec& spec, const std::optional<CSimplex>& input,
                const UPWord& w);

/// A finite prefix plus a witness cycle: prefix . witness^omega is admitted.
struct ScenarioPrefix {
  std::vector<InstantGraph> prefix;
  std::vector<InstantGraph> witness_cycle;
};

/// Seed-deterministic sampling of an admissible prefix of the given length.
/// Throws InvalidInput when the adversary admits nothing for this input.
ScenarioPrefix sample_prefix(const AdversarySpec& spec,
                             const std::optional<CSimplex>& input, int rounds,
                             std::uint64_t seed,
                             const std::vector<int>& participants);

}  // namespace topoadv
