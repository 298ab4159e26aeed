#include "topoadv/adversary.hpp"

#include <algorithm>
#include <random>

#include "topoadv/errors.hpp"

namespace topoadv {

std::vector<int> UPWord::participants() const {
  if (!head.empty()) return head.front().participants;
  if (!cycle.empty()) return cycle.front().participants;
  throw InvalidInput("word has no letters");
}

const InstantGraph& UPWord::letter(std::size_t r) const {
  if (r == 0) throw InvalidInput("letter positions start at 1");
  if (r <= head.size()) return head[r - 1];
  if (cycle.empty()) throw InvalidInput("word has no cycle");
  return cycle[(r - head.size() - 1) % cycle.size()];
}

void validate(const UPWord& w) {
  if (w.cycle.empty()) throw InvalidInput("cycle must be nonempty");
  const auto& pi = w.participants();
  for (const auto& g : w.head) {
    validate(g);
    if (g.participants != pi) throw InvalidInput("letters disagree on participants");
  }
  for (const auto& g : w.cycle) {
    validate(g);
    if (g.participants != pi) throw InvalidInput("letters disagree on participants");
  }
}

namespace {

/// The letters occurring at positions > r: the tail of the head, plus the
/// whole cycle (each cycle letter recurs beyond any position).
std::vector<const InstantGraph*> letters_past(const UPWord& w, int r) {
  std::vector<const InstantGraph*> out;
  for (std::size_t i = static_cast<std::size_t>(std::max(r, 0)); i < w.head.size(); ++i)
    out.push_back(&w.head[i]);
  for (const auto& g : w.cycle) out.push_back(&g);
  return out;
}

}  // namespace

std::set<int> q_of(const UPWord& w) {
  validate(w);
  std::set<int> q;
  for (int p : w.participants()) {
    bool seen_by_all = true;
    for (int obs : w.participants()) {
      bool seen = false;
      for (const auto& g : w.cycle) seen = seen || g.in(obs).count(p);
      if (!seen) {
        seen_by_all = false;
        break;
      }
    }
    if (seen_by_all) q.insert(p);
  }
  return q;
}

std::set<int> k_r(const UPWord& w, int r) {
  validate(w);
  if (r < 0) throw InvalidInput("round must be nonnegative");
  const auto letters = letters_past(w, r);
  std::set<int> k;
  for (int p : w.participants()) {
    for (int obs : w.participants()) {
      bool ever_seen = false;
      for (const auto* g : letters) ever_seen = ever_seen || g->in(obs).count(p);
      if (!ever_seen) {
        k.insert(p);
        break;
      }
    }
  }
  return k;
}

bool CoreCollection::contains(const std::set<int>& s) const {
  return std::find(sets.begin(), sets.end(), s) != sets.end();
}

void validate(const CoreCollection& p) {
  if (!p.contains({})) throw InvalidInput("core collection must contain the empty set");
  for (const auto& s : p.sets)
    for (int x : s) {
      std::set<int> smaller = s;
      smaller.erase(x);
      if (!p.contains(smaller))
        throw InvalidInput("core collection must be inclusion-closed");
    }
}

CoreCollection cores_up_to_size(const std::vector<int>& participants, int t) {
  if (t < 0) throw InvalidInput("core size bound must be nonnegative");
  CoreCollection out;
  const std::size_t n = participants.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::set<int> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint64_t{1} << i)) s.insert(participants[i]);
    if (static_cast<int>(s.size()) <= t) out.sets.push_back(std::move(s));
  }
  std::sort(out.sets.begin(), out.sets.end(),
            [](const std::set<int>& a, const std::set<int>& b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
  return out;
}

bool AdversarySpec::needs_input() const {
  return std::holds_alternative<ConditionBasedSpec>(variant) ||
         std::holds_alternative<InputDependentSpec>(variant);
}

namespace {

std::set<int> crashed(const UPWord& w) {
  std::set<int> out;
  const auto q = q_of(w);
  for (int p : w.participants())
    if (!q.count(p)) out.insert(p);
  return out;
}

bool unseen_by_live_past(const UPWord& w, int r) {
  const auto q = q_of(w);
  const auto dead = crashed(w);
  for (const auto* g : letters_past(w, r))
    for (int obs : q)
      for (int p : dead)
        if (g->in(obs).count(p)) return false;
  return true;
}

/// The first facet of the condition containing the simplex, if any.
std::optional<CSimplex> containing_facet(const Condition& c, const CSimplex& s) {
  for (const auto& m : c.members) {
    if (!csimplex_face(s, m)) continue;
    bool maximal = true;
    for (const auto& other : c.members)
      if (other != m && csimplex_face(m, other)) {
        maximal = false;
        break;
      }
    if (maximal) return m;
  }
  return std::nullopt;
}

}  // namespace

bool membership(const AdversarySpec& spec, const std::optional<CSimplex>& input,
                const UPWord& w) {
  if (spec.needs_input() != input.has_value())
    throw InvalidInput("input must be supplied exactly for input-keyed specs");
  validate(w);
  const std::size_t count = w.participants().size();
  return std::visit(
      [&](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, IISSpec>) {
          return true;
        } else if constexpr (std::is_same_v<T, TResilientSpec>) {
          if (v.t < 0) throw InvalidInput("resilience bound must be nonnegative");
          return q_of(w).size() + static_cast<std::size_t>(v.t) >= count;
        } else if constexpr (std::is_same_v<T, CoreResilientSpec>) {
          validate(v.p);
          return v.p.contains(crashed(w));
        } else if constexpr (std::is_same_v<T, RestrictedTResilientSpec>) {
          if (v.t < 0) throw InvalidInput("resilience bound must be nonnegative");
          if (v.r < 0) throw InvalidInput("restriction round must be nonnegative");
          return k_r(w, v.r).size() <= static_cast<std::size_t>(v.t);
        } else if constexpr (std::is_same_v<T, RestrictedCoreSpec>) {
          validate(v.p);
          if (v.r < 0) throw InvalidInput("restriction round must be nonnegative");
          return v.p.contains(crashed(w)) && unseen_by_live_past(w, v.r);
        } else if constexpr (std::is_same_v<T, ConditionBasedSpec>) {
          if (!v.condition.is_member(*input))
            throw InputOutsideCondition("input is not a member of the condition");
          if (!v.inner) throw InvalidInput("condition-based spec lacks an inner spec");
          return membership(*v.inner, v.inner->needs_input() ? input : std::nullopt, w);
        } else {
          static_assert(std::is_same_v<T, InputDependentSpec>);
          auto facet = containing_facet(v.condition, *input);
          if (!facet)
            throw InputOutsideCondition("input is not inside the condition");
          auto inner = v.by_input(*facet);
          if (!inner) throw InvalidInput("input-dependent spec maps to no inner spec");
          return membership(*inner, inner->needs_input() ? input : std::nullopt, w);
        }
      },
      spec.variant);
}

namespace {

/// An instant graph whose live part is an arbitrary ordered partition and
/// whose dead processes come last, hearing everyone.
InstantGraph letter_with_dead(const std::vector<std::vector<int>>& live_blocks,
                              const std::set<int>& dead) {
  std::vector<std::vector<int>> blocks = live_blocks;
  if (!dead.empty()) blocks.emplace_back(dead.begin(), dead.end());
  return from_ordered_partition(blocks);
}

std::vector<std::vector<int>> random_ordered_partition(std::vector<int> items,
                                                       std::mt19937_64& rng) {
  std::shuffle(items.begin(), items.end(), rng);
  std::vector<std::vector<int>> blocks;
  std::size_t i = 0;
  while (i < items.size()) {
    std::uniform_int_distribution<std::size_t> len(1, items.size() - i);
    const std::size_t take = len(rng);
    blocks.emplace_back(items.begin() + i, items.begin() + i + take);
    i += take;
  }
  return blocks;
}

/// The crash set the sampled scenario commits to, drawn from what the
/// adversary tolerates.
std::set<int> pick_crash_set(const AdversarySpec& spec,
                             const std::vector<int>& participants,
                             std::mt19937_64& rng) {
  return std::visit(
      [&](const auto& v) -> std::set<int> {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, IISSpec>) {
          return {};
        } else if constexpr (std::is_same_v<T, TResilientSpec> ||
                             std::is_same_v<T, RestrictedTResilientSpec>) {
          if (v.t < 0 || v.t >= static_cast<int>(participants.size()))
            throw InvalidInput("resilience bound out of range");
          std::uniform_int_distribution<int> size(0, v.t);
          std::vector<int> pool = participants;
          std::shuffle(pool.begin(), pool.end(), rng);
          return std::set<int>(pool.begin(), pool.begin() + size(rng));
        } else if constexpr (std::is_same_v<T, CoreResilientSpec> ||
                             std::is_same_v<T, RestrictedCoreSpec>) {
          validate(v.p);
          std::uniform_int_distribution<std::size_t> pick(0, v.p.sets.size() - 1);
          std::set<int> s = v.p.sets[pick(rng)];
          if (static_cast<int>(s.size()) == static_cast<int>(participants.size()))
            return {};
          return s;
        } else {
          throw InvalidInput("crash set undefined for input-keyed specs");
        }
      },
      spec.variant);
}

}  // namespace

ScenarioPrefix sample_prefix(const AdversarySpec& spec,
                             const std::optional<CSimplex>& input, int rounds,
                             std::uint64_t seed,
                             const std::vector<int>& participants) {
  if (rounds < 0) throw InvalidInput("round count must be nonnegative");
  if (participants.empty()) throw InvalidInput("no participants");
  if (spec.needs_input() != input.has_value())
    throw InvalidInput("input must be supplied exactly for input-keyed specs");

  // Input-keyed specs delegate to the inner spec picked by the input.
  if (const auto* cb = std::get_if<ConditionBasedSpec>(&spec.variant)) {
    if (!cb->condition.is_member(*input))
      throw InputOutsideCondition("input is not a member of the condition");
    if (!cb->inner) throw InvalidInput("condition-based spec lacks an inner spec");
    auto inner_input = cb->inner->needs_input() ? input : std::nullopt;
    auto out = sample_prefix(*cb->inner, inner_input, rounds, seed, participants);
    UPWord w{out.prefix, out.witness_cycle};
    if (!membership(spec, input, w)) throw InvalidInput("spec admits no execution");
    return out;
  }
  if (const auto* id = std::get_if<InputDependentSpec>(&spec.variant)) {
    auto facet = containing_facet(id->condition, *input);
    if (!facet) throw InputOutsideCondition("input is not inside the condition");
    auto inner = id->by_input(*facet);
    if (!inner) throw InvalidInput("input-dependent spec maps to no inner spec");
    auto inner_input = inner->needs_input() ? input : std::nullopt;
    auto out = sample_prefix(*inner, inner_input, rounds, seed, participants);
    UPWord w{out.prefix, out.witness_cycle};
    if (!membership(spec, input, w)) throw InvalidInput("spec admits no execution");
    return out;
  }

  std::mt19937_64 rng(seed);
  const std::set<int> dead = pick_crash_set(spec, participants, rng);
  std::vector<int> live;
  for (int p : participants)
    if (!dead.count(p)) live.push_back(p);

  ScenarioPrefix out;
  for (int i = 0; i < rounds; ++i)
    out.prefix.push_back(letter_with_dead(random_ordered_partition(live, rng), dead));
  out.witness_cycle.push_back(letter_with_dead({live}, dead));

  UPWord w{out.prefix, out.witness_cycle};
  if (!membership(spec, std::nullopt, w))
    throw InvalidInput("spec admits no execution");
  return out;
}

}  // namespace topoadv
