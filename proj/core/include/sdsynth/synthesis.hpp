#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sdsynth/pruning.hpp"

namespace sdsynth
{

/// A run through E-states: `symbols[i]` leads from `states[i]` to
/// `states[i+1]` (control hops implied).
struct AttackPath
{
  std::vector<NodeId> states;
  SymbolString symbols;
};

/// First E-state in breadth-first order that meets the attack goal: a
/// non-empty estimate inside the critical set (strong) or touching it (weak).
std::optional<NodeId> find_goal(const Ida& pruned, Strength strength);

/// Shortest symbol path from the initial E-state to `goal`; ties broken by
/// label order.
std::optional<AttackPath> shortest_path(const Ida& pruned, NodeId goal);

struct Reaction
{
  SymbolString symbols;
  StateId end = 0;
};

/// The synthesized attacker as an automaton over observable events and edit
/// symbols. Each state stands for an E-state of the pruned structure.
struct AttackFunction
{
  Automaton automaton{"attack"};
  AttackMode mode = AttackMode::interruptible;
  std::optional<int> n_a;
  /// symbol carried by each event of `automaton`
  std::vector<Symbol> symbol_of;
  /// E-state of the pruned structure per automaton state; empty when loaded
  /// from a file
  std::vector<NodeId> origin;

  /// Reaction to the start of the run. Interruptible attackers may stop
  /// anywhere along their insertion chains, so every prefix is listed.
  std::vector<Reaction> initial_reactions() const;

  /// Reactions to observing `e` in `state`; nullopt when the attacker has no
  /// answer there, or when a deterministic insertion chain never stops.
  std::optional<std::vector<Reaction>> react(StateId state, EventId e) const;

  std::optional<StateId> step(StateId state, Symbol s) const;

  /// Extends `start` by insertions; empty when a deterministic chain cycles.
  std::vector<Reaction> chains(const Reaction& start) const;
};

/// The automaton alphabet for a context: per observable event the event
/// itself, then its deletion and insertion when compromised.
Automaton attack_alphabet(const GameContext& ctx, const std::string& name);

/// Builds the attacker from the pruned structure and a path to the goal.
AttackFunction expand_path(const Ida& pruned, const std::vector<bool>& flagged, const AttackPath& path,
                           AttackMode mode, std::optional<int> n_a, const ScenarioOptions& options = {});

/// Lets every observed event through and never inserts.
AttackFunction relay_attack(const GameContext& ctx);

/// Reads an attacker automaton whose event names are symbol names of `ctx`.
AttackFunction attack_from_automaton(const GameContext& ctx, Automaton a, AttackMode mode, std::optional<int> n_a);
AttackFunction load_attack(const GameContext& ctx, const std::filesystem::path& path, AttackMode mode,
                           std::optional<int> n_a);

/// Problems with the reaction shape the mode demands: insertion chains that
/// never end (deterministic modes) or exceed the bound.
std::vector<std::string> check_mode_shape(const AttackFunction& f, bool bound_initial = true);

struct DecisionRow
{
  EventString observed;
  /// nullopt for the initial reaction
  std::optional<EventId> event;
  std::vector<SymbolString> reactions;
  bool defined = true;
};

/// Reactions per observed history up to `depth` events.
std::vector<DecisionRow> decision_table(const AttackFunction& f, const GameContext& ctx, int depth);
std::string format_decision_table(const std::vector<DecisionRow>& rows, const GameContext& ctx);

struct SynthesisResult
{
  bool feasible = false;
  std::optional<NodeId> goal;
  std::optional<AttackPath> path;
  std::optional<AttackFunction> attack;
};

SynthesisResult synthesize(const PruneResult& pruned, AttackMode mode, std::optional<int> n_a, Strength strength,
                           const ScenarioOptions& options = {});

/// Every structure built along the way.
struct Pipeline
{
  std::shared_ptr<const Ida> aida;
  /// counter-augmented structure, bounded mode only
  std::shared_ptr<const Ida> baida;
  PruneResult pruned;
  SynthesisResult synthesis;
};

Pipeline run_pipeline(const ContextPtr& ctx, AttackMode mode, std::optional<int> n_a, Strength strength,
                      const ScenarioOptions& options = {});

} // namespace sdsynth
