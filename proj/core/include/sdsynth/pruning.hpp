#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sdsynth/ida.hpp"
#include "sdsynth/scenario.hpp"

namespace sdsynth
{

/// Attacker moves (compromised events, insertions, deletions) are the
/// controllable part of the game; control decisions and events the attacker
/// cannot touch are not.
bool is_attacker_controllable(const GameContext& ctx, const Label& label);

struct PruneResult
{
  Ida structure;
  /// Nodes that survive only because the attacker can insert before the
  /// plant reacts. Indexed like `structure`.
  std::vector<bool> flagged;
  int rounds = 0;
};

/// Removes every node whose supervisor state is `dead`, then trims.
Ida remove_detected(const Ida& aida);

/// Controllability and race-freedom fixpoint for attackers that can be
/// interrupted after every edit.
PruneResult prune_isda(const Ida& aida, const ScenarioOptions& options = {});

/// Fixpoint for deterministic attackers with unbounded reactions; states
/// that must race are flagged and keep only insertions.
PruneResult prune_usda(const Ida& aida, const ScenarioOptions& options = {});

/// Fixpoint over the counter-augmented structure for reactions of at most
/// `n_a` symbols.
PruneResult prune_bsda(const Ida& baida, int n_a, const ScenarioOptions& options = {});

PruneResult prune(const Ida& input, AttackMode mode, std::optional<int> n_a, const ScenarioOptions& options = {});

/// The node of the unpruned, uncounted structure `n` descends from.
std::pair<const Ida*, NodeId> reference_node(const Ida& ida, NodeId n);

/// Every uncontrollable move of the reference structure survives at `n`.
bool is_meta_controllable(const Ida& pruned, NodeId n);

} // namespace sdsynth
