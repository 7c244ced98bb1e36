#pragma once

#include <memory>
#include <vector>

#include "sdsynth/automaton.hpp"
#include "sdsynth/edit_alphabet.hpp"
#include "sdsynth/supervisor.hpp"

namespace sdsynth
{

/// Everything the attack game is played over. Pinned in memory because the
/// edit alphabet refers back to the plant.
struct GameContext
{
  GameContext(Automaton plant_model, const Automaton& realization_model, EventSet compromised, StateSet critical_states);
  GameContext(const GameContext&) = delete;
  GameContext& operator=(const GameContext&) = delete;

  Automaton plant;
  SupervisorRealization realization;
  RTilde supervisor;
  EditAlphabet edits;
  StateSet critical;

  bool is_goal(const StateSet& estimate) const { return !estimate.empty() && estimate.is_subset_of(critical); }
};

using ContextPtr = std::shared_ptr<const GameContext>;

ContextPtr make_context(Automaton plant, const Automaton& realization, EventSet compromised, StateSet critical);

/// Looks up state names of the plant; throws ModelError on unknown names.
StateSet plant_states(const Automaton& plant, const std::vector<std::string>& names);

} // namespace sdsynth
