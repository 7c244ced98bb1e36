#include "sdsynth/game_context.hpp"

#include "sdsynth/errors.hpp"

namespace sdsynth
{

GameContext::GameContext(Automaton plant_model, const Automaton& realization_model, EventSet compromised,
                         StateSet critical_states)
  : plant(std::move(plant_model)),
    realization(plant, realization_model),
    supervisor(build_rtilde(plant, realization)),
    edits(plant, std::move(compromised)),
    critical(std::move(critical_states))
{
  for (StateId x : critical)
    if (x >= plant.num_states())
      throw ModelError("critical state index out of range");
}

ContextPtr
make_context(Automaton plant, const Automaton& realization, EventSet compromised, StateSet critical)
{
  return std::make_shared<const GameContext>(std::move(plant), realization, std::move(compromised),
                                             std::move(critical));
}

StateSet
plant_states(const Automaton& plant, const std::vector<std::string>& names)
{
  StateSet out;
  for (const auto& n : names)
    {
      auto s = plant.find_state(n);
      if (!s)
        throw ModelError("unknown plant state '" + n + "'");
      out.insert(*s);
    }
  return out;
}

} // namespace sdsynth
