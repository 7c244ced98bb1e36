#include "fixture.hpp"

#include <stdexcept>

#include "sdsynth/model_io.hpp"

namespace sdsynth::test
{

std::filesystem::path
scenario_dir()
{
  return SDSYNTH_SCENARIO_DIR;
}

Scenario
fixture(const std::string& file)
{
  return load_scenario(scenario_dir() / "example1" / file);
}

namespace
{

std::optional<NodeId>
lookup(const Ida& ida, Side side, const std::string& plant, const std::string& sup, int counter)
{
  const auto& ctx = ida.context();
  StateSet xs = plant_states(ctx.plant, split_list(plant));
  auto q = ctx.supervisor.automaton.find_state(sup);
  if (!q)
    return std::nullopt;
  return ida.find(IdaNode{side, {xs, *q}, counter});
}

} // namespace

NodeId
find_node(const Ida& ida, Side side, const std::string& plant, const std::string& sup, int counter)
{
  auto n = lookup(ida, side, plant, sup, counter);
  if (!n)
    throw std::runtime_error("no node (" + plant + "," + sup + ")");
  return *n;
}

bool
has_node(const Ida& ida, Side side, const std::string& plant, const std::string& sup, int counter)
{
  return lookup(ida, side, plant, sup, counter).has_value();
}

} // namespace sdsynth::test
