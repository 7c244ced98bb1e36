#include <doctest.h>

#include "sdsynth/model_io.hpp"
#include "sdsynth/random_instance.hpp"
#include "sdsynth/scenario.hpp"

using namespace sdsynth;

TEST_CASE("same seed, same instance")
{
  for (std::uint64_t seed = 1; seed <= 20; ++seed)
    {
      auto x = random_instance(seed);
      auto y = random_instance(seed);
      CHECK(automaton_to_text(x.plant) == automaton_to_text(y.plant));
      CHECK(automaton_to_text(x.supervisor) == automaton_to_text(y.supervisor));
      CHECK(x.compromised == y.compromised);
      CHECK(x.critical == y.critical);
    }
  CHECK(automaton_to_text(random_instance(1).plant) != automaton_to_text(random_instance(2).plant));
}

TEST_CASE("shape and scenario assumptions")
{
  for (const auto& shape : {small_shape(), tiny_shape()})
    for (std::uint64_t seed = 1; seed <= 100; ++seed)
      {
        auto inst = random_instance(seed, shape);
        const auto& ctx = *inst.context;
        CHECK(inst.plant.num_states() <= static_cast<std::size_t>(shape.max_states));
        CHECK(inst.plant.num_events() <= static_cast<std::size_t>(shape.max_events));
        CHECK(inst.plant.observable_events().size() <= static_cast<std::size_t>(shape.max_observable));
        CHECK_FALSE(inst.compromised.empty());
        CHECK(inst.compromised.size() <= static_cast<std::size_t>(shape.max_compromised));
        CHECK(inst.compromised.is_subset_of(inst.plant.observable_events()));
        CHECK_FALSE(inst.critical.empty());
        CHECK(nominal_critical_reachable(ctx).empty());
        for (StateId x : inst.critical)
          CHECK(inst.plant.row(x).empty());
        // unobservable supervisor moves are self-loops
        for (StateId q = 0; q < inst.supervisor.num_states(); ++q)
          for (const auto& [e, t] : inst.supervisor.row(q))
            if (!inst.supervisor.event(e).observable)
              CHECK(t == q);
      }
}
