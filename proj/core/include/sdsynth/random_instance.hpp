#pragma once

#include <cstdint>

#include "sdsynth/game_context.hpp"

namespace sdsynth
{

struct InstanceShape
{
  int max_states = 5;
  int max_events = 4;
  int max_observable = 4;
  int max_compromised = 4;
  /// probability that a (state, event) pair gets a transition
  double density = 0.5;
};

/// |X| <= 5, |Sigma| <= 4.
InstanceShape small_shape();
/// |X| <= 3, at most two observable events.
InstanceShape tiny_shape();
/// A seeded plant/supervisor pair with at least one critical state that the
/// plant can reach but the nominal loop never does. Critical states have no
/// outgoing transitions.
struct RandomInstance
{
  std::uint64_t seed = 0;
  Automaton plant;
  Automaton supervisor;
  EventSet compromised;
  StateSet critical;
  ContextPtr context;
};

RandomInstance random_instance(std::uint64_t seed, const InstanceShape& shape = small_shape());

} // namespace sdsynth
