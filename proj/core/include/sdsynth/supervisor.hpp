#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sdsynth/automaton.hpp"

namespace sdsynth
{

/// Reserved name of the detection state of the completed supervisor.
inline constexpr const char* dead_state_name = "dead";

/// A checked supervisor automaton whose events are indexed exactly like the
/// plant's. Construction rejects: alphabet mismatch, a state named `dead`,
/// and enabled unobservable events that are not self-loops.
class SupervisorRealization
{
public:
  SupervisorRealization(const Automaton& plant, const Automaton& realization);

  const Automaton& automaton() const noexcept { return automaton_; }
  EventSet control_decision(StateId q) const { return automaton_.active(q); }

private:
  Automaton automaton_;
};

/// Observer of the nominal closed loop R||G.
struct ClosedLoopObserver
{
  Product closed_loop;
  Observer observer;
};

ClosedLoopObserver build_h(const Automaton& plant, const SupervisorRealization& r);

/// The supervisor completed with an absorbing `dead` state reached by
/// uncontrollable observations the nominal loop never produces.
struct RTilde
{
  Automaton automaton;
  StateId dead = 0;
  /// (supervisor state, plant state) pairs behind every non-dead state.
  std::vector<std::vector<std::pair<StateId, StateId>>> origin;

  EventSet control_decision(StateId q) const;
  std::optional<StateId> step(StateId q, EventId e) const { return automaton.delta(q, e); }
  bool is_dead(StateId q) const noexcept { return q == dead; }
};

RTilde build_rtilde(const Automaton& plant, const SupervisorRealization& r);

/// Plant states reachable in the nominal closed loop.
StateSet nominal_reachable(const Automaton& plant, const SupervisorRealization& r);

/// Throws InvariantError if one of the structural guarantees of R-tilde fails.
void check_rtilde(const Automaton& plant, const RTilde& rt);

} // namespace sdsynth
