#include "sdsynth/supervisor.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sdsynth/errors.hpp"

namespace sdsynth
{

SupervisorRealization::SupervisorRealization(const Automaton& plant, const Automaton& realization)
  : automaton_(realization.name())
{
  if (realization.num_events() != plant.num_events())
    throw ModelError("supervisor '" + realization.name() + "' declares " + std::to_string(realization.num_events())
                     + " events, plant '" + plant.name() + "' declares " + std::to_string(plant.num_events()));
  std::vector<EventId> to_plant(realization.num_events());
  for (EventId e = 0; e < realization.num_events(); ++e)
    {
      const auto& decl = realization.event(e);
      auto pe = plant.find_event(decl.name);
      if (!pe)
        throw ModelError("supervisor event '" + decl.name + "' is not a plant event");
      if (!(plant.event(*pe) == decl))
        throw ModelError("supervisor event '" + decl.name + "' has different attributes than in the plant");
      to_plant[e] = *pe;
    }
  for (const auto& ev : plant.events())
    automaton_.add_event(ev);
  for (StateId q = 0; q < realization.num_states(); ++q)
    {
      if (realization.state_name(q) == dead_state_name)
        throw ModelError("supervisor '" + realization.name() + "': state name 'dead' is reserved");
      automaton_.add_state(realization.state_name(q));
    }
  for (StateId q = 0; q < realization.num_states(); ++q)
    for (const auto& [e, dst] : realization.row(q))
      {
        EventId pe = to_plant[e];
        if (!plant.event(pe).observable && dst != q)
          throw ModelError("supervisor '" + realization.name() + "': unobservable event '" + plant.event(pe).name
                           + "' must be a self-loop at state '" + realization.state_name(q) + "'");
        automaton_.add_transition(q, pe, dst);
      }
  automaton_.set_initial(realization.initial());
}

ClosedLoopObserver
build_h(const Automaton& plant, const SupervisorRealization& r)
{
  Product loop = parallel(r.automaton(), plant);
  Observer obs = observer(loop.automaton);
  return {std::move(loop), std::move(obs)};
}

EventSet
RTilde::control_decision(StateId q) const
{
  return automaton.active(q);
}

RTilde
build_rtilde(const Automaton& plant, const SupervisorRealization& r)
{
  auto h = build_h(plant, r);
  const Automaton& ha = h.observer.automaton;
  const Automaton& ra = r.automaton();
  const auto& loop = h.closed_loop;

  RTilde rt;
  rt.automaton.set_name("rtilde(" + ra.name() + ")");
  for (const auto& ev : plant.events())
    rt.automaton.add_event(ev);

  // Name each observer state after its supervisor components; fall back to
  // the full pair set where two observer states would share a name.
  std::vector<std::string> names;
  std::map<std::string, int> uses;
  for (const auto& macro : h.observer.macro_states)
    {
      std::set<std::string> rs;
      for (StateId p : macro)
        rs.insert(ra.state_name(loop.pairs[p].first));
      std::string n;
      for (const auto& s : rs)
        n += (n.empty() ? "" : ",") + s;
      names.push_back(n);
      ++uses[n];
    }
  for (StateId q = 0; q < ha.num_states(); ++q)
    {
      std::string n = uses[names[q]] > 1 ? format_state_set(loop.automaton, h.observer.macro_states[q]) : names[q];
      rt.automaton.add_state(n);
      std::vector<std::pair<StateId, StateId>> org;
      for (StateId p : h.observer.macro_states[q])
        org.push_back(loop.pairs[p]);
      rt.origin.push_back(std::move(org));
    }
  rt.dead = rt.automaton.add_state(dead_state_name);
  rt.origin.emplace_back();
  rt.automaton.set_initial(ha.initial());

  EventSet uc = plant.uncontrollable_events();
  EventSet obs = plant.observable_events();
  EventSet uo = plant.unobservable_events();
  for (StateId q = 0; q < ha.num_states(); ++q)
    {
      for (const auto& [e, dst] : ha.row(q))
        rt.automaton.add_transition(q, e, dst);
      EventSet gamma_h = ha.active(q);
      ((uc & obs) - gamma_h).for_each([&](EventId e) { rt.automaton.add_transition(q, e, rt.dead); });
      (uc & uo).for_each([&](EventId e) { rt.automaton.add_transition(q, e, q); });
      EventSet feasible;
      for (StateId p : h.observer.macro_states[q])
        feasible |= loop.automaton.active(p);
      ((uo - uc) & feasible).for_each([&](EventId e) { rt.automaton.add_transition(q, e, q); });
    }
  uc.for_each([&](EventId e) { rt.automaton.add_transition(rt.dead, e, rt.dead); });
  return rt;
}

StateSet
nominal_reachable(const Automaton& plant, const SupervisorRealization& r)
{
  Product loop = parallel(r.automaton(), plant);
  std::vector<StateId> xs;
  for (const auto& [q, x] : loop.pairs)
    xs.push_back(x);
  return StateSet(std::move(xs));
}

void
check_rtilde(const Automaton& plant, const RTilde& rt)
{
  EventSet uc = plant.uncontrollable_events();
  for (StateId q = 0; q < rt.automaton.num_states(); ++q)
    {
      EventSet gamma = rt.control_decision(q);
      if (!uc.is_subset_of(gamma))
        throw InvariantError("rtilde: state '" + rt.automaton.state_name(q) + "' blocks an uncontrollable event");
      for (const auto& [e, dst] : rt.automaton.row(q))
        {
          if (q == rt.dead && (dst != rt.dead || !uc.contains(e)))
            throw InvariantError("rtilde: dead state must be absorbing on uncontrollable events only");
          if (dst == rt.dead && !uc.contains(e))
            throw InvariantError("rtilde: controllable transition into dead from '" + rt.automaton.state_name(q)
                                 + "'");
          if (!plant.event(e).observable && dst != q)
            throw InvariantError("rtilde: unobservable event moves state '" + rt.automaton.state_name(q) + "'");
        }
    }
}

} // namespace sdsynth
