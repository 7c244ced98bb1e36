#include "brute_force.hpp"

#include <functional>

namespace sdsynth::test
{

std::set<EventString>
strings_of(const Automaton& a, int max_len)
{
  std::set<EventString> out;
  std::function<void(StateId, EventString&)> rec = [&](StateId x, EventString& s) {
    out.insert(s);
    if (static_cast<int>(s.size()) == max_len)
      return;
    for (EventId e = 0; e < a.num_events(); ++e)
      if (auto y = a.delta(x, e))
        {
          s.push_back(e);
          rec(*y, s);
          s.pop_back();
        }
  };
  EventString s;
  rec(a.initial(), s);
  return out;
}

std::set<EventString>
project_all(const Automaton& a, const std::set<EventString>& lang)
{
  std::set<EventString> out;
  for (const auto& s : lang)
    {
      EventString p;
      for (EventId e : s)
        if (a.event(e).observable)
          p.push_back(e);
      out.insert(p);
    }
  return out;
}

std::set<EventString>
up_to(const std::set<EventString>& lang, std::size_t max_len)
{
  std::set<EventString> out;
  for (const auto& s : lang)
    if (s.size() <= max_len)
      out.insert(s);
  return out;
}

StateSet
closure_by_iteration(const Automaton& a, const StateSet& start, const EventSet& gamma)
{
  std::vector<bool> in(a.num_states(), false);
  for (StateId x : start)
    in[x] = true;
  bool changed = true;
  while (changed)
    {
      changed = false;
      for (StateId x = 0; x < a.num_states(); ++x)
        for (EventId e = 0; e < a.num_events(); ++e)
          {
            auto y = a.delta(x, e);
            if (in[x] && y && !in[*y] && !a.event(e).observable && gamma.contains(e))
              {
                in[*y] = true;
                changed = true;
              }
          }
    }
  std::vector<StateId> xs;
  for (StateId x = 0; x < a.num_states(); ++x)
    if (in[x])
      xs.push_back(x);
  return StateSet(std::move(xs));
}

std::set<EventString>
supervised_strings(const Automaton& plant, const Automaton& sup, int max_len)
{
  std::set<EventString> out;
  for (const auto& s : strings_of(plant, max_len))
    {
      StateId q = sup.initial();
      bool ok = true;
      for (EventId e : s)
        {
          auto sup_e = sup.find_event(plant.event(e).name);
          if (!sup_e || !sup.delta(q, *sup_e))
            {
              ok = false;
              break;
            }
          if (plant.event(e).observable)
            q = *sup.delta(q, *sup_e);
        }
      if (ok)
        out.insert(s);
    }
  return out;
}

std::optional<std::size_t>
shortest_symbol_distance(const Ida& ida, NodeId goal, std::size_t max_depth)
{
  auto z0 = initial_e_state(ida);
  if (!z0)
    return std::nullopt;
  std::function<bool(NodeId, std::size_t)> reach = [&](NodeId z, std::size_t budget) {
    if (z == goal)
      return true;
    if (budget == 0)
      return false;
    for (const auto& e : ida.edges(z))
      for (const auto& h : ida.edges(e.target))
        if (reach(h.target, budget - 1))
          return true;
    return false;
  };
  for (std::size_t d = 0; d <= max_depth; ++d)
    if (reach(*z0, d))
      return d;
  return std::nullopt;
}

std::uint64_t
table_count_formula(const GameContext& ctx, const EnumerationBounds& b)
{
  std::uint64_t k = ctx.edits.compromised().size();
  // prefix-closed insertion sets containing the empty string, depth d
  std::function<std::uint64_t(int)> trees = [&](int d) -> std::uint64_t {
    if (d <= 0 || k == 0)
      return 1;
    std::uint64_t sub = 1 + trees(d - 1);
    std::uint64_t n = 1;
    for (std::uint64_t i = 0; i < k; ++i)
      n *= sub;
    return n;
  };
  std::uint64_t per = trees(b.reaction_length - 1);
  std::uint64_t total = per; // initial reaction
  // reachable observed histories, counted by walking the plant directly
  std::function<void(StateSet, int)> walk = [&](StateSet xs, int depth) {
    if (depth >= b.depth)
      return;
    for (EventId e = 0; e < ctx.plant.num_events(); ++e)
      {
        if (!ctx.plant.event(e).observable)
          continue;
        std::vector<StateId> next;
        for (StateId x : xs)
          if (auto y = ctx.plant.delta(x, e))
            next.push_back(*y);
        if (next.empty())
          continue;
        total *= ctx.edits.is_compromised(e) ? (1 + per) * (1 + per) - 1 : per;
        walk(closure_by_iteration(ctx.plant, StateSet(std::move(next)), ctx.plant.all_events()), depth + 1);
      }
  };
  walk(closure_by_iteration(ctx.plant, StateSet::singleton(ctx.plant.initial()), ctx.plant.all_events()), 0);
  return total;
}

} // namespace sdsynth::test
