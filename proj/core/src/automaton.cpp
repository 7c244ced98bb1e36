#include "sdsynth/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "sdsynth/errors.hpp"

namespace sdsynth
{

StateSet::StateSet(std::initializer_list<StateId> states) : members_(states)
{
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

StateSet::StateSet(std::vector<StateId> states) : members_(std::move(states))
{
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

void
StateSet::insert(StateId s)
{
  auto it = std::lower_bound(members_.begin(), members_.end(), s);
  if (it == members_.end() || *it != s)
    members_.insert(it, s);
}

bool
StateSet::contains(StateId s) const noexcept
{
  return std::binary_search(members_.begin(), members_.end(), s);
}

bool
StateSet::is_subset_of(const StateSet& other) const noexcept
{
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

bool
StateSet::intersects(const StateSet& other) const noexcept
{
  auto a = members_.begin();
  auto b = other.members_.begin();
  while (a != members_.end() && b != other.members_.end())
    {
      if (*a == *b)
        return true;
      if (*a < *b)
        ++a;
      else
        ++b;
    }
  return false;
}

StateId
Automaton::add_state(std::string name)
{
  if (name.empty())
    throw ModelError("automaton '" + name_ + "': empty state name");
  if (state_index_.count(name) != 0)
    throw ModelError("automaton '" + name_ + "': duplicate state '" + name + "'");
  auto id = static_cast<StateId>(state_names_.size());
  state_index_.emplace(name, id);
  state_names_.push_back(std::move(name));
  rows_.emplace_back();
  return id;
}

EventId
Automaton::add_event(EventDecl decl)
{
  if (decl.name.empty())
    throw ModelError("automaton '" + name_ + "': empty event name");
  if (event_index_.count(decl.name) != 0)
    throw ModelError("automaton '" + name_ + "': duplicate event '" + decl.name + "'");
  auto id = static_cast<EventId>(events_.size());
  event_index_.emplace(decl.name, id);
  events_.push_back(std::move(decl));
  return id;
}

void
Automaton::add_transition(StateId src, EventId e, StateId dst)
{
  check_state(src);
  check_state(dst);
  check_event(e);
  auto& r = rows_[src];
  auto it = std::lower_bound(r.begin(), r.end(), e, [](const auto& p, EventId v) { return p.first < v; });
  if (it != r.end() && it->first == e)
    {
      if (it->second != dst)
        throw ModelError("automaton '" + name_ + "': nondeterministic transition from '" + state_names_[src]
                         + "' on '" + events_[e].name + "'");
      return;
    }
  r.insert(it, {e, dst});
}

void
Automaton::set_initial(StateId s)
{
  check_state(s);
  initial_ = s;
}

std::size_t
Automaton::num_transitions() const noexcept
{
  std::size_t n = 0;
  for (const auto& r : rows_)
    n += r.size();
  return n;
}

const std::string&
Automaton::state_name(StateId s) const
{
  check_state(s);
  return state_names_[s];
}

const EventDecl&
Automaton::event(EventId e) const
{
  check_event(e);
  return events_[e];
}

std::optional<StateId>
Automaton::find_state(std::string_view name) const
{
  auto it = state_index_.find(std::string(name));
  if (it == state_index_.end())
    return std::nullopt;
  return it->second;
}

std::optional<EventId>
Automaton::find_event(std::string_view name) const
{
  auto it = event_index_.find(std::string(name));
  if (it == event_index_.end())
    return std::nullopt;
  return it->second;
}

EventId
Automaton::event_id(std::string_view name) const
{
  auto e = find_event(name);
  if (!e)
    throw ModelError("automaton '" + name_ + "': unknown event '" + std::string(name) + "'");
  return *e;
}

StateId
Automaton::state_id(std::string_view name) const
{
  auto s = find_state(name);
  if (!s)
    throw ModelError("automaton '" + name_ + "': unknown state '" + std::string(name) + "'");
  return *s;
}

StateId
Automaton::initial() const
{
  if (!initial_)
    throw ModelError("automaton '" + name_ + "' has no initial state");
  return *initial_;
}

std::optional<StateId>
Automaton::delta(StateId s, EventId e) const
{
  check_state(s);
  const auto& r = rows_[s];
  auto it = std::lower_bound(r.begin(), r.end(), e, [](const auto& p, EventId v) { return p.first < v; });
  if (it != r.end() && it->first == e)
    return it->second;
  return std::nullopt;
}

const Automaton::Row&
Automaton::row(StateId s) const
{
  check_state(s);
  return rows_[s];
}

EventSet
Automaton::active(StateId s) const
{
  EventSet out;
  for (const auto& [e, dst] : row(s))
    out.insert(e);
  return out;
}

EventSet
Automaton::all_events() const
{
  EventSet out;
  for (EventId e = 0; e < events_.size(); ++e)
    out.insert(e);
  return out;
}

EventSet
Automaton::observable_events() const
{
  EventSet out;
  for (EventId e = 0; e < events_.size(); ++e)
    if (events_[e].observable)
      out.insert(e);
  return out;
}

EventSet
Automaton::unobservable_events() const
{
  return all_events() - observable_events();
}

EventSet
Automaton::controllable_events() const
{
  EventSet out;
  for (EventId e = 0; e < events_.size(); ++e)
    if (events_[e].controllable)
      out.insert(e);
  return out;
}

EventSet
Automaton::uncontrollable_events() const
{
  return all_events() - controllable_events();
}

void
Automaton::check_state(StateId s) const
{
  if (s >= state_names_.size())
    throw ModelError("automaton '" + name_ + "': unknown state index " + std::to_string(s));
}

void
Automaton::check_event(EventId e) const
{
  if (e >= events_.size())
    throw ModelError("automaton '" + name_ + "': unknown event index " + std::to_string(e));
}

EventSet
active_events(const Automaton& a, const StateSet& states)
{
  EventSet out;
  for (StateId s : states)
    out |= a.active(s);
  return out;
}

std::optional<StateId>
step(const Automaton& a, StateId x, std::span<const EventId> s)
{
  std::optional<StateId> cur = x;
  for (EventId e : s)
    {
      cur = a.delta(*cur, e);
      if (!cur)
        return std::nullopt;
    }
  return cur;
}

EventString
project(const Automaton& a, std::span<const EventId> s)
{
  EventString out;
  for (EventId e : s)
    if (a.event(e).observable)
      out.push_back(e);
  return out;
}

StateSet
unobservable_reach(const Automaton& a, const StateSet& states, const EventSet& gamma)
{
  EventSet moves = gamma & a.unobservable_events();
  std::vector<StateId> seen(states.begin(), states.end());
  std::vector<bool> mark(a.num_states(), false);
  for (StateId s : seen)
    mark[s] = true;
  for (std::size_t i = 0; i < seen.size(); ++i)
    for (const auto& [e, dst] : a.row(seen[i]))
      if (moves.contains(e) && !mark[dst])
        {
          mark[dst] = true;
          seen.push_back(dst);
        }
  return StateSet(std::move(seen));
}

StateSet
next_states(const Automaton& a, const StateSet& states, EventId e)
{
  if (!a.event(e).observable)
    throw ModelError("next_states: event '" + a.event(e).name + "' is unobservable");
  std::vector<StateId> out;
  for (StateId s : states)
    if (auto d = a.delta(s, e))
      out.push_back(*d);
  return StateSet(std::move(out));
}

Observer
observer(const Automaton& a)
{
  Observer obs{Automaton("obs(" + a.name() + ")"), {}};
  for (const auto& ev : a.events())
    obs.automaton.add_event(ev);

  std::map<StateSet, StateId> index;
  std::deque<StateId> queue;
  auto intern = [&](StateSet set) {
    auto it = index.find(set);
    if (it != index.end())
      return it->second;
    StateId id = obs.automaton.add_state(format_state_set(a, set));
    index.emplace(set, id);
    obs.macro_states.push_back(std::move(set));
    queue.push_back(id);
    return id;
  };

  EventSet all = a.all_events();
  StateId init = intern(unobservable_reach(a, StateSet::singleton(a.initial()), all));
  obs.automaton.set_initial(init);

  auto observables = a.observable_events().to_vector();
  while (!queue.empty())
    {
      StateId cur = queue.front();
      queue.pop_front();
      for (EventId e : observables)
        {
          StateSet nx = next_states(a, obs.macro_states[cur], e);
          if (nx.empty())
            continue;
          StateId dst = intern(unobservable_reach(a, nx, all));
          obs.automaton.add_transition(cur, e, dst);
        }
    }
  return obs;
}

Product
parallel(const Automaton& a, const Automaton& b)
{
  Product p{Automaton("(" + a.name() + "||" + b.name() + ")"), {}};
  // event ids of the product: a's events in order, then b's private ones
  std::vector<std::optional<EventId>> from_a(a.num_events()), from_b(b.num_events());
  for (EventId e = 0; e < a.num_events(); ++e)
    {
      const auto& decl = a.event(e);
      if (auto other = b.find_event(decl.name))
        {
          const auto& od = b.event(*other);
          if (od.observable != decl.observable || od.controllable != decl.controllable)
            throw ModelError("parallel: event '" + decl.name + "' has different attributes in '" + a.name()
                             + "' and '" + b.name() + "'");
        }
      from_a[e] = p.automaton.add_event(decl);
    }
  for (EventId e = 0; e < b.num_events(); ++e)
    {
      const auto& decl = b.event(e);
      if (auto shared = a.find_event(decl.name))
        from_b[e] = from_a[*shared];
      else
        from_b[e] = p.automaton.add_event(decl);
    }

  std::vector<std::optional<EventId>> a_of(p.automaton.num_events()), b_of(p.automaton.num_events());
  for (EventId e = 0; e < a.num_events(); ++e)
    a_of[*from_a[e]] = e;
  for (EventId e = 0; e < b.num_events(); ++e)
    b_of[*from_b[e]] = e;

  std::map<std::pair<StateId, StateId>, StateId> index;
  std::deque<StateId> queue;
  auto intern = [&](StateId x, StateId y) {
    auto key = std::make_pair(x, y);
    auto it = index.find(key);
    if (it != index.end())
      return it->second;
    StateId id = p.automaton.add_state("(" + a.state_name(x) + "," + b.state_name(y) + ")");
    index.emplace(key, id);
    p.pairs.push_back(key);
    queue.push_back(id);
    return id;
  };

  p.automaton.set_initial(intern(a.initial(), b.initial()));
  while (!queue.empty())
    {
      StateId cur = queue.front();
      queue.pop_front();
      auto [x, y] = p.pairs[cur];
      for (EventId e = 0; e < p.automaton.num_events(); ++e)
        {
          std::optional<StateId> nx = x, ny = y;
          if (a_of[e])
            nx = a.delta(x, *a_of[e]);
          if (b_of[e])
            ny = b.delta(y, *b_of[e]);
          if (!nx || !ny)
            continue;
          StateId dst = intern(*nx, *ny);
          p.automaton.add_transition(cur, e, dst);
        }
    }
  return p;
}

std::vector<StateId>
accessible_states(const Automaton& a)
{
  std::vector<StateId> order;
  if (!a.has_initial())
    return order;
  std::vector<bool> seen(a.num_states(), false);
  order.push_back(a.initial());
  seen[a.initial()] = true;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (const auto& [e, dst] : a.row(order[i]))
      if (!seen[dst])
        {
          seen[dst] = true;
          order.push_back(dst);
        }
  return order;
}

Trimmed
trim_accessible_map(const Automaton& a)
{
  Trimmed t{Automaton(a.name()), {}};
  for (const auto& ev : a.events())
    t.automaton.add_event(ev);
  if (!a.has_initial())
    return t;

  auto order = accessible_states(a);
  std::vector<bool> keep(a.num_states(), false);
  for (StateId s : order)
    keep[s] = true;
  // keep declaration order among the surviving states
  std::vector<StateId> remap(a.num_states(), 0);
  for (StateId s = 0; s < a.num_states(); ++s)
    if (keep[s])
      {
        remap[s] = t.automaton.add_state(a.state_name(s));
        t.kept.push_back(s);
      }
  for (StateId s : t.kept)
    for (const auto& [e, dst] : a.row(s))
      t.automaton.add_transition(remap[s], e, remap[dst]);
  t.automaton.set_initial(remap[a.initial()]);
  return t;
}

Automaton
trim_accessible(const Automaton& a)
{
  return trim_accessible_map(a).automaton;
}

std::string
format_state_set(const Automaton& a, const StateSet& states)
{
  std::vector<std::string> names;
  names.reserve(states.size());
  for (StateId s : states)
    names.push_back(a.state_name(s));
  std::sort(names.begin(), names.end());
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i)
    {
      if (i != 0)
        out += ',';
      out += names[i];
    }
  out += '}';
  return out;
}

std::string
format_event_string(const Automaton& a, std::span<const EventId> s)
{
  if (s.empty())
    return "eps";
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i)
    {
      if (i != 0)
        out += ' ';
      out += a.event(s[i]).name;
    }
  return out;
}

} // namespace sdsynth
