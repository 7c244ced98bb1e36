#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sdsynth/event_set.hpp"

namespace sdsynth
{

struct EventDecl
{
  std::string name;
  bool observable = true;
  bool controllable = true;

  friend bool operator==(const EventDecl&, const EventDecl&) = default;
};

/// Sorted, duplicate-free set of state indices.
class StateSet
{
public:
  StateSet() = default;
  StateSet(std::initializer_list<StateId> states);
  explicit StateSet(std::vector<StateId> states);

  static StateSet singleton(StateId s) { return StateSet({s}); }

  void insert(StateId s);
  bool contains(StateId s) const noexcept;
  bool empty() const noexcept { return members_.empty(); }
  std::size_t size() const noexcept { return members_.size(); }

  bool is_subset_of(const StateSet& other) const noexcept;
  bool intersects(const StateSet& other) const noexcept;

  const std::vector<StateId>& members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  friend bool operator==(const StateSet&, const StateSet&) = default;
  friend auto operator<=>(const StateSet&, const StateSet&) = default;

private:
  std::vector<StateId> members_;
};

using EventString = std::vector<EventId>;

/// Deterministic finite automaton with named states and attributed events.
/// Transitions are kept per state, sorted by event index.
class Automaton
{
public:
  using Row = std::vector<std::pair<EventId, StateId>>;

  Automaton() = default;
  explicit Automaton(std::string name) : name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  StateId add_state(std::string name);
  EventId add_event(EventDecl decl);
  /// Throws on unknown ids and on a second, different target for (src, e).
  void add_transition(StateId src, EventId e, StateId dst);
  void set_initial(StateId s);

  std::size_t num_states() const noexcept { return state_names_.size(); }
  std::size_t num_events() const noexcept { return events_.size(); }
  std::size_t num_transitions() const noexcept;

  const std::string& state_name(StateId s) const;
  const EventDecl& event(EventId e) const;
  const std::vector<EventDecl>& events() const noexcept { return events_; }
  std::optional<StateId> find_state(std::string_view name) const;
  std::optional<EventId> find_event(std::string_view name) const;
  EventId event_id(std::string_view name) const;
  StateId state_id(std::string_view name) const;

  bool has_initial() const noexcept { return initial_.has_value(); }
  StateId initial() const;

  std::optional<StateId> delta(StateId s, EventId e) const;
  const Row& row(StateId s) const;
  EventSet active(StateId s) const;

  EventSet all_events() const;
  EventSet observable_events() const;
  EventSet unobservable_events() const;
  EventSet controllable_events() const;
  EventSet uncontrollable_events() const;

  friend bool operator==(const Automaton&, const Automaton&) = default;

private:
  void check_state(StateId s) const;
  void check_event(EventId e) const;

  std::string name_;
  std::vector<std::string> state_names_;
  std::vector<EventDecl> events_;
  std::vector<Row> rows_;
  std::optional<StateId> initial_;
  std::unordered_map<std::string, StateId> state_index_;
  std::unordered_map<std::string, EventId> event_index_;
};

/// Events defined at some member of `states`.
EventSet active_events(const Automaton& a, const StateSet& states);

/// Iterated transition function; nullopt once a step is undefined.
std::optional<StateId> step(const Automaton& a, StateId x, std::span<const EventId> s);

/// Natural projection onto observable events.
EventString project(const Automaton& a, std::span<const EventId> s);

/// Closure of `states` under unobservable events that belong to `gamma`.
StateSet unobservable_reach(const Automaton& a, const StateSet& states, const EventSet& gamma);

/// One-step image of `states` under observable event `e`.
StateSet next_states(const Automaton& a, const StateSet& states, EventId e);

struct Observer
{
  Automaton automaton;
  std::vector<StateSet> macro_states;
};

/// Subset construction over the observable events. State names are the
/// member names in braces, e.g. "{x,y}".
Observer observer(const Automaton& a);

struct Product
{
  Automaton automaton;
  std::vector<std::pair<StateId, StateId>> pairs;
};

/// Synchronous product on shared event names, interleaving on private ones.
/// Only the accessible part is built. State names are "(a,b)".
Product parallel(const Automaton& a, const Automaton& b);

struct Trimmed
{
  Automaton automaton;
  std::vector<StateId> kept; // new index -> old index
};

Trimmed trim_accessible_map(const Automaton& a);
Automaton trim_accessible(const Automaton& a);

/// States reachable from the initial state, in BFS order.
std::vector<StateId> accessible_states(const Automaton& a);

/// Member names sorted lexicographically, comma separated, in braces.
std::string format_state_set(const Automaton& a, const StateSet& states);

std::string format_event_string(const Automaton& a, std::span<const EventId> s);

} // namespace sdsynth
