#pragma once

// Slow, obviously-correct reference computations used to cross-check the
// library. Nothing here calls the library's own algorithms for the property
// being checked.

#include <cstdint>
#include <optional>
#include <set>

#include "sdsynth/ida.hpp"
#include "sdsynth/oracle.hpp"

namespace sdsynth::test
{

/// All strings of `a` up to `max_len` events.
std::set<EventString> strings_of(const Automaton& a, int max_len);

/// Observable projection of every string in `lang`.
std::set<EventString> project_all(const Automaton& a, const std::set<EventString>& lang);

/// Strings of length at most `max_len` in `lang`.
std::set<EventString> up_to(const std::set<EventString>& lang, std::size_t max_len);

/// Fixpoint iteration over the transition list.
StateSet closure_by_iteration(const Automaton& a, const StateSet& start, const EventSet& gamma);

/// Plant strings the supervisor automaton lets through: every event is
/// enabled by the supervisor state reached on the observed prefix.
std::set<EventString> supervised_strings(const Automaton& plant, const Automaton& sup, int max_len);

/// Fewest symbols from the initial E-state to `goal` by iterative deepening.
std::optional<std::size_t> shortest_symbol_distance(const Ida& ida, NodeId goal, std::size_t max_depth);

/// Closed-form number of interruptible tables for the given bounds.
std::uint64_t table_count_formula(const GameContext& ctx, const EnumerationBounds& b);

} // namespace sdsynth::test
