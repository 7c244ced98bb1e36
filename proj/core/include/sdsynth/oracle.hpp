#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sdsynth/synthesis.hpp"

namespace sdsynth
{

/// What the closed loop needs from an attacker. Handles are opaque attacker
/// states; a reaction carries the handle it ends in.
class AttackerView
{
public:
  virtual ~AttackerView() = default;
  virtual std::vector<Reaction> initial_reactions() const = 0;
  /// nullopt when the attacker has no answer to `e` in `handle`
  virtual std::optional<std::vector<Reaction>> react(StateId handle, EventId e) const = 0;
};

class FunctionAttacker : public AttackerView
{
public:
  explicit FunctionAttacker(const AttackFunction& f) : f_(f) {}
  std::vector<Reaction> initial_reactions() const override { return f_.initial_reactions(); }
  std::optional<std::vector<Reaction>> react(StateId handle, EventId e) const override { return f_.react(handle, e); }

private:
  const AttackFunction& f_;
};

struct OracleOptions
{
  /// Number of observable plant events explored.
  int horizon = 10;
  /// Explore observation classes until no new one appears, ignoring the
  /// horizon.
  bool exhaustive = false;
  std::size_t max_witnesses = 3;
  /// Safety cap on explored observation classes.
  std::size_t max_classes = 200000;
};

struct Verdict
{
  bool admissible = true;
  bool stealthy = true;
  bool strong_hit = false;
  bool weak_hit = false;
  std::vector<std::string> strong_witnesses;
  std::vector<std::string> weak_witnesses;
  /// (observed string, violated condition)
  std::vector<std::pair<std::string, std::string>> counterexamples;
  int horizon = 0;
  /// every reachable observation class was explored
  bool complete = false;
  std::size_t classes = 0;

  bool succeeds(Strength s) const
  {
    return admissible && stealthy && (s == Strength::strong ? strong_hit : weak_hit);
  }
};

/// Admissibility, stealthiness and goal reachability of the closed loop under
/// attack, explored by observed plant string. The strong goal asks for one
/// observed string whose whole class of closed-loop runs ends in critical
/// states; the weak goal for a single run that does.
Verdict check_problem1(const GameContext& ctx, const AttackerView& attacker, const OracleOptions& options = {});

std::string format_verdict(const Verdict& v, Strength strength);

struct EmbeddingReport
{
  bool embedded = true;
  std::vector<std::string> problems;
};

/// Every edited string the attacker can produce along reachable closed-loop
/// runs induces E-states of `ida` at every prefix. Tracking stops at goal
/// E-states, which are terminal.
EmbeddingReport check_embedding(const GameContext& ctx, const AttackerView& attacker, const Ida& ida,
                                const OracleOptions& options = {});

/// Plant strings of the closed loop under attack up to `max_length` events,
/// with the attacker's choices kept consistent along each run.
std::set<EventString> closed_loop_language(const GameContext& ctx, const AttackerView& attacker, int max_length);

/// The same language from the recursive definition, enumerating edit
/// histories and index sequences literally. The earlier edited string is
/// drawn from all histories for the observed prefix, so for nondeterministic
/// attackers this may be larger than the run-consistent language.
std::set<EventString> closed_loop_language_literal(const GameContext& ctx, const AttackFunction& f, int max_length);

/// Plant strings of the unattacked closed loop up to `max_length` events.
std::set<EventString> nominal_language(const GameContext& ctx, int max_length);

/// Plant states reachable under the supervisor fed with the edited string
/// `s`; nullopt when the supervisor cannot follow `s`.
std::optional<StateSet> reach_estimate(const GameContext& ctx, std::span<const Symbol> s);

/// A decision table indexed by the observed plant string, relaying every
/// event once the history is longer than the table.
class TableAttacker : public AttackerView
{
public:
  struct Entry
  {
    std::size_t history;
    EventId event;
    std::vector<SymbolString> reactions;
  };

  TableAttacker(const GameContext& ctx, std::vector<EventString> histories, std::vector<SymbolString> initial,
                std::vector<Entry> entries);

  std::vector<Reaction> initial_reactions() const override;
  std::optional<std::vector<Reaction>> react(StateId handle, EventId e) const override;

  std::string describe() const;

private:
  const GameContext* ctx_;
  std::vector<EventString> histories_;
  std::vector<SymbolString> initial_;
  std::vector<Entry> entries_;
  StateId relay_;
};

struct EnumerationBounds
{
  /// length of the observed histories the tables cover
  int depth = 2;
  /// longest reaction string
  int reaction_length = 2;
  std::size_t max_tables = 300000;
};

/// Number of interruptible decision tables over the reachable histories; no
/// enumeration.
std::uint64_t count_attackers(const GameContext& ctx, const EnumerationBounds& bounds);

/// Every interruptible decision table within the bounds. Each reaction set is
/// non-empty and closed under dropping trailing insertions; the initial set
/// always contains the empty string. Throws ModelError when the count exceeds
/// `max_tables`.
std::vector<TableAttacker> enumerate_attackers(const GameContext& ctx, const EnumerationBounds& bounds);

/// Observed plant strings of the uncontrolled plant up to `depth` events.
std::vector<EventString> observed_histories(const GameContext& ctx, int depth);

} // namespace sdsynth
