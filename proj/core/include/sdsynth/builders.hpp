#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sdsynth/ida.hpp"

namespace sdsynth
{

/// Breadth-first construction of the largest attack structure. Expansion
/// stops at S-states whose supervisor detected the attack and at E-states
/// whose plant estimate lies inside the critical set.
Ida construct_aida(const ContextPtr& ctx);

struct MaximalityReport
{
  bool ok = true;
  std::vector<std::string> problems;
};

/// Checks that `ida` only uses transitions the guards permit, that every
/// node is reachable, that the stop conditions hold, and that no permitted
/// transition is missing from a non-terminal node.
MaximalityReport check_aida_maximality(const Ida& ida);
bool verify_aida_maximality(const Ida& ida);

/// Reaction-length counter. States are 0..n_a; letting an event through or
/// deleting it starts a new reaction of length 1, an insertion extends the
/// current reaction, control decisions leave the counter alone.
struct BoundCounter
{
  Automaton automaton;
  int n_a = 1;
  bool bound_initial = true;
};

/// `labels` is the label alphabet to cover; every label name becomes one
/// event.
BoundCounter build_g_bound(const GameContext& ctx, int n_a, const std::vector<Label>& labels,
                           bool bound_initial = true);

/// Every label that may appear in `ida`: all edit symbols plus the control
/// decisions used by its edges.
std::vector<Label> label_alphabet(const Ida& ida);

/// The game structure as a plain automaton over label names. State names are
/// "n<id>".
Automaton ida_as_automaton(const Ida& ida, const std::vector<Label>& labels);

/// The structure composed with the counter automaton. The result's base is
/// `aida` and its nodes carry the counter value.
Ida construct_baida(std::shared_ptr<const Ida> aida, int n_a, bool bound_initial = true);

/// Orders labels by event declaration order, genuine before deletion before
/// insertion; control labels first.
bool label_before(const Label& a, const Label& b);

} // namespace sdsynth
