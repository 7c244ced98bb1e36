#include "sdsynth/synthesis.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "sdsynth/builders.hpp"
#include "sdsynth/errors.hpp"
#include "sdsynth/model_io.hpp"

namespace sdsynth
{

namespace
{

struct Move
{
  Symbol symbol;
  NodeId target;
};

/// Environment moves of an E-state with the following control hop folded in.
std::vector<Move>
moves_of(const Ida& ida, NodeId z)
{
  std::vector<const Edge*> es;
  for (const auto& e : ida.edges(z))
    es.push_back(&e);
  std::sort(es.begin(), es.end(), [](const Edge* a, const Edge* b) { return label_before(a->label, b->label); });
  std::vector<Move> out;
  for (const Edge* e : es)
    {
      if (e->label.is_control())
        continue;
      const auto& hop = ida.edges(e->target);
      for (const auto& h : hop)
        if (h.label.is_control())
          {
            out.push_back({e->label.symbol(), h.target});
            break;
          }
    }
  return out;
}

std::string
state_name(const Ida& ida, NodeId z)
{
  std::string s = node_label(ida, z);
  std::replace(s.begin(), s.end(), '#', '^');
  return s;
}

bool
deterministic(AttackMode m)
{
  return m != AttackMode::interruptible;
}

} // namespace

std::optional<NodeId>
find_goal(const Ida& pruned, Strength strength)
{
  if (!pruned.has_initial())
    return std::nullopt;
  const auto& ctx = pruned.context();
  std::vector<bool> seen(pruned.size(), false);
  std::deque<NodeId> queue{pruned.initial()};
  seen[pruned.initial()] = true;
  while (!queue.empty())
    {
      NodeId n = queue.front();
      queue.pop_front();
      const auto& nd = pruned.node(n);
      if (nd.side == Side::environment)
        {
          bool hit = strength == Strength::strong ? ctx.is_goal(nd.info.plant)
                                                  : nd.info.plant.intersects(ctx.critical);
          if (hit)
            return n;
        }
      for (const auto& e : pruned.edges(n))
        if (!seen[e.target])
          {
            seen[e.target] = true;
            queue.push_back(e.target);
          }
    }
  return std::nullopt;
}

std::optional<AttackPath>
shortest_path(const Ida& pruned, NodeId goal)
{
  auto z0 = initial_e_state(pruned);
  if (!z0)
    return std::nullopt;
  std::map<NodeId, std::pair<NodeId, Symbol>> parent;
  std::set<NodeId> seen{*z0};
  std::deque<NodeId> queue{*z0};
  while (!queue.empty() && seen.count(goal) == 0)
    {
      NodeId z = queue.front();
      queue.pop_front();
      for (const auto& m : moves_of(pruned, z))
        if (seen.insert(m.target).second)
          {
            parent[m.target] = {z, m.symbol};
            queue.push_back(m.target);
          }
    }
  if (seen.count(goal) == 0)
    return std::nullopt;
  AttackPath p;
  for (NodeId z = goal; z != *z0; z = parent[z].first)
    {
      p.states.push_back(z);
      p.symbols.push_back(parent[z].second);
    }
  p.states.push_back(*z0);
  std::reverse(p.states.begin(), p.states.end());
  std::reverse(p.symbols.begin(), p.symbols.end());
  return p;
}

Automaton
attack_alphabet(const GameContext& ctx, const std::string& name)
{
  Automaton a(name);
  for (const auto& s : ctx.edits.symbols())
    a.add_event({ctx.edits.name(s), true, s.kind != SymbolKind::genuine});
  return a;
}

std::optional<StateId>
AttackFunction::step(StateId state, Symbol s) const
{
  for (EventId e = 0; e < symbol_of.size(); ++e)
    if (symbol_of[e] == s)
      return automaton.delta(state, e);
  return std::nullopt;
}

std::vector<Reaction>
AttackFunction::chains(const Reaction& start) const
{
  std::vector<Reaction> out;
  if (!deterministic(mode))
    {
      // every prefix of every insertion path; the length cap keeps cycles finite
      std::size_t cap = start.symbols.size() + automaton.num_states();
      std::vector<Reaction> stack{start};
      while (!stack.empty())
        {
          Reaction r = std::move(stack.back());
          stack.pop_back();
          if (r.symbols.size() < cap)
            for (const auto& [e, t] : automaton.row(r.end))
              if (symbol_of[e].kind == SymbolKind::inserted)
                {
                  Reaction next = r;
                  next.symbols.push_back(symbol_of[e]);
                  next.end = t;
                  stack.push_back(std::move(next));
                }
          out.push_back(std::move(r));
        }
      std::sort(out.begin(), out.end(), [](const Reaction& a, const Reaction& b) {
        return std::tie(a.symbols, a.end) < std::tie(b.symbols, b.end);
      });
      return out;
    }
  Reaction r = start;
  std::set<StateId> visited{r.end};
  for (;;)
    {
      std::optional<std::pair<EventId, StateId>> ins;
      for (const auto& et : automaton.row(r.end))
        if (symbol_of[et.first].kind == SymbolKind::inserted)
          {
            ins = et;
            break;
          }
      if (!ins)
        break;
      r.symbols.push_back(symbol_of[ins->first]);
      r.end = ins->second;
      if (!visited.insert(r.end).second)
        return {};
    }
  out.push_back(std::move(r));
  return out;
}

std::vector<Reaction>
AttackFunction::initial_reactions() const
{
  if (!automaton.has_initial())
    return {};
  return chains({{}, automaton.initial()});
}

std::optional<std::vector<Reaction>>
AttackFunction::react(StateId state, EventId e) const
{
  std::vector<Reaction> out;
  bool any = false;
  for (const auto& [ev, t] : automaton.row(state))
    {
      Symbol s = symbol_of[ev];
      if (s.event != e || s.kind == SymbolKind::inserted)
        continue;
      any = true;
      auto rs = chains({{s}, t});
      if (rs.empty())
        return std::nullopt;
      out.insert(out.end(), rs.begin(), rs.end());
    }
  if (!any)
    return std::nullopt;
  return out;
}

AttackFunction
expand_path(const Ida& pruned, const std::vector<bool>& flagged, const AttackPath& path, AttackMode mode,
            std::optional<int> n_a, const ScenarioOptions& options)
{
  const auto& ctx = pruned.context();
  AttackFunction f;
  f.automaton = attack_alphabet(ctx, "attack");
  f.mode = mode;
  f.n_a = n_a;
  for (const auto& s : ctx.edits.symbols())
    f.symbol_of.push_back(s);
  auto event_of = [&](Symbol s) { return f.automaton.event_id(ctx.edits.name(s)); };

  if (path.states.empty())
    throw SynthesisError("empty attack path");
  if (path.symbols.size() + 1 != path.states.size())
    throw SynthesisError("attack path is malformed");

  std::map<NodeId, Symbol> path_choice;
  for (std::size_t i = 0; i < path.symbols.size(); ++i)
    path_choice.emplace(path.states[i], path.symbols[i]);

  // flagged states leave by the shortest insertion chain to an unflagged one
  std::map<NodeId, Move> exit_next;
  if (deterministic(mode))
    {
      constexpr std::size_t inf = std::numeric_limits<std::size_t>::max();
      std::vector<std::size_t> dist(pruned.size(), inf);
      for (NodeId n = 0; n < pruned.size(); ++n)
        if (pruned.node(n).side == Side::environment && !(n < flagged.size() && flagged[n]))
          dist[n] = 0;
      bool changed = true;
      while (changed)
        {
          changed = false;
          for (NodeId n = 0; n < pruned.size(); ++n)
            {
              if (dist[n] == 0 || pruned.node(n).side != Side::environment)
                continue;
              for (const auto& m : moves_of(pruned, n))
                if (m.symbol.kind == SymbolKind::inserted && dist[m.target] != inf && dist[m.target] + 1 < dist[n])
                  {
                    dist[n] = dist[m.target] + 1;
                    exit_next.insert_or_assign(n, m);
                    changed = true;
                  }
            }
        }
    }

  std::map<NodeId, StateId> state_of;
  std::deque<NodeId> queue;
  auto intern = [&](NodeId z) {
    auto it = state_of.find(z);
    if (it != state_of.end())
      return it->second;
    StateId s = f.automaton.add_state(state_name(pruned, z));
    state_of.emplace(z, s);
    f.origin.push_back(z);
    queue.push_back(z);
    return s;
  };
  f.automaton.set_initial(intern(path.states.front()));
  for (NodeId z : path.states)
    intern(z);

  while (!queue.empty())
    {
      NodeId z = queue.front();
      queue.pop_front();
      StateId from = state_of.at(z);
      auto moves = moves_of(pruned, z);
      auto target_of = [&](Symbol s) -> std::optional<NodeId> {
        for (const auto& m : moves)
          if (m.symbol == s)
            return m.target;
        return std::nullopt;
      };

      std::optional<Symbol> pc;
      if (auto it = path_choice.find(z); it != path_choice.end())
        pc = it->second;
      std::optional<Move> ins;
      if (pc && pc->kind == SymbolKind::inserted)
        ins = Move{*pc, *target_of(*pc)};
      else if (deterministic(mode))
        if (auto it = exit_next.find(z); it != exit_next.end())
          ins = it->second;

      std::vector<Move> chosen;
      if (ins)
        chosen.push_back(*ins);
      // a deterministic reaction passing through here keeps inserting
      if (!(ins && deterministic(mode)))
        {
          std::set<EventId> events;
          for (const auto& m : moves)
            if (m.symbol.kind != SymbolKind::inserted)
              events.insert(m.symbol.event);
          for (EventId e : events)
            {
              Symbol gen{e, SymbolKind::genuine};
              Symbol del{e, SymbolKind::deleted};
              std::optional<Symbol> pick;
              if (pc && pc->event == e && pc->kind != SymbolKind::inserted)
                pick = pc;
              else
                {
                  Symbol first = options.prefer_let_through ? gen : del;
                  Symbol second = options.prefer_let_through ? del : gen;
                  pick = target_of(first) ? first : second;
                }
              chosen.push_back({*pick, *target_of(*pick)});
            }
        }
      for (const auto& m : chosen)
        f.automaton.add_transition(from, event_of(m.symbol), intern(m.target));
    }
  return f;
}

AttackFunction
relay_attack(const GameContext& ctx)
{
  AttackFunction f;
  f.automaton = attack_alphabet(ctx, "relay");
  for (const auto& s : ctx.edits.symbols())
    f.symbol_of.push_back(s);
  StateId q = f.automaton.add_state("relay");
  f.automaton.set_initial(q);
  for (EventId e = 0; e < f.symbol_of.size(); ++e)
    if (f.symbol_of[e].kind == SymbolKind::genuine)
      f.automaton.add_transition(q, e, q);
  return f;
}

AttackFunction
attack_from_automaton(const GameContext& ctx, Automaton a, AttackMode mode, std::optional<int> n_a)
{
  if (!a.has_initial())
    throw ModelError("attacker automaton has no initial state");
  AttackFunction f;
  for (EventId e = 0; e < a.num_events(); ++e)
    {
      auto s = ctx.edits.parse(a.event(e).name);
      if (!s)
        throw ModelError("attacker event '" + a.event(e).name + "' is not a symbol of the scenario");
      f.symbol_of.push_back(*s);
    }
  f.automaton = std::move(a);
  f.mode = mode;
  f.n_a = n_a;
  return f;
}

AttackFunction
load_attack(const GameContext& ctx, const std::filesystem::path& path, AttackMode mode, std::optional<int> n_a)
{
  return attack_from_automaton(ctx, load_automaton(path), mode, n_a);
}

std::vector<std::string>
check_mode_shape(const AttackFunction& f, bool bound_initial)
{
  std::vector<std::string> problems;
  if (!deterministic(f.mode))
    return problems;
  const auto& a = f.automaton;
  auto describe = [&](StateId s) { return "state " + a.state_name(s); };
  for (StateId s = 0; s < a.num_states(); ++s)
    {
      auto rs = f.chains({{}, s});
      if (rs.empty())
        {
          problems.push_back(describe(s) + ": insertion chain never ends");
          continue;
        }
      if (f.mode != AttackMode::bounded || !f.n_a)
        continue;
      std::size_t len = rs.front().symbols.size();
      if (a.has_initial() && s == a.initial() && bound_initial && len > static_cast<std::size_t>(*f.n_a))
        problems.push_back(describe(s) + ": initial reaction longer than the bound");
      bool too_long = false;
      for (StateId p = 0; p < a.num_states() && !too_long; ++p)
        for (const auto& [e, t] : a.row(p))
          if (t == s && f.symbol_of[e].kind != SymbolKind::inserted
              && len + 1 > static_cast<std::size_t>(*f.n_a))
            too_long = true;
      if (too_long)
        problems.push_back(describe(s) + ": reaction longer than the bound");
    }
  return problems;
}

std::vector<DecisionRow>
decision_table(const AttackFunction& f, const GameContext& ctx, int depth)
{
  std::vector<DecisionRow> rows;
  if (!f.automaton.has_initial())
    return rows;
  auto init = f.initial_reactions();
  DecisionRow first{{}, std::nullopt, {}, !init.empty()};
  std::set<StateId> start;
  for (const auto& r : init)
    {
      first.reactions.push_back(r.symbols);
      start.insert(r.end);
    }
  rows.push_back(first);

  struct Item
  {
    EventString observed;
    std::set<StateId> states;
  };
  std::deque<Item> queue{{{}, start}};
  auto observables = ctx.plant.observable_events().to_vector();
  while (!queue.empty())
    {
      Item it = std::move(queue.front());
      queue.pop_front();
      if (static_cast<int>(it.observed.size()) >= depth)
        continue;
      for (EventId e : observables)
        {
          DecisionRow row{it.observed, e, {}, true};
          std::set<SymbolString> seen;
          std::set<StateId> next;
          bool any = false;
          for (StateId s : it.states)
            {
              auto rs = f.react(s, e);
              if (!rs)
                {
                  row.defined = false;
                  continue;
                }
              any = true;
              for (const auto& r : *rs)
                {
                  if (seen.insert(r.symbols).second)
                    row.reactions.push_back(r.symbols);
                  next.insert(r.end);
                }
            }
          if (!any)
            continue;
          rows.push_back(row);
          EventString w = it.observed;
          w.push_back(e);
          queue.push_back({std::move(w), std::move(next)});
        }
    }
  return rows;
}

std::string
format_decision_table(const std::vector<DecisionRow>& rows, const GameContext& ctx)
{
  std::ostringstream out;
  for (const auto& r : rows)
    {
      out << "f(" << format_event_string(ctx.plant, r.observed) << ", "
          << (r.event ? ctx.plant.event(*r.event).name : std::string("eps")) << ") = {";
      for (std::size_t i = 0; i < r.reactions.size(); ++i)
        out << (i ? ", " : "") << ctx.edits.format(r.reactions[i]);
      out << "}\n";
    }
  return out.str();
}

SynthesisResult
synthesize(const PruneResult& pruned, AttackMode mode, std::optional<int> n_a, Strength strength,
           const ScenarioOptions& options)
{
  SynthesisResult res;
  res.goal = find_goal(pruned.structure, strength);
  if (!res.goal)
    return res;
  res.path = shortest_path(pruned.structure, *res.goal);
  if (!res.path)
    throw InvariantError("goal E-state found but no path leads to it");
  res.feasible = true;
  res.attack = expand_path(pruned.structure, pruned.flagged, *res.path, mode, n_a, options);
  return res;
}

Pipeline
run_pipeline(const ContextPtr& ctx, AttackMode mode, std::optional<int> n_a, Strength strength,
             const ScenarioOptions& options)
{
  Pipeline p{std::make_shared<const Ida>(construct_aida(ctx)), nullptr, {Ida(ctx), {}, 0}, {}};
  if (mode == AttackMode::bounded)
    {
      if (!n_a)
        throw ModelError("bounded mode requires a bound");
      p.baida = std::make_shared<const Ida>(construct_baida(p.aida, *n_a, options.bound_initial));
      p.pruned = prune_bsda(*p.baida, *n_a, options);
    }
  else
    p.pruned = prune(*p.aida, mode, n_a, options);
  p.synthesis = synthesize(p.pruned, mode, n_a, strength, options);
  return p;
}

} // namespace sdsynth
