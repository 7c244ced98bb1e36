#include "sdsynth/builders.hpp"

#include <deque>
#include <map>
#include <set>

#include "sdsynth/errors.hpp"

namespace sdsynth
{

Ida
construct_aida(const ContextPtr& ctx)
{
  const auto& rt = ctx->supervisor;
  const auto& g = ctx->plant;
  Ida aida(ctx);
  std::deque<NodeId> queue;

  auto add = [&](IdaNode nd) {
    auto existing = aida.find(nd);
    if (existing)
      return *existing;
    NodeId id = aida.add_node(std::move(nd));
    const auto& stored = aida.node(id);
    bool terminal = stored.side == Side::supervisor ? rt.is_dead(stored.info.sup) : ctx->is_goal(stored.info.plant);
    if (!terminal)
      queue.push_back(id);
    return id;
  };

  aida.set_initial(add({Side::supervisor, {StateSet::singleton(g.initial()), rt.automaton.initial()}, -1}));
  auto observables = g.observable_events().to_vector();

  while (!queue.empty())
    {
      NodeId c = queue.front();
      queue.pop_front();
      IdaNode cur = aida.node(c);
      if (cur.side == Side::supervisor)
        {
          EventSet gamma = rt.control_decision(cur.info.sup);
          NodeId z = add({Side::environment, se_successor(*ctx, cur.info), -1});
          aida.add_edge(c, Label::control(std::move(gamma)), z);
          continue;
        }
      EventSet gamma = rt.control_decision(cur.info.sup);
      for (EventId e : observables)
        {
          if (!gamma.contains(e))
            continue;
          for (SymbolKind kind : {SymbolKind::genuine, SymbolKind::deleted, SymbolKind::inserted})
            {
              Symbol s{e, kind};
              auto y = es_successor(*ctx, cur.info, s);
              if (!y)
                continue;
              NodeId target = add({Side::supervisor, std::move(*y), -1});
              aida.add_edge(c, Label::of(s), target);
            }
        }
    }
  return aida;
}

MaximalityReport
check_aida_maximality(const Ida& ida)
{
  MaximalityReport rep;
  const auto& ctx = ida.context();
  const auto& rt = ctx.supervisor;
  auto fail = [&](NodeId n, const std::string& what) {
    rep.ok = false;
    rep.problems.push_back(node_label(ida, n) + ": " + what);
  };

  if (!ida.has_initial())
    {
      rep.ok = false;
      rep.problems.emplace_back("no initial node");
      return rep;
    }
  IdaNode y0{Side::supervisor, {StateSet::singleton(ctx.plant.initial()), rt.automaton.initial()}, -1};
  if (!(ida.node(ida.initial()) == y0))
    fail(ida.initial(), "initial node is not ({x0},q0)");

  // reachability
  std::vector<bool> seen(ida.size(), false);
  std::vector<NodeId> order{ida.initial()};
  seen[ida.initial()] = true;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (const auto& e : ida.edges(order[i]))
      if (!seen[e.target])
        {
          seen[e.target] = true;
          order.push_back(e.target);
        }
  for (NodeId n = 0; n < ida.size(); ++n)
    if (!seen[n])
      fail(n, "unreachable");

  auto symbols = ctx.edits.symbols();
  for (NodeId n = 0; n < ida.size(); ++n)
    {
      const auto& nd = ida.node(n);
      if (nd.counter != -1)
        fail(n, "carries a counter");
      const auto& out = ida.edges(n);
      if (nd.side == Side::supervisor)
        {
          bool dead = rt.is_dead(nd.info.sup);
          if (dead != out.empty())
            fail(n, dead ? "detected supervisor state has a control decision" : "missing control decision");
          for (const auto& e : out)
            {
              if (!(e.label == Label::control(rt.control_decision(nd.info.sup))))
                fail(n, "control label differs from the supervisor decision");
              IdaNode want{Side::environment, se_successor(ctx, nd.info), -1};
              if (!(ida.node(e.target) == want))
                fail(n, "control hop leads to the wrong E-state");
            }
          continue;
        }
      bool goal = ctx.is_goal(nd.info.plant);
      if (goal && !out.empty())
        fail(n, "goal E-state has outgoing moves");
      for (const auto& e : out)
        {
          if (e.label.is_control())
            {
              fail(n, "control label on an E-state");
              continue;
            }
          auto y = es_successor(ctx, nd.info, e.label.symbol());
          if (!y)
            fail(n, "move " + label_text(ctx, e.label) + " violates its guard");
          else if (!(ida.node(e.target) == IdaNode{Side::supervisor, *y, -1}))
            fail(n, "move " + label_text(ctx, e.label) + " leads to the wrong S-state");
        }
      if (goal)
        continue;
      if (!is_race_free(ida, n))
        fail(n, "feasible event can be neither let through nor deleted");
      for (const auto& s : symbols)
        if (es_successor(ctx, nd.info, s) && !ida.successor(n, Label::of(s)))
          fail(n, "permitted move " + ctx.edits.name(s) + " is missing");
    }
  return rep;
}

bool
verify_aida_maximality(const Ida& ida)
{
  return check_aida_maximality(ida).ok;
}

BoundCounter
build_g_bound(const GameContext& ctx, int n_a, const std::vector<Label>& labels, bool bound_initial)
{
  if (n_a < 1)
    throw ModelError("bound must be a positive integer");
  BoundCounter b{Automaton("g_bound"), n_a, bound_initial};
  for (int n = 0; n <= n_a; ++n)
    b.automaton.add_state(std::to_string(n));
  b.automaton.set_initial(0);
  for (const auto& l : labels)
    {
      EventId e = b.automaton.add_event({label_text(ctx, l), true, !l.is_control()});
      for (int n = 0; n <= n_a; ++n)
        {
          auto from = static_cast<StateId>(n);
          switch (l.kind)
            {
            case LabelKind::control:
              b.automaton.add_transition(from, e, from);
              break;
            case LabelKind::genuine:
            case LabelKind::deleted:
              b.automaton.add_transition(from, e, 1);
              break;
            case LabelKind::inserted:
              if (n == 0 && !bound_initial)
                b.automaton.add_transition(from, e, from);
              else if (n < n_a)
                b.automaton.add_transition(from, e, from + 1);
              break;
            }
        }
    }
  return b;
}

bool
label_before(const Label& a, const Label& b)
{
  if (a.is_control() != b.is_control())
    return a.is_control();
  if (a.is_control())
    return a.decision < b.decision;
  if (a.event != b.event)
    return a.event < b.event;
  return a.kind < b.kind;
}

std::vector<Label>
label_alphabet(const Ida& ida)
{
  std::vector<Label> out;
  std::set<EventSet> decisions;
  for (NodeId n = 0; n < ida.size(); ++n)
    for (const auto& e : ida.edges(n))
      if (e.label.is_control())
        decisions.insert(e.label.decision);
  for (const auto& d : decisions)
    out.push_back(Label::control(d));
  for (const auto& s : ida.context().edits.symbols())
    out.push_back(Label::of(s));
  return out;
}

Automaton
ida_as_automaton(const Ida& ida, const std::vector<Label>& labels)
{
  const auto& ctx = ida.context();
  Automaton a("ida");
  std::map<Label, EventId> ids;
  for (const auto& l : labels)
    ids[l] = a.add_event({label_text(ctx, l), true, !l.is_control()});
  for (NodeId n = 0; n < ida.size(); ++n)
    a.add_state("n" + std::to_string(n));
  for (NodeId n = 0; n < ida.size(); ++n)
    for (const auto& e : ida.edges(n))
      {
        auto it = ids.find(e.label);
        if (it == ids.end())
          throw InvariantError("ida_as_automaton: label outside the given alphabet");
        a.add_transition(n, it->second, e.target);
      }
  a.set_initial(ida.initial());
  return a;
}

Ida
construct_baida(std::shared_ptr<const Ida> aida, int n_a, bool bound_initial)
{
  const auto& ctx = aida->context();
  auto labels = label_alphabet(*aida);
  Automaton left = ida_as_automaton(*aida, labels);
  BoundCounter counter = build_g_bound(ctx, n_a, labels, bound_initial);
  Product prod = parallel(left, counter.automaton);

  Ida baida(aida->context_ptr());
  std::vector<NodeId> base;
  std::vector<NodeId> node_of(prod.automaton.num_states());
  for (StateId p = 0; p < prod.automaton.num_states(); ++p)
    {
      auto [a, n] = prod.pairs[p];
      IdaNode nd = aida->node(a);
      nd.counter = static_cast<int>(n);
      node_of[p] = baida.add_node(std::move(nd));
      base.push_back(a);
    }
  // edges in the order the underlying structure lists them
  for (StateId p = 0; p < prod.automaton.num_states(); ++p)
    {
      NodeId a = prod.pairs[p].first;
      for (const auto& e : aida->edges(a))
        {
          EventId ev = prod.automaton.event_id(label_text(ctx, e.label));
          if (auto dst = prod.automaton.delta(p, ev))
            baida.add_edge(node_of[p], e.label, node_of[*dst]);
        }
    }
  baida.set_initial(node_of[prod.automaton.initial()]);
  baida.set_base(std::move(aida), std::move(base));
  return baida;
}

} // namespace sdsynth
