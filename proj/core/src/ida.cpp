#include "sdsynth/ida.hpp"

#include <algorithm>
#include <sstream>

#include "sdsynth/errors.hpp"
#include "sdsynth/model_io.hpp"

namespace sdsynth
{

Label
Label::of(Symbol s)
{
  switch (s.kind)
    {
    case SymbolKind::genuine:
      return {LabelKind::genuine, s.event, {}};
    case SymbolKind::deleted:
      return {LabelKind::deleted, s.event, {}};
    case SymbolKind::inserted:
      return {LabelKind::inserted, s.event, {}};
    }
  return {};
}

Symbol
Label::symbol() const
{
  switch (kind)
    {
    case LabelKind::genuine:
      return {event, SymbolKind::genuine};
    case LabelKind::deleted:
      return {event, SymbolKind::deleted};
    case LabelKind::inserted:
      return {event, SymbolKind::inserted};
    case LabelKind::control:
      break;
    }
  throw InvariantError("control label has no symbol");
}

NodeId
Ida::add_node(IdaNode node)
{
  auto it = index_.find(node);
  if (it != index_.end())
    return it->second;
  auto id = static_cast<NodeId>(nodes_.size());
  index_.emplace(node, id);
  nodes_.push_back(std::move(node));
  edges_.emplace_back();
  return id;
}

std::optional<NodeId>
Ida::find(const IdaNode& node) const
{
  auto it = index_.find(node);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

void
Ida::add_edge(NodeId src, Label label, NodeId dst)
{
  if (src >= nodes_.size() || dst >= nodes_.size())
    throw ModelError("ida: edge endpoint out of range");
  Side from = nodes_[src].side;
  Side to = nodes_[dst].side;
  if (from == to)
    throw ModelError("ida: edge between two nodes of the same side");
  if ((from == Side::supervisor) != label.is_control())
    throw ModelError("ida: control labels leave S-states, symbols leave E-states");
  for (const auto& e : edges_[src])
    if (e.label == label)
      {
        if (e.target != dst)
          throw ModelError("ida: conflicting targets for one label at node " + std::to_string(src));
        return;
      }
  if (label.is_control() && !edges_[src].empty())
    throw ModelError("ida: S-state with two control decisions");
  edges_[src].push_back({std::move(label), dst});
}

void
Ida::set_initial(NodeId n)
{
  if (n >= nodes_.size())
    throw ModelError("ida: initial node out of range");
  initial_ = n;
}

NodeId
Ida::initial() const
{
  if (!initial_)
    throw ModelError("ida: no initial node");
  return *initial_;
}

std::size_t
Ida::num_edges() const noexcept
{
  std::size_t n = 0;
  for (const auto& e : edges_)
    n += e.size();
  return n;
}

std::optional<NodeId>
Ida::successor(NodeId n, const Label& label) const
{
  for (const auto& e : edges_.at(n))
    if (e.label == label)
      return e.target;
  return std::nullopt;
}

bool
Ida::is_goal(NodeId n) const
{
  const auto& nd = nodes_.at(n);
  return nd.side == Side::environment && ctx_->is_goal(nd.info.plant);
}

bool
Ida::is_dead(NodeId n) const
{
  return ctx_->supervisor.is_dead(nodes_.at(n).info.sup);
}

void
Ida::set_base(std::shared_ptr<const Ida> base, std::vector<NodeId> base_node)
{
  if (base_node.size() != nodes_.size())
    throw InvariantError("ida: base map size mismatch");
  base_ = std::move(base);
  base_node_ = std::move(base_node);
}

InformationState
se_successor(const GameContext& ctx, const InformationState& y)
{
  EventSet gamma = ctx.supervisor.control_decision(y.sup);
  return {unobservable_reach(ctx.plant, y.plant, gamma), y.sup};
}

std::optional<InformationState>
es_successor(const GameContext& ctx, const InformationState& z, Symbol s)
{
  const auto& g = ctx.plant;
  if (s.event >= g.num_events() || !g.event(s.event).observable)
    return std::nullopt;
  if (s.kind != SymbolKind::genuine && !ctx.edits.is_compromised(s.event))
    return std::nullopt;
  EventSet gamma = ctx.supervisor.control_decision(z.sup);
  if (!gamma.contains(s.event))
    return std::nullopt;
  switch (s.kind)
    {
    case SymbolKind::genuine:
      {
        if (!active_events(g, z.plant).contains(s.event))
          return std::nullopt;
        return InformationState{next_states(g, z.plant, s.event), *ctx.supervisor.step(z.sup, s.event)};
      }
    case SymbolKind::inserted:
      return InformationState{z.plant, *ctx.supervisor.step(z.sup, s.event)};
    case SymbolKind::deleted:
      {
        if (!active_events(g, z.plant).contains(s.event))
          return std::nullopt;
        return InformationState{next_states(g, z.plant, s.event), z.sup};
      }
    }
  return std::nullopt;
}

bool
is_race_free(const Ida& ida, NodeId z)
{
  const auto& ctx = ida.context();
  const auto& nd = ida.node(z);
  if (nd.side != Side::environment)
    throw ModelError("is_race_free: node is not an E-state");
  EventSet feasible = ctx.supervisor.control_decision(nd.info.sup) & ctx.plant.observable_events()
                      & active_events(ctx.plant, nd.info.plant);
  bool ok = true;
  feasible.for_each([&](EventId e) {
    if (!ida.successor(z, Label{LabelKind::genuine, e, {}}) && !ida.successor(z, Label{LabelKind::deleted, e, {}}))
      ok = false;
  });
  return ok;
}

bool
is_subsystem(const Ida& small, const Ida& large)
{
  for (NodeId n = 0; n < small.size(); ++n)
    {
      auto m = large.find(small.node(n));
      if (!m)
        return false;
      for (const auto& e : small.edges(n))
        {
          auto t = large.successor(*m, e.label);
          if (!t || !(large.node(*t) == small.node(e.target)))
            return false;
        }
    }
  return true;
}

Ida
ida_union(const Ida& a, const Ida& b)
{
  Ida out(a.context_ptr());
  std::vector<NodeId> ma(a.size()), mb(b.size());
  for (NodeId n = 0; n < a.size(); ++n)
    ma[n] = out.add_node(a.node(n));
  for (NodeId n = 0; n < b.size(); ++n)
    mb[n] = out.add_node(b.node(n));
  for (NodeId n = 0; n < a.size(); ++n)
    for (const auto& e : a.edges(n))
      out.add_edge(ma[n], e.label, ma[e.target]);
  for (NodeId n = 0; n < b.size(); ++n)
    for (const auto& e : b.edges(n))
      out.add_edge(mb[n], e.label, mb[e.target]);
  if (a.has_initial())
    {
      if (b.has_initial() && !(a.node(a.initial()) == b.node(b.initial())))
        throw ModelError("ida_union: different initial states");
      out.set_initial(ma[a.initial()]);
    }
  else if (b.has_initial())
    out.set_initial(mb[b.initial()]);
  return out;
}

std::optional<NodeId>
initial_e_state(const Ida& ida)
{
  if (!ida.has_initial() || ida.edges(ida.initial()).empty())
    return std::nullopt;
  return ida.edges(ida.initial()).front().target;
}

std::optional<NodeId>
advance_e_state(const Ida& ida, NodeId z, Symbol s)
{
  auto y = ida.successor(z, Label::of(s));
  if (!y)
    return std::nullopt;
  const auto& out = ida.edges(*y);
  if (out.empty())
    return std::nullopt;
  return out.front().target;
}

std::optional<NodeId>
induced_e_state(const Ida& ida, NodeId from, std::span<const Symbol> s)
{
  std::optional<NodeId> cur = from;
  for (const auto& sym : s)
    {
      cur = advance_e_state(ida, *cur, sym);
      if (!cur)
        return std::nullopt;
    }
  return cur;
}

std::optional<NodeId>
induced_e_state(const Ida& ida, std::span<const Symbol> s)
{
  auto z0 = initial_e_state(ida);
  if (!z0)
    return std::nullopt;
  return induced_e_state(ida, *z0, s);
}

std::string
node_label(const Ida& ida, NodeId n)
{
  const auto& ctx = ida.context();
  const auto& nd = ida.node(n);
  std::string est;
  if (nd.info.plant.size() == 1)
    est = ctx.plant.state_name(*nd.info.plant.begin());
  else
    est = format_state_set(ctx.plant, nd.info.plant);
  std::string out = "(" + est + "," + ctx.supervisor.automaton.state_name(nd.info.sup) + ")";
  if (nd.counter >= 0)
    out += "#" + std::to_string(nd.counter);
  return out;
}

std::string
label_text(const GameContext& ctx, const Label& label)
{
  if (label.is_control())
    {
      std::string out = "gamma{";
      bool first = true;
      label.decision.for_each([&](EventId e) {
        if (!first)
          out += ',';
        first = false;
        out += ctx.plant.event(e).name;
      });
      return out + "}";
    }
  return ctx.edits.name(label.symbol());
}

std::optional<Label>
parse_label(const GameContext& ctx, const std::string& text)
{
  if (text.rfind("gamma{", 0) == 0 && text.back() == '}')
    {
      EventSet gamma;
      for (const auto& name : split_list(text.substr(6, text.size() - 7)))
        {
          auto e = ctx.plant.find_event(name);
          if (!e)
            return std::nullopt;
          gamma.insert(*e);
        }
      return Label::control(std::move(gamma));
    }
  auto s = ctx.edits.parse(text);
  if (!s)
    return std::nullopt;
  return Label::of(*s);
}

namespace
{

std::string
plant_set_text(const GameContext& ctx, const StateSet& s)
{
  return format_state_set(ctx.plant, s);
}

} // namespace

std::string
serialize_ida(const Ida& ida, const std::string& name)
{
  const auto& ctx = ida.context();
  std::ostringstream out;
  out << "ida " << name << '\n';
  for (NodeId n = 0; n < ida.size(); ++n)
    {
      const auto& nd = ida.node(n);
      out << "node " << n << ' ' << (nd.side == Side::supervisor ? 'S' : 'E') << ' '
          << plant_set_text(ctx, nd.info.plant) << ' ' << ctx.supervisor.automaton.state_name(nd.info.sup);
      if (nd.counter >= 0)
        out << " n=" << nd.counter;
      if (ida.has_initial() && ida.initial() == n)
        out << " initial";
      out << '\n';
    }
  for (NodeId n = 0; n < ida.size(); ++n)
    for (const auto& e : ida.edges(n))
      out << "edge " << n << ' ' << label_text(ctx, e.label) << ' ' << e.target << '\n';
  return out.str();
}

Ida
parse_ida(const ContextPtr& ctx, const std::string& text, const std::string& source)
{
  Ida ida(ctx);
  std::istringstream in(text);
  std::size_t lineno = 0;
  std::vector<NodeId> ids; // file id -> node id
  auto node_ref = [&](const std::string& tok) {
    std::size_t v = 0;
    try
      {
        v = std::stoul(tok);
      }
    catch (const std::exception&)
      {
        throw ParseError(source, lineno, "bad node id '" + tok + "'");
      }
    if (v >= ids.size())
      throw ParseError(source, lineno, "unknown node id '" + tok + "'");
    return ids[v];
  };
  for (std::string line; std::getline(in, line);)
    {
      ++lineno;
      auto tok = tokenize_line(line);
      if (tok.empty() || tok[0] == "ida")
        continue;
      if (tok[0] == "node")
        {
          if (tok.size() < 5)
            throw ParseError(source, lineno, "expected 'node <id> <S|E> <set> <sup> [n=k] [initial]'");
          if (std::to_string(ids.size()) != tok[1])
            throw ParseError(source, lineno, "node ids must be consecutive from 0");
          IdaNode nd;
          if (tok[2] == "S")
            nd.side = Side::supervisor;
          else if (tok[2] == "E")
            nd.side = Side::environment;
          else
            throw ParseError(source, lineno, "side must be S or E");
          const std::string& set = tok[3];
          if (set.size() < 2 || set.front() != '{' || set.back() != '}')
            throw ParseError(source, lineno, "plant estimate must be written as {x,...}");
          for (const auto& name : split_list(set.substr(1, set.size() - 2)))
            {
              auto x = ctx->plant.find_state(name);
              if (!x)
                throw ParseError(source, lineno, "unknown plant state '" + name + "'");
              nd.info.plant.insert(*x);
            }
          auto q = ctx->supervisor.automaton.find_state(tok[4]);
          if (!q)
            throw ParseError(source, lineno, "unknown supervisor state '" + tok[4] + "'");
          nd.info.sup = *q;
          bool initial = false;
          for (std::size_t i = 5; i < tok.size(); ++i)
            {
              if (tok[i] == "initial")
                initial = true;
              else if (tok[i].rfind("n=", 0) == 0)
                nd.counter = std::stoi(tok[i].substr(2));
              else
                throw ParseError(source, lineno, "unexpected '" + tok[i] + "'");
            }
          if (ida.find(nd))
            throw ParseError(source, lineno, "duplicate node");
          NodeId id = ida.add_node(nd);
          ids.push_back(id);
          if (initial)
            ida.set_initial(id);
        }
      else if (tok[0] == "edge")
        {
          if (tok.size() != 4)
            throw ParseError(source, lineno, "expected 'edge <src> <label> <dst>'");
          NodeId src = node_ref(tok[1]);
          NodeId dst = node_ref(tok[3]);
          auto label = parse_label(*ctx, tok[2]);
          if (!label)
            throw ParseError(source, lineno, "unknown label '" + tok[2] + "'");
          try
            {
              ida.add_edge(src, *label, dst);
            }
          catch (const ModelError& e)
            {
              throw ParseError(source, lineno, e.what());
            }
        }
      else
        throw ParseError(source, lineno, "unknown keyword '" + tok[0] + "'");
    }
  return ida;
}

std::string
serialize_flags(const Ida& ida, const std::vector<bool>& flagged)
{
  std::ostringstream out;
  for (NodeId n = 0; n < ida.size() && n < flagged.size(); ++n)
    if (flagged[n])
      out << "flagged " << n << ' ' << node_label(ida, n) << '\n';
  return out.str();
}

std::string
to_dot(const Ida& ida, const DotStyle& style)
{
  const auto& ctx = ida.context();
  std::ostringstream out;
  out << "digraph \"" << style.name << "\" {\n";
  out << "  rankdir=LR;\n";
  out << "  node [fontname=\"Helvetica\"];\n";
  for (NodeId n = 0; n < ida.size(); ++n)
    {
      const auto& nd = ida.node(n);
      std::vector<std::string> styles;
      std::string fill;
      if (ida.is_dead(n))
        fill = "#f28b82";
      else if (ida.is_goal(n))
        fill = "#a8dab5";
      if (!fill.empty())
        styles.emplace_back("filled");
      bool flagged = style.flagged != nullptr && n < style.flagged->size() && (*style.flagged)[n];
      if (flagged)
        styles.emplace_back("dashed");
      out << "  n" << n << " [label=\"" << node_label(ida, n) << "\", shape="
          << (nd.side == Side::supervisor ? "ellipse" : "box");
      if (!styles.empty())
        {
          out << ", style=\"";
          for (std::size_t i = 0; i < styles.size(); ++i)
            out << (i ? "," : "") << styles[i];
          out << '"';
        }
      if (!fill.empty())
        out << ", fillcolor=\"" << fill << '"';
      if (ida.has_initial() && ida.initial() == n)
        out << ", penwidth=2";
      out << "];\n";
    }
  for (NodeId n = 0; n < ida.size(); ++n)
    for (const auto& e : ida.edges(n))
      out << "  n" << n << " -> n" << e.target << " [label=\"" << label_text(ctx, e.label) << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string
canonical_form(const Ida& ida)
{
  const auto& ctx = ida.context();
  auto name = [&](NodeId n) {
    return std::string(ida.node(n).side == Side::supervisor ? "S" : "E") + node_label(ida, n);
  };
  std::vector<std::string> lines;
  for (NodeId n = 0; n < ida.size(); ++n)
    {
      lines.push_back("node " + name(n) + (ida.has_initial() && ida.initial() == n ? " initial" : ""));
      for (const auto& e : ida.edges(n))
        lines.push_back("edge " + name(n) + " " + label_text(ctx, e.label) + " " + name(e.target));
    }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines)
    out += l + '\n';
  return out;
}

} // namespace sdsynth
