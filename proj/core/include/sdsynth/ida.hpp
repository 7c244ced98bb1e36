#pragma once

#include <compare>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sdsynth/game_context.hpp"

namespace sdsynth
{

using NodeId = std::uint32_t;

/// Who moves next: the supervisor issues a control decision, the
/// environment (plant or attacker) emits a symbol.
enum class Side : std::uint8_t
{
  supervisor,
  environment,
};

struct InformationState
{
  StateSet plant;
  StateId sup = 0;

  friend bool operator==(const InformationState&, const InformationState&) = default;
  friend auto operator<=>(const InformationState&, const InformationState&) = default;
};

/// A game node. `counter` is the reaction length in the bounded structure and
/// -1 everywhere else.
struct IdaNode
{
  Side side = Side::supervisor;
  InformationState info;
  int counter = -1;

  friend bool operator==(const IdaNode&, const IdaNode&) = default;
  friend auto operator<=>(const IdaNode&, const IdaNode&) = default;
};

enum class LabelKind : std::uint8_t
{
  control,
  genuine,
  deleted,
  inserted,
};

struct Label
{
  LabelKind kind = LabelKind::control;
  EventId event = 0;   // unused for control labels
  EventSet decision;   // only for control labels

  static Label control(EventSet gamma) { return {LabelKind::control, 0, std::move(gamma)}; }
  static Label of(Symbol s);
  Symbol symbol() const;
  bool is_control() const noexcept { return kind == LabelKind::control; }

  friend bool operator==(const Label&, const Label&) = default;
  friend auto operator<=>(const Label&, const Label&) = default;
};

struct Edge
{
  Label label;
  NodeId target = 0;
};

/// Bipartite game graph between supervisor decisions and environment moves.
/// Nodes are deduplicated on (side, information state, counter).
class Ida
{
public:
  explicit Ida(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  const GameContext& context() const noexcept { return *ctx_; }
  const ContextPtr& context_ptr() const noexcept { return ctx_; }

  /// Returns the existing id if an equal node is present.
  NodeId add_node(IdaNode node);
  std::optional<NodeId> find(const IdaNode& node) const;

  /// Throws ModelError on a side mismatch or a second target for the same
  /// label; adding an identical edge twice is a no-op.
  void add_edge(NodeId src, Label label, NodeId dst);

  void set_initial(NodeId n);
  bool has_initial() const noexcept { return initial_.has_value(); }
  NodeId initial() const;

  std::size_t size() const noexcept { return nodes_.size(); }
  std::size_t num_edges() const noexcept;
  const IdaNode& node(NodeId n) const { return nodes_.at(n); }
  const std::vector<Edge>& edges(NodeId n) const { return edges_.at(n); }
  std::optional<NodeId> successor(NodeId n, const Label& label) const;

  bool is_goal(NodeId n) const;
  bool is_dead(NodeId n) const;

  /// Optional link to the structure this one was derived from.
  void set_base(std::shared_ptr<const Ida> base, std::vector<NodeId> base_node);
  const Ida* base() const noexcept { return base_.get(); }
  const std::shared_ptr<const Ida>& base_ptr() const noexcept { return base_; }
  NodeId base_node(NodeId n) const { return base_node_.at(n); }

private:
  ContextPtr ctx_;
  std::vector<IdaNode> nodes_;
  std::vector<std::vector<Edge>> edges_;
  std::map<IdaNode, NodeId> index_;
  std::optional<NodeId> initial_;
  std::shared_ptr<const Ida> base_;
  std::vector<NodeId> base_node_;
};

/// The unique control hop of an S-state.
InformationState se_successor(const GameContext& ctx, const InformationState& y);

/// Environment move per the three transition cases; nullopt when the guard
/// of the case fails.
std::optional<InformationState> es_successor(const GameContext& ctx, const InformationState& z, Symbol s);

/// Every observable event that is enabled and feasible at `z` can be let
/// through or deleted.
bool is_race_free(const Ida& ida, NodeId z);

bool is_subsystem(const Ida& small, const Ida& large);

Ida ida_union(const Ida& a, const Ida& b);

/// Target of the initial control hop, if present.
std::optional<NodeId> initial_e_state(const Ida& ida);

/// E-state reached by following `s` from the initial E-state, taking the
/// control hop after each symbol.
std::optional<NodeId> induced_e_state(const Ida& ida, std::span<const Symbol> s);
std::optional<NodeId> induced_e_state(const Ida& ida, NodeId from, std::span<const Symbol> s);

/// Takes one symbol from an E-state and the following control hop.
std::optional<NodeId> advance_e_state(const Ida& ida, NodeId z, Symbol s);

/// "(x,q)" for singleton estimates, "({x,y},q)" otherwise, "#n" for counters.
std::string node_label(const Ida& ida, NodeId n);
std::string label_text(const GameContext& ctx, const Label& label);
std::optional<Label> parse_label(const GameContext& ctx, const std::string& text);

/// Stable text form: nodes in id order, edges in insertion order.
std::string serialize_ida(const Ida& ida, const std::string& name = "ida");
Ida parse_ida(const ContextPtr& ctx, const std::string& text, const std::string& source = "<ida>");

std::string serialize_flags(const Ida& ida, const std::vector<bool>& flagged);

struct DotStyle
{
  const std::vector<bool>* flagged = nullptr;
  std::string name = "ida";
};

/// Graphviz rendering: S-states as ellipses, E-states as boxes, detected
/// supervisor states filled red, goal estimates filled green, flagged
/// states dashed.
std::string to_dot(const Ida& ida, const DotStyle& style = {});

/// Payload-based form, independent of node numbering.
std::string canonical_form(const Ida& ida);

} // namespace sdsynth
