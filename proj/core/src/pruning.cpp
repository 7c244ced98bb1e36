#include "sdsynth/pruning.hpp"

#include <deque>
#include <memory>

#include "sdsynth/errors.hpp"

namespace sdsynth
{

bool
is_attacker_controllable(const GameContext& ctx, const Label& label)
{
  switch (label.kind)
    {
    case LabelKind::control:
      return false;
    case LabelKind::genuine:
      return ctx.edits.is_compromised(label.event);
    case LabelKind::deleted:
    case LabelKind::inserted:
      return true;
    }
  return false;
}

std::pair<const Ida*, NodeId>
reference_node(const Ida& ida, NodeId n)
{
  const Ida* cur = &ida;
  while (cur->base() != nullptr)
    {
      n = cur->base_node(n);
      cur = cur->base();
    }
  return {cur, n};
}

bool
is_meta_controllable(const Ida& pruned, NodeId n)
{
  const auto& ctx = pruned.context();
  auto [ref, r] = reference_node(pruned, n);
  for (const auto& e : ref->edges(r))
    if (!is_attacker_controllable(ctx, e.label) && !pruned.successor(n, e.label))
      return false;
  return true;
}

namespace
{

enum class Variant
{
  interruptible,
  unbounded,
  bounded,
};

/// Node and edge liveness over a fixed input structure. Every step reads the
/// current liveness and applies its removals at once.
class Pruner
{
public:
  Pruner(const Ida& input, Variant variant, int n_a, const ScenarioOptions& options)
      : in_(input), ctx_(input.context()), variant_(variant), n_a_(n_a), options_(options),
        alive_(input.size(), true), flagged_(input.size(), false)
  {
    edge_alive_.resize(in_.size());
    for (NodeId n = 0; n < in_.size(); ++n)
      edge_alive_[n].assign(in_.edges(n).size(), true);
    for (NodeId n = 0; n < in_.size(); ++n)
      if (in_.node(n).side == Side::supervisor && in_.is_dead(n))
        alive_[n] = false;
    trim();
  }

  int run()
  {
    int rounds = 0;
    for (;;)
      {
        auto before = snapshot();
        ++rounds;
        switch (variant_)
          {
          case Variant::interruptible:
            round_interruptible();
            break;
          case Variant::unbounded:
          case Variant::bounded:
            round_deterministic();
            break;
          }
        trim();
        if (snapshot() == before)
          return rounds;
      }
  }

  PruneResult result() const
  {
    PruneResult out{Ida(in_.context_ptr()), {}, 0};
    std::vector<NodeId> new_id(in_.size(), 0);
    std::vector<NodeId> base;
    for (NodeId n = 0; n < in_.size(); ++n)
      if (alive_[n])
        {
          new_id[n] = out.structure.add_node(in_.node(n));
          base.push_back(n);
          out.flagged.push_back(flagged_[n]);
        }
    for (NodeId n = 0; n < in_.size(); ++n)
      {
        if (!alive_[n])
          continue;
        const auto& es = in_.edges(n);
        for (std::size_t k = 0; k < es.size(); ++k)
          if (live_edge(n, k))
            out.structure.add_edge(new_id[n], es[k].label, new_id[es[k].target]);
      }
    if (in_.has_initial() && alive_[in_.initial()])
      out.structure.set_initial(new_id[in_.initial()]);
    out.structure.set_base(std::make_shared<Ida>(in_), std::move(base));
    return out;
  }

private:
  using Snapshot = std::tuple<std::vector<bool>, std::vector<std::vector<bool>>, std::vector<bool>>;

  Snapshot snapshot() const { return {alive_, edge_alive_, flagged_}; }

  bool live_edge(NodeId n, std::size_t k) const
  {
    return alive_[n] && edge_alive_[n][k] && alive_[in_.edges(n)[k].target];
  }

  bool has_live(NodeId n, const Label& l) const
  {
    const auto& es = in_.edges(n);
    for (std::size_t k = 0; k < es.size(); ++k)
      if (es[k].label == l)
        return live_edge(n, k);
    return false;
  }

  const std::vector<Edge>& reference_edges(NodeId n) const
  {
    auto [ref, r] = reference_node(in_, n);
    return ref->edges(r);
  }

  bool exhausted(NodeId n) const { return variant_ == Variant::bounded && in_.node(n).counter >= n_a_; }

  /// Some uncontrollable move of the reference is gone.
  bool uncontrollable_lost(NodeId n) const
  {
    for (const auto& e : reference_edges(n))
      if (!is_attacker_controllable(ctx_, e.label) && !has_live(n, e.label))
        return true;
    return false;
  }

  /// Some observable event the plant may fire here can be neither let
  /// through nor deleted. Goal E-states are terminal and exempt.
  bool races(NodeId n, bool compromised_only) const
  {
    const auto& nd = in_.node(n);
    if (nd.side != Side::environment || ctx_.is_goal(nd.info.plant))
      return false;
    for (const auto& e : reference_edges(n))
      {
        if (e.label.kind != LabelKind::genuine)
          continue;
        if (compromised_only && !ctx_.edits.is_compromised(e.label.event))
          continue;
        if (!has_live(n, e.label) && !has_live(n, Label{LabelKind::deleted, e.label.event, {}}))
          return true;
      }
    return false;
  }

  void remove(const std::vector<NodeId>& nodes)
  {
    for (NodeId n : nodes)
      alive_[n] = false;
  }

  template <class Pred> std::vector<NodeId> select(Pred pred) const
  {
    std::vector<NodeId> out;
    for (NodeId n = 0; n < in_.size(); ++n)
      if (alive_[n] && pred(n))
        out.push_back(n);
    return out;
  }

  void round_interruptible()
  {
    remove(select([&](NodeId n) { return uncontrollable_lost(n); }));
    remove(select([&](NodeId n) { return races(n, false); }));
  }

  void round_deterministic()
  {
    bool bounded = variant_ == Variant::bounded;
    // uncontrollable moves lost: flag while an insertion can still help
    auto lost = select([&](NodeId n) { return uncontrollable_lost(n); });
    std::vector<NodeId> drop;
    for (NodeId n : lost)
      {
        if (exhausted(n))
          drop.push_back(n);
        else
          flagged_[n] = true;
      }
    remove(drop);

    // races
    bool literal = bounded && options_.literal_bounded_race;
    remove(select([&](NodeId n) { return exhausted(n) && races(n, literal); }));
    for (NodeId n : select([&](NodeId n) { return !exhausted(n) && races(n, false); }))
      flagged_[n] = true;

    // flagged states may only insert
    for (NodeId n = 0; n < in_.size(); ++n)
      if (alive_[n] && flagged_[n] && in_.node(n).side == Side::environment)
        {
          const auto& es = in_.edges(n);
          for (std::size_t k = 0; k < es.size(); ++k)
            if (es[k].label.kind != LabelKind::inserted)
              edge_alive_[n][k] = false;
        }

    remove_trapped_flagged();
  }

  /// A flagged E-state must be able to insert its way to an unflagged one.
  void remove_trapped_flagged()
  {
    std::vector<bool> exits(in_.size(), false);
    for (NodeId n = 0; n < in_.size(); ++n)
      exits[n] = alive_[n] && in_.node(n).side == Side::environment && !flagged_[n];
    bool changed = true;
    while (changed)
      {
        changed = false;
        for (NodeId n = 0; n < in_.size(); ++n)
          {
            if (exits[n] || !alive_[n] || in_.node(n).side != Side::environment)
              continue;
            const auto& es = in_.edges(n);
            for (std::size_t k = 0; k < es.size() && !exits[n]; ++k)
              {
                if (es[k].label.kind != LabelKind::inserted || !live_edge(n, k))
                  continue;
                NodeId y = es[k].target;
                const auto& ys = in_.edges(y);
                for (std::size_t j = 0; j < ys.size(); ++j)
                  if (live_edge(y, j) && exits[ys[j].target])
                    {
                      exits[n] = true;
                      changed = true;
                      break;
                    }
              }
          }
      }
    remove(select([&](NodeId n) { return in_.node(n).side == Side::environment && !exits[n]; }));
  }

  void trim()
  {
    std::vector<bool> seen(in_.size(), false);
    if (in_.has_initial() && alive_[in_.initial()])
      {
        std::deque<NodeId> queue{in_.initial()};
        seen[in_.initial()] = true;
        while (!queue.empty())
          {
            NodeId n = queue.front();
            queue.pop_front();
            const auto& es = in_.edges(n);
            for (std::size_t k = 0; k < es.size(); ++k)
              if (live_edge(n, k) && !seen[es[k].target])
                {
                  seen[es[k].target] = true;
                  queue.push_back(es[k].target);
                }
          }
      }
    if (options_.trim == TrimMode::coaccessible)
      {
        std::vector<bool> good(in_.size(), false);
        for (NodeId n = 0; n < in_.size(); ++n)
          good[n] = seen[n] && in_.node(n).side == Side::environment && in_.is_goal(n);
        bool changed = true;
        while (changed)
          {
            changed = false;
            for (NodeId n = 0; n < in_.size(); ++n)
              {
                if (good[n] || !seen[n])
                  continue;
                const auto& es = in_.edges(n);
                for (std::size_t k = 0; k < es.size(); ++k)
                  if (live_edge(n, k) && good[es[k].target])
                    {
                      good[n] = true;
                      changed = true;
                      break;
                    }
              }
          }
        seen = good;
      }
    for (NodeId n = 0; n < in_.size(); ++n)
      alive_[n] = alive_[n] && seen[n];
  }

  const Ida& in_;
  const GameContext& ctx_;
  Variant variant_;
  int n_a_;
  ScenarioOptions options_;
  std::vector<bool> alive_;
  std::vector<std::vector<bool>> edge_alive_;
  std::vector<bool> flagged_;
};

PruneResult
run_pruner(const Ida& input, Variant variant, int n_a, const ScenarioOptions& options)
{
  // an emptied structure stays empty
  if (!input.has_initial())
    {
      PruneResult r{Ida(input.context_ptr()), {}, 0};
      r.structure.set_base(std::make_shared<Ida>(input), {});
      return r;
    }
  Pruner p(input, variant, n_a, options);
  int rounds = p.run();
  PruneResult r = p.result();
  r.rounds = rounds;
  return r;
}

} // namespace

Ida
remove_detected(const Ida& aida)
{
  ScenarioOptions opts;
  Pruner p(aida, Variant::interruptible, 0, opts);
  return p.result().structure;
}

PruneResult
prune_isda(const Ida& aida, const ScenarioOptions& options)
{
  return run_pruner(aida, Variant::interruptible, 0, options);
}

PruneResult
prune_usda(const Ida& aida, const ScenarioOptions& options)
{
  return run_pruner(aida, Variant::unbounded, 0, options);
}

PruneResult
prune_bsda(const Ida& baida, int n_a, const ScenarioOptions& options)
{
  if (n_a < 1)
    throw ModelError("bound must be a positive integer");
  for (NodeId n = 0; n < baida.size(); ++n)
    if (baida.node(n).counter < 0)
      throw ModelError("bounded pruning needs a counter-augmented structure");
  return run_pruner(baida, Variant::bounded, n_a, options);
}

PruneResult
prune(const Ida& input, AttackMode mode, std::optional<int> n_a, const ScenarioOptions& options)
{
  switch (mode)
    {
    case AttackMode::interruptible:
      return prune_isda(input, options);
    case AttackMode::unbounded:
      return prune_usda(input, options);
    case AttackMode::bounded:
      if (!n_a)
        throw ModelError("bounded mode requires a bound");
      return prune_bsda(input, *n_a, options);
    }
  throw ModelError("unknown attack mode");
}

} // namespace sdsynth
