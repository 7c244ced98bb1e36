#include "sdsynth/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <sstream>

#include "sdsynth/errors.hpp"

namespace sdsynth
{

namespace
{

constexpr std::int64_t untracked = -1;
constexpr std::int64_t beyond_goal = -2;
constexpr std::int64_t lost = -3;

/// One run of the closed loop as far as the future is concerned: plant state,
/// attacker handle, the supervisor states the pending reaction still passes
/// through, and the induced E-state when embedding is checked.
struct Config
{
  StateId x = 0;
  StateId h = 0;
  std::vector<StateId> trail;
  std::int64_t ie = untracked;

  friend bool operator==(const Config&, const Config&) = default;
  friend auto operator<=>(const Config&, const Config&) = default;
};

using Macro = std::set<Config>;

StateId
sup_after(const RTilde& rt, StateId q, Symbol s)
{
  if (rt.is_dead(q) || s.kind == SymbolKind::deleted)
    return q;
  auto n = rt.step(q, s.event);
  return n ? *n : rt.dead;
}

std::string
observed_text(const GameContext& ctx, const EventString& w)
{
  return format_event_string(ctx.plant, w);
}

class Explorer
{
public:
  Explorer(const GameContext& ctx, const AttackerView& att, const OracleOptions& opt, const Ida* ida)
      : ctx_(ctx), rt_(ctx.supervisor), att_(att), opt_(opt), ida_(ida)
  {
    uos_ = ctx.plant.unobservable_events().to_vector();
    obs_ = ctx.plant.observable_events().to_vector();
  }

  void run()
  {
    v_.horizon = opt_.horizon;
    Macro init;
    EventString eps;
    auto reactions = att_.initial_reactions();
    if (reactions.empty())
      violation(eps, "admissibility", "no initial reaction");
    std::int64_t ie0 = untracked;
    if (ida_ != nullptr)
      {
        auto z0 = initial_e_state(*ida_);
        if (!z0)
          {
            embed_problem("the structure has no initial E-state");
            ie0 = lost;
          }
        else
          ie0 = *z0;
      }
    StateId q0 = rt_.automaton.initial();
    for (const auto& r : reactions)
      {
        for (const auto& s : r.symbols)
          if (s.kind != SymbolKind::inserted)
            throw ModelError("initial reaction may only insert");
        Config c{ctx_.plant.initial(), r.end, {q0}, advance_ie(ie0, r.symbols, eps)};
        StateId q = q0;
        for (const auto& s : r.symbols)
          {
            q = sup_after(rt_, q, s);
            c.trail.push_back(q);
          }
        check_stealth(c, eps, r.symbols);
        init.insert(std::move(c));
      }
    close(init);

    struct Item
    {
      Macro macro;
      EventString observed;
    };
    std::set<Macro> visited{init};
    std::deque<Item> queue;
    queue.push_back({init, eps});
    bool truncated = false;
    while (!queue.empty())
      {
        Item it = std::move(queue.front());
        queue.pop_front();
        ++v_.classes;
        judge(it.macro, it.observed);
        if (!opt_.exhaustive && static_cast<int>(it.observed.size()) >= opt_.horizon)
          {
            for (EventId e : obs_)
              if (!step(it.macro, e, it.observed, false).empty())
                {
                  truncated = true;
                  break;
                }
            continue;
          }
        for (EventId e : obs_)
          {
            Macro next = step(it.macro, e, it.observed, true);
            if (next.empty())
              continue;
            if (!visited.insert(next).second)
              continue;
            if (visited.size() > opt_.max_classes)
              {
                truncated = true;
                continue;
              }
            EventString w = it.observed;
            w.push_back(e);
            queue.push_back({std::move(next), std::move(w)});
          }
      }
    v_.complete = !truncated;
  }

  Verdict verdict() const { return v_; }
  EmbeddingReport embedding() const { return emb_; }

private:
  void violation(const EventString& w, const std::string& what, const std::string& detail)
  {
    if (what == "admissibility")
      v_.admissible = false;
    else
      v_.stealthy = false;
    std::size_t same = 0;
    for (const auto& c : v_.counterexamples)
      same += c.second.rfind(what, 0) == 0 ? 1 : 0;
    if (same < opt_.max_witnesses)
      v_.counterexamples.emplace_back(observed_text(ctx_, w), what + ": " + detail);
  }

  void embed_problem(const std::string& what)
  {
    emb_.embedded = false;
    if (emb_.problems.size() < opt_.max_witnesses)
      emb_.problems.push_back(what);
  }

  std::int64_t advance_ie(std::int64_t ie, const SymbolString& syms, const EventString& w)
  {
    if (ida_ == nullptr || ie < 0)
      return ie;
    auto z = static_cast<NodeId>(ie);
    for (std::size_t i = 0; i < syms.size(); ++i)
      {
        if (ida_->is_goal(z))
          return beyond_goal;
        auto n = advance_e_state(*ida_, z, syms[i]);
        if (!n)
          {
            embed_problem("after observing " + observed_text(ctx_, w) + ", reaction "
                          + ctx_.edits.format(syms) + " leaves the structure at symbol "
                          + ctx_.edits.name(syms[i]) + " from " + node_label(*ida_, z));
            return lost;
          }
        z = *n;
      }
    return z;
  }

  void check_stealth(const Config& c, const EventString& w, const SymbolString& reaction)
  {
    for (StateId q : c.trail)
      if (rt_.is_dead(q))
        {
          violation(w, "stealthiness", "reaction " + ctx_.edits.format(reaction) + " is detected");
          return;
        }
  }

  void close(Macro& m) const
  {
    std::vector<Config> work(m.begin(), m.end());
    while (!work.empty())
      {
        Config c = std::move(work.back());
        work.pop_back();
        for (std::size_t j = 0; j < c.trail.size(); ++j)
          {
            EventSet gamma = rt_.control_decision(c.trail[j]);
            for (EventId u : uos_)
              {
                if (!gamma.contains(u))
                  continue;
                auto x = ctx_.plant.delta(c.x, u);
                if (!x)
                  continue;
                Config n{*x, c.h, std::vector<StateId>(c.trail.begin() + static_cast<std::ptrdiff_t>(j), c.trail.end()),
                         c.ie};
                if (m.insert(n).second)
                  work.push_back(std::move(n));
              }
          }
      }
  }

  Macro step(const Macro& m, EventId e, const EventString& w, bool record)
  {
    Macro out;
    EventString we = w;
    we.push_back(e);
    for (const auto& c : m)
      {
        StateId last = c.trail.back();
        if (!rt_.control_decision(last).contains(e))
          continue;
        auto x = ctx_.plant.delta(c.x, e);
        if (!x)
          continue;
        auto rs = att_.react(c.h, e);
        if (!rs)
          {
            if (record)
              violation(we, "admissibility", "no reaction to " + ctx_.plant.event(e).name);
            continue;
          }
        for (const auto& r : *rs)
          {
            if (r.symbols.empty() || r.symbols.front().event != e
                || r.symbols.front().kind == SymbolKind::inserted)
              throw ModelError("reaction does not start with the observed event");
            Config n{*x, r.end, {}, record ? advance_ie(c.ie, r.symbols, w) : c.ie};
            StateId q = last;
            for (const auto& s : r.symbols)
              {
                q = sup_after(rt_, q, s);
                n.trail.push_back(q);
              }
            if (record)
              check_stealth(n, we, r.symbols);
            out.insert(std::move(n));
          }
      }
    close(out);
    return out;
  }

  void judge(const Macro& m, const EventString& w)
  {
    if (m.empty())
      return;
    bool all = true;
    bool some = false;
    for (const auto& c : m)
      {
        bool in = ctx_.critical.contains(c.x);
        all = all && in;
        some = some || in;
      }
    if (all)
      {
        v_.strong_hit = true;
        if (v_.strong_witnesses.size() < opt_.max_witnesses)
          v_.strong_witnesses.push_back(observed_text(ctx_, w));
      }
    if (some)
      {
        v_.weak_hit = true;
        if (v_.weak_witnesses.size() < opt_.max_witnesses)
          v_.weak_witnesses.push_back(observed_text(ctx_, w));
      }
  }

  const GameContext& ctx_;
  const RTilde& rt_;
  const AttackerView& att_;
  const OracleOptions& opt_;
  const Ida* ida_;
  std::vector<EventId> uos_;
  std::vector<EventId> obs_;
  Verdict v_;
  EmbeddingReport emb_;
};

} // namespace

Verdict
check_problem1(const GameContext& ctx, const AttackerView& attacker, const OracleOptions& options)
{
  Explorer ex(ctx, attacker, options, nullptr);
  ex.run();
  return ex.verdict();
}

std::string
format_verdict(const Verdict& v, Strength strength)
{
  std::ostringstream out;
  out << "admissible: " << (v.admissible ? "true" : "false") << '\n';
  out << "stealthy: " << (v.stealthy ? "true" : "false") << '\n';
  out << "strong_hit: " << (v.strong_hit ? "true" : "false") << '\n';
  out << "weak_hit: " << (v.weak_hit ? "true" : "false") << '\n';
  out << "requested: " << to_string(strength) << '\n';
  out << "success: " << (v.succeeds(strength) ? "true" : "false") << '\n';
  out << "horizon: " << v.horizon << (v.complete ? " (all observation classes explored)" : " (bounded)") << '\n';
  out << "classes: " << v.classes << '\n';
  for (const auto& w : v.strong_witnesses)
    out << "strong witness: " << w << '\n';
  for (const auto& w : v.weak_witnesses)
    out << "weak witness: " << w << '\n';
  for (const auto& [w, what] : v.counterexamples)
    out << "counterexample: " << w << ": " << what << '\n';
  return out.str();
}

EmbeddingReport
check_embedding(const GameContext& ctx, const AttackerView& attacker, const Ida& ida, const OracleOptions& options)
{
  Explorer ex(ctx, attacker, options, &ida);
  ex.run();
  return ex.embedding();
}

std::set<EventString>
closed_loop_language(const GameContext& ctx, const AttackerView& attacker, int max_length)
{
  const auto& rt = ctx.supervisor;
  const auto& g = ctx.plant;
  std::set<EventString> lang{EventString{}};
  std::set<Config> init;
  for (const auto& r : attacker.initial_reactions())
    {
      Config c{g.initial(), r.end, {rt.automaton.initial()}, untracked};
      StateId q = c.trail.front();
      for (const auto& s : r.symbols)
        {
          q = sup_after(rt, q, s);
          c.trail.push_back(q);
        }
      init.insert(std::move(c));
    }

  std::function<void(const EventString&, const std::set<Config>&)> rec = [&](const EventString& s,
                                                                               const std::set<Config>& cs) {
    if (static_cast<int>(s.size()) >= max_length || cs.empty())
      return;
    for (EventId e = 0; e < g.num_events(); ++e)
      {
        std::set<Config> next;
        bool permitted = false;
        for (const auto& c : cs)
          {
            auto x = g.delta(c.x, e);
            if (!x)
              continue;
            if (!g.event(e).observable)
              {
                for (std::size_t j = 0; j < c.trail.size(); ++j)
                  if (rt.control_decision(c.trail[j]).contains(e))
                    {
                      permitted = true;
                      next.insert({*x, c.h,
                                   std::vector<StateId>(c.trail.begin() + static_cast<std::ptrdiff_t>(j), c.trail.end()),
                                   untracked});
                    }
                continue;
              }
            if (!rt.control_decision(c.trail.back()).contains(e))
              continue;
            permitted = true;
            auto rs = attacker.react(c.h, e);
            if (!rs)
              continue;
            for (const auto& r : *rs)
              {
                Config n{*x, r.end, {}, untracked};
                StateId q = c.trail.back();
                for (const auto& sym : r.symbols)
                  {
                    q = sup_after(rt, q, sym);
                    n.trail.push_back(q);
                  }
                next.insert(std::move(n));
              }
          }
        if (!permitted)
          continue;
        EventString t = s;
        t.push_back(e);
        lang.insert(t);
        rec(t, next);
      }
  };
  rec({}, init);
  return lang;
}

std::set<EventString>
closed_loop_language_literal(const GameContext& ctx, const AttackFunction& f, int max_length)
{
  const auto& rt = ctx.supervisor;
  const auto& g = ctx.plant;

  // control decision after the supervisor has read an edited string
  auto decision = [&](const SymbolString& u) {
    StateId q = rt.automaton.initial();
    for (EventId e : supervisor_view(u))
      {
        auto n = rt.is_dead(q) ? std::optional<StateId>(q) : rt.step(q, e);
        q = n ? *n : rt.dead;
      }
    return rt.control_decision(q);
  };
  auto run_f = [&](const SymbolString& u) -> std::optional<StateId> {
    if (!f.automaton.has_initial())
      return std::nullopt;
    StateId h = f.automaton.initial();
    for (const auto& s : u)
      {
        auto n = f.step(h, s);
        if (!n)
          return std::nullopt;
        h = *n;
      }
    return h;
  };
  // edited strings the attacker may have produced for an observed string
  std::map<EventString, std::set<SymbolString>> fhat_memo;
  std::function<std::set<SymbolString>(const EventString&)> fhat = [&](const EventString& w) {
    if (auto it = fhat_memo.find(w); it != fhat_memo.end())
      return it->second;
    std::set<SymbolString> out;
    if (w.empty())
      {
        for (const auto& r : f.initial_reactions())
          out.insert(r.symbols);
      }
    else
      {
        EventString prefix(w.begin(), w.end() - 1);
        for (const auto& u : fhat(prefix))
          {
            auto h = run_f(u);
            if (!h)
              continue;
            auto rs = f.react(*h, w.back());
            if (!rs)
              continue;
            for (const auto& r : *rs)
              {
                SymbolString ut = u;
                ut.insert(ut.end(), r.symbols.begin(), r.symbols.end());
                out.insert(std::move(ut));
              }
          }
      }
    fhat_memo[w] = out;
    return out;
  };

  struct Choice
  {
    SymbolString earlier;
    SymbolString reaction;
    std::size_t first_index;
  };

  // nondecreasing indices into the reaction, one per event of t1
  auto indices_exist = [&](const Choice& ch, const EventString& t1, bool ends_observable) {
    std::size_t n = ch.reaction.size();
    std::vector<EventSet> dec;
    for (std::size_t i = 0; i <= n; ++i)
      {
        SymbolString u = ch.earlier;
        u.insert(u.end(), ch.reaction.begin(), ch.reaction.begin() + static_cast<std::ptrdiff_t>(i));
        dec.push_back(decision(u));
      }
    std::function<bool(std::size_t, std::size_t)> place = [&](std::size_t j, std::size_t lo) {
      if (j == t1.size())
        return true;
      bool last = j + 1 == t1.size();
      for (std::size_t i = lo; i <= n; ++i)
        {
          if (last && ends_observable && i != n)
            continue;
          if (dec[i].contains(t1[j]) && place(j + 1, i))
            return true;
        }
      return false;
    };
    return place(0, ch.first_index);
  };

  std::set<EventString> lang{EventString{}};
  std::function<void(const EventString&)> extend = [&](const EventString& s) {
    std::vector<Choice> choices;
    if (s.empty())
      {
        for (const auto& r : f.initial_reactions())
          choices.push_back({{}, r.symbols, 0});
      }
    else
      {
        EventString w = project(g, s);
        EventString before(w.begin(), w.end() - 1);
        for (const auto& t3 : fhat(before))
          {
            auto h = run_f(t3);
            if (!h)
              continue;
            auto rs = f.react(*h, w.back());
            if (!rs)
              continue;
            for (const auto& r : *rs)
              choices.push_back({t3, r.symbols, 1});
          }
      }
    if (choices.empty())
      return;
    auto x0 = step(g, g.initial(), s);
    if (!x0)
      return;
    // t1 = unobservable events, then at most one observable event
    std::function<void(StateId, EventString&)> grow = [&](StateId x, EventString& t1) {
      if (s.size() + t1.size() >= static_cast<std::size_t>(max_length))
        return;
      for (const auto& [e, y] : g.row(x))
        {
          t1.push_back(e);
          bool obs = g.event(e).observable;
          bool member = std::any_of(choices.begin(), choices.end(),
                                    [&](const Choice& ch) { return indices_exist(ch, t1, obs); });
          if (member)
            {
              EventString full = s;
              full.insert(full.end(), t1.begin(), t1.end());
              lang.insert(full);
              if (obs)
                extend(full);
              else
                grow(y, t1);
            }
          t1.pop_back();
        }
    };
    EventString t1;
    grow(*x0, t1);
  };
  extend({});
  return lang;
}

std::set<EventString>
nominal_language(const GameContext& ctx, int max_length)
{
  const auto& g = ctx.plant;
  const auto& r = ctx.realization.automaton();
  std::set<EventString> lang;
  std::function<void(StateId, StateId, EventString&)> rec = [&](StateId x, StateId q, EventString& s) {
    lang.insert(s);
    if (static_cast<int>(s.size()) >= max_length)
      return;
    for (const auto& [e, y] : g.row(x))
      {
        auto q2 = r.delta(q, e);
        if (!q2)
          continue;
        s.push_back(e);
        rec(y, *q2, s);
        s.pop_back();
      }
  };
  EventString s;
  rec(g.initial(), r.initial(), s);
  return lang;
}

std::optional<StateSet>
reach_estimate(const GameContext& ctx, std::span<const Symbol> s)
{
  const auto& g = ctx.plant;
  const auto& rt = ctx.supervisor;
  auto closure = [&](std::set<StateId> xs, const EventSet& gamma) {
    std::vector<StateId> work(xs.begin(), xs.end());
    while (!work.empty())
      {
        StateId x = work.back();
        work.pop_back();
        for (const auto& [e, y] : g.row(x))
          if (!g.event(e).observable && gamma.contains(e) && xs.insert(y).second)
            work.push_back(y);
      }
    return xs;
  };
  StateId q = rt.automaton.initial();
  std::set<StateId> re = closure({g.initial()}, rt.control_decision(q));
  for (const auto& sym : s)
    {
      std::set<StateId> base;
      if (sym.kind == SymbolKind::inserted)
        base = re;
      else
        for (StateId x : re)
          if (auto y = g.delta(x, sym.event))
            base.insert(*y);
      if (sym.kind != SymbolKind::deleted)
        {
          auto n = rt.step(q, sym.event);
          if (!n)
            return std::nullopt;
          q = *n;
        }
      re = closure(std::move(base), rt.control_decision(q));
    }
  return StateSet(std::vector<StateId>(re.begin(), re.end()));
}

TableAttacker::TableAttacker(const GameContext& ctx, std::vector<EventString> histories,
                             std::vector<SymbolString> initial, std::vector<Entry> entries)
    : ctx_(&ctx), histories_(std::move(histories)), initial_(std::move(initial)), entries_(std::move(entries)),
      relay_(static_cast<StateId>(histories_.size()))
{
  if (histories_.empty() || !histories_.front().empty())
    throw ModelError("table histories must start with the empty string");
}

std::vector<Reaction>
TableAttacker::initial_reactions() const
{
  std::vector<Reaction> out;
  for (const auto& r : initial_)
    out.push_back({r, 0});
  return out;
}

std::optional<std::vector<Reaction>>
TableAttacker::react(StateId handle, EventId e) const
{
  StateId next = relay_;
  if (handle != relay_)
    {
      EventString w = histories_.at(handle);
      w.push_back(e);
      auto it = std::find(histories_.begin(), histories_.end(), w);
      if (it != histories_.end())
        next = static_cast<StateId>(it - histories_.begin());
      for (const auto& en : entries_)
        if (en.history == handle && en.event == e)
          {
            std::vector<Reaction> out;
            for (const auto& r : en.reactions)
              out.push_back({r, next});
            return out;
          }
      // past the end of the table the attacker relays
      bool covered = std::any_of(entries_.begin(), entries_.end(),
                                 [&](const Entry& en) { return en.history == handle; });
      if (covered)
        return std::nullopt;
    }
  return std::vector<Reaction>{{SymbolString{Symbol{e, SymbolKind::genuine}}, next}};
}

std::string
TableAttacker::describe() const
{
  std::ostringstream out;
  auto set_text = [&](const std::vector<SymbolString>& rs) {
    std::string t = "{";
    for (std::size_t i = 0; i < rs.size(); ++i)
      t += (i ? ", " : "") + ctx_->edits.format(rs[i]);
    return t + "}";
  };
  out << "f(eps, eps) = " << set_text(initial_) << '\n';
  for (const auto& en : entries_)
    out << "f(" << format_event_string(ctx_->plant, histories_[en.history]) << ", "
        << ctx_->plant.event(en.event).name << ") = " << set_text(en.reactions) << '\n';
  return out.str();
}

std::vector<EventString>
observed_histories(const GameContext& ctx, int depth)
{
  Observer obs = observer(ctx.plant);
  std::vector<EventString> out;
  std::deque<std::pair<EventString, StateId>> queue{{{}, obs.automaton.initial()}};
  while (!queue.empty())
    {
      auto [w, m] = std::move(queue.front());
      queue.pop_front();
      out.push_back(w);
      if (static_cast<int>(w.size()) >= depth)
        continue;
      for (const auto& [e, n] : obs.automaton.row(m))
        {
          EventString we = w;
          we.push_back(e);
          queue.emplace_back(std::move(we), n);
        }
    }
  return out;
}

namespace
{

/// Sets of insertion strings of length at most `d` that contain the empty
/// string and are closed under prefixes.
std::vector<std::vector<SymbolString>>
insertion_trees(const std::vector<Symbol>& ins, int d)
{
  if (d <= 0 || ins.empty())
    return {{SymbolString{}}};
  auto sub = insertion_trees(ins, d - 1);
  std::vector<std::vector<SymbolString>> out{{SymbolString{}}};
  for (const auto& s : ins)
    {
      std::vector<std::vector<SymbolString>> grown;
      for (const auto& base : out)
        {
          grown.push_back(base);
          for (const auto& tree : sub)
            {
              auto t = base;
              for (const auto& str : tree)
                {
                  SymbolString x{s};
                  x.insert(x.end(), str.begin(), str.end());
                  t.push_back(std::move(x));
                }
              grown.push_back(std::move(t));
            }
        }
      out = std::move(grown);
    }
  for (auto& t : out)
    std::sort(t.begin(), t.end());
  return out;
}

std::vector<std::vector<SymbolString>>
prefixed(Symbol first, const std::vector<std::vector<SymbolString>>& trees)
{
  std::vector<std::vector<SymbolString>> out;
  for (const auto& tree : trees)
    {
      std::vector<SymbolString> t;
      for (const auto& s : tree)
        {
          SymbolString x{first};
          x.insert(x.end(), s.begin(), s.end());
          t.push_back(std::move(x));
        }
      out.push_back(std::move(t));
    }
  return out;
}

struct Slots
{
  std::vector<EventString> histories;
  std::vector<std::vector<SymbolString>> initial_choices;
  std::vector<std::pair<std::size_t, EventId>> keys;
  std::vector<std::vector<std::vector<SymbolString>>> choices;
};

Slots
build_slots(const GameContext& ctx, const EnumerationBounds& b)
{
  Slots sl;
  sl.histories = observed_histories(ctx, b.depth);
  std::vector<Symbol> ins;
  ctx.edits.compromised().for_each([&](EventId e) { ins.push_back({e, SymbolKind::inserted}); });
  auto trees = insertion_trees(ins, b.reaction_length - 1);
  sl.initial_choices = trees;
  for (std::size_t h = 0; h < sl.histories.size(); ++h)
    {
      const auto& w = sl.histories[h];
      if (static_cast<int>(w.size()) >= b.depth)
        continue;
      for (std::size_t k = 0; k < sl.histories.size(); ++k)
        {
          const auto& v = sl.histories[k];
          if (v.size() != w.size() + 1 || !std::equal(w.begin(), w.end(), v.begin()))
            continue;
          EventId e = v.back();
          auto genuine = prefixed({e, SymbolKind::genuine}, trees);
          std::vector<std::vector<SymbolString>> opts;
          if (!ctx.edits.is_compromised(e))
            opts = genuine;
          else
            {
              auto deleted = prefixed({e, SymbolKind::deleted}, trees);
              for (int gi = -1; gi < static_cast<int>(genuine.size()); ++gi)
                for (int di = -1; di < static_cast<int>(deleted.size()); ++di)
                  {
                    if (gi < 0 && di < 0)
                      continue;
                    std::vector<SymbolString> set;
                    if (gi >= 0)
                      set = genuine[static_cast<std::size_t>(gi)];
                    if (di >= 0)
                      set.insert(set.end(), deleted[static_cast<std::size_t>(di)].begin(),
                                 deleted[static_cast<std::size_t>(di)].end());
                    std::sort(set.begin(), set.end());
                    opts.push_back(std::move(set));
                  }
            }
          sl.keys.emplace_back(h, e);
          sl.choices.push_back(std::move(opts));
        }
    }
  return sl;
}

std::uint64_t
saturating_product(const Slots& sl)
{
  std::uint64_t n = sl.initial_choices.size();
  constexpr std::uint64_t cap = std::uint64_t{1} << 62;
  for (const auto& c : sl.choices)
    {
      if (c.empty())
        return 0;
      if (n > cap / c.size())
        return cap;
      n *= c.size();
    }
  return n;
}

} // namespace

std::uint64_t
count_attackers(const GameContext& ctx, const EnumerationBounds& bounds)
{
  return saturating_product(build_slots(ctx, bounds));
}

std::vector<TableAttacker>
enumerate_attackers(const GameContext& ctx, const EnumerationBounds& bounds)
{
  Slots sl = build_slots(ctx, bounds);
  std::uint64_t total = saturating_product(sl);
  if (total > bounds.max_tables)
    throw ModelError("enumeration would produce " + std::to_string(total) + " tables, more than the limit of "
                     + std::to_string(bounds.max_tables));
  std::vector<TableAttacker> out;
  out.reserve(total);
  std::vector<std::size_t> pick(sl.choices.size(), 0);
  for (const auto& init : sl.initial_choices)
    {
      std::fill(pick.begin(), pick.end(), 0);
      for (;;)
        {
          std::vector<TableAttacker::Entry> entries;
          for (std::size_t i = 0; i < pick.size(); ++i)
            entries.push_back({sl.keys[i].first, sl.keys[i].second, sl.choices[i][pick[i]]});
          out.emplace_back(ctx, sl.histories, init, std::move(entries));
          std::size_t i = 0;
          while (i < pick.size() && ++pick[i] == sl.choices[i].size())
            pick[i++] = 0;
          if (i == pick.size())
            break;
        }
    }
  return out;
}

} // namespace sdsynth
