#include <doctest.h>

#include <random>

#include "fixture.hpp"
#include "sdsynth/builders.hpp"
#include "sdsynth/errors.hpp"
#include "sdsynth/oracle.hpp"
#include "sdsynth/pruning.hpp"
#include "sdsynth/random_instance.hpp"

using namespace sdsynth;
using namespace sdsynth::test;

namespace
{

struct Fx
{
  Scenario sc = fixture();
  const GameContext& ctx = *sc.context;
  EventId a = ctx.plant.event_id("a");
  EventId b = ctx.plant.event_id("b");
  EventId c = ctx.plant.event_id("c");
  StateId A = ctx.supervisor.automaton.state_id("A");
  StateId B = ctx.supervisor.automaton.state_id("B");
  StateId C = ctx.supervisor.automaton.state_id("C");
};

} // namespace

TEST_CASE("transition cases on the fixture")
{
  Fx f;
  InformationState y0{{0}, f.A};
  CHECK(se_successor(f.ctx, y0) == y0);

  InformationState z1{{1}, f.B};
  CHECK(es_successor(f.ctx, z1, {f.b, SymbolKind::inserted}) == InformationState{{1}, f.C});
  CHECK(es_successor(f.ctx, z1, {f.b, SymbolKind::deleted}) == InformationState{{3}, f.B});
  CHECK(es_successor(f.ctx, z1, {f.b, SymbolKind::genuine}) == InformationState{{3}, f.C});
  // c is not enabled at B
  CHECK_FALSE(es_successor(f.ctx, z1, {f.c, SymbolKind::genuine}).has_value());
  // a is enabled by the completed supervisor at B but not feasible at 1
  CHECK_FALSE(es_successor(f.ctx, z1, {f.a, SymbolKind::genuine}).has_value());
  // insertions need only the supervisor, deletions need the plant too
  InformationState z0{{0}, f.A};
  CHECK_FALSE(es_successor(f.ctx, z0, {f.b, SymbolKind::inserted}).has_value());
  InformationState z3{{3}, f.C};
  CHECK_FALSE(es_successor(f.ctx, z3, {f.b, SymbolKind::deleted}).has_value());
}

TEST_CASE("edit cases keep one component")
{
  for (std::uint64_t seed = 1; seed <= 60; ++seed)
    {
      auto inst = random_instance(seed);
      auto aida = construct_aida(inst.context);
      for (NodeId n = 0; n < aida.size(); ++n)
        for (const auto& e : aida.edges(n))
          {
            const auto& src = aida.node(n);
            const auto& dst = aida.node(e.target);
            CHECK(src.side != dst.side);
            if (e.label.kind == LabelKind::inserted)
              CHECK(src.info.plant == dst.info.plant);
            if (e.label.kind == LabelKind::deleted)
              CHECK(src.info.sup == dst.info.sup);
            if (e.label.is_control())
              {
                CHECK(src.side == Side::supervisor);
                CHECK(e.label.decision == inst.context->supervisor.control_decision(src.info.sup));
                CHECK(src.info.plant.is_subset_of(dst.info.plant));
              }
          }
    }
}

TEST_CASE("induced E-states")
{
  Fx f;
  auto aida = construct_aida(f.sc.context);
  auto z0 = initial_e_state(aida);
  REQUIRE(z0);
  CHECK(induced_e_state(aida, SymbolString{}) == z0);
  CHECK(*z0 == find_node(aida, Side::environment, "0", "A"));

  SymbolString s{{f.a, SymbolKind::genuine}, {f.b, SymbolKind::inserted}};
  CHECK(induced_e_state(aida, s) == find_node(aida, Side::environment, "1", "C"));
  SymbolString bad{{f.b, SymbolKind::genuine}};
  CHECK_FALSE(induced_e_state(aida, bad).has_value());
  // stepping into a detected supervisor has no control hop
  SymbolString caught{{f.a, SymbolKind::genuine}, {f.b, SymbolKind::deleted}, {f.a, SymbolKind::genuine}};
  CHECK_FALSE(induced_e_state(aida, caught).has_value());
}

TEST_CASE("race freedom")
{
  Fx f;
  auto aida = construct_aida(f.sc.context);
  CHECK(is_race_free(aida, find_node(aida, Side::environment, "1", "B")));
  CHECK(is_race_free(aida, find_node(aida, Side::environment, "3", "B")));
  CHECK_THROWS_AS(is_race_free(aida, aida.initial()), ModelError);

  auto usda = prune_usda(aida);
  CHECK_FALSE(is_race_free(usda.structure, find_node(usda.structure, Side::environment, "3", "B")));
}

TEST_CASE("subsystem relation and union")
{
  Fx f;
  auto aida = construct_aida(f.sc.context);
  auto isda = prune_isda(aida).structure;
  auto trimmed = remove_detected(aida);

  CHECK(is_subsystem(aida, aida));
  CHECK(is_subsystem(isda, aida));
  CHECK(is_subsystem(trimmed, aida));
  CHECK(is_subsystem(isda, trimmed));
  CHECK_FALSE(is_subsystem(aida, isda));

  CHECK(canonical_form(ida_union(aida, aida)) == canonical_form(aida));
  CHECK(canonical_form(ida_union(aida, isda)) == canonical_form(aida));
  CHECK(canonical_form(ida_union(isda, aida)) == canonical_form(aida));
  auto u = ida_union(isda, trimmed);
  CHECK(is_subsystem(isda, u));
  CHECK(is_subsystem(trimmed, u));

  // dropping one edge gives a subsystem
  Ida less(f.sc.context);
  for (NodeId n = 0; n < aida.size(); ++n)
    less.add_node(aida.node(n));
  bool dropped = false;
  for (NodeId n = 0; n < aida.size(); ++n)
    for (const auto& e : aida.edges(n))
      {
        if (!dropped && e.label.kind == LabelKind::inserted)
          {
            dropped = true;
            continue;
          }
        less.add_edge(n, e.label, e.target);
      }
  less.set_initial(aida.initial());
  CHECK(dropped);
  CHECK(is_subsystem(less, aida));
  CHECK_FALSE(is_subsystem(aida, less));
}

TEST_CASE("conflicting edges are rejected")
{
  Fx f;
  Ida g(f.sc.context);
  auto e1 = g.add_node({Side::environment, {{1}, f.B}, -1});
  auto s1 = g.add_node({Side::supervisor, {{1}, f.C}, -1});
  auto s2 = g.add_node({Side::supervisor, {{3}, f.C}, -1});
  auto e2 = g.add_node({Side::environment, {{3}, f.C}, -1});
  Label ins = Label::of({f.b, SymbolKind::inserted});
  g.add_edge(e1, ins, s1);
  CHECK_NOTHROW(g.add_edge(e1, ins, s1));
  CHECK(g.num_edges() == 1);
  CHECK_THROWS_AS(g.add_edge(e1, ins, s2), ModelError);
  CHECK_THROWS_AS(g.add_edge(e1, ins, e2), ModelError);
  CHECK(g.add_node({Side::environment, {{1}, f.B}, -1}) == e1);
}

TEST_CASE("text forms")
{
  Fx f;
  auto aida = construct_aida(f.sc.context);
  auto text = serialize_ida(aida, "aida");
  auto back = parse_ida(f.sc.context, text);
  CHECK(serialize_ida(back, "aida") == text);
  CHECK(canonical_form(back) == canonical_form(aida));

  NodeId z = find_node(aida, Side::environment, "1", "B");
  CHECK(node_label(aida, z) == "(1,B)");
  for (const auto& e : aida.edges(z))
    {
      auto t = label_text(f.ctx, e.label);
      CHECK(parse_label(f.ctx, t) == e.label);
    }
  CHECK(label_text(f.ctx, Label::control(EventSet{f.a, f.b})) == "gamma{a,b}");

  auto dot = to_dot(aida, {nullptr, "aida"});
  CHECK(dot.find("digraph \"aida\"") != std::string::npos);
  CHECK(dot.find("shape=box") != std::string::npos);
  CHECK(dot.find("shape=ellipse") != std::string::npos);
  CHECK(dot.find("#f28b82") != std::string::npos);
  CHECK(dot.find("#a8dab5") != std::string::npos);
  CHECK_THROWS_AS(parse_ida(f.sc.context, "ida x\nnode 0 S {9} A\n"), ModelError);
}

TEST_CASE("induced E-states track the supervisor and the reach estimate")
{
  for (std::uint64_t seed = 1; seed <= 30; ++seed)
    {
      auto inst = random_instance(seed);
      const auto& ctx = *inst.context;
      auto aida = construct_aida(inst.context);
      auto z0 = initial_e_state(aida);
      REQUIRE(z0);
      std::mt19937_64 rng(seed);
      for (int walk = 0; walk < 50; ++walk)
        {
          NodeId z = *z0;
          SymbolString s;
          for (int len = 0; len < 8; ++len)
            {
              std::vector<Symbol> moves;
              for (const auto& e : aida.edges(z))
                if (!aida.is_dead(e.target))
                  moves.push_back(e.label.symbol());
              if (moves.empty())
                break;
              Symbol m = moves[rng() % moves.size()];
              s.push_back(m);
              z = *advance_e_state(aida, z, m);
              auto q = step(ctx.supervisor.automaton, ctx.supervisor.automaton.initial(), supervisor_view(s));
              CHECK(q == aida.node(z).info.sup);
              auto re = reach_estimate(ctx, s);
              REQUIRE(re);
              CHECK(*re == aida.node(z).info.plant);
              CHECK(induced_e_state(aida, s) == z);
            }
        }
    }
}
