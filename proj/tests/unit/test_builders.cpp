#include <doctest.h>

#include <cmath>

#include "fixture.hpp"
#include "sdsynth/builders.hpp"
#include "sdsynth/errors.hpp"
#include "sdsynth/random_instance.hpp"

using namespace sdsynth;
using namespace sdsynth::test;

namespace
{

ContextPtr
without_attacker(const GameContext& ctx)
{
  return make_context(ctx.plant, ctx.realization.automaton(), EventSet{}, ctx.critical);
}

Ida
copy_without_edge(const Ida& src, NodeId skip_src, const Label& skip)
{
  Ida out(src.context_ptr());
  for (NodeId n = 0; n < src.size(); ++n)
    out.add_node(src.node(n));
  for (NodeId n = 0; n < src.size(); ++n)
    for (const auto& e : src.edges(n))
      if (!(n == skip_src && e.label == skip))
        out.add_edge(n, e.label, e.target);
  out.set_initial(src.initial());
  return out;
}

} // namespace

TEST_CASE("largest structure of the fixture")
{
  auto sc = fixture();
  auto aida = construct_aida(sc.context);
  CHECK(aida.size() == 13);
  CHECK(has_node(aida, Side::supervisor, "0", "dead"));
  NodeId goal = find_node(aida, Side::environment, "2", "A");
  CHECK(aida.is_goal(goal));
  CHECK(aida.edges(goal).empty());
  NodeId dead = find_node(aida, Side::supervisor, "0", "dead");
  CHECK(aida.is_dead(dead));
  CHECK(aida.edges(dead).empty());
  CHECK(verify_aida_maximality(aida));
  CHECK(aida.node(aida.initial()) == IdaNode{Side::supervisor, {{0}, sc.context->supervisor.automaton.initial()}, -1});
}

TEST_CASE("no compromised events means no edit moves")
{
  auto sc = fixture();
  auto ctx = without_attacker(*sc.context);
  auto aida = construct_aida(ctx);
  for (NodeId n = 0; n < aida.size(); ++n)
    {
      CHECK_FALSE(aida.is_dead(n));
      CHECK_FALSE(aida.is_goal(n));
      for (const auto& e : aida.edges(n))
        CHECK((e.label.kind == LabelKind::genuine || e.label.is_control()));
    }
  CHECK(verify_aida_maximality(aida));
}

TEST_CASE("a structure without attacks is not maximal once events are compromised")
{
  auto sc = fixture();
  auto quiet = construct_aida(without_attacker(*sc.context));
  auto as_attacked = parse_ida(sc.context, serialize_ida(quiet));
  auto rep = check_aida_maximality(as_attacked);
  CHECK_FALSE(rep.ok);
  CHECK_FALSE(rep.problems.empty());
}

TEST_CASE("removing any move breaks maximality")
{
  auto sc = fixture();
  auto aida = construct_aida(sc.context);
  int checked = 0;
  for (NodeId n = 0; n < aida.size(); ++n)
    for (const auto& e : aida.edges(n))
      {
        auto less = copy_without_edge(aida, n, e.label);
        CHECK_FALSE(verify_aida_maximality(less));
        ++checked;
      }
  CHECK(checked == static_cast<int>(aida.num_edges()));
}

TEST_CASE("random instances: maximal and within the size bound")
{
  for (std::uint64_t seed = 1; seed <= 100; ++seed)
    {
      auto inst = random_instance(seed);
      auto aida = construct_aida(inst.context);
      auto rep = check_aida_maximality(aida);
      CHECK_MESSAGE(rep.ok, "seed " << seed << ": " << (rep.problems.empty() ? "" : rep.problems.front()));
      double bound = std::pow(2.0, static_cast<double>(inst.plant.num_states() + 1))
                     * static_cast<double>(inst.context->supervisor.automaton.num_states());
      CHECK(static_cast<double>(aida.size()) <= bound);
    }
}

TEST_CASE("counter automaton")
{
  auto sc = fixture();
  const auto& ctx = *sc.context;
  auto aida = construct_aida(sc.context);
  auto labels = label_alphabet(aida);
  auto ins = ctx.edits.name({ctx.plant.event_id("b"), SymbolKind::inserted});

  {
    auto g = build_g_bound(ctx, 1, labels);
    const auto& a = g.automaton;
    auto e = a.event_id(ins);
    CHECK(a.delta(0, e) == std::optional<StateId>(1));
    CHECK_FALSE(a.delta(1, e).has_value());
  }
  {
    auto g = build_g_bound(ctx, 3, labels);
    const auto& a = g.automaton;
    auto ie = a.event_id(ins);
    auto ge = a.event_id("a");
    auto de = a.event_id("b.del");
    CHECK(a.delta(0, ge) == std::optional<StateId>(1));
    CHECK(a.delta(3, ge) == std::optional<StateId>(1));
    CHECK(a.delta(2, de) == std::optional<StateId>(1));
    CHECK(a.delta(1, ie) == std::optional<StateId>(2));
    CHECK(a.delta(2, ie) == std::optional<StateId>(3));
    CHECK_FALSE(a.delta(3, ie).has_value());
    for (const auto& l : labels)
      if (l.is_control())
        for (StateId n = 0; n <= 3; ++n)
          CHECK(a.delta(n, a.event_id(label_text(ctx, l))) == std::optional<StateId>(n));
  }
  {
    auto g = build_g_bound(ctx, 1, labels, false);
    auto e = g.automaton.event_id(ins);
    CHECK(g.automaton.delta(0, e) == std::optional<StateId>(0));
  }
  CHECK_THROWS_AS(build_g_bound(ctx, 0, labels), ModelError);
}

TEST_CASE("bounded structure projects into the largest one")
{
  auto check = [](const ContextPtr& ctx, int n_a) {
    auto aida = std::make_shared<const Ida>(construct_aida(ctx));
    auto baida = construct_baida(aida, n_a);
    REQUIRE(baida.base() == aida.get());
    for (NodeId n = 0; n < baida.size(); ++n)
      {
        const auto& nd = baida.node(n);
        CHECK(nd.counter >= 0);
        CHECK(nd.counter <= n_a);
        NodeId m = baida.base_node(n);
        IdaNode flat = nd;
        flat.counter = -1;
        CHECK(aida->node(m) == flat);
        for (const auto& e : baida.edges(n))
          {
            auto t = aida->successor(m, e.label);
            REQUIRE(t);
            CHECK(*t == baida.base_node(e.target));
            if (e.label.kind == LabelKind::inserted)
              CHECK(baida.node(e.target).counter == nd.counter + 1);
          }
      }
  };
  auto sc = fixture();
  check(sc.context, 1);
  check(sc.context, 2);
  for (std::uint64_t seed = 1; seed <= 30; ++seed)
    check(random_instance(seed).context, 2);
}

TEST_CASE("a loose bound keeps every move")
{
  auto sc = fixture();
  auto aida = std::make_shared<const Ida>(construct_aida(sc.context));
  // the longest insertion chain of the fixture is one symbol
  auto baida = construct_baida(aida, 4);
  std::vector<bool> covered(aida->size(), false);
  for (NodeId n = 0; n < baida.size(); ++n)
    {
      NodeId m = baida.base_node(n);
      covered[m] = true;
      CHECK(baida.edges(n).size() == aida->edges(m).size());
    }
  for (bool c : covered)
    CHECK(c);
}

TEST_CASE("label order")
{
  auto sc = fixture();
  auto b = sc.context->plant.event_id("b");
  auto c = sc.context->plant.event_id("c");
  CHECK(label_before(Label::control(EventSet{}), Label::of({b, SymbolKind::genuine})));
  CHECK(label_before(Label::of({b, SymbolKind::genuine}), Label::of({b, SymbolKind::deleted})));
  CHECK(label_before(Label::of({b, SymbolKind::deleted}), Label::of({b, SymbolKind::inserted})));
  CHECK(label_before(Label::of({b, SymbolKind::inserted}), Label::of({c, SymbolKind::genuine})));
  CHECK_FALSE(label_before(Label::of({c, SymbolKind::genuine}), Label::of({b, SymbolKind::inserted})));
}
