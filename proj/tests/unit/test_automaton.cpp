#include <doctest.h>

#include "brute_force.hpp"
#include "fixture.hpp"
#include "sdsynth/automaton.hpp"
#include "sdsynth/model_io.hpp"
#include "sdsynth/random_instance.hpp"

using namespace sdsynth;
using namespace sdsynth::test;

namespace
{

Automaton
with_unobservable()
{
  return parse_automaton_text(R"(
automaton g
event a obs unctrl
event u unobs unctrl
event v unobs ctrl
state 0 initial
state 1
state 2
state 3
trans 0 u 1
trans 1 v 2
trans 2 a 3
trans 0 a 0
)");
}

} // namespace

TEST_CASE("fixture plant basics")
{
  auto sc = fixture();
  const auto& g = sc.context->plant;
  auto a = g.event_id("a");
  auto b = g.event_id("b");
  auto c = g.event_id("c");

  CHECK(active_events(g, {0}) == EventSet{a});
  CHECK(active_events(g, {1}) == EventSet{b, c});
  CHECK(active_events(g, {}) == EventSet{});

  EventString ab{a, b};
  CHECK(step(g, 0, ab) == std::optional<StateId>(3));
  EventString bad{a, a};
  CHECK_FALSE(step(g, 0, bad).has_value());
  CHECK(step(g, 2, EventString{}) == std::optional<StateId>(2));

  CHECK(next_states(g, {0}, a) == StateSet{1});
  CHECK(next_states(g, {0, 3}, a) == StateSet{1, 0});
  CHECK(next_states(g, {0}, b).empty());
  CHECK(g.observable_events() == g.all_events());
}

TEST_CASE("unobservable reach respects the decision")
{
  auto g = with_unobservable();
  auto u = g.event_id("u");
  auto v = g.event_id("v");
  CHECK(unobservable_reach(g, {0}, EventSet{u, v}) == StateSet{0, 1, 2});
  CHECK(unobservable_reach(g, {0}, EventSet{u}) == StateSet{0, 1});
  CHECK(unobservable_reach(g, {0}, EventSet{}) == StateSet{0});

  for (const EventSet& gamma : {EventSet{u}, EventSet{v}, EventSet{u, v}})
    for (StateId x = 0; x < 4; ++x)
      {
        auto once = unobservable_reach(g, {x}, gamma);
        CHECK(once == closure_by_iteration(g, {x}, gamma));
        CHECK(unobservable_reach(g, once, gamma) == once);
        CHECK(once.contains(x));
      }
}

TEST_CASE("projection drops unobservable events")
{
  auto g = with_unobservable();
  auto a = g.event_id("a");
  EventString s{g.event_id("u"), g.event_id("v"), a};
  CHECK(project(g, s) == EventString{a});
}

TEST_CASE("observer language equals projected language")
{
  auto g = with_unobservable();
  auto obs = observer(g);
  CHECK(obs.automaton.state_name(obs.automaton.initial()) == "{0,1,2}");
  CHECK(strings_of(obs.automaton, 6) == up_to(project_all(g, strings_of(g, 8)), 6));

  for (std::uint64_t seed = 1; seed <= 25; ++seed)
    {
      auto inst = random_instance(seed);
      auto o = observer(inst.plant);
      auto projected = up_to(project_all(inst.plant, strings_of(inst.plant, 8)), 4);
      CHECK(up_to(strings_of(o.automaton, 4), 4) == projected);
      for (StateId m = 0; m < o.automaton.num_states(); ++m)
        CHECK_FALSE(o.macro_states[m].empty());
    }
}

TEST_CASE("parallel composition intersects shared languages")
{
  auto sc = fixture();
  const auto& g = sc.context->plant;
  const auto& r = sc.context->realization.automaton();
  auto p = parallel(r, g);
  auto lp = strings_of(p.automaton, 6);
  auto lg = strings_of(g, 6);
  auto lr = strings_of(r, 6);
  std::set<EventString> both;
  for (const auto& s : lg)
    if (lr.count(s))
      both.insert(s);
  CHECK(lp == both);
  CHECK(p.automaton.state_name(p.automaton.initial()) == "(A,0)");
}

TEST_CASE("parallel composition interleaves private events")
{
  auto x = parse_automaton_text("automaton x\nevent p obs ctrl\nstate 0 initial\nstate 1\ntrans 0 p 1\n");
  auto y = parse_automaton_text("automaton y\nevent q obs ctrl\nstate 0 initial\nstate 1\ntrans 0 q 1\n");
  auto p = parallel(x, y);
  CHECK(p.automaton.num_states() == 4);
  CHECK(strings_of(p.automaton, 2).size() == 5);
}

TEST_CASE("accessible trim")
{
  auto g = parse_automaton_text(R"(
automaton g
event a obs ctrl
state 0 initial
state 1
state 2
trans 0 a 1
trans 2 a 0
)");
  auto t = trim_accessible_map(g);
  CHECK(t.automaton.num_states() == 2);
  CHECK(t.kept == std::vector<StateId>{0, 1});
  CHECK(accessible_states(g) == std::vector<StateId>{0, 1});
}

TEST_CASE("automaton rejects nondeterminism and bad ids")
{
  Automaton g("g");
  auto s0 = g.add_state("0");
  auto s1 = g.add_state("1");
  auto e = g.add_event({"e"});
  g.add_transition(s0, e, s1);
  g.add_transition(s0, e, s1);
  CHECK(g.num_transitions() == 1);
  CHECK_THROWS(g.add_transition(s0, e, s0));
  CHECK_THROWS(g.add_transition(s0, e + 1, s0));
  CHECK_THROWS(g.add_transition(7, e, s0));
}

TEST_CASE("state and event sets")
{
  StateSet s{3, 1, 3};
  CHECK(s.members() == std::vector<StateId>{1, 3});
  CHECK(StateSet{1}.is_subset_of(s));
  CHECK_FALSE(s.is_subset_of(StateSet{1}));
  CHECK(s.intersects(StateSet{3, 4}));

  EventSet e{1, 70};
  CHECK(e.size() == 2);
  e.erase(70);
  CHECK(e == EventSet{1});
  CHECK((EventSet{1, 2} & EventSet{2, 3}) == EventSet{2});
  CHECK((EventSet{1, 2} - EventSet{2}) == EventSet{1});
  CHECK((EventSet{1} | EventSet{65}).to_vector() == std::vector<EventId>{1, 65});
}
