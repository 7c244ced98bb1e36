#include <doctest.h>

#include "brute_force.hpp"
#include "fixture.hpp"
#include "sdsynth/errors.hpp"
#include "sdsynth/model_io.hpp"
#include "sdsynth/random_instance.hpp"
#include "sdsynth/supervisor.hpp"

using namespace sdsynth;
using namespace sdsynth::test;

TEST_CASE("completed supervisor of the fixture")
{
  auto sc = fixture();
  const auto& ctx = *sc.context;
  const auto& rt = ctx.supervisor;
  const auto& r = rt.automaton;
  auto a = ctx.plant.event_id("a");
  auto b = ctx.plant.event_id("b");
  auto c = ctx.plant.event_id("c");

  REQUIRE(r.num_states() == 4);
  CHECK(r.find_state("A"));
  CHECK(r.find_state("B"));
  CHECK(r.find_state("C"));
  CHECK(r.state_name(rt.dead) == "dead");
  CHECK(r.state_name(r.initial()) == "A");

  auto A = r.state_id("A");
  auto B = r.state_id("B");
  auto C = r.state_id("C");
  CHECK(rt.step(A, a) == B);
  CHECK(rt.step(B, b) == C);
  // `a` never follows `a` in the nominal loop, so seeing it at B is an attack
  CHECK(rt.step(B, a) == rt.dead);
  CHECK(rt.step(C, a) == A);
  CHECK(rt.step(C, c) == A);
  CHECK(rt.step(rt.dead, a) == rt.dead);
  CHECK_FALSE(rt.step(rt.dead, b).has_value());
  CHECK_FALSE(rt.step(A, b).has_value());

  CHECK(rt.control_decision(A) == EventSet{a});
  CHECK(rt.control_decision(B) == EventSet{a, b});
  CHECK(rt.control_decision(C) == EventSet{a, c});
  CHECK(rt.is_dead(rt.dead));
  CHECK_NOTHROW(check_rtilde(ctx.plant, rt));
  CHECK(nominal_reachable(ctx.plant, ctx.realization) == StateSet{0, 1, 3});
}

TEST_CASE("observations of the nominal loop never reach dead")
{
  for (std::uint64_t seed = 1; seed <= 40; ++seed)
    {
      auto inst = random_instance(seed);
      const auto& ctx = *inst.context;
      const auto& rt = ctx.supervisor;
      CHECK_NOTHROW(check_rtilde(ctx.plant, rt));
      auto observed = project_all(ctx.plant, supervised_strings(ctx.plant, inst.supervisor, 9));
      // observation strings of the completed supervisor that avoid dead
      std::set<EventString> alive;
      for (const auto& s : strings_of(rt.automaton, 3))
        {
          if (project(ctx.plant, s) != s)
            continue;
          StateId q = rt.automaton.initial();
          bool ok = true;
          for (EventId e : s)
            {
              q = *rt.step(q, e);
              ok = ok && !rt.is_dead(q);
            }
          if (ok)
            alive.insert(s);
        }
      CHECK(up_to(observed, 3) == alive);
    }
}

TEST_CASE("completed supervisor never blocks uncontrollable events")
{
  for (std::uint64_t seed = 100; seed < 140; ++seed)
    {
      auto inst = random_instance(seed);
      const auto& rt = inst.context->supervisor;
      EventSet uc = inst.plant.uncontrollable_events();
      for (StateId q = 0; q < rt.automaton.num_states(); ++q)
        CHECK(uc.is_subset_of(rt.control_decision(q)));
    }
}

TEST_CASE("supervisor validation")
{
  auto plant = load_automaton(scenario_dir() / "example1" / "plant.aut");
  auto reject = [&](const std::string& text) {
    CHECK_THROWS_AS(SupervisorRealization(plant, parse_automaton_text(text)), ModelError);
  };
  // reserved name
  reject("automaton r\nevent a obs unctrl\nevent b obs ctrl\nevent c obs ctrl\nstate dead initial\n");
  // missing event
  reject("automaton r\nevent a obs unctrl\nevent b obs ctrl\nstate A initial\n");
  // attribute mismatch
  reject("automaton r\nevent a obs ctrl\nevent b obs ctrl\nevent c obs ctrl\nstate A initial\n");

  auto g2 = parse_automaton_text("automaton g\nevent u unobs ctrl\nstate 0 initial\nstate 1\ntrans 0 u 1\n");
  CHECK_THROWS_AS(SupervisorRealization(g2, parse_automaton_text(
                                                "automaton r\nevent u unobs ctrl\nstate A initial\nstate B\n"
                                                "trans A u B\n")),
                  ModelError);
  CHECK_NOTHROW(SupervisorRealization(
      g2, parse_automaton_text("automaton r\nevent u unobs ctrl\nstate A initial\ntrans A u A\n")));
}
