#include "sdsynth/random_instance.hpp"

#include <algorithm>
#include <random>

#include "sdsynth/errors.hpp"

namespace sdsynth
{

InstanceShape
small_shape()
{
  return {};
}

InstanceShape
tiny_shape()
{
  InstanceShape s;
  s.max_states = 3;
  s.max_events = 3;
  s.max_observable = 2;
  s.max_compromised = 1;
  s.density = 0.6;
  return s;
}

namespace
{

int
pick(std::mt19937_64& rng, int lo, int hi)
{
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool
coin(std::mt19937_64& rng, double p)
{
  return std::bernoulli_distribution(p)(rng);
}

} // namespace

RandomInstance
random_instance(std::uint64_t seed, const InstanceShape& shape)
{
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt)
    {
      int nx = pick(rng, 2, shape.max_states);
      int ne = pick(rng, 1, shape.max_events);
      std::vector<EventDecl> decls;
      int observable = 0;
      for (int i = 0; i < ne; ++i)
        {
          bool obs = observable < shape.max_observable && coin(rng, 0.7);
          observable += obs ? 1 : 0;
          decls.push_back({std::string(1, static_cast<char>('a' + i)), obs, coin(rng, 0.5)});
        }
      if (observable == 0)
        {
          decls.front().observable = true;
          observable = 1;
        }

      std::vector<std::vector<int>> delta(nx, std::vector<int>(ne, -1));
      for (int x = 0; x < nx; ++x)
        for (int e = 0; e < ne; ++e)
          if (coin(rng, shape.density))
            delta[x][e] = pick(rng, 0, nx - 1);

      int nq = pick(rng, 1, 3);
      Automaton sup("supervisor");
      for (const auto& d : decls)
        sup.add_event(d);
      for (int q = 0; q < nq; ++q)
        sup.add_state(std::string(1, static_cast<char>('A' + q)));
      sup.set_initial(0);
      for (int q = 0; q < nq; ++q)
        for (int e = 0; e < ne; ++e)
          {
            const auto& d = decls[static_cast<std::size_t>(e)];
            if (d.controllable && !coin(rng, 0.75))
              continue;
            auto dst = d.observable ? static_cast<StateId>(pick(rng, 0, nq - 1)) : static_cast<StateId>(q);
            sup.add_transition(static_cast<StateId>(q), static_cast<EventId>(e), dst);
          }

      auto build_plant = [&](const StateSet& sinks) {
        Automaton g("plant");
        for (const auto& d : decls)
          g.add_event(d);
        for (int x = 0; x < nx; ++x)
          g.add_state(std::to_string(x));
        g.set_initial(0);
        for (int x = 0; x < nx; ++x)
          {
            if (sinks.contains(static_cast<StateId>(x)))
              continue;
            for (int e = 0; e < ne; ++e)
              if (delta[x][e] >= 0)
                g.add_transition(static_cast<StateId>(x), static_cast<EventId>(e),
                                 static_cast<StateId>(delta[x][e]));
          }
        return g;
      };

      Automaton g0 = build_plant({});
      SupervisorRealization r0(g0, sup);
      // a loop that never moves leaves nothing to attack
      if (parallel(r0.automaton(), g0).automaton.num_states() < 2)
        continue;
      StateSet reach = nominal_reachable(g0, r0);
      // critical candidates: states the plant can reach but the nominal loop cannot
      std::vector<StateId> unreached;
      for (StateId x : accessible_states(g0))
        if (!reach.contains(x))
          unreached.push_back(x);
      std::sort(unreached.begin(), unreached.end());
      if (unreached.empty())
        continue;
      std::vector<StateId> crit;
      for (StateId x : unreached)
        if (coin(rng, 0.5))
          crit.push_back(x);
      if (crit.empty())
        crit.push_back(unreached[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(unreached.size()) - 1))]);

      std::vector<EventId> obs_events;
      for (int e = 0; e < ne; ++e)
        if (decls[static_cast<std::size_t>(e)].observable)
          obs_events.push_back(static_cast<EventId>(e));
      std::shuffle(obs_events.begin(), obs_events.end(), rng);
      int na = pick(rng, 1, std::min<int>(shape.max_compromised, static_cast<int>(obs_events.size())));
      EventSet compromised;
      for (int i = 0; i < na; ++i)
        compromised.insert(obs_events[static_cast<std::size_t>(i)]);

      RandomInstance ri;
      ri.seed = seed;
      ri.critical = StateSet(std::move(crit));
      ri.plant = build_plant(ri.critical);
      ri.supervisor = std::move(sup);
      ri.compromised = compromised;
      ri.context = make_context(ri.plant, ri.supervisor, ri.compromised, ri.critical);
      return ri;
    }
  throw ModelError("no usable instance for seed " + std::to_string(seed));
}

} // namespace sdsynth
