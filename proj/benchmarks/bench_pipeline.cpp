#include <benchmark/benchmark.h>

#include "sdsynth/builders.hpp"
#include "sdsynth/oracle.hpp"
#include "sdsynth/pruning.hpp"
#include "sdsynth/random_instance.hpp"
#include "sdsynth/synthesis.hpp"

using namespace sdsynth;

namespace
{

// a batch of instances per iteration so the timings are not dominated by one seed
std::vector<ContextPtr>
batch(int n)
{
  std::vector<ContextPtr> out;
  for (int i = 1; i <= n; ++i)
    out.push_back(random_instance(static_cast<std::uint64_t>(i)).context);
  return out;
}

void
BM_construct(benchmark::State& state)
{
  auto ctxs = batch(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const auto& c : ctxs)
      benchmark::DoNotOptimize(construct_aida(c));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_construct)->Arg(10)->Arg(50);

void
BM_prune(benchmark::State& state)
{
  auto mode = static_cast<AttackMode>(state.range(0));
  std::vector<std::shared_ptr<const Ida>> inputs;
  for (const auto& c : batch(20))
    {
      auto aida = std::make_shared<const Ida>(construct_aida(c));
      inputs.push_back(mode == AttackMode::bounded ? std::make_shared<const Ida>(construct_baida(aida, 2)) : aida);
    }
  for (auto _ : state)
    for (const auto& in : inputs)
      benchmark::DoNotOptimize(prune(*in, mode, 2));
}
BENCHMARK(BM_prune)
    ->Arg(static_cast<int>(AttackMode::interruptible))
    ->Arg(static_cast<int>(AttackMode::unbounded))
    ->Arg(static_cast<int>(AttackMode::bounded));

void
BM_pipeline(benchmark::State& state)
{
  auto ctxs = batch(20);
  for (auto _ : state)
    for (const auto& c : ctxs)
      benchmark::DoNotOptimize(run_pipeline(c, AttackMode::interruptible, std::nullopt, Strength::weak));
}
BENCHMARK(BM_pipeline);

void
BM_verify(benchmark::State& state)
{
  std::vector<std::pair<ContextPtr, AttackFunction>> attacks;
  for (const auto& c : batch(40))
    {
      auto p = run_pipeline(c, AttackMode::interruptible, std::nullopt, Strength::weak);
      if (p.synthesis.feasible)
        attacks.emplace_back(c, *p.synthesis.attack);
    }
  OracleOptions opts;
  opts.horizon = static_cast<int>(state.range(0));
  for (auto _ : state)
    for (const auto& [c, f] : attacks)
      benchmark::DoNotOptimize(check_problem1(*c, FunctionAttacker(f), opts));
  state.counters["attacks"] = static_cast<double>(attacks.size());
}
BENCHMARK(BM_verify)->Arg(6)->Arg(10);

} // namespace
BENCHMARK_MAIN();
