#include "commands.hpp"

#include <ostream>
#include <sstream>

#include "sdsynth/builders.hpp"
#include "sdsynth/errors.hpp"
#include "sdsynth/model_io.hpp"
#include "sdsynth/oracle.hpp"
#include "sdsynth/random_instance.hpp"
#include "sdsynth/synthesis.hpp"

namespace sdsynth::cli
{

namespace
{

struct Setup
{
  Scenario scenario;
  AttackMode mode;
  std::optional<int> n_a;
  Strength strength;
};

Setup
load(const Request& req)
{
  Setup s{load_scenario(req.scenario), AttackMode::interruptible, std::nullopt, Strength::strong};
  s.mode = s.scenario.mode;
  s.n_a = s.scenario.n_a;
  s.strength = s.scenario.strength;
  if (req.mode)
    {
      auto m = parse_mode(*req.mode);
      if (!m)
        throw ModelError("unknown mode '" + *req.mode + "'");
      s.mode = *m;
    }
  if (req.strength)
    {
      auto st = parse_strength(*req.strength);
      if (!st)
        throw ModelError("unknown strength '" + *req.strength + "'");
      s.strength = *st;
    }
  if (req.n_a)
    {
      if (*req.n_a < 1)
        throw ModelError("--n-a must be a positive integer");
      s.n_a = req.n_a;
    }
  if (s.mode == AttackMode::bounded && !s.n_a)
    throw ModelError("bounded mode needs n_a (scenario key or --n-a)");
  return s;
}

std::string
pruned_name(AttackMode m)
{
  switch (m)
    {
    case AttackMode::interruptible:
      return "isda";
    case AttackMode::unbounded:
      return "usda";
    case AttackMode::bounded:
      return "bsda";
    }
  return "pruned";
}

void
emit(const Request& req, const std::string& name, const std::string& content, std::ostream& out)
{
  std::filesystem::create_directories(req.out_dir);
  auto path = req.out_dir / name;
  write_file(path, content);
  out << "wrote " << path.string() << '\n';
}

void
emit_ida(const Request& req, const Ida& ida, const std::string& name, const std::vector<bool>* flagged,
         std::ostream& out)
{
  emit(req, name + ".ida", serialize_ida(ida, name), out);
  emit(req, name + ".dot", to_dot(ida, {flagged, name}), out);
  if (flagged != nullptr)
    emit(req, name + ".flags", serialize_flags(ida, *flagged), out);
}

std::string
path_text(const Ida& ida, const AttackPath& p)
{
  std::ostringstream s;
  for (std::size_t i = 0; i < p.states.size(); ++i)
    {
      s << node_label(ida, p.states[i]);
      if (i < p.symbols.size())
        s << " --" << ida.context().edits.name(p.symbols[i]) << "--> ";
    }
  s << '\n';
  return s.str();
}

int
cmd_validate(const Request& req, std::ostream& out)
{
  Setup s = load(req);
  const auto& ctx = *s.scenario.context;
  check_rtilde(ctx.plant, ctx.supervisor);
  out << "plant: " << ctx.plant.num_states() << " states, " << ctx.plant.num_events() << " events, "
      << ctx.plant.num_transitions() << " transitions\n";
  out << "supervisor: " << ctx.realization.automaton().num_states() << " states\n";
  out << "completed supervisor: " << ctx.supervisor.automaton.num_states() << " states\n";
  std::vector<std::string> comp;
  ctx.edits.compromised().for_each([&](EventId e) { comp.push_back(ctx.plant.event(e).name); });
  out << "compromised events:";
  for (const auto& c : comp)
    out << ' ' << c;
  out << "\ncritical states: " << format_state_set(ctx.plant, ctx.critical) << '\n';
  out << "mode: " << to_string(s.mode);
  if (s.n_a)
    out << " (n_a=" << *s.n_a << ")";
  out << "\nstrength: " << to_string(s.strength) << '\n';
  StateSet bad = nominal_critical_reachable(ctx);
  if (!bad.empty())
    {
      out << "error: the unattacked loop already reaches critical states " << format_state_set(ctx.plant, bad)
          << '\n';
      return input_error;
    }
  out << "ok\n";
  return ok;
}

int
cmd_build_rtilde(const Request& req, std::ostream& out)
{
  Setup s = load(req);
  emit(req, "rtilde.aut", automaton_to_text(s.scenario.context->supervisor.automaton), out);
  return ok;
}

int
cmd_build_aida(const Request& req, std::ostream& out)
{
  Setup s = load(req);
  auto aida = std::make_shared<const Ida>(construct_aida(s.scenario.context));
  emit_ida(req, *aida, "aida", nullptr, out);
  if (s.mode == AttackMode::bounded)
    {
      Ida baida = construct_baida(aida, *s.n_a, s.scenario.options.bound_initial);
      emit_ida(req, baida, "baida", nullptr, out);
    }
  return ok;
}

int
cmd_prune(const Request& req, std::ostream& out)
{
  Setup s = load(req);
  Pipeline p = run_pipeline(s.scenario.context, s.mode, s.n_a, s.strength, s.scenario.options);
  emit_ida(req, p.pruned.structure, pruned_name(s.mode), &p.pruned.flagged, out);
  out << "rounds: " << p.pruned.rounds << ", nodes: " << p.pruned.structure.size() << '\n';
  return ok;
}

Verdict
verify_attack(const GameContext& ctx, const AttackFunction& f, int horizon)
{
  FunctionAttacker att(f);
  OracleOptions opts;
  opts.horizon = horizon;
  return check_problem1(ctx, att, opts);
}

int
cmd_synthesize(const Request& req, std::ostream& out)
{
  Setup s = load(req);
  const auto& ctx = *s.scenario.context;
  Pipeline p = run_pipeline(s.scenario.context, s.mode, s.n_a, s.strength, s.scenario.options);
  emit_ida(req, *p.aida, "aida", nullptr, out);
  if (p.baida)
    emit_ida(req, *p.baida, "baida", nullptr, out);
  emit_ida(req, p.pruned.structure, pruned_name(s.mode), &p.pruned.flagged, out);
  if (!p.synthesis.feasible)
    {
      out << "infeasible: no " << to_string(s.strength) << " " << to_string(s.mode) << " attack exists\n";
      return infeasible;
    }
  const auto& f = *p.synthesis.attack;
  emit(req, "path.txt", path_text(p.pruned.structure, *p.synthesis.path), out);
  emit(req, "attack.aut", automaton_to_text(f.automaton), out);
  emit(req, "decisions.txt", format_decision_table(decision_table(f, ctx, 3), ctx), out);
  Verdict v = verify_attack(ctx, f, req.horizon);
  emit(req, "verdict.txt", format_verdict(v, s.strength), out);
  auto shape = check_mode_shape(f, s.scenario.options.bound_initial);
  for (const auto& problem : shape)
    out << "shape: " << problem << '\n';
  if (!v.succeeds(s.strength) || !shape.empty())
    {
      out << "error: the synthesized attack fails verification\n" << format_verdict(v, s.strength);
      return internal_error;
    }
  out << "feasible: " << to_string(s.strength) << " " << to_string(s.mode) << " attack verified\n";
  return ok;
}

int
cmd_export_dot(const Request& req, std::ostream& out)
{
  Setup s = load(req);
  const auto& ctx = s.scenario.context;
  auto aida = std::make_shared<const Ida>(construct_aida(ctx));
  if (req.stage == "aida")
    {
      emit(req, "aida.dot", to_dot(*aida, {nullptr, "aida"}), out);
      return ok;
    }
  if (req.stage == "baida")
    {
      if (!s.n_a)
        throw ModelError("stage baida needs n_a");
      Ida baida = construct_baida(aida, *s.n_a, s.scenario.options.bound_initial);
      emit(req, "baida.dot", to_dot(baida, {nullptr, "baida"}), out);
      return ok;
    }
  std::optional<AttackMode> mode;
  if (req.stage == "isda")
    mode = AttackMode::interruptible;
  else if (req.stage == "usda")
    mode = AttackMode::unbounded;
  else if (req.stage == "bsda")
    mode = AttackMode::bounded;
  if (!mode)
    throw ModelError("unknown stage '" + req.stage + "' (aida, baida, isda, usda, bsda)");
  if (*mode == AttackMode::bounded && !s.n_a)
    throw ModelError("stage bsda needs n_a");
  Pipeline p = run_pipeline(ctx, *mode, s.n_a, s.strength, s.scenario.options);
  emit(req, req.stage + ".dot", to_dot(p.pruned.structure, {&p.pruned.flagged, req.stage}), out);
  return ok;
}

/// Structural checks and end-to-end verification over seeded instances.
int
verify_random(const Request& req, std::ostream& out)
{
  int failures = 0;
  int feasible = 0;
  for (int i = 0; i < req.random_instances; ++i)
    {
      std::uint64_t seed = req.seed + static_cast<std::uint64_t>(i);
      RandomInstance ri = random_instance(seed);
      const auto& ctx = *ri.context;
      std::vector<std::string> problems;
      auto aida = std::make_shared<const Ida>(construct_aida(ri.context));
      auto rep = check_aida_maximality(*aida);
      problems.insert(problems.end(), rep.problems.begin(), rep.problems.end());
      std::size_t bound = (std::size_t{1} << (ctx.plant.num_states() + 1)) * ctx.supervisor.automaton.num_states();
      if (aida->size() > bound)
        problems.push_back("structure exceeds the size bound");
      for (AttackMode mode : {AttackMode::interruptible, AttackMode::unbounded, AttackMode::bounded})
        for (Strength st : {Strength::strong, Strength::weak})
          {
            std::optional<int> n_a;
            if (mode == AttackMode::bounded)
              n_a = 2;
            Pipeline p = run_pipeline(ri.context, mode, n_a, st);
            if (mode == AttackMode::interruptible)
              for (NodeId n = 0; n < p.pruned.structure.size(); ++n)
                {
                  const auto& nd = p.pruned.structure.node(n);
                  if (!is_meta_controllable(p.pruned.structure, n))
                    problems.push_back("pruned node " + node_label(p.pruned.structure, n) + " loses a move");
                  if (nd.side == Side::environment && !ctx.is_goal(nd.info.plant)
                      && !is_race_free(p.pruned.structure, n))
                    problems.push_back("pruned node " + node_label(p.pruned.structure, n) + " races");
                }
            if (!p.synthesis.feasible)
              continue;
            ++feasible;
            Verdict v = verify_attack(ctx, *p.synthesis.attack, req.horizon);
            if (!v.succeeds(st))
              problems.push_back(to_string(mode) + "/" + to_string(st) + " attack fails verification");
          }
      out << "seed " << seed << ": " << (problems.empty() ? "ok" : "FAILED") << '\n';
      for (const auto& pr : problems)
        out << "  " << pr << '\n';
      failures += problems.empty() ? 0 : 1;
    }
  out << req.random_instances << " instances, " << feasible << " feasible syntheses, " << failures
      << " with problems\n";
  return failures == 0 ? ok : internal_error;
}

int
cmd_verify(const Request& req, std::ostream& out)
{
  if (req.random_instances > 0)
    return verify_random(req, out);
  if (req.scenario.empty())
    throw ModelError("verify needs a scenario or --random-instances");
  Setup s = load(req);
  const auto& ctx = *s.scenario.context;
  std::optional<AttackFunction> f;
  if (req.attack)
    f = load_attack(ctx, *req.attack, s.mode, s.n_a);
  else
    {
      Pipeline p = run_pipeline(s.scenario.context, s.mode, s.n_a, s.strength, s.scenario.options);
      if (!p.synthesis.feasible)
        {
          out << "infeasible: nothing to verify\n";
          return infeasible;
        }
      f = p.synthesis.attack;
    }
  for (const auto& problem : check_mode_shape(*f, s.scenario.options.bound_initial))
    out << "shape: " << problem << '\n';
  Verdict v = verify_attack(ctx, *f, req.horizon);
  out << format_verdict(v, s.strength);
  return v.succeeds(s.strength) ? ok : infeasible;
}

} // namespace

int
run(const Request& req, std::ostream& out)
{
  if (req.command == "validate")
    return cmd_validate(req, out);
  if (req.command == "build-rtilde")
    return cmd_build_rtilde(req, out);
  if (req.command == "build-aida")
    return cmd_build_aida(req, out);
  if (req.command == "prune")
    return cmd_prune(req, out);
  if (req.command == "synthesize")
    return cmd_synthesize(req, out);
  if (req.command == "verify")
    return cmd_verify(req, out);
  if (req.command == "export-dot")
    return cmd_export_dot(req, out);
  throw ModelError("unknown command '" + req.command + "'");
}

} // namespace sdsynth::cli
