// sdsynth: synthesize and check sensor-deception attacks on a supervised plant.

#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "sdsynth/errors.hpp"

int
main(int argc, char** argv)
{
  using namespace sdsynth;
  cli::Request req;
  CLI::App app{"Attack synthesis for supervisory control loops under sensor deception"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, bool scenario_required) {
    auto* opt = sub->add_option("scenario", req.scenario, "scenario file");
    if (scenario_required)
      opt->required()->check(CLI::ExistingFile);
    sub->add_option("-o,--out", req.out_dir, "output directory")->capture_default_str();
    sub->add_option("--mode", req.mode, "interruptible | unbounded | bounded");
    sub->add_option("--strength", req.strength, "strong | weak");
    sub->add_option("--n-a", req.n_a, "reaction bound for bounded mode");
    sub->add_option("--horizon", req.horizon, "observable events explored by the verifier")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
  };

  struct Cmd
  {
    const char* name;
    const char* help;
  };
  const Cmd cmds[] = {
      {"validate", "parse a scenario and check its assumptions"},
      {"build-rtilde", "write the supervisor completed with its detection state"},
      {"build-aida", "write the largest attack structure"},
      {"prune", "write the pruned structure for the attack class"},
      {"synthesize", "build, prune, extract and verify an attack"},
      {"verify", "check an attack against the closed loop"},
      {"export-dot", "write one structure as Graphviz"},
  };
  for (const auto& c : cmds)
    {
      auto* sub = app.add_subcommand(c.name, c.help);
      std::string name = c.name;
      add_common(sub, name != "verify");
      if (name == "verify")
        {
          sub->add_option("--attack", req.attack, "attacker automaton over symbol names")->check(CLI::ExistingFile);
          sub->add_option("--random-instances", req.random_instances, "check this many seeded random instances");
          sub->add_option("--seed", req.seed, "first seed for random instances")->capture_default_str();
        }
      if (name == "export-dot")
        sub->add_option("--stage", req.stage, "aida | baida | isda | usda | bsda")->capture_default_str();
      sub->callback([&req, name] { req.command = name; });
    }

  try
    {
      app.parse(argc, argv);
    }
  catch (const CLI::ParseError& e)
    {
      int rc = app.exit(e);
      return rc == 0 ? 0 : cli::input_error;
    }

  try
    {
      return cli::run(req, std::cout);
    }
  catch (const ParseError& e)
    {
      std::cerr << "error: " << e.what() << '\n';
      return cli::input_error;
    }
  catch (const ModelError& e)
    {
      std::cerr << "error: " << e.what() << '\n';
      return cli::input_error;
    }
  catch (const InvariantError& e)
    {
      std::cerr << "internal error: " << e.what() << '\n';
      return cli::internal_error;
    }
  catch (const SynthesisError& e)
    {
      std::cerr << "internal error: " << e.what() << '\n';
      return cli::internal_error;
    }
  catch (const std::exception& e)
    {
      std::cerr << "internal error: " << e.what() << '\n';
      return cli::internal_error;
    }
}
