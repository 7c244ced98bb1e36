#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "sdsynth/game_context.hpp"

namespace sdsynth
{

enum class AttackMode
{
  interruptible,
  unbounded,
  bounded,
};

enum class Strength
{
  strong,
  weak,
};

/// Which states the pruning trim keeps.
enum class TrimMode
{
  accessible,
  /// accessible and able to reach a goal E-state
  coaccessible,
};

struct ScenarioOptions
{
  /// Count initial insertions against the bound as well.
  bool bound_initial = true;
  /// At exhausted counters, check the race condition only on compromised
  /// events instead of on every observable event.
  bool literal_bounded_race = false;
  /// When both letting an event through and deleting it are stealthy,
  /// let it through.
  bool prefer_let_through = true;
  TrimMode trim = TrimMode::accessible;
};

struct Scenario
{
  ContextPtr context;
  AttackMode mode = AttackMode::interruptible;
  std::optional<int> n_a;
  Strength strength = Strength::strong;
  ScenarioOptions options;
  std::filesystem::path plant_path;
  std::filesystem::path supervisor_path;
};

/// key=value lines; `plant` and `supervisor` paths are relative to the
/// scenario file's directory.
Scenario parse_scenario(const std::string& text, const std::filesystem::path& base_dir,
                        const std::string& source = "<scenario>");
Scenario load_scenario(const std::filesystem::path& path);

std::string to_string(AttackMode m);
std::string to_string(Strength s);
std::optional<AttackMode> parse_mode(const std::string& text);
std::optional<Strength> parse_strength(const std::string& text);

/// Critical states the nominal closed loop reaches; should be empty.
StateSet nominal_critical_reachable(const GameContext& ctx);

} // namespace sdsynth
