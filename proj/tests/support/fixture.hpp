#pragma once

#include <filesystem>
#include <string>

#include "sdsynth/ida.hpp"
#include "sdsynth/scenario.hpp"

namespace sdsynth::test
{

std::filesystem::path scenario_dir();

/// The four-state tank loop with `b` compromised and state 2 critical.
Scenario fixture(const std::string& file = "scenario.txt");

/// Node of `ida` with the given side, plant estimate and supervisor state
/// names; throws when absent.
NodeId find_node(const Ida& ida, Side side, const std::string& plant, const std::string& sup, int counter = -1);
bool has_node(const Ida& ida, Side side, const std::string& plant, const std::string& sup, int counter = -1);

} // namespace sdsynth::test
