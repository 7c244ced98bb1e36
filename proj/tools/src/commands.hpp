#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace sdsynth::cli
{

enum Exit : int
{
  ok = 0,
  infeasible = 1,
  input_error = 2,
  internal_error = 3,
};

struct Request
{
  std::string command;
  std::filesystem::path scenario;
  std::filesystem::path out_dir = ".";
  std::optional<std::string> mode;
  std::optional<std::string> strength;
  std::optional<int> n_a;
  int horizon = 10;
  std::optional<std::filesystem::path> attack;
  std::string stage = "aida";
  int random_instances = 0;
  std::uint64_t seed = 1;
};

/// Runs one command; exceptions are left to the caller.
int run(const Request& req, std::ostream& out);

} // namespace sdsynth::cli
