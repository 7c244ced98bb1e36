#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sdsynth
{

/// Malformed or inconsistent model input (automata, scenarios, attack files).
class ModelError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Syntax error in one of the text formats, carrying the offending line.
class ParseError : public ModelError
{
public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
    : ModelError(source + ":" + std::to_string(line) + ": " + what), line_(line)
  {
  }

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// A postcondition of one of the algorithms did not hold.
class InvariantError : public std::logic_error
{
public:
  using std::logic_error::logic_error;
};

/// Attack extraction could not complete an admissible function.
class SynthesisError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

} // namespace sdsynth
