#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "sdsynth/automaton.hpp"

namespace sdsynth
{

/// Reads the line-oriented model format:
///
///   automaton <name>
///   event <name> <obs|unobs> <ctrl|unctrl>
///   state <id> [initial]
///   trans <src> <event> <dst>
///
/// '#' starts a comment. `source` is only used in error messages.
Automaton parse_automaton(std::istream& in, const std::string& source = "<input>");
Automaton parse_automaton_text(const std::string& text, const std::string& source = "<input>");
Automaton load_automaton(const std::filesystem::path& path);

/// Canonical text: events and states in declaration order, transitions
/// sorted by (source index, event index).
void write_automaton(std::ostream& out, const Automaton& a);
std::string automaton_to_text(const Automaton& a);
void save_automaton(const std::filesystem::path& path, const Automaton& a);

/// Splits on whitespace after stripping a trailing '#' comment.
std::vector<std::string> tokenize_line(const std::string& line);

/// Splits "a,b , c" into trimmed non-empty items.
std::vector<std::string> split_list(const std::string& text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

} // namespace sdsynth
