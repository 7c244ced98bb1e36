#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sdsynth/automaton.hpp"

namespace sdsynth
{

enum class SymbolKind : std::uint8_t
{
  genuine,
  deleted,
  inserted,
};

/// One symbol of an edited string: an observable plant event, or the
/// insertion / deletion of a compromised event.
struct Symbol
{
  EventId event = 0;
  SymbolKind kind = SymbolKind::genuine;

  friend bool operator==(const Symbol&, const Symbol&) = default;
  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

using SymbolString = std::vector<Symbol>;

inline constexpr std::string_view inserted_suffix = ".ins";
inline constexpr std::string_view deleted_suffix = ".del";

/// The compromised events of a plant and the edit symbols derived from them.
class EditAlphabet
{
public:
  /// Throws ModelError if a compromised event is unobservable or unknown, or
  /// if a derived symbol name collides with a plant event.
  EditAlphabet(const Automaton& plant, EventSet compromised);
  EditAlphabet(const Automaton& plant, const std::vector<std::string>& compromised_names);

  const Automaton& plant() const noexcept { return *plant_; }
  const EventSet& compromised() const noexcept { return compromised_; }
  bool is_compromised(EventId e) const noexcept { return compromised_.contains(e); }

  std::string name(Symbol s) const;
  std::optional<Symbol> parse(std::string_view text) const;

  /// Observable events and edit symbols, per observable event in declaration
  /// order: genuine, deleted, inserted.
  std::vector<Symbol> symbols() const;

  std::string format(std::span<const Symbol> s) const;

private:
  const Automaton* plant_;
  EventSet compromised_;
};

/// How the supervisor reads an edited string: insertions look genuine,
/// deletions vanish.
EventString supervisor_view(std::span<const Symbol> s);

/// What the plant actually executed: deletions were real, insertions were not.
EventString plant_view(std::span<const Symbol> s);

/// Drops the edit marks.
EventString mask(std::span<const Symbol> s);

} // namespace sdsynth
