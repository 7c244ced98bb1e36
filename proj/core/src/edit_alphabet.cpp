#include "sdsynth/edit_alphabet.hpp"

#include "sdsynth/errors.hpp"

namespace sdsynth
{

namespace
{

bool
ends_with(std::string_view s, std::string_view suffix)
{
  return s.size() > suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

} // namespace

EditAlphabet::EditAlphabet(const Automaton& plant, EventSet compromised)
  : plant_(&plant), compromised_(std::move(compromised))
{
  bool bad = false;
  compromised_.for_each([&](EventId e) {
    if (e >= plant.num_events())
      bad = true;
    else if (!plant.event(e).observable)
      throw ModelError("compromised event '" + plant.event(e).name + "' is unobservable");
  });
  if (bad)
    throw ModelError("compromised event index out of range");
  for (const auto& ev : plant.events())
    if (ends_with(ev.name, inserted_suffix) || ends_with(ev.name, deleted_suffix))
      throw ModelError("plant event '" + ev.name + "' uses a reserved edit suffix");
}

EditAlphabet::EditAlphabet(const Automaton& plant, const std::vector<std::string>& compromised_names)
  : EditAlphabet(plant, [&] {
      EventSet set;
      for (const auto& n : compromised_names)
        {
          auto e = plant.find_event(n);
          if (!e)
            throw ModelError("compromised event '" + n + "' is not a plant event");
          set.insert(*e);
        }
      return set;
    }())
{
}

std::string
EditAlphabet::name(Symbol s) const
{
  const std::string& base = plant_->event(s.event).name;
  switch (s.kind)
    {
    case SymbolKind::genuine:
      return base;
    case SymbolKind::inserted:
      return base + std::string(inserted_suffix);
    case SymbolKind::deleted:
      return base + std::string(deleted_suffix);
    }
  return base;
}

std::optional<Symbol>
EditAlphabet::parse(std::string_view text) const
{
  SymbolKind kind = SymbolKind::genuine;
  std::string_view base = text;
  if (ends_with(text, inserted_suffix))
    {
      kind = SymbolKind::inserted;
      base = text.substr(0, text.size() - inserted_suffix.size());
    }
  else if (ends_with(text, deleted_suffix))
    {
      kind = SymbolKind::deleted;
      base = text.substr(0, text.size() - deleted_suffix.size());
    }
  auto e = plant_->find_event(base);
  if (!e || !plant_->event(*e).observable)
    return std::nullopt;
  if (kind != SymbolKind::genuine && !compromised_.contains(*e))
    return std::nullopt;
  return Symbol{*e, kind};
}

std::vector<Symbol>
EditAlphabet::symbols() const
{
  std::vector<Symbol> out;
  for (EventId e = 0; e < plant_->num_events(); ++e)
    {
      if (!plant_->event(e).observable)
        continue;
      out.push_back({e, SymbolKind::genuine});
      if (compromised_.contains(e))
        {
          out.push_back({e, SymbolKind::deleted});
          out.push_back({e, SymbolKind::inserted});
        }
    }
  return out;
}

std::string
EditAlphabet::format(std::span<const Symbol> s) const
{
  if (s.empty())
    return "eps";
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i)
    {
      if (i != 0)
        out += ' ';
      out += name(s[i]);
    }
  return out;
}

EventString
supervisor_view(std::span<const Symbol> s)
{
  EventString out;
  for (const auto& sym : s)
    if (sym.kind != SymbolKind::deleted)
      out.push_back(sym.event);
  return out;
}

EventString
plant_view(std::span<const Symbol> s)
{
  EventString out;
  for (const auto& sym : s)
    if (sym.kind != SymbolKind::inserted)
      out.push_back(sym.event);
  return out;
}

EventString
mask(std::span<const Symbol> s)
{
  EventString out;
  out.reserve(s.size());
  for (const auto& sym : s)
    out.push_back(sym.event);
  return out;
}

} // namespace sdsynth
