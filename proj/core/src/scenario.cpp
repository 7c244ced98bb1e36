#include "sdsynth/scenario.hpp"

#include <map>
#include <sstream>

#include "sdsynth/errors.hpp"
#include "sdsynth/model_io.hpp"

namespace sdsynth
{

std::string
to_string(AttackMode m)
{
  switch (m)
    {
    case AttackMode::interruptible:
      return "interruptible";
    case AttackMode::unbounded:
      return "unbounded";
    case AttackMode::bounded:
      return "bounded";
    }
  return "?";
}

std::string
to_string(Strength s)
{
  return s == Strength::strong ? "strong" : "weak";
}

std::optional<AttackMode>
parse_mode(const std::string& text)
{
  if (text == "interruptible")
    return AttackMode::interruptible;
  if (text == "unbounded")
    return AttackMode::unbounded;
  if (text == "bounded")
    return AttackMode::bounded;
  return std::nullopt;
}

std::optional<Strength>
parse_strength(const std::string& text)
{
  if (text == "strong")
    return Strength::strong;
  if (text == "weak")
    return Strength::weak;
  return std::nullopt;
}

namespace
{

bool
parse_bool(const std::string& v, const std::string& source, std::size_t line)
{
  if (v == "true" || v == "yes" || v == "1")
    return true;
  if (v == "false" || v == "no" || v == "0")
    return false;
  throw ParseError(source, line, "expected a boolean, got '" + v + "'");
}

std::string
trim(const std::string& s)
{
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos)
    return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

} // namespace

Scenario
parse_scenario(const std::string& text, const std::filesystem::path& base_dir, const std::string& source)
{
  std::map<std::string, std::pair<std::string, std::size_t>> kv;
  std::istringstream in(text);
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);)
    {
      ++lineno;
      std::string body = trim(line.substr(0, line.find('#')));
      if (body.empty())
        continue;
      auto eq = body.find('=');
      if (eq == std::string::npos)
        throw ParseError(source, lineno, "expected key=value");
      std::string key = trim(body.substr(0, eq));
      std::string value = trim(body.substr(eq + 1));
      if (key.empty())
        throw ParseError(source, lineno, "empty key");
      if (kv.count(key) != 0)
        throw ParseError(source, lineno, "duplicate key '" + key + "'");
      kv[key] = {value, lineno};
    }
  auto require = [&](const std::string& key) -> const std::pair<std::string, std::size_t>& {
    auto it = kv.find(key);
    if (it == kv.end())
      throw ParseError(source, lineno, "missing key '" + key + "'");
    return it->second;
  };

  Scenario sc;
  sc.plant_path = base_dir / require("plant").first;
  sc.supervisor_path = base_dir / require("supervisor").first;
  Automaton plant = load_automaton(sc.plant_path);
  Automaton sup = load_automaton(sc.supervisor_path);

  std::vector<std::string> attack_names;
  if (auto it = kv.find("attack_events"); it != kv.end())
    attack_names = split_list(it->second.first);
  std::vector<std::string> crit_names;
  if (auto it = kv.find("critical_states"); it != kv.end())
    crit_names = split_list(it->second.first);

  EventSet compromised;
  for (const auto& n : attack_names)
    {
      auto e = plant.find_event(n);
      if (!e)
        throw ParseError(source, kv["attack_events"].second, "unknown attack event '" + n + "'");
      compromised.insert(*e);
    }
  StateSet critical;
  for (const auto& n : crit_names)
    {
      auto x = plant.find_state(n);
      if (!x)
        throw ParseError(source, kv["critical_states"].second, "unknown critical state '" + n + "'");
      critical.insert(*x);
    }

  for (const auto& [key, val] : kv)
    {
      const auto& [v, line] = val;
      if (key == "plant" || key == "supervisor" || key == "attack_events" || key == "critical_states")
        continue;
      if (key == "mode")
        {
          auto m = parse_mode(v);
          if (!m)
            throw ParseError(source, line, "unknown mode '" + v + "'");
          sc.mode = *m;
        }
      else if (key == "n_a")
        {
          int n = 0;
          try
            {
              n = std::stoi(v);
            }
          catch (const std::exception&)
            {
              throw ParseError(source, line, "n_a must be a positive integer");
            }
          if (n < 1)
            throw ParseError(source, line, "n_a must be a positive integer");
          sc.n_a = n;
        }
      else if (key == "strength")
        {
          auto s = parse_strength(v);
          if (!s)
            throw ParseError(source, line, "unknown strength '" + v + "'");
          sc.strength = *s;
        }
      else if (key == "bound_initial")
        sc.options.bound_initial = parse_bool(v, source, line);
      else if (key == "bounded_race")
        {
          if (v == "full")
            sc.options.literal_bounded_race = false;
          else if (v == "literal")
            sc.options.literal_bounded_race = true;
          else
            throw ParseError(source, line, "bounded_race must be 'full' or 'literal'");
        }
      else if (key == "prefer")
        {
          if (v == "let-through")
            sc.options.prefer_let_through = true;
          else if (v == "delete")
            sc.options.prefer_let_through = false;
          else
            throw ParseError(source, line, "prefer must be 'let-through' or 'delete'");
        }
      else if (key == "trim")
        {
          if (v == "accessible")
            sc.options.trim = TrimMode::accessible;
          else if (v == "coaccessible")
            sc.options.trim = TrimMode::coaccessible;
          else
            throw ParseError(source, line, "trim must be 'accessible' or 'coaccessible'");
        }
      else
        throw ParseError(source, line, "unknown key '" + key + "'");
    }
  if (sc.mode == AttackMode::bounded && !sc.n_a)
    throw ParseError(source, lineno, "mode=bounded requires n_a");

  sc.context = make_context(std::move(plant), sup, std::move(compromised), std::move(critical));
  return sc;
}

Scenario
load_scenario(const std::filesystem::path& path)
{
  return parse_scenario(read_file(path), path.parent_path(), path.string());
}

StateSet
nominal_critical_reachable(const GameContext& ctx)
{
  StateSet reach = nominal_reachable(ctx.plant, ctx.realization);
  std::vector<StateId> out;
  for (StateId x : reach)
    if (ctx.critical.contains(x))
      out.push_back(x);
  return StateSet(std::move(out));
}

} // namespace sdsynth
