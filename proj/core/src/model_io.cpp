#include "sdsynth/model_io.hpp"

#include <fstream>
#include <sstream>

#include "sdsynth/errors.hpp"

namespace sdsynth
{

std::vector<std::string>
tokenize_line(const std::string& line)
{
  std::string body = line.substr(0, line.find('#'));
  std::istringstream ss(body);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;)
    out.push_back(tok);
  return out;
}

std::vector<std::string>
split_list(const std::string& text)
{
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    auto b = cur.find_first_not_of(" \t");
    auto e = cur.find_last_not_of(" \t");
    if (b != std::string::npos)
      out.push_back(cur.substr(b, e - b + 1));
    cur.clear();
  };
  for (char c : text)
    {
      if (c == ',')
        flush();
      else
        cur += c;
    }
  flush();
  return out;
}

Automaton
parse_automaton(std::istream& in, const std::string& source)
{
  Automaton a;
  bool named = false;
  std::size_t lineno = 0;
  // transitions may mention states declared later
  struct Pending
  {
    std::size_t line;
    std::string src, ev, dst;
  };
  std::vector<Pending> pending;

  for (std::string line; std::getline(in, line);)
    {
      ++lineno;
      auto tok = tokenize_line(line);
      if (tok.empty())
        continue;
      const std::string& kw = tok[0];
      try
        {
          if (kw == "automaton")
            {
              if (tok.size() != 2)
                throw ParseError(source, lineno, "expected 'automaton <name>'");
              if (named)
                throw ParseError(source, lineno, "automaton name given twice");
              a.set_name(tok[1]);
              named = true;
            }
          else if (kw == "event")
            {
              if (tok.size() != 4)
                throw ParseError(source, lineno, "expected 'event <name> <obs|unobs> <ctrl|unctrl>'");
              EventDecl d{tok[1], true, true};
              if (tok[2] == "obs")
                d.observable = true;
              else if (tok[2] == "unobs")
                d.observable = false;
              else
                throw ParseError(source, lineno, "observability must be 'obs' or 'unobs', got '" + tok[2] + "'");
              if (tok[3] == "ctrl")
                d.controllable = true;
              else if (tok[3] == "unctrl")
                d.controllable = false;
              else
                throw ParseError(source, lineno,
                                 "controllability must be 'ctrl' or 'unctrl', got '" + tok[3] + "'");
              a.add_event(std::move(d));
            }
          else if (kw == "state")
            {
              if (tok.size() != 2 && !(tok.size() == 3 && tok[2] == "initial"))
                throw ParseError(source, lineno, "expected 'state <id> [initial]'");
              StateId s = a.add_state(tok[1]);
              if (tok.size() == 3)
                {
                  if (a.has_initial())
                    throw ParseError(source, lineno, "second initial state '" + tok[1] + "'");
                  a.set_initial(s);
                }
            }
          else if (kw == "trans")
            {
              if (tok.size() != 4)
                throw ParseError(source, lineno, "expected 'trans <src> <event> <dst>'");
              pending.push_back({lineno, tok[1], tok[2], tok[3]});
            }
          else
            throw ParseError(source, lineno, "unknown keyword '" + kw + "'");
        }
      catch (const ParseError&)
        {
          throw;
        }
      catch (const ModelError& e)
        {
          throw ParseError(source, lineno, e.what());
        }
    }

  for (const auto& p : pending)
    {
      auto src = a.find_state(p.src);
      auto dst = a.find_state(p.dst);
      auto ev = a.find_event(p.ev);
      if (!src)
        throw ParseError(source, p.line, "unknown state '" + p.src + "'");
      if (!dst)
        throw ParseError(source, p.line, "unknown state '" + p.dst + "'");
      if (!ev)
        throw ParseError(source, p.line, "unknown event '" + p.ev + "'");
      try
        {
          a.add_transition(*src, *ev, *dst);
        }
      catch (const ModelError& e)
        {
          throw ParseError(source, p.line, e.what());
        }
    }

  if (!named)
    throw ParseError(source, lineno, "missing 'automaton <name>' line");
  if (a.num_states() == 0)
    throw ParseError(source, lineno, "automaton '" + a.name() + "' declares no states");
  if (!a.has_initial())
    throw ParseError(source, lineno, "automaton '" + a.name() + "' has no initial state");
  return a;
}

Automaton
parse_automaton_text(const std::string& text, const std::string& source)
{
  std::istringstream in(text);
  return parse_automaton(in, source);
}

Automaton
load_automaton(const std::filesystem::path& path)
{
  std::ifstream in(path);
  if (!in)
    throw ModelError("cannot open '" + path.string() + "'");
  return parse_automaton(in, path.string());
}

void
write_automaton(std::ostream& out, const Automaton& a)
{
  out << "automaton " << a.name() << '\n';
  for (const auto& ev : a.events())
    out << "event " << ev.name << ' ' << (ev.observable ? "obs" : "unobs") << ' '
        << (ev.controllable ? "ctrl" : "unctrl") << '\n';
  for (StateId s = 0; s < a.num_states(); ++s)
    {
      out << "state " << a.state_name(s);
      if (a.has_initial() && a.initial() == s)
        out << " initial";
      out << '\n';
    }
  for (StateId s = 0; s < a.num_states(); ++s)
    for (const auto& [e, dst] : a.row(s))
      out << "trans " << a.state_name(s) << ' ' << a.event(e).name << ' ' << a.state_name(dst) << '\n';
}

std::string
automaton_to_text(const Automaton& a)
{
  std::ostringstream out;
  write_automaton(out, a);
  return out.str();
}

void
save_automaton(const std::filesystem::path& path, const Automaton& a)
{
  write_file(path, automaton_to_text(a));
}

std::string
read_file(const std::filesystem::path& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ModelError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void
write_file(const std::filesystem::path& path, const std::string& content)
{
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw ModelError("cannot write '" + path.string() + "'");
  out << content;
}

} // namespace sdsynth
