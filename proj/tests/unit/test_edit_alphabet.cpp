#include <doctest.h>

#include <random>

#include "fixture.hpp"
#include "sdsynth/edit_alphabet.hpp"
#include "sdsynth/errors.hpp"
#include "sdsynth/model_io.hpp"

using namespace sdsynth;
using namespace sdsynth::test;

TEST_CASE("symbol names")
{
  auto sc = fixture();
  const auto& ea = sc.context->edits;
  auto a = sc.context->plant.event_id("a");
  auto b = sc.context->plant.event_id("b");

  CHECK(ea.is_compromised(b));
  CHECK_FALSE(ea.is_compromised(a));
  CHECK(ea.name({b, SymbolKind::inserted}) == "b.ins");
  CHECK(ea.name({b, SymbolKind::deleted}) == "b.del");
  CHECK(ea.parse("b.ins") == Symbol{b, SymbolKind::inserted});
  CHECK(ea.parse("a") == Symbol{a, SymbolKind::genuine});
  CHECK_FALSE(ea.parse("a.ins").has_value());
  CHECK_FALSE(ea.parse("zz").has_value());

  std::vector<std::string> names;
  for (auto s : ea.symbols())
    names.push_back(ea.name(s));
  CHECK(names == std::vector<std::string>{"a", "b", "b.del", "b.ins", "c"});
}

TEST_CASE("views of an edited string")
{
  auto sc = fixture();
  auto a = sc.context->plant.event_id("a");
  auto b = sc.context->plant.event_id("b");
  SymbolString ins{{a, SymbolKind::genuine}, {b, SymbolKind::inserted}};
  SymbolString del{{a, SymbolKind::genuine}, {b, SymbolKind::deleted}};

  CHECK(supervisor_view(ins) == EventString{a, b});
  CHECK(supervisor_view(SymbolString{{b, SymbolKind::deleted}}).empty());
  CHECK(plant_view(SymbolString{{b, SymbolKind::inserted}}).empty());
  CHECK(plant_view(del) == EventString{a, b});
  CHECK(mask(ins) == EventString{a, b});
  CHECK(mask(del) == EventString{a, b});
  CHECK(sc.context->edits.format(ins) == "a b.ins");
}

TEST_CASE("length bookkeeping and morphism on random strings")
{
  auto sc = fixture();
  auto syms = sc.context->edits.symbols();
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, syms.size() - 1);
  for (int trial = 0; trial < 500; ++trial)
    {
      SymbolString s, t;
      for (int i = 0; i < trial % 7; ++i)
        s.push_back(syms[pick(rng)]);
      for (int i = 0; i < trial % 5; ++i)
        t.push_back(syms[pick(rng)]);
      std::size_t dels = 0, inss = 0;
      for (auto x : s)
        {
          dels += x.kind == SymbolKind::deleted;
          inss += x.kind == SymbolKind::inserted;
        }
      CHECK(supervisor_view(s).size() + dels == s.size());
      CHECK(plant_view(s).size() + inss == s.size());
      CHECK(mask(s).size() == s.size());

      SymbolString st = s;
      st.insert(st.end(), t.begin(), t.end());
      auto cat = [](EventString x, const EventString& y) {
        x.insert(x.end(), y.begin(), y.end());
        return x;
      };
      CHECK(supervisor_view(st) == cat(supervisor_view(s), supervisor_view(t)));
      CHECK(plant_view(st) == cat(plant_view(s), plant_view(t)));
      CHECK(mask(st) == cat(mask(s), mask(t)));
    }
}

TEST_CASE("invalid compromised sets")
{
  auto g = parse_automaton_text("automaton g\nevent a obs ctrl\nevent u unobs ctrl\nstate 0 initial\n");
  CHECK_THROWS_AS(EditAlphabet(g, std::vector<std::string>{"u"}), ModelError);
  CHECK_THROWS_AS(EditAlphabet(g, std::vector<std::string>{"x"}), ModelError);
  auto clash = parse_automaton_text("automaton g\nevent a.ins obs ctrl\nstate 0 initial\n");
  CHECK_THROWS_AS(EditAlphabet(clash, EventSet{}), ModelError);
  EditAlphabet none(g, EventSet{});
  CHECK(none.symbols().size() == 1);
}
