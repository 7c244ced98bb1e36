#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace sdsynth
{

using EventId = std::uint32_t;
using StateId = std::uint32_t;

/// Dense bitset over event indices of one alphabet.
class EventSet
{
public:
  EventSet() = default;
  EventSet(std::initializer_list<EventId> events);

  void insert(EventId e);
  void erase(EventId e);
  bool contains(EventId e) const noexcept;

  bool empty() const noexcept { return words_.empty(); }
  std::size_t size() const noexcept;

  bool is_subset_of(const EventSet& other) const noexcept;
  bool intersects(const EventSet& other) const noexcept;

  EventSet& operator|=(const EventSet& other);
  EventSet& operator&=(const EventSet& other);
  EventSet& operator-=(const EventSet& other);

  friend EventSet operator|(EventSet a, const EventSet& b) { return a |= b; }
  friend EventSet operator&(EventSet a, const EventSet& b) { return a &= b; }
  friend EventSet operator-(EventSet a, const EventSet& b) { return a -= b; }

  /// Members in increasing index order.
  std::vector<EventId> to_vector() const;

  template<class F>
  void for_each(F&& f) const
  {
    for (std::size_t w = 0; w < words_.size(); ++w)
      for (std::uint64_t bits = words_[w]; bits != 0; bits &= bits - 1)
        f(static_cast<EventId>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits))));
  }

  friend bool operator==(const EventSet&, const EventSet&) = default;
  friend std::strong_ordering operator<=>(const EventSet& a, const EventSet& b)
  {
    return a.words_ <=> b.words_;
  }

private:
  void normalize();

  // trailing zero words are always trimmed so equality is structural
  std::vector<std::uint64_t> words_;
};

} // namespace sdsynth
