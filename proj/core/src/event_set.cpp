#include "sdsynth/event_set.hpp"

#include <algorithm>

namespace sdsynth
{

EventSet::EventSet(std::initializer_list<EventId> events)
{
  for (EventId e : events)
    insert(e);
}

void
EventSet::insert(EventId e)
{
  std::size_t w = e / 64;
  if (w >= words_.size())
    words_.resize(w + 1, 0);
  words_[w] |= std::uint64_t{1} << (e % 64);
}

void
EventSet::erase(EventId e)
{
  std::size_t w = e / 64;
  if (w >= words_.size())
    return;
  words_[w] &= ~(std::uint64_t{1} << (e % 64));
  normalize();
}

bool
EventSet::contains(EventId e) const noexcept
{
  std::size_t w = e / 64;
  return w < words_.size() && ((words_[w] >> (e % 64)) & 1u) != 0;
}

std::size_t
EventSet::size() const noexcept
{
  std::size_t n = 0;
  for (auto word : words_)
    n += static_cast<std::size_t>(__builtin_popcountll(word));
  return n;
}

bool
EventSet::is_subset_of(const EventSet& other) const noexcept
{
  for (std::size_t w = 0; w < words_.size(); ++w)
    {
      std::uint64_t theirs = w < other.words_.size() ? other.words_[w] : 0;
      if ((words_[w] & ~theirs) != 0)
        return false;
    }
  return true;
}

bool
EventSet::intersects(const EventSet& other) const noexcept
{
  std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t w = 0; w < n; ++w)
    if ((words_[w] & other.words_[w]) != 0)
      return true;
  return false;
}

EventSet&
EventSet::operator|=(const EventSet& other)
{
  if (other.words_.size() > words_.size())
    words_.resize(other.words_.size(), 0);
  for (std::size_t w = 0; w < other.words_.size(); ++w)
    words_[w] |= other.words_[w];
  return *this;
}

EventSet&
EventSet::operator&=(const EventSet& other)
{
  if (words_.size() > other.words_.size())
    words_.resize(other.words_.size());
  for (std::size_t w = 0; w < words_.size(); ++w)
    words_[w] &= other.words_[w];
  normalize();
  return *this;
}

EventSet&
EventSet::operator-=(const EventSet& other)
{
  std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t w = 0; w < n; ++w)
    words_[w] &= ~other.words_[w];
  normalize();
  return *this;
}

std::vector<EventId>
EventSet::to_vector() const
{
  std::vector<EventId> out;
  for_each([&](EventId e) { out.push_back(e); });
  return out;
}

void
EventSet::normalize()
{
  while (!words_.empty() && words_.back() == 0)
    words_.pop_back();
}

} // namespace sdsynth
