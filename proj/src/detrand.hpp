#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace lcgerm::detail {

// mt19937_64 output is fixed by the standard; the distributions are not.
// These draws depend only on the raw engine output.
inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t v;
  do v = rng();
  while (v >= limit);
  return lo + static_cast<std::int64_t>(v % span);
}

template <class T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(i) - 1))]);
  }
}

}  // namespace lcgerm::detail
