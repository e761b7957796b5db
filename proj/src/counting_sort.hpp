#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hpcc::detail {

// Stable counting sort of items by an integer key in [0, range).
template <class T, class KeyFn>
void counting_sort(std::vector<T>& items, std::size_t range, KeyFn key) {
  std::vector<std::uint32_t> start(range + 1, 0);
  for (const T& item : items) ++start[key(item) + 1];
  for (std::size_t r = 0; r < range; ++r) start[r + 1] += start[r];
  std::vector<T> sorted(items.size());
  for (const T& item : items) sorted[start[key(item)]++] = item;
  items.swap(sorted);
}

}  // namespace hpcc::detail
