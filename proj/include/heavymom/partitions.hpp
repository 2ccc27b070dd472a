#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "heavymom/errors.hpp"

namespace heavymom {

namespace detail {
template <class F>
bool partition_rec(int n, int i, int maxb, std::vector<int>& rgs, F& f) {
  if (i == n) return f(const_cast<const std::vector<int>&>(rgs), maxb);
  for (int b = 0; b <= maxb; ++b) {
    rgs[i] = b;
    if (!partition_rec(n, i + 1, std::max(maxb, b + 1), rgs, f)) return false;
  }
  return true;
}
}  // namespace detail

// Set partitions of {0..n-1} in lexicographic restricted-growth-string order.
// rgs[i] is the block index of element i; blocks are numbered by first occurrence,
// i.e. ordered by their minimal element.  f(rgs, nblocks) is called once per
// partition and must return bool; returning false stops the enumeration.
template <class F>
void for_each_partition(int n, F&& f) {
  std::vector<int> rgs(n, 0);
  if (n == 0) {
    f(const_cast<const std::vector<int>&>(rgs), 0);
    return;
  }
  detail::partition_rec(n, 1, 1, rgs, f);
}

std::int64_t bell_number(int n);

// Partition-lattice Möbius function from the minimal partition:
// mu(pi) = prod over blocks (-1)^{|B|-1} (|B|-1)!
std::int64_t partition_mobius_from_sizes(const std::vector<int>& block_sizes);
std::int64_t partition_mobius_from_rgs(const std::vector<int>& rgs, int nblocks);

}  // namespace heavymom
