#include "heavymom/partitions.hpp"

namespace heavymom {

std::int64_t bell_number(int n) {
  if (n < 0) throw DomainError("bell_number: negative n");
  if (n > 20) throw DomainError("bell_number: n too large for int64");
  // Bell triangle
  std::vector<std::vector<std::int64_t>> tri(n + 1);
  tri[0] = {1};
  for (int r = 1; r <= n; ++r) {
    tri[r].resize(r + 1);
    tri[r][0] = tri[r - 1][r - 1];
    for (int c = 1; c <= r; ++c) tri[r][c] = tri[r][c - 1] + tri[r - 1][c - 1];
  }
  return tri[n][0];
}

std::int64_t partition_mobius_from_sizes(const std::vector<int>& block_sizes) {
  std::int64_t mu = 1;
  for (int s : block_sizes) {
    std::int64_t f = 1;
    for (int t = 2; t < s; ++t) f *= t;  // (s-1)!
    mu *= ((s - 1) % 2 == 0) ? f : -f;
  }
  return mu;
}

std::int64_t partition_mobius_from_rgs(const std::vector<int>& rgs, int nblocks) {
  std::vector<int> sizes(nblocks, 0);
  for (int b : rgs) ++sizes[b];
  return partition_mobius_from_sizes(sizes);
}

}  // namespace heavymom
