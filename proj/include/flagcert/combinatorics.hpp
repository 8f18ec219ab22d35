#pragma once

#include <cstdint>
#include <vector>

namespace flagcert {

/// Calls f(const int* image) for every injection of {0..s-1} into {0..n-1},
/// in lexicographic order of the image sequence.
template <typename F>
void for_each_injection(int n, int s, F&& f) {
  std::vector<int> image(static_cast<std::size_t>(s));
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == s) {
      f(static_cast<const int*>(image.data()));
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      image[depth] = v;
      self(self, depth + 1);
      used[v] = false;
    }
  };
  rec(rec, 0);
}

/// Calls f(mask) for every k-element subset of the bits set in `pool`.
template <typename F>
void for_each_subset_of_size(std::uint32_t pool, int k, F&& f) {
  if (k == 0) {
    f(std::uint32_t{0});
    return;
  }
  // Iterate submasks of pool with popcount k.
  for (std::uint32_t sub = pool;; sub = (sub - 1) & pool) {
    if (__builtin_popcount(sub) == k) f(sub);
    if (sub == 0) break;
  }
}

inline std::uint64_t falling_factorial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) r *= static_cast<std::uint64_t>(n - i);
  return r;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace flagcert
