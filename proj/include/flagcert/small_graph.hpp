#pragma once

#include <array>
#include <cstdint>

#include "flagcert/three_graph.hpp"

namespace flagcert {

/// Upper bound on vertex count for canonical labelling and bit-packed codes:
/// C(9,3) = 84 triples fit in a 128-bit code.
inline constexpr int kMaxCanonicalOrder = 9;

using Code128 = unsigned __int128;

/// Bit-packed 3-graph on at most 16 vertices, 0-based internally.
///
/// common(x, y) is the set of z with {x, y, z} an edge, as a bitmask.
class SmallGraph {
 public:
  SmallGraph() = default;
  explicit SmallGraph(int n);
  explicit SmallGraph(const ThreeGraph& g);

  int order() const noexcept { return n_; }
  std::uint16_t common(int x, int y) const noexcept { return pair_[x * 16 + y]; }
  bool has_edge(int x, int y, int z) const noexcept { return (common(x, y) >> z) & 1u; }

  void add_edge(int x, int y, int z) noexcept;

  /// Graph induced on vertices[0..count), relabelled 0..count-1 in that order.
  SmallGraph induced(const int* vertices, int count) const noexcept;

  /// Lexicographic triple code: triple t (0-based lex rank) is stored at bit
  /// C(n,3) - 1 - t, so the first triple is the most significant bit.
  Code128 code() const noexcept;

  static SmallGraph from_code(int n, Code128 code);
  ThreeGraph to_three_graph() const;

 private:
  int n_ = 0;
  std::array<std::uint16_t, 256> pair_{};
};

inline int triple_count(int n) noexcept { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

}  // namespace flagcert
