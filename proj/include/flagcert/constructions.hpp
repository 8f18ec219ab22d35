#pragma once

#include <cstdint>
#include <vector>

#include "flagcert/rational.hpp"
#include "flagcert/three_graph.hpp"
#include "flagcert/tournament.hpp"

namespace flagcert {

/// The Frankl-Furedi graph on [6]: every vertex link is a 5-cycle.
ThreeGraph h6();

/// Splits a seed into a stream of 64-bit values (SplitMix64).
class SeedStream {
 public:
  explicit SeedStream(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();

 private:
  std::uint64_t state_;
};

/// Each pair (i, j), i < j in lexicographic order, gets i -> j iff the top
/// bit of the next std::mt19937_64 output (seeded with `seed`) is set.
Tournament random_tournament(int n, std::uint64_t seed);

/// The tournament with `vertices` removed (remaining vertices keep their
/// order). Any number of distinct vertices less than n may be removed.
Tournament delete_vertices(const Tournament& t, const std::vector<int>& vertices);

struct BlowupSpec {
  int n = 0;
  int depth = 0;
  std::uint64_t seed = 0;
  /// Use a Paley tournament in a final part whose size is a prime = 3 mod 4.
  bool paley = false;
};

struct BlowupResult {
  ThreeGraph graph;
  std::size_t edges = 0;
  int min_codegree = 0;
  Rational edge_density;    ///< |G| / C(n,3)
  Rational formula_value;   ///< 2/7 - 6^{-2t}/28
  std::vector<int> part_sizes;         ///< sizes of the 6^t final parts
  std::vector<std::uint64_t> seeds;    ///< tournament seed per final part
  std::vector<int> inner_delta2;       ///< delta2 of each final tournament
};

/// Balanced blow-up of H6 (parts differ in size by at most one, filled in
/// vertex order), repeated inside each part `depth` times, with C(T) placed
/// in every final part. Seeds for the final parts come from SeedStream(seed)
/// in part order. Requires n >= 6^depth and n <= 200.
BlowupResult iterated_blowup(const BlowupSpec& spec);

}  // namespace flagcert
