#pragma once

#include "bgproj/core.hpp"

namespace bgproj {

enum class GenModel { Gnp, FixedM, Complete };

// Fully determines one generated graph. The stream is mt19937_64 seeded with
// `seed`, and all draws go through fixed integer/double mappings rather than
// std distributions, so equal specs give bit-identical graphs on every
// platform.
struct GenSpec {
  std::size_t n1 = 1;
  std::size_t n2 = 1;
  GenModel model = GenModel::Gnp;
  double p = 0.5;      // Gnp: independent probability per cross pair
  std::size_t m = 0;   // FixedM: number of distinct edges drawn uniformly
  std::uint64_t seed = 0;
  bool require_connected = false;
};

// Attempts before a require_connected spec is declared unsatisfiable.
inline constexpr int kConnectivityRetryCap = 1000;

// Throws UnsatisfiableSpec when FixedM asks for more edges than n1 * n2 or
// when require_connected still fails after the retry cap; throws
// PreconditionViolated for p outside [0, 1].
BipartiteGraph generate(const GenSpec& spec);

// Connected base graph on (n1 - 1, n2 - 1) drawn from `spec`, plus one fresh
// edge whose endpoints touch nothing else. The result is intentionally
// disconnected, contains a pendant pair by construction, and carries the
// pendant_pair_instance tag. Requires n1 >= 2 and n2 >= 2.
BipartiteGraph generate_with_pendant_pair(const GenSpec& spec);

}  // namespace bgproj
