#include "bgproj/generator.hpp"

#include <random>
#include <unordered_set>

namespace bgproj {

namespace {

// Uniform in [0, n) by rejection; unbiased and engine-order deterministic.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

// Uniform double in [0, 1) from the top 53 bits.
double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<std::pair<vertex_t, vertex_t>> draw_gnp(std::mt19937_64& rng, std::size_t n1,
                                                    std::size_t n2, double p) {
  std::vector<std::pair<vertex_t, vertex_t>> pairs;
  for (std::size_t u = 0; u < n1; ++u)
    for (std::size_t s = 0; s < n2; ++s)
      if (unit_double(rng) < p)
        pairs.emplace_back(static_cast<vertex_t>(u), static_cast<vertex_t>(s));
  return pairs;
}

// Floyd's sampling of m distinct cells out of n1 * n2.
std::vector<std::pair<vertex_t, vertex_t>> draw_fixed_m(std::mt19937_64& rng, std::size_t n1,
                                                        std::size_t n2, std::size_t m) {
  const std::uint64_t total = static_cast<std::uint64_t>(n1) * n2;
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(m * 2);
  for (std::uint64_t j = total - m; j < total; ++j) {
    const std::uint64_t t = bounded(rng, j + 1);
    chosen.insert(chosen.count(t) ? j : t);
  }
  std::vector<std::pair<vertex_t, vertex_t>> pairs;
  pairs.reserve(m);
  for (std::uint64_t cell : chosen)
    pairs.emplace_back(static_cast<vertex_t>(cell / n2), static_cast<vertex_t>(cell % n2));
  return pairs;
}

std::vector<std::pair<vertex_t, vertex_t>> draw_complete(std::size_t n1, std::size_t n2) {
  std::vector<std::pair<vertex_t, vertex_t>> pairs;
  pairs.reserve(n1 * n2);
  for (std::size_t u = 0; u < n1; ++u)
    for (std::size_t s = 0; s < n2; ++s)
      pairs.emplace_back(static_cast<vertex_t>(u), static_cast<vertex_t>(s));
  return pairs;
}

BipartiteGraph draw_once(std::mt19937_64& rng, const GenSpec& spec) {
  switch (spec.model) {
    case GenModel::Gnp:
      return from_edge_list(spec.n1, spec.n2, draw_gnp(rng, spec.n1, spec.n2, spec.p));
    case GenModel::FixedM:
      return from_edge_list(spec.n1, spec.n2, draw_fixed_m(rng, spec.n1, spec.n2, spec.m));
    case GenModel::Complete:
      return from_edge_list(spec.n1, spec.n2, draw_complete(spec.n1, spec.n2));
  }
  throw PreconditionViolated("unknown generator model");
}

}  // namespace

BipartiteGraph generate(const GenSpec& spec) {
  if (spec.n1 < 1 || spec.n2 < 1)
    throw PreconditionViolated("both vertex sets must be non-empty");
  if (spec.model == GenModel::Gnp && (spec.p < 0.0 || spec.p > 1.0))
    throw PreconditionViolated("edge probability must lie in [0, 1]");
  if (spec.model == GenModel::FixedM && spec.m > spec.n1 * spec.n2)
    throw UnsatisfiableSpec("requested more edges than n1 * n2");

  std::mt19937_64 rng(spec.seed);
  for (int attempt = 0; attempt < kConnectivityRetryCap; ++attempt) {
    BipartiteGraph g = draw_once(rng, spec);
    if (!spec.require_connected || is_connected(g)) return g;
  }
  throw UnsatisfiableSpec("no connected graph found within the retry cap");
}

BipartiteGraph generate_with_pendant_pair(const GenSpec& spec) {
  if (spec.n1 < 2 || spec.n2 < 2)
    throw PreconditionViolated("pendant-pair instances need n1 >= 2 and n2 >= 2");

  GenSpec base = spec;
  base.n1 = spec.n1 - 1;
  base.n2 = spec.n2 - 1;
  base.require_connected = true;
  BipartiteGraph core = generate(base);

  std::vector<std::pair<vertex_t, vertex_t>> pairs = core.edges;
  pairs.emplace_back(static_cast<vertex_t>(spec.n1 - 1), static_cast<vertex_t>(spec.n2 - 1));
  BipartiteGraph g = from_edge_list(spec.n1, spec.n2, std::move(pairs));
  g.pendant_pair_instance = true;
  return g;
}

}  // namespace bgproj
