#pragma once

#include <functional>
#include <iosfwd>

#include "bgproj/core.hpp"
#include "bgproj/generator.hpp"
#include "bgproj/projection.hpp"

namespace bgproj {

enum class BenchAlgorithm { MatrixScan, SparseWedge };

const char* algorithm_name(BenchAlgorithm a);

struct BenchRecord {
  BenchAlgorithm algorithm;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::size_t m = 0;
  int repetitions = 0;
  std::uint64_t median_ns = 0;
  std::size_t edges_out = 0;
};

// The gnp/fixed-m/complete models come from the generator; "blocks" builds
// the dense workload below.
enum class BenchModel { Gnp, FixedM, Complete, Blocks };

struct BenchConfig {
  std::vector<std::pair<std::size_t, std::size_t>> sizes;
  BenchModel model = BenchModel::Gnp;
  double p = 0.5;          // gnp
  double m_factor = 2.0;   // fixedm: m = min(n1*n2, m_factor * (n1 + n2))
  std::uint64_t seed = 0;
  int repetitions = 5;     // >= 3; the recorded time is the median
};

// Two disjoint complete blocks: the first half of U fully joined to the
// first half of S, second halves likewise. Density 1/2, and cross-block row
// pairs share no column, so the pairwise matrix scan really pays its full
// n1^2 * n2 worst case instead of exiting on the first shared column.
BipartiteGraph two_block_graph(std::size_t n1, std::size_t n2);

// Median wall time of `reps` runs of fn (each run's product is discarded).
std::uint64_t median_time_ns(int reps, const std::function<void()>& fn);

// One record per (size, algorithm). Generation is excluded from the timed
// region. An unsatisfiable size is reported to `diag` and skipped. For every
// MatrixScan group sharing n2 with at least two sizes, the fitted log-log
// slope of median time against n1 is also written to `diag`.
std::vector<BenchRecord> run_bench(const BenchConfig& config, std::ostream* diag);

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);

// Least-squares slope of y against x for log-log scaling fits.
double fitted_slope(const std::vector<std::pair<double, double>>& points);

}  // namespace bgproj
