#include "bgproj/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <ostream>

namespace bgproj {

const char* algorithm_name(BenchAlgorithm a) {
  return a == BenchAlgorithm::MatrixScan ? "matrix" : "sparse";
}

BipartiteGraph two_block_graph(std::size_t n1, std::size_t n2) {
  const std::size_t h1 = n1 / 2, h2 = n2 / 2;
  std::vector<std::pair<vertex_t, vertex_t>> pairs;
  pairs.reserve(h1 * h2 + (n1 - h1) * (n2 - h2));
  for (std::size_t u = 0; u < n1; ++u) {
    const bool upper = u < h1;
    const std::size_t lo = upper ? 0 : h2;
    const std::size_t hi = upper ? h2 : n2;
    for (std::size_t s = lo; s < hi; ++s)
      pairs.emplace_back(static_cast<vertex_t>(u), static_cast<vertex_t>(s));
  }
  return from_edge_list(n1, n2, std::move(pairs));
}

std::uint64_t median_time_ns(int reps, const std::function<void()>& fn) {
  std::vector<std::uint64_t> samples;
  samples.reserve(static_cast<std::size_t>(reps));
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    samples.push_back(static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count()));
  }
  std::sort(samples.begin(), samples.end());
  return samples[samples.size() / 2];
}

double fitted_slope(const std::vector<std::pair<double, double>>& points) {
  const double n = static_cast<double>(points.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, y] : points) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

namespace {

BipartiteGraph build_workload(const BenchConfig& config, std::size_t n1, std::size_t n2,
                              std::uint64_t seed) {
  if (config.model == BenchModel::Blocks) return two_block_graph(n1, n2);
  GenSpec spec;
  spec.n1 = n1;
  spec.n2 = n2;
  spec.seed = seed;
  switch (config.model) {
    case BenchModel::Gnp:
      spec.model = GenModel::Gnp;
      spec.p = config.p;
      break;
    case BenchModel::FixedM:
      spec.model = GenModel::FixedM;
      spec.m = std::min(n1 * n2, static_cast<std::size_t>(
                                     config.m_factor * static_cast<double>(n1 + n2)));
      break;
    case BenchModel::Complete:
      spec.model = GenModel::Complete;
      break;
    case BenchModel::Blocks:
      break;
  }
  return generate(spec);
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchConfig& config, std::ostream* diag) {
  if (config.repetitions < 3)
    throw PreconditionViolated("bench needs at least 3 repetitions for a median");

  std::vector<BenchRecord> records;
  std::uint64_t row = 0;
  for (const auto& [n1, n2] : config.sizes) {
    BipartiteGraph g;
    try {
      g = build_workload(config, n1, n2, config.seed + row++);
    } catch (const UnsatisfiableSpec& e) {
      if (diag) *diag << "# skipped " << n1 << "x" << n2 << ": " << e.what() << "\n";
      continue;
    }
    const BiAdjacencyMatrix matrix = to_biadjacency(g);

    BenchRecord rec;
    rec.n1 = n1;
    rec.n2 = n2;
    rec.m = g.m();
    rec.repetitions = config.repetitions;

    std::size_t edges_out = 0;
    rec.algorithm = BenchAlgorithm::MatrixScan;
    rec.median_ns = median_time_ns(config.repetitions,
                                   [&] { edges_out = project_matrix(matrix).edges.size(); });
    rec.edges_out = edges_out;
    records.push_back(rec);
    if (diag)
      *diag << "# matrix " << n1 << "x" << n2 << ": dense_matrix_bytes=" << n1 * n2
            << " edges_out=" << edges_out << "\n";

    rec.algorithm = BenchAlgorithm::SparseWedge;
    rec.median_ns = median_time_ns(
        config.repetitions, [&] { edges_out = project_sparse(g, Side::U).edges.size(); });
    rec.edges_out = edges_out;
    records.push_back(rec);
  }

  if (diag) {
    // scaling fit: time vs n1 at fixed n2 for the matrix scan
    std::map<std::size_t, std::vector<std::pair<double, double>>> groups;
    for (const auto& rec : records)
      if (rec.algorithm == BenchAlgorithm::MatrixScan && rec.median_ns > 0)
        groups[rec.n2].emplace_back(std::log(static_cast<double>(rec.n1)),
                                    std::log(static_cast<double>(rec.median_ns)));
    for (const auto& [n2, pts] : groups) {
      std::vector<double> xs;
      for (const auto& [x, y] : pts) xs.push_back(x);
      std::sort(xs.begin(), xs.end());
      if (pts.size() >= 2 && xs.front() != xs.back())
        *diag << "# matrix loglog slope vs n1 at n2=" << n2 << ": " << fitted_slope(pts)
              << "\n";
    }
  }
  return records;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << "algorithm,n1,n2,m,reps,median_ns,edges_out\n";
  for (const auto& r : records)
    out << algorithm_name(r.algorithm) << ',' << r.n1 << ',' << r.n2 << ',' << r.m << ','
        << r.repetitions << ',' << r.median_ns << ',' << r.edges_out << '\n';
}

}  // namespace bgproj
