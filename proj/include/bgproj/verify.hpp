#pragma once

#include <optional>

#include "bgproj/core.hpp"
#include "bgproj/projection.hpp"

namespace bgproj {

enum class PropertyId {
  DegreeSum,
  CliqueInduction,
  PendantDisconnection,
  WeightBounds,
  TotalWeightIdentity,
  WeightSumUpperBound,
};

const char* property_name(PropertyId id);

enum class CheckStatus { Pass, Fail, Vacuous, NotApplicable };

const char* status_name(CheckStatus status);  // PASS / FAIL / VACUOUS / N/A

// Named values pinpointing the violation; present exactly when a check fails
// and sufficient to reproduce the failure in isolation.
struct Counterexample {
  std::vector<std::pair<std::string, std::int64_t>> values;
};

struct VerificationReport {
  PropertyId property = PropertyId::DegreeSum;
  CheckStatus status = CheckStatus::Pass;
  std::vector<std::pair<std::string, std::string>> details;  // computed lhs/rhs values
  std::optional<Counterexample> counterexample;

  bool passed() const { return status != CheckStatus::Fail; }
};

// Tab-separated "property<TAB>STATUS<TAB>key=value ..." row.
std::string report_line(const VerificationReport& report);

std::string reports_to_json(const std::vector<VerificationReport>& reports);

// Every opposite-side vertex with degree >= 2 must span a complete subgraph
// in the U-projection. Throws DimensionMismatch when proj.n != g.n1.
VerificationReport check_clique_induction(const BipartiteGraph& g, const UnipartiteGraph& proj);

// Some edge (u, s) with deg(u) = deg(s) = 1, if one exists.
std::optional<std::pair<vertex_t, vertex_t>> find_pendant_pair(const BipartiteGraph& g);

// A pendant pair forces its U endpoint to be isolated in the projection and
// hence the projection to be disconnected. Inapplicable (N/A) when n1 < 2;
// throws PreconditionViolated on disconnected input unless the graph carries
// the generator's pendant_pair_instance tag.
VerificationReport check_pendant_disconnection(const BipartiteGraph& g);

// Every stored weight w satisfies 1 <= w <= n2.
VerificationReport check_weight_bounds(const BipartiteGraph& g,
                                       const WeightedUnipartiteGraph& wproj);

// Total weight equals the sum over opposite-side vertices of C(deg, 2),
// with C(d, 2) = 0 for d < 2. Exact integer equality.
VerificationReport check_total_weight_identity(const BipartiteGraph& g,
                                               const WeightedUnipartiteGraph& wproj);

// Total weight is at most n1 * n2 * (n1 - 1) / 2; equality is reported and
// coincides with the complete bipartite case.
VerificationReport check_weight_sum_upper_bound(const BipartiteGraph& g,
                                                const WeightedUnipartiteGraph& wproj);

// Wraps degree_sums: the two per-side sums and the edge count must agree.
VerificationReport check_degree_sum(const BipartiteGraph& g);

// All checks against caller-supplied projections, reported in PropertyId
// order. verify_all computes the projections itself; this entry point exists
// so tooling can feed tampered ones.
std::vector<VerificationReport> run_checks(const BipartiteGraph& g, const UnipartiteGraph& proj,
                                           const WeightedUnipartiteGraph& wproj);

// One report per property. Never throws on well-formed graphs: a
// disconnected untagged input downgrades PendantDisconnection to N/A.
std::vector<VerificationReport> verify_all(const BipartiteGraph& g);

}  // namespace bgproj
