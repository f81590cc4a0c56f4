#include "bgproj/verify.hpp"

#include <json.hpp>

namespace bgproj {

namespace {

std::uint64_t choose2(std::uint64_t d) { return d < 2 ? 0 : d * (d - 1) / 2; }

void put(VerificationReport& r, const std::string& key, std::uint64_t value) {
  r.details.emplace_back(key, std::to_string(value));
}

void put(VerificationReport& r, const std::string& key, const std::string& value) {
  r.details.emplace_back(key, value);
}

void require_projection_of(const BipartiteGraph& g, std::size_t proj_n) {
  if (proj_n != g.n1)
    throw DimensionMismatch("projection has " + std::to_string(proj_n) +
                            " vertices but the graph has n1 = " + std::to_string(g.n1));
}

}  // namespace

const char* property_name(PropertyId id) {
  switch (id) {
    case PropertyId::DegreeSum: return "DegreeSum";
    case PropertyId::CliqueInduction: return "CliqueInduction";
    case PropertyId::PendantDisconnection: return "PendantDisconnection";
    case PropertyId::WeightBounds: return "WeightBounds";
    case PropertyId::TotalWeightIdentity: return "TotalWeightIdentity";
    case PropertyId::WeightSumUpperBound: return "WeightSumUpperBound";
  }
  return "?";
}

const char* status_name(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Vacuous: return "VACUOUS";
    case CheckStatus::NotApplicable: return "N/A";
  }
  return "?";
}

std::string report_line(const VerificationReport& report) {
  std::string line = property_name(report.property);
  line += '\t';
  line += status_name(report.status);
  line += '\t';
  bool first = true;
  for (const auto& [k, v] : report.details) {
    if (!first) line += ' ';
    first = false;
    line += k;
    line += '=';
    line += v;
  }
  if (report.counterexample) {
    for (const auto& [k, v] : report.counterexample->values) {
      if (!first) line += ' ';
      first = false;
      line += "cx_";
      line += k;
      line += '=';
      line += std::to_string(v);
    }
  }
  if (first) line += '-';
  return line;
}

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
  nlohmann::ordered_json root;
  root["reports"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json item;
    item["property"] = property_name(r.property);
    item["status"] = status_name(r.status);
    nlohmann::ordered_json details;
    for (const auto& [k, v] : r.details) details[k] = v;
    item["details"] = details;
    if (r.counterexample) {
      nlohmann::ordered_json cx;
      for (const auto& [k, v] : r.counterexample->values) cx[k] = v;
      item["counterexample"] = cx;
    }
    root["reports"].push_back(std::move(item));
  }
  return root.dump(2);
}

VerificationReport check_clique_induction(const BipartiteGraph& g, const UnipartiteGraph& proj) {
  require_projection_of(g, proj.n);
  VerificationReport r;
  r.property = PropertyId::CliqueInduction;
  std::uint64_t cliques = 0, pairs = 0;
  for (std::size_t s = 0; s < g.n2; ++s) {
    const auto& nb = g.adj_s[s];
    if (nb.size() < 2) continue;
    ++cliques;
    for (std::size_t a = 0; a + 1 < nb.size(); ++a) {
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        ++pairs;
        if (!proj.has_edge(nb[a], nb[b])) {
          r.status = CheckStatus::Fail;
          r.counterexample = Counterexample{{{"s", static_cast<std::int64_t>(s)},
                                             {"u_i", static_cast<std::int64_t>(nb[a])},
                                             {"u_j", static_cast<std::int64_t>(nb[b])}}};
          put(r, "cliques_checked", cliques);
          put(r, "pairs_checked", pairs);
          return r;
        }
      }
    }
  }
  r.status = cliques == 0 ? CheckStatus::Vacuous : CheckStatus::Pass;
  put(r, "cliques_checked", cliques);
  put(r, "pairs_checked", pairs);
  return r;
}

std::optional<std::pair<vertex_t, vertex_t>> find_pendant_pair(const BipartiteGraph& g) {
  for (const auto& [u, s] : g.edges)
    if (g.deg_u(u) == 1 && g.deg_s(s) == 1) return std::make_pair(u, s);
  return std::nullopt;
}

VerificationReport check_pendant_disconnection(const BipartiteGraph& g) {
  VerificationReport r;
  r.property = PropertyId::PendantDisconnection;
  if (g.n1 < 2) {
    r.status = CheckStatus::NotApplicable;
    put(r, "reason", std::string("single-vertex projection is trivially connected"));
    return r;
  }
  if (!g.pendant_pair_instance && !is_connected(g))
    throw PreconditionViolated("pendant-disconnection check expects a connected graph");

  const auto pair = find_pendant_pair(g);
  if (!pair) {
    r.status = CheckStatus::Vacuous;
    put(r, "reason", std::string("no pendant pair present"));
    return r;
  }
  const auto [u, s] = *pair;
  const UnipartiteGraph proj = project_sparse(g, Side::U);
  const std::size_t deg_in_proj = proj.degrees()[u];
  const bool disconnected = !is_connected(proj);
  put(r, "pendant_u", static_cast<std::uint64_t>(u));
  put(r, "pendant_s", static_cast<std::uint64_t>(s));
  put(r, "projection_disconnected", std::string(disconnected ? "true" : "false"));
  if (deg_in_proj != 0 || !disconnected) {
    r.status = CheckStatus::Fail;
    r.counterexample = Counterexample{{{"u", static_cast<std::int64_t>(u)},
                                       {"s", static_cast<std::int64_t>(s)},
                                       {"deg_in_projection", static_cast<std::int64_t>(deg_in_proj)}}};
  }
  return r;
}

VerificationReport check_weight_bounds(const BipartiteGraph& g,
                                       const WeightedUnipartiteGraph& wproj) {
  require_projection_of(g, wproj.n);
  VerificationReport r;
  r.property = PropertyId::WeightBounds;
  std::uint64_t max_weight = 0;
  for (const auto& e : wproj.edges) {
    max_weight = std::max<std::uint64_t>(max_weight, e.weight);
    if (e.weight < 1 || e.weight > g.n2) {
      r.status = CheckStatus::Fail;
      r.counterexample = Counterexample{{{"i", static_cast<std::int64_t>(e.i)},
                                         {"j", static_cast<std::int64_t>(e.j)},
                                         {"weight", static_cast<std::int64_t>(e.weight)}}};
      break;
    }
  }
  if (r.status != CheckStatus::Fail && wproj.edges.empty()) r.status = CheckStatus::Vacuous;
  put(r, "edges", static_cast<std::uint64_t>(wproj.edges.size()));
  put(r, "max_weight", max_weight);
  put(r, "n2", static_cast<std::uint64_t>(g.n2));
  return r;
}

VerificationReport check_total_weight_identity(const BipartiteGraph& g,
                                               const WeightedUnipartiteGraph& wproj) {
  require_projection_of(g, wproj.n);
  VerificationReport r;
  r.property = PropertyId::TotalWeightIdentity;
  const std::uint64_t lhs = wproj.total_weight();
  std::uint64_t rhs = 0;
  for (const auto& nb : g.adj_s) rhs += choose2(nb.size());
  put(r, "lhs_total_weight", lhs);
  put(r, "rhs_wedge_count", rhs);
  if (lhs != rhs) {
    r.status = CheckStatus::Fail;
    r.counterexample = Counterexample{{{"lhs", static_cast<std::int64_t>(lhs)},
                                       {"rhs", static_cast<std::int64_t>(rhs)}}};
  }
  return r;
}

VerificationReport check_weight_sum_upper_bound(const BipartiteGraph& g,
                                                const WeightedUnipartiteGraph& wproj) {
  require_projection_of(g, wproj.n);
  VerificationReport r;
  r.property = PropertyId::WeightSumUpperBound;
  const std::uint64_t omega = wproj.total_weight();
  const std::uint64_t bound =
      static_cast<std::uint64_t>(g.n1) * g.n2 * (g.n1 - 1) / 2;
  const bool complete = g.m() == g.n1 * g.n2;
  put(r, "omega", omega);
  put(r, "bound", bound);
  put(r, "equality", std::string(omega == bound ? "true" : "false"));
  put(r, "complete_bipartite", std::string(complete ? "true" : "false"));
  if (omega > bound) {
    r.status = CheckStatus::Fail;
    r.counterexample = Counterexample{{{"omega", static_cast<std::int64_t>(omega)},
                                       {"bound", static_cast<std::int64_t>(bound)}}};
  }
  return r;
}

VerificationReport check_degree_sum(const BipartiteGraph& g) {
  VerificationReport r;
  r.property = PropertyId::DegreeSum;
  const DegreeSums ds = degree_sums(g);
  put(r, "sum_u", ds.sum_u);
  put(r, "sum_s", ds.sum_s);
  put(r, "m", ds.m);
  if (ds.sum_u != ds.m || ds.sum_s != ds.m) {
    r.status = CheckStatus::Fail;
    r.counterexample = Counterexample{{{"sum_u", static_cast<std::int64_t>(ds.sum_u)},
                                       {"sum_s", static_cast<std::int64_t>(ds.sum_s)},
                                       {"m", static_cast<std::int64_t>(ds.m)}}};
  }
  return r;
}

std::vector<VerificationReport> run_checks(const BipartiteGraph& g, const UnipartiteGraph& proj,
                                           const WeightedUnipartiteGraph& wproj) {
  std::vector<VerificationReport> reports;
  reports.push_back(check_degree_sum(g));
  reports.push_back(check_clique_induction(g, proj));
  try {
    reports.push_back(check_pendant_disconnection(g));
  } catch (const PreconditionViolated&) {
    VerificationReport r;
    r.property = PropertyId::PendantDisconnection;
    r.status = CheckStatus::NotApplicable;
    r.details.emplace_back("reason", "parent graph is disconnected");
    reports.push_back(std::move(r));
  }
  reports.push_back(check_weight_bounds(g, wproj));
  reports.push_back(check_total_weight_identity(g, wproj));
  reports.push_back(check_weight_sum_upper_bound(g, wproj));
  return reports;
}

std::vector<VerificationReport> verify_all(const BipartiteGraph& g) {
  return run_checks(g, project_sparse(g, Side::U), project_weighted(g, Side::U));
}

}  // namespace bgproj
