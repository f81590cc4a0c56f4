#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "bgproj/core.hpp"
#include "bgproj/generator.hpp"
#include "testutil.hpp"

using namespace bgproj;

TEST_CASE("from_edge_list builds the 6x4 sample") {
  const BipartiteGraph g = testutil::sample_graph();
  CHECK(g.n1 == 6);
  CHECK(g.n2 == 4);
  CHECK(g.m() == 10);
  CHECK(g.deg_u(2) == 3);
  CHECK(g.deg_s(1) == 3);
  const std::vector<std::size_t> deg_u = {1, 2, 3, 2, 1, 1};
  const std::vector<std::size_t> deg_s = {3, 3, 2, 2};
  for (vertex_t u = 0; u < 6; ++u) CHECK(g.deg_u(u) == deg_u[u]);
  for (vertex_t s = 0; s < 4; ++s) CHECK(g.deg_s(s) == deg_s[s]);
  CHECK(g.has_edge(2, 2));
  CHECK_FALSE(g.has_edge(0, 3));
}

TEST_CASE("from_edge_list edge cases") {
  SUBCASE("edgeless graph") {
    const BipartiteGraph g = from_edge_list(2, 2, {});
    CHECK(g.m() == 0);
  }
  SUBCASE("complete 3x3") {
    std::vector<std::pair<vertex_t, vertex_t>> pairs;
    for (vertex_t u = 0; u < 3; ++u)
      for (vertex_t s = 0; s < 3; ++s) pairs.emplace_back(u, s);
    const BipartiteGraph g = from_edge_list(3, 3, pairs);
    CHECK(g.m() == 9);
    for (vertex_t u = 0; u < 3; ++u) CHECK(g.deg_u(u) == 3);
    for (vertex_t s = 0; s < 3; ++s) CHECK(g.deg_s(s) == 3);
  }
  SUBCASE("out-of-range indices") {
    CHECK_THROWS_AS(from_edge_list(2, 2, {{2, 0}}), InvalidVertex);
    CHECK_THROWS_AS(from_edge_list(2, 2, {{0, 2}}), InvalidVertex);
    try {
      from_edge_list(2, 2, {{0, 5}});
      FAIL("expected InvalidVertex");
    } catch (const InvalidVertex& e) {
      CHECK(e.side == Side::S);
      CHECK(e.index == 5);
    }
  }
  SUBCASE("empty sides rejected") {
    CHECK_THROWS_AS(from_edge_list(0, 2, {}), PreconditionViolated);
    CHECK_THROWS_AS(from_edge_list(2, 0, {}), PreconditionViolated);
  }
  SUBCASE("duplicates are dropped") {
    const BipartiteGraph g = from_edge_list(2, 2, {{0, 0}, {0, 0}, {1, 1}, {0, 0}});
    CHECK(g.m() == 2);
  }
}

TEST_CASE("from_edge_list is order and duplicate insensitive") {
  auto pairs = testutil::sample_pairs();
  const BipartiteGraph reference = from_edge_list(6, 4, pairs);
  std::mt19937_64 rng(7);
  for (int round = 0; round < 20; ++round) {
    auto shuffled = pairs;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    shuffled.push_back(shuffled[static_cast<std::size_t>(rng() % shuffled.size())]);
    CHECK(from_edge_list(6, 4, shuffled) == reference);
  }
}

TEST_CASE("from_biadjacency") {
  SUBCASE("sample matrix") {
    const BipartiteGraph g = from_biadjacency(testutil::sample_matrix());
    CHECK(g == testutil::sample_graph());
  }
  SUBCASE("all-zero 2x3") {
    const BipartiteGraph g = from_biadjacency(BiAdjacencyMatrix::zero(2, 3));
    CHECK(g.m() == 0);
    CHECK(g.n1 == 2);
    CHECK(g.n2 == 3);
  }
  SUBCASE("all-one 4x2") {
    BiAdjacencyMatrix m = BiAdjacencyMatrix::zero(4, 2);
    std::fill(m.cells.begin(), m.cells.end(), 1);
    const BipartiteGraph g = from_biadjacency(m);
    CHECK(g.m() == 8);
  }
  SUBCASE("non-0/1 cell") {
    BiAdjacencyMatrix m = BiAdjacencyMatrix::zero(2, 2);
    m.at(1, 0) = 2;
    try {
      from_biadjacency(m);
      FAIL("expected MalformedMatrix");
    } catch (const MalformedMatrix& e) {
      CHECK(e.row == 1);
      CHECK(e.col == 0);
    }
  }
}

TEST_CASE("to_biadjacency round trips") {
  SUBCASE("sample is bit-exact") {
    CHECK(to_biadjacency(testutil::sample_graph()) == testutil::sample_matrix());
  }
  SUBCASE("edgeless and complete") {
    CHECK(to_biadjacency(from_edge_list(2, 2, {})) == BiAdjacencyMatrix::zero(2, 2));
    BiAdjacencyMatrix ones = BiAdjacencyMatrix::zero(2, 2);
    std::fill(ones.cells.begin(), ones.cells.end(), 1);
    CHECK(to_biadjacency(from_biadjacency(ones)) == ones);
  }
  SUBCASE("random graphs round trip both ways") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      GenSpec spec;
      spec.n1 = 1 + seed % 9;
      spec.n2 = 1 + (seed * 7) % 9;
      spec.p = static_cast<double>(seed % 11) / 10.0;
      spec.seed = seed;
      const BipartiteGraph g = generate(spec);
      CHECK(from_biadjacency(to_biadjacency(g)) == g);
    }
  }
}

TEST_CASE("degree_sums") {
  SUBCASE("sample") {
    const DegreeSums ds = degree_sums(testutil::sample_graph());
    CHECK(ds.sum_u == 10);
    CHECK(ds.sum_s == 10);
    CHECK(ds.m == 10);
  }
  SUBCASE("edgeless") {
    const DegreeSums ds = degree_sums(from_edge_list(3, 2, {}));
    CHECK(ds.sum_u == 0);
    CHECK(ds.sum_s == 0);
    CHECK(ds.m == 0);
  }
  SUBCASE("complete") {
    GenSpec spec;
    spec.n1 = 5;
    spec.n2 = 7;
    spec.model = GenModel::Complete;
    const DegreeSums ds = degree_sums(generate(spec));
    CHECK(ds.sum_u == 35);
    CHECK(ds.sum_s == 35);
    CHECK(ds.m == 35);
  }
  SUBCASE("always balanced on random graphs") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      GenSpec spec;
      spec.n1 = 1 + seed % 12;
      spec.n2 = 1 + (seed * 3) % 12;
      spec.p = static_cast<double>(seed % 11) / 10.0;
      spec.seed = seed;
      const DegreeSums ds = degree_sums(generate(spec));
      CHECK(ds.sum_u == ds.m);
      CHECK(ds.sum_s == ds.m);
    }
  }
}

TEST_CASE("is_connected") {
  SUBCASE("sample is connected") {
    const BipartiteGraph g = testutil::sample_graph();
    CHECK(is_connected(g));
    CHECK(testutil::component_count(g) == 1);
  }
  SUBCASE("isolated vertex disconnects") {
    CHECK_FALSE(is_connected(from_edge_list(2, 1, {{0, 0}})));
  }
  SUBCASE("complete 2x2 is connected") {
    GenSpec spec;
    spec.n1 = 2;
    spec.n2 = 2;
    spec.model = GenModel::Complete;
    CHECK(is_connected(generate(spec)));
  }
  SUBCASE("edgeless multi-vertex graph is disconnected") {
    CHECK_FALSE(is_connected(from_edge_list(2, 2, {})));
  }
  SUBCASE("single edge on 1x1 is connected") {
    CHECK(is_connected(from_edge_list(1, 1, {{0, 0}})));
  }
  SUBCASE("matches union-find on every small graph") {
    testutil::for_each_small_graph([](const BipartiteGraph& g) {
      CHECK(is_connected(g) == (testutil::component_count(g) == 1));
    });
  }
}

TEST_CASE("density_stats") {
  SUBCASE("sample") {
    const DensityStats st = density_stats(testutil::sample_graph());
    CHECK(st.n1 == 6);
    CHECK(st.n2 == 4);
    CHECK(st.m == 10);
    CHECK(st.max_edges == 24);
    CHECK(st.density == doctest::Approx(10.0 / 24.0));
    CHECK(st.linear_budget == 10);
  }
  SUBCASE("complete has density 1") {
    GenSpec spec;
    spec.n1 = 3;
    spec.n2 = 3;
    spec.model = GenModel::Complete;
    CHECK(density_stats(generate(spec)).density == doctest::Approx(1.0));
  }
  SUBCASE("edgeless has density 0") {
    CHECK(density_stats(from_edge_list(5, 5, {})).density == doctest::Approx(0.0));
  }
}

TEST_CASE("degree bounds") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    GenSpec spec;
    spec.n1 = 2 + seed % 8;
    spec.n2 = 2 + (seed * 5) % 8;
    spec.p = 0.25 + 0.5 * static_cast<double>(seed % 3) / 2.0;
    spec.seed = seed;
    const BipartiteGraph g = generate(spec);
    const bool connected = is_connected(g);
    for (vertex_t u = 0; u < g.n1; ++u) {
      CHECK(g.deg_u(u) <= g.n2);
      if (connected) CHECK(g.deg_u(u) >= 1);
    }
    for (vertex_t s = 0; s < g.n2; ++s) {
      CHECK(g.deg_s(s) <= g.n1);
      if (connected) CHECK(g.deg_s(s) >= 1);
    }
  }
}

TEST_CASE("transpose") {
  const BipartiteGraph g = testutil::sample_graph();
  const BipartiteGraph t = transpose(g);
  CHECK(t.n1 == 4);
  CHECK(t.n2 == 6);
  CHECK(t.m() == 10);
  for (vertex_t s = 0; s < 4; ++s) CHECK(t.deg_u(s) == g.deg_s(s));
  CHECK(transpose(t) == g);
}
