#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qsd/clique.hpp"

using namespace qsd;

namespace {

struct Sample {
  Graph graph;
  std::vector<std::uint32_t> adj;
};

Sample random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution edge(p);
  Sample s{Graph(n), std::vector<std::uint32_t>(static_cast<std::size_t>(n), 0)};
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (edge(rng)) {
        s.graph.add_edge(a, b);
        s.adj[static_cast<std::size_t>(a)] |= 1U << b;
        s.adj[static_cast<std::size_t>(b)] |= 1U << a;
      }
    }
  }
  return s;
}

Graph complete(int n) {
  Graph g(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) g.add_edge(a, b);
  }
  return g;
}

std::vector<int> members(std::uint32_t m) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i) {
    if ((m >> i) & 1U) out.push_back(i);
  }
  return out;
}

}  // namespace

TEST_CASE("graph basics") {
  Graph g(70);
  g.add_edge(0, 69);
  g.add_edge(3, 4);
  g.add_edge(3, 4);
  CHECK(g.adjacent(69, 0));
  CHECK_FALSE(g.adjacent(0, 1));
  CHECK(g.degree(3) == 1);
  CHECK(g.words_per_row() == 2);
  CHECK_THROWS_AS(g.add_edge(2, 2), Error);
  CHECK_THROWS_AS(g.add_edge(0, 70), Error);

  const int keep[] = {69, 3, 0};
  const Graph h = g.induced(keep);
  CHECK(h.num_vertices() == 3);
  CHECK(h.adjacent(0, 2));
  CHECK_FALSE(h.adjacent(1, 2));
}

TEST_CASE("small fixed graphs") {
  SUBCASE("K4 minus an edge") {
    Graph g = complete(4);
    Graph h(4);
    for (int a = 0; a < 4; ++a) {
      for (int b = a + 1; b < 4; ++b) {
        if (!(a == 0 && b == 1)) h.add_edge(a, b);
      }
    }
    CHECK(has_clique(g, 4));
    CHECK(has_clique(h, 3));
    CHECK_FALSE(has_clique(h, 4));
    CHECK(count_cliques(h, 3, 100).count == 2);
  }
  SUBCASE("empty graph") {
    const Graph g(5);
    CHECK(has_clique(g, 1));
    CHECK_FALSE(has_clique(g, 2));
    CHECK(count_cliques(g, 1, 100).count == 5);
    CHECK(has_clique(Graph(0), 0));
    CHECK_FALSE(has_clique(Graph(0), 1));
  }
  SUBCASE("counting caps") {
    const Graph k10 = complete(10);
    CHECK(count_cliques(k10, 8, 1000).count == 45);
    const CliqueCount capped = count_cliques(k10, 5, 100);
    CHECK(capped.capped);
    CHECK(capped.count == 100);
    CHECK_FALSE(count_cliques(k10, 5, 252).capped);
  }
  SUBCASE("witness") {
    const Graph k5 = complete(5);
    const auto w = find_clique(k5, 3);
    REQUIRE(w.has_value());
    CHECK(w->size() >= 3);
    CHECK(is_clique(k5, *w));
    CHECK_FALSE(find_clique(Graph(4), 2).has_value());
  }
}

TEST_CASE("clique search agrees with subset enumeration on random graphs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 18);
    const double p = 0.2 + 0.7 * static_cast<double>(rng() % 100) / 100.0;
    const Sample s = random_graph(rng, n, p);
    const auto ref = oracle::subset_cliques(s.adj);
    for (int size = 1; size <= n; ++size) {
      CHECK(has_clique(s.graph, size) == (ref.max_clique >= size));
    }
    const auto w = find_clique(s.graph, ref.max_clique);
    REQUIRE(w.has_value());
    CHECK(is_clique(s.graph, *w));
  }
}

TEST_CASE("exact counts and lexicographic enumeration") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 16);
    const Sample s = random_graph(rng, n, 0.6);
    const auto ref = oracle::subset_cliques(s.adj);
    for (int size = 1; size <= std::min(n, 8); ++size) {
      const CliqueCount c = count_cliques(s.graph, size, 1'000'000);
      CHECK_FALSE(c.capped);
      CHECK(c.count == ref.count_by_size[static_cast<std::size_t>(size)]);

      std::vector<std::vector<int>> expected;
      for (auto m : ref.cliques) {
        if (__builtin_popcount(m) == size) expected.push_back(members(m));
      }
      std::sort(expected.begin(), expected.end());
      std::vector<std::vector<int>> got;
      for_each_clique(s.graph, size, [&](std::span<const int> k) {
        got.emplace_back(k.begin(), k.end());
        return true;
      });
      CHECK(got == expected);
    }
  }
}

TEST_CASE("enumeration stops when the visitor says so") {
  const Graph k8 = complete(8);
  int seen = 0;
  for_each_clique(k8, 3, [&](std::span<const int>) { return ++seen < 4; });
  CHECK(seen == 4);
}
