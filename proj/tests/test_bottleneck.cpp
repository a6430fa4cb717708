#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "frechet/bottleneck.hpp"
#include "helpers.hpp"

using namespace frechet;
using namespace frechet::testing;

namespace {

WeightedGraph random_graph(std::mt19937_64& rng, int max_n) {
  WeightedGraph g;
  g.n = 2 + static_cast<int>(rng() % (max_n - 1));
  const int m = static_cast<int>(rng() % (3 * g.n + 1));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < m; ++i) {
    const int u = static_cast<int>(rng() % g.n);
    const int v = static_cast<int>(rng() % g.n);
    if (u == v) continue;
    g.edges.push_back({u, v, unit(rng)});
  }
  return g;
}

std::vector<std::tuple<int, int, double>> as_tuples(const WeightedGraph& g) {
  std::vector<std::tuple<int, int, double>> out;
  for (const auto& e : g.edges) out.emplace_back(e.u, e.v, e.w);
  return out;
}

void check_path(const WeightedGraph& g, int s, int t,
                const BottleneckResult& res) {
  if (std::isinf(res.value)) {
    CHECK(res.path.empty());
    return;
  }
  REQUIRE(!res.path.empty());
  // Recompute adjacency restricted to edges at or below the value.
  std::vector<std::vector<int>> adj(g.n);
  for (const auto& e : g.edges) {
    if (e.w <= res.value) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
  }
  std::vector<char> seen(g.n, 0);
  std::vector<int> stack = {s};
  seen[s] = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v : adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  CHECK(seen[t] == 1);
}

}  // namespace

TEST_CASE("recursive median matches the sort-based oracle") {
  std::mt19937_64 rng(51);
  for (int iter = 0; iter < 500; ++iter) {
    const WeightedGraph g = random_graph(rng, 30);
    const int s = static_cast<int>(rng() % g.n);
    const int t = static_cast<int>(rng() % g.n);
    const auto res = bottleneck_path(g, s, t);
    const double want = bottleneck_oracle(g.n, as_tuples(g), s, t);
    if (std::isinf(want)) {
      CHECK(std::isinf(res.value));
    } else {
      CHECK(res.value == want);
      check_path(g, s, t, res);
    }
  }
}

TEST_CASE("touched edges stay linear in the edge count") {
  std::mt19937_64 rng(52);
  for (int iter = 0; iter < 200; ++iter) {
    const WeightedGraph g = random_graph(rng, 60);
    if (g.edges.empty()) continue;
    std::size_t touched = 0;
    bottleneck_path(g, 0, g.n - 1, &touched);
    CHECK(touched <= 8 * g.edges.size());
  }
}

TEST_CASE("lazy search agrees with the recursive median") {
  std::mt19937_64 rng(53);
  for (int iter = 0; iter < 300; ++iter) {
    const WeightedGraph g = random_graph(rng, 25);
    const int s = static_cast<int>(rng() % g.n);
    const int t = static_cast<int>(rng() % g.n);
    LazySearchStats stats;
    const auto lazy = lazy_bottleneck(g, s, t, &stats);
    const auto exact = bottleneck_path(g, s, t);
    CHECK(lazy.value == exact.value);
    if (!std::isinf(lazy.value) && s != t) {
      CHECK(stats.popped >= 2);
      CHECK(stats.max_popped_key <= lazy.value);
      check_path(g, s, t, lazy);
    }
  }
}

TEST_CASE("trivial and degenerate cases") {
  WeightedGraph g;
  g.n = 3;
  g.edges = {{0, 1, 0.5}};
  CHECK(bottleneck_path(g, 0, 0).value == 0.0);
  CHECK(bottleneck_path(g, 0, 1).value == 0.5);
  CHECK(std::isinf(bottleneck_path(g, 0, 2).value));
  CHECK(std::isinf(lazy_bottleneck(g, 0, 2).value));
}

TEST_CASE("duplicate weights break ties deterministically") {
  WeightedGraph g;
  g.n = 4;
  g.edges = {{0, 1, 1.0}, {1, 3, 1.0}, {0, 2, 1.0}, {2, 3, 1.0}};
  const auto a = bottleneck_path(g, 0, 3);
  const auto b = bottleneck_path(g, 0, 3);
  CHECK(a.value == 1.0);
  CHECK(a.path == b.path);
}

TEST_CASE("lazy search over an implicit grid graph") {
  // 2-d grid with weight = max coordinate distance from the diagonal; the
  // minimax path hugs the diagonal.
  const int n = 8;
  auto expand = [&](const std::pair<int, int>& v) {
    std::vector<std::pair<std::pair<int, int>, double>> out;
    const int moves[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    for (const auto& mv : moves) {
      const int x = v.first + mv[0], y = v.second + mv[1];
      if (x < 0 || y < 0 || x >= n || y >= n) continue;
      out.push_back({{x, y}, static_cast<double>(std::abs(x - y))});
    }
    return out;
  };
  struct PairHash {
    std::size_t operator()(const std::pair<int, int>& p) const {
      return std::hash<int>()(p.first * 31 + p.second);
    }
  };
  std::vector<std::pair<int, int>> path;
  const auto res = lazy_bottleneck_impl<std::pair<int, int>, PairHash>(
      expand, {0, 0}, {n - 1, n - 1}, &path);
  CHECK(res.value == 1.0);
  CHECK(path.front() == std::pair<int, int>(0, 0));
  CHECK(path.back() == std::pair<int, int>(n - 1, n - 1));
}
