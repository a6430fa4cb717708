#include "frechet/bottleneck.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace frechet {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct EdgeRef {
  int u, v;
  double w;
  int idx;  // original index, the tie-breaker
};

bool lighter(const EdgeRef& a, const EdgeRef& b) {
  return a.w != b.w ? a.w < b.w : a.idx < b.idx;
}

// Returns the weight of the critical edge, or +inf when disconnected.
double solve(int n, std::vector<EdgeRef> edges, int s, int t,
             std::size_t* touched) {
  while (true) {
    if (touched) *touched += edges.size();
    if (edges.size() <= 16) {
      std::sort(edges.begin(), edges.end(), lighter);
      Dsu dsu(n);
      for (const auto& e : edges) {
        dsu.unite(e.u, e.v);
        if (dsu.find(s) == dsu.find(t)) return e.w;
      }
      return kInf;
    }
    const size_t half = edges.size() / 2;
    std::nth_element(edges.begin(), edges.begin() + half, edges.end(),
                     lighter);
    Dsu dsu(n);
    for (size_t i = 0; i <= half; ++i) dsu.unite(edges[i].u, edges[i].v);
    if (dsu.find(s) == dsu.find(t)) {
      // The answer hides among the light edges.
      edges.resize(half + 1);
    } else {
      // Contract light components; only heavy edges remain relevant.
      std::vector<EdgeRef> heavy;
      heavy.reserve(edges.size() - half - 1);
      for (size_t i = half + 1; i < edges.size(); ++i) {
        EdgeRef e = edges[i];
        e.u = dsu.find(e.u);
        e.v = dsu.find(e.v);
        if (e.u != e.v) heavy.push_back(e);
      }
      s = dsu.find(s);
      t = dsu.find(t);
      edges = std::move(heavy);
    }
  }
}

}  // namespace

BottleneckResult bottleneck_path(const WeightedGraph& g, int s, int t,
                                 std::size_t* touched) {
  if (s < 0 || t < 0 || s >= g.n || t >= g.n) {
    throw std::out_of_range("bottleneck_path: vertex out of range");
  }
  BottleneckResult out;
  if (s == t) {
    out.value = 0.0;
    out.path = {s};
    return out;
  }
  std::vector<EdgeRef> refs;
  refs.reserve(g.edges.size());
  for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
    refs.push_back({g.edges[i].u, g.edges[i].v, g.edges[i].w, i});
  }
  const double value = solve(g.n, std::move(refs), s, t, touched);
  out.value = value;
  if (value == kInf) return out;

  // Reconstruct a witness path inside the <= value subgraph.
  std::vector<std::vector<std::pair<int, int>>> adj(g.n);
  for (const auto& e : g.edges) {
    if (e.w <= value) {
      adj[e.u].push_back({e.v, e.u});
      adj[e.v].push_back({e.u, e.v});
    }
  }
  std::vector<int> parent(g.n, -1);
  std::vector<int> stack = {s};
  parent[s] = s;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (v == t) break;
    for (auto& [nb, from] : adj[v]) {
      if (parent[nb] < 0) {
        parent[nb] = v;
        stack.push_back(nb);
      }
    }
  }
  std::vector<int> rev;
  for (int v = t; v != s; v = parent[v]) rev.push_back(v);
  rev.push_back(s);
  out.path.assign(rev.rbegin(), rev.rend());
  return out;
}

BottleneckResult lazy_bottleneck(const WeightedGraph& g, int s, int t,
                                 LazySearchStats* stats) {
  std::vector<std::vector<std::pair<int, double>>> adj(g.n);
  for (const auto& e : g.edges) {
    adj[e.u].push_back({e.v, e.w});
    adj[e.v].push_back({e.u, e.w});
  }
  std::vector<int> path;
  auto res = lazy_bottleneck_impl<int>(
      [&](int v) { return adj[v]; }, s, t, &path, stats);
  res.path = std::move(path);
  return res;
}

}  // namespace frechet
