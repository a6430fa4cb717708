#ifndef FRECHET_BOTTLENECK_HPP
#define FRECHET_BOTTLENECK_HPP

#include <cstddef>
#include <functional>
#include <limits>
#include <queue>
#include <unordered_map>
#include <vector>

namespace frechet {

struct WeightedGraph {
  struct Edge {
    int u, v;
    double w;
  };
  int n = 0;
  std::vector<Edge> edges;
};

struct BottleneckResult {
  double value = 0.0;  // max edge weight on the path; +inf if disconnected
  std::vector<int> path;
};

// Minimax st-path by the recursive-median algorithm: split at the median
// edge weight, recurse on the light subgraph when s,t stay connected, else
// contract the light components and recurse on the heavy edges.  Ties are
// broken by edge index.  `touched` accumulates the number of edges examined
// across all stages (O(m) total).
BottleneckResult bottleneck_path(const WeightedGraph& g, int s, int t,
                                 std::size_t* touched = nullptr);

struct LazySearchStats {
  std::size_t popped = 0;
  double max_popped_key = 0.0;
};

// Prim-style lazy minimax search over an implicit graph.  `expand(v)` lists
// (neighbor, edge weight) pairs; only vertices whose best attachment weight
// is at most the final value get expanded.
template <class V, class Hash = std::hash<V>, class Expand>
BottleneckResult lazy_bottleneck_impl(
    Expand&& expand, const V& s, const V& t,
    std::vector<V>* vertex_path = nullptr, LazySearchStats* stats = nullptr) {
  BottleneckResult out;
  if (s == t) {
    out.value = 0.0;
    out.path = {0};
    if (vertex_path) *vertex_path = {s};
    return out;
  }
  struct Entry {
    double key;
    std::size_t order;  // insertion order keeps ties deterministic
    V vertex;
    V parent;
    bool operator>(const Entry& o) const {
      return key != o.key ? key > o.key : order > o.order;
    }
  };
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> pq;
  std::unordered_map<V, std::pair<V, double>, Hash> tree;  // vertex -> (parent, value)
  std::size_t order = 0;
  pq.push({0.0, order++, s, s});
  while (!pq.empty()) {
    Entry e = pq.top();
    pq.pop();
    if (tree.count(e.vertex)) continue;
    double value = e.vertex == s
                       ? 0.0
                       : std::max(e.key, tree.at(e.parent).second);
    tree.emplace(e.vertex, std::make_pair(e.parent, value));
    if (stats) {
      ++stats->popped;
      stats->max_popped_key = std::max(stats->max_popped_key, e.key);
    }
    if (e.vertex == t) {
      out.value = value;
      std::vector<V> rev;
      V cur = t;
      while (true) {
        rev.push_back(cur);
        if (cur == s) break;
        cur = tree.at(cur).first;
      }
      if (vertex_path) vertex_path->assign(rev.rbegin(), rev.rend());
      out.path.resize(rev.size());
      return out;
    }
    for (auto& [nb, w] : expand(e.vertex)) {
      if (!tree.count(nb)) pq.push({w, order++, nb, e.vertex});
    }
  }
  out.value = std::numeric_limits<double>::infinity();
  return out;
}

// Explicit-graph convenience wrapper around the lazy search.
BottleneckResult lazy_bottleneck(const WeightedGraph& g, int s, int t,
                                 LazySearchStats* stats = nullptr);

}  // namespace frechet

#endif
