#include "frechet/cpacked.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <memory>

#include "frechet/cost.hpp"
#include "frechet/solver.hpp"

namespace frechet {

SimplifiedCurve simplify(const Curve& curve, double mu) {
  if (mu <= 0.0) {
    throw GeometryError("simplify: mu must be positive");
  }
  const auto& verts = curve.vertices();
  const int n = static_cast<int>(verts.size());
  std::vector<int> marked = {0};
  int current = 0;
  for (int i = 1; i < n; ++i) {
    if (distance(verts[i], verts[current]) >= mu) {
      marked.push_back(i);
      current = i;
    }
  }
  if (marked.back() != n - 1) marked.push_back(n - 1);
  std::vector<Point> kept;
  kept.reserve(marked.size());
  for (int i : marked) kept.push_back(verts[i]);
  return SimplifiedCurve{mu, std::move(marked),
                         Curve(std::move(kept), curve.name() + "-simplified")};
}

namespace {

// Simplified curves with their shared product cell graph under the
// enclosing-ball-radius cost.
struct Instance {
  std::vector<SimplifiedCurve> simp;
  std::vector<const SimplicialComplex*> complexes;
  MebRadiusCost cost;
  std::unique_ptr<CellGraph> graph;
  CellId s, t;

  Instance(const std::vector<Curve>& curves, double mu) {
    for (const Curve& c : curves) simp.push_back(simplify(c, mu));
    for (const auto& sc : simp) complexes.push_back(&sc.simplified.complex());
    graph = std::make_unique<CellGraph>(complexes, &cost);
    s.simplex.resize(complexes.size());
    t.simplex.resize(complexes.size());
    for (size_t i = 0; i < complexes.size(); ++i) {
      s.simplex[i] =
          complexes[i]->vertex_simplex(simp[i].simplified.start_point());
      t.simplex[i] =
          complexes[i]->vertex_simplex(simp[i].simplified.end_point());
    }
  }

  // BFS through cells with elevation <= threshold; true when the end cell
  // is reachable.  `explored` counts cells popped from the queue.
  bool reached(double threshold, std::size_t* explored,
               std::vector<CellId>* path) {
    if (graph->elevation(s) > threshold) return false;
    std::unordered_map<CellId, CellId, CellIdHash> parent;
    std::deque<CellId> queue;
    parent.emplace(s, s);
    queue.push_back(s);
    while (!queue.empty()) {
      CellId cur = queue.front();
      queue.pop_front();
      if (explored) ++*explored;
      if (cur == t) {
        if (path) {
          std::vector<CellId> rev;
          for (CellId v = cur;; v = parent.at(v)) {
            rev.push_back(v);
            if (v == s) break;
          }
          path->assign(rev.rbegin(), rev.rend());
        }
        return true;
      }
      for (CellId nb : graph->neighbors(cur)) {
        if (parent.count(nb)) continue;
        if (graph->elevation(nb) > threshold) continue;
        parent.emplace(nb, cur);
        queue.push_back(std::move(nb));
      }
    }
    return false;
  }

  ProductPath assemble(const std::vector<CellId>& ids) {
    ProductPath out;
    double worst = 0.0;
    for (const auto& id : ids) {
      const CellGraphVertex& v = graph->vertex(id);
      worst = std::max(worst, v.elevation);
      out.vertices.push_back(v);
    }
    out.value = worst;
    return out;
  }
};

}  // namespace

DeciderOutcome decider(double delta, double eps,
                       const std::vector<Curve>& curves) {
  if (delta <= 0.0 || eps <= 0.0 || eps > 1.0) {
    throw GeometryError("decider: need delta > 0 and 0 < eps <= 1");
  }
  // Simplify at mu = eps*delta/16; the simplification moves each curve by
  // at most mu, so the simplified optimum is within 2*mu of the true one.
  // Probing delta(1 -+ eps/8) = delta -+ 2*mu therefore certifies each tag.
  const double mu = eps * delta / 16.0;
  Instance inst(curves, mu);
  DeciderOutcome out;
  std::vector<CellId> ids;
  if (inst.reached(delta * (1.0 - eps / 8.0), &out.explored, &ids)) {
    out.tag = DeciderTag::below;
    out.path = inst.assemble(ids);
    out.has_path = true;
    return out;
  }
  if (inst.reached(delta * (1.0 + eps / 8.0), &out.explored, &ids)) {
    // Optimum pinned to (delta - 4mu, delta + 4mu].
    out.tag = DeciderTag::approx;
    out.value = delta * (1.0 + eps / 4.0);
    out.path = inst.assemble(ids);
    out.has_path = true;
    return out;
  }
  out.tag = DeciderTag::above;
  return out;
}

namespace {

// Fair-split tree with well-separated pair decomposition; each pair at
// separation 8 pins all its distances to within a 3/2 factor of the
// representative distance.
struct SplitTree {
  struct Node {
    Eigen::VectorXd lo, hi;
    int left = -1, right = -1;
    int rep = -1;
    double radius = 0.0;  // half the bounding-box diagonal
  };
  const std::vector<Point>& pts;
  std::vector<int> idx;
  std::vector<Node> nodes;

  explicit SplitTree(const std::vector<Point>& points) : pts(points) {
    idx.resize(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) idx[i] = static_cast<int>(i);
    build(0, static_cast<int>(idx.size()));
  }

  int build(int b, int e) {
    Node node;
    node.lo = pts[idx[b]];
    node.hi = pts[idx[b]];
    for (int i = b + 1; i < e; ++i) {
      node.lo = node.lo.cwiseMin(pts[idx[i]]);
      node.hi = node.hi.cwiseMax(pts[idx[i]]);
    }
    node.rep = idx[b];
    node.radius = 0.5 * (node.hi - node.lo).norm();
    const int self = static_cast<int>(nodes.size());
    nodes.push_back(node);
    if (e - b > 1) {
      int dim = 0;
      (node.hi - node.lo).maxCoeff(&dim);
      const double mid = 0.5 * (node.lo[dim] + node.hi[dim]);
      int* split = std::partition(idx.data() + b, idx.data() + e,
                                  [&](int i) { return pts[i][dim] <= mid; });
      const int m = static_cast<int>(split - idx.data());
      const int l = build(b, m);
      const int r = build(m, e);
      nodes[self].left = l;
      nodes[self].right = r;
    }
    return self;
  }

  Point center(int u) const { return 0.5 * (nodes[u].lo + nodes[u].hi); }

  void wspd(int u, int v, double separation, std::vector<double>* out) const {
    const double ru = nodes[u].radius, rv = nodes[v].radius;
    const double gap = (center(u) - center(v)).norm() - ru - rv;
    if (gap >= separation * std::max(ru, rv)) {
      out->push_back((pts[nodes[u].rep] - pts[nodes[v].rep]).norm());
      return;
    }
    if (ru < rv) std::swap(u, v);
    wspd(nodes[u].left, v, separation, out);
    wspd(nodes[u].right, v, separation, out);
  }

  void all_pairs(int u, double separation, std::vector<double>* out) const {
    if (nodes[u].left < 0) return;
    all_pairs(nodes[u].left, separation, out);
    all_pairs(nodes[u].right, separation, out);
    wspd(nodes[u].left, nodes[u].right, separation, out);
  }
};

}  // namespace

CandidateSet approx_distances(const std::vector<Point>& points) {
  if (points.size() < 2) {
    throw GeometryError("approx_distances: need at least two points");
  }
  std::vector<Point> distinct = points;
  std::sort(distinct.begin(), distinct.end(),
            [](const Point& a, const Point& b) {
              return std::lexicographical_compare(a.data(), a.data() + a.size(),
                                                  b.data(), b.data() + b.size());
            });
  distinct.erase(std::unique(distinct.begin(), distinct.end(),
                             [](const Point& a, const Point& b) {
                               return a == b;
                             }),
                 distinct.end());
  CandidateSet z;
  if (distinct.size() < 2) return z;
  SplitTree tree(distinct);
  std::vector<double> reps;
  tree.all_pairs(0, 8.0, &reps);
  z.values.reserve(3 * reps.size());
  for (double rho : reps) {
    z.values.push_back(2.0 * rho / 3.0);
    z.values.push_back(rho);
    z.values.push_back(1.5 * rho);
  }
  std::sort(z.values.begin(), z.values.end());
  z.values.erase(std::unique(z.values.begin(), z.values.end()),
                 z.values.end());
  return z;
}

AtomicIntervalResult approx_binary_search(const CandidateSet& z, double eps,
                                          const std::vector<Curve>& curves) {
  if (z.values.empty()) {
    throw GeometryError("approx_binary_search: empty candidate set");
  }
  AtomicIntervalResult out;
  int lo = -1;                                  // decider said above
  int hi = static_cast<int>(z.values.size());  // decider said below
  while (hi - lo > 1) {
    const int mid = lo + (hi - lo) / 2;
    DeciderOutcome d = decider(z.values[mid], eps, curves);
    out.explored += d.explored;
    if (d.tag == DeciderTag::approx) {
      out.approx = true;
      out.value = d.value;
      out.path = std::move(d.path);
      out.has_path = d.has_path;
      return out;
    }
    if (d.tag == DeciderTag::above) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  out.lo = lo < 0 ? 0.0 : z.values[lo];
  out.hi = hi == static_cast<int>(z.values.size())
               ? std::numeric_limits<double>::infinity()
               : z.values[hi];
  return out;
}

SearchIntervalResult search_interval(double lo, double hi, double eps,
                                     const std::vector<Curve>& curves) {
  SearchIntervalResult out;
  if (hi <= 0.0 || lo > hi) return out;
  lo = std::max(lo, std::numeric_limits<double>::min());

  auto take = [&out](DeciderOutcome&& d, double value) {
    out.found = true;
    out.value = d.tag == DeciderTag::approx ? d.value : value;
    out.path = std::move(d.path);
    out.has_path = d.has_path;
  };

  DeciderOutcome top = decider(hi, eps, curves);
  out.explored += top.explored;
  if (top.tag == DeciderTag::approx) {
    take(std::move(top), 0.0);
    return out;
  }
  if (top.tag == DeciderTag::above) return out;  // optimum beyond hi

  DeciderOutcome bot = decider(lo, eps, curves);
  out.explored += bot.explored;
  if (bot.tag == DeciderTag::approx) {
    take(std::move(bot), 0.0);
    return out;
  }
  if (bot.tag == DeciderTag::below) {
    // Optimum is at most lo; only the exact boundary still counts as
    // inside, so probe just under lo to tell the two apart.
    DeciderOutcome probe = decider(lo * (1.0 - eps / 4.0), eps, curves);
    out.explored += probe.explored;
    if (probe.tag == DeciderTag::approx) {
      take(std::move(probe), 0.0);
    } else if (probe.tag == DeciderTag::above) {
      take(std::move(bot), lo);
    }
    return out;
  }

  // above at lo, below at hi: binary search on the geometric grid.
  const double ratio = 1.0 + eps / 4.0;
  const int steps = std::max(
      1, static_cast<int>(std::ceil(std::log(hi / lo) / std::log(ratio))));
  auto grid = [&](int i) {
    return i >= steps ? hi : std::min(hi, lo * std::pow(ratio, i));
  };
  int a = 0;
  int b = steps;
  DeciderOutcome accept = std::move(top);
  while (b - a > 1) {
    const int mid = a + (b - a) / 2;
    DeciderOutcome d = decider(grid(mid), eps, curves);
    out.explored += d.explored;
    if (d.tag == DeciderTag::approx) {
      take(std::move(d), 0.0);
      return out;
    }
    if (d.tag == DeciderTag::above) {
      a = mid;
    } else {
      b = mid;
      accept = std::move(d);
    }
  }
  // Optimum in (grid(a), grid(b)] with grid(b) <= (1+eps/4) grid(a).
  take(std::move(accept), grid(b));
  return out;
}

SolverResult cpacked_solver(double lo, double hi,
                            const std::vector<Curve>& curves) {
  if (hi <= 0.0) {
    throw GeometryError("cpacked_solver: interval must be positive");
  }
  (void)lo;  // the guarantee, not the computation, depends on lo
  Instance inst(curves, hi);
  auto expand = [&inst](const CellId& id) {
    std::vector<std::pair<CellId, double>> nb;
    for (CellId n : inst.graph->neighbors(id)) {
      const double w = inst.graph->elevation(n);
      nb.emplace_back(std::move(n), w);
    }
    return nb;
  };
  LazySearchStats stats;
  std::vector<CellId> ids;
  auto res = lazy_bottleneck_impl<CellId, CellIdHash>(expand, inst.s, inst.t,
                                                      &ids, &stats);
  if (res.value == std::numeric_limits<double>::infinity()) {
    throw GeometryError("cpacked_solver: end cell unreachable");
  }
  SolverResult out;
  out.path = inst.assemble(ids);
  out.value = out.path.value;
  out.explored = stats.popped;
  return out;
}

ApproxMeanResult aprx_mean(double eps, const std::vector<Curve>& curves,
                           int resolution) {
  if (eps <= 0.0 || eps > 1.0) {
    throw GeometryError("aprx_mean: need 0 < eps <= 1");
  }
  if (curves.size() < 2) {
    throw GeometryError("aprx_mean: need at least two curves");
  }
  bool identical = true;
  for (size_t i = 1; identical && i < curves.size(); ++i) {
    identical = curves[i].vertices() == curves[0].vertices();
  }
  if (identical) {
    return {0.0, curves[0], 0};
  }

  std::vector<Point> pts;
  for (const Curve& c : curves) {
    pts.insert(pts.end(), c.vertices().begin(), c.vertices().end());
  }
  CandidateSet z = approx_distances(pts);
  if (z.values.empty()) {
    // All vertices coincide yet the curves differ: optimum is zero.
    return {0.0, Curve({pts.front()}, "mean"), 0};
  }

  std::size_t explored = 0;
  auto finish = [&](double value, const ProductPath& path) {
    return ApproxMeanResult{value, mean_from_path(path, resolution),
                            explored};
  };

  AtomicIntervalResult bs = approx_binary_search(z, eps, curves);
  explored += bs.explored;
  if (bs.approx) return finish(bs.value, bs.path);
  const double alpha = bs.lo;
  const double beta = bs.hi;
  if (!std::isfinite(beta)) {
    throw GeometryError("aprx_mean: optimum above every candidate value");
  }

  if (alpha > 0.0) {
    SearchIntervalResult r = search_interval(alpha, 8.0 * alpha, eps, curves);
    explored += r.explored;
    if (r.found) return finish(r.value, r.path);
  }
  {
    SearchIntervalResult r = search_interval(beta / 2.0, beta, eps, curves);
    explored += r.explored;
    if (r.found) return finish(r.value, r.path);
  }
  if (beta / 2.0 <= 2.0 * alpha) {
    // Narrow atomic interval: the boundary searches should have caught the
    // optimum; sweep the whole interval as a fallback.
    SearchIntervalResult r = search_interval(alpha, beta, eps, curves);
    explored += r.explored;
    if (r.found) return finish(r.value, r.path);
    throw GeometryError("aprx_mean: interval searches missed the optimum");
  }

  SolverResult sol = cpacked_solver(2.0 * alpha, beta / 2.0, curves);
  explored += sol.explored;
  const double delta = sol.value;
  if (delta > 0.0) {
    SearchIntervalResult r =
        search_interval(delta / 2.0, 1.5 * delta, eps, curves);
    explored += r.explored;
    if (r.found) return finish(r.value, r.path);
  }
  SearchIntervalResult r = search_interval(alpha, beta, eps, curves);
  explored += r.explored;
  if (r.found) return finish(r.value, r.path);
  throw GeometryError("aprx_mean: interval searches missed the optimum");
}

}  // namespace frechet
