#include "frechet/solver.hpp"

#include <algorithm>
#include <cmath>

namespace frechet {

namespace {

CellId endpoint_cell(const std::vector<const SimplicialComplex*>& complexes,
                     const std::vector<int>& point_ids, const char* which) {
  CellId id;
  id.simplex.resize(complexes.size());
  for (size_t i = 0; i < complexes.size(); ++i) {
    const int sid = complexes[i]->vertex_simplex(point_ids[i]);
    if (sid < 0) {
      throw GeometryError(std::string(which) +
                          " endpoint is not a vertex of its complex");
    }
    id.simplex[i] = sid;
  }
  return id;
}

ProductPath assemble(CellGraph& graph, const std::vector<CellId>& ids) {
  ProductPath out;
  double worst = 0.0;
  for (const auto& id : ids) {
    const CellGraphVertex& v = graph.vertex(id);
    worst = std::max(worst, v.elevation);
    out.vertices.push_back(v);
  }
  out.value = worst;
  return out;
}

}  // namespace

ProductPath k_complex_paths(const std::vector<const SimplicialComplex*>& complexes,
                            const std::vector<int>& starts,
                            const std::vector<int>& ends,
                            const CostFunction& cost, SolveMode mode,
                            LazySearchStats* stats) {
  const int k = static_cast<int>(complexes.size());
  if (k < 2) {
    throw GeometryError("k_complex_paths: needs at least two complexes");
  }
  if (static_cast<int>(starts.size()) != k ||
      static_cast<int>(ends.size()) != k) {
    throw GeometryError("k_complex_paths: one endpoint per complex required");
  }
  CellGraph graph(complexes, &cost);
  const CellId s = endpoint_cell(complexes, starts, "start");
  const CellId t = endpoint_cell(complexes, ends, "end");

  std::vector<CellId> path_ids;
  if (mode == SolveMode::lazy) {
    auto expand = [&graph](const CellId& id) {
      std::vector<std::pair<CellId, double>> out;
      for (CellId nb : graph.neighbors(id)) {
        double w = graph.elevation(nb);
        out.emplace_back(std::move(nb), w);
      }
      return out;
    };
    auto res = lazy_bottleneck_impl<CellId, CellIdHash>(expand, s, t,
                                                        &path_ids, stats);
    if (res.value == std::numeric_limits<double>::infinity()) {
      throw GeometryError("k_complex_paths: no path between the endpoints");
    }
  } else {
    const std::vector<CellId> cells = graph.all_cells();
    std::unordered_map<CellId, int, CellIdHash> index;
    for (int i = 0; i < static_cast<int>(cells.size()); ++i) {
      index.emplace(cells[i], i);
    }
    WeightedGraph wg;
    wg.n = static_cast<int>(cells.size());
    for (int i = 0; i < wg.n; ++i) {
      for (const CellId& nb : graph.neighbors(cells[i])) {
        const int j = index.at(nb);
        if (i < j) {
          wg.edges.push_back(
              {i, j, std::max(graph.elevation(cells[i]), graph.elevation(nb))});
        }
      }
    }
    auto res = bottleneck_path(wg, index.at(s), index.at(t));
    if (res.value == std::numeric_limits<double>::infinity()) {
      throw GeometryError("k_complex_paths: no path between the endpoints");
    }
    for (int v : res.path) path_ids.push_back(cells[v]);
  }
  return assemble(graph, path_ids);
}

ProductPath weak_frechet_paths(const SimplicialComplex& c1,
                               const SimplicialComplex& c2, int s1, int t1,
                               int s2, int t2, SolveMode mode) {
  PairwiseDistanceCost cost;
  return k_complex_paths({&c1, &c2}, {s1, s2}, {t1, t2}, cost, mode);
}

double weak_frechet_curves(const Curve& a, const Curve& b, SolveMode mode) {
  return weak_frechet_paths(a.complex(), b.complex(), a.start_point(),
                            a.end_point(), b.start_point(), b.end_point(),
                            mode)
      .value;
}

MeanCurveResult mean_curve(const std::vector<Curve>& curves, int resolution,
                           SolveMode mode) {
  const int k = static_cast<int>(curves.size());
  if (k < 2) {
    throw GeometryError("mean_curve: needs at least two curves");
  }
  if (resolution < 1) {
    throw GeometryError("mean_curve: resolution must be positive");
  }
  std::vector<const SimplicialComplex*> complexes;
  std::vector<int> starts, ends;
  for (const Curve& c : curves) {
    complexes.push_back(&c.complex());
    starts.push_back(c.start_point());
    ends.push_back(c.end_point());
  }
  MebRadiusCost cost;
  ProductPath path = k_complex_paths(complexes, starts, ends, cost, mode);
  MeanCurveResult out{path.value, mean_from_path(path, resolution),
                      std::move(path)};
  return out;
}

Curve mean_from_path(const ProductPath& path, int resolution) {
  if (path.vertices.empty()) {
    throw GeometryError("mean_from_path: empty path");
  }
  // Ball centers along the motion, with linear interpolation between the
  // witness configurations of consecutive path vertices.  Convexity of the
  // radius on the enclosing cell keeps the sampled radii below the value.
  const int k = static_cast<int>(path.vertices.front().witness.size());
  std::vector<Point> centers;
  auto center_of = [](const std::vector<Point>& config) {
    return min_enclosing_ball(config).center;
  };
  const int m = static_cast<int>(path.vertices.size());
  for (int i = 0; i < m; ++i) {
    if (i > 0) {
      const auto& prev = path.vertices[i - 1].witness;
      const auto& next = path.vertices[i].witness;
      for (int s = 1; s < resolution; ++s) {
        const double t = static_cast<double>(s) / resolution;
        std::vector<Point> config(k);
        for (int j = 0; j < k; ++j) {
          config[j] = (1.0 - t) * prev[j] + t * next[j];
        }
        centers.push_back(center_of(config));
      }
    }
    centers.push_back(center_of(path.vertices[i].witness));
  }
  return Curve(std::move(centers), "mean");
}

ProductPath walk_dogs(const std::vector<const SimplicialComplex*>& complexes,
                      const std::vector<int>& starts,
                      const std::vector<int>& ends, int handler,
                      SolveMode mode) {
  if (handler < 0 || handler >= static_cast<int>(complexes.size())) {
    throw GeometryError("walk_dogs: handler index out of range");
  }
  StarMaxCost cost(handler);
  return k_complex_paths(complexes, starts, ends, cost, mode);
}

ProductPath min_perimeter_motion(
    const std::vector<const SimplicialComplex*>& complexes,
    const std::vector<int>& starts, const std::vector<int>& ends,
    SolveMode mode) {
  if (complexes.size() < 3) {
    throw GeometryError("min_perimeter_motion: needs at least three complexes");
  }
  for (const auto* c : complexes) {
    if (c->ambient_dim() != 2) {
      throw GeometryError("min_perimeter_motion: planar inputs only");
    }
  }
  HullPerimeterCost cost;
  return k_complex_paths(complexes, starts, ends, cost, mode);
}

}  // namespace frechet
