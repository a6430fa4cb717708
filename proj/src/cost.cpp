#include "frechet/cost.hpp"

#include <algorithm>
#include <cmath>

namespace frechet {

namespace {

// min over x in the cell's bounding box of max_i dist(x, simplex_i).
// Used by the costs whose per-cell minimum reduces to placing one point
// against k convex sets; convex in x, so nested golden section applies.
CellMinimum minimize_maxdist_to_factors(const Cell& cell,
                                        const std::vector<int>& factor_ids,
                                        bool halve) {
  const int d = cell.simplices.front().ambient_dim();
  Eigen::VectorXd lo = Eigen::VectorXd::Constant(d, 1e300);
  Eigen::VectorXd hi = Eigen::VectorXd::Constant(d, -1e300);
  for (int i : factor_ids) {
    lo = lo.cwiseMin(cell.simplices[i].vertices().rowwise().minCoeff());
    hi = hi.cwiseMax(cell.simplices[i].vertices().rowwise().maxCoeff());
  }
  const double scale = std::max((hi - lo).norm(), 1e-12);
  auto f = [&](const Eigen::VectorXd& x) {
    double worst = 0.0;
    for (int i : factor_ids) {
      worst = std::max(worst, cell.simplices[i].distance_to(x));
    }
    return worst;
  };
  Eigen::VectorXd center;
  minimize_convex_box(f, lo, hi, 1e-9 * scale, &center);
  CellMinimum out;
  out.value = f(center);
  if (halve) out.value *= 0.5;
  out.witness.resize(cell.simplices.size());
  for (size_t i = 0; i < cell.simplices.size(); ++i) {
    out.witness[i] = cell.simplices[i].project(center);
  }
  return out;
}

}  // namespace

double PairwiseDistanceCost::value(const std::vector<Point>& config) const {
  if (config.size() != 2) {
    throw GeometryError("pairwise-distance: needs exactly two factors");
  }
  return distance(config[0], config[1]);
}

CellMinimum PairwiseDistanceCost::minimize(const Cell& cell) const {
  if (cell.factors() != 2) {
    throw GeometryError("pairwise-distance: needs exactly two factors");
  }
  auto r = simplex_distance(cell.simplices[0], cell.simplices[1]);
  CellMinimum out;
  out.value = r.value;
  out.witness = {r.witness_a, r.witness_b};
  return out;
}

double StarMaxCost::value(const std::vector<Point>& config) const {
  double worst = 0.0;
  for (size_t i = 0; i < config.size(); ++i) {
    if (static_cast<int>(i) == handler_) continue;
    worst = std::max(worst, distance(config[handler_], config[i]));
  }
  return worst;
}

CellMinimum StarMaxCost::minimize(const Cell& cell) const {
  const auto& hs = cell.simplices[handler_];
  std::vector<int> others;
  for (int i = 0; i < cell.factors(); ++i) {
    if (i != handler_) others.push_back(i);
  }
  auto at_handler = [&](const Point& p) {
    double worst = 0.0;
    for (int i : others) {
      worst = std::max(worst, cell.simplices[i].distance_to(p));
    }
    return worst;
  };
  Point hp;
  if (hs.dim() == 0) {
    hp = hs.vertex(0);
  } else if (hs.dim() == 1) {
    const Point a = hs.vertex(0), dir = hs.vertex(1) - hs.vertex(0);
    double best;
    golden_section([&](double t) { return at_handler(a + t * dir); }, 0.0,
                   1.0, 1e-10, &best);
    hp = a + best * dir;
  } else {
    // Handler on a higher simplex: fall back to the generic minimizer.
    return minimize_cost_over_cell(*this, cell);
  }
  CellMinimum out;
  out.value = at_handler(hp);
  out.witness.resize(cell.factors());
  out.witness[handler_] = hp;
  for (int i : others) out.witness[i] = cell.simplices[i].project(hp);
  return out;
}

double MebRadiusCost::value(const std::vector<Point>& config) const {
  return min_enclosing_ball(config).radius;
}

CellMinimum MebRadiusCost::minimize(const Cell& cell) const {
  const int k = cell.factors();
  if (k == 2) {
    // Two-point enclosing ball: half the simplex distance, exactly.
    auto r = simplex_distance(cell.simplices[0], cell.simplices[1]);
    CellMinimum out;
    out.value = 0.5 * r.value;
    out.witness = {r.witness_a, r.witness_b};
    return out;
  }
  bool frozen = true;
  for (const auto& s : cell.simplices) frozen &= s.dim() == 0;
  if (frozen) {
    std::vector<Point> pts;
    for (const auto& s : cell.simplices) pts.push_back(s.vertex(0));
    CellMinimum out;
    out.value = min_enclosing_ball(pts).radius;
    out.witness = pts;
    return out;
  }
  std::vector<int> ids(k);
  for (int i = 0; i < k; ++i) ids[i] = i;
  return minimize_maxdist_to_factors(cell, ids, /*halve=*/false);
}

WeightedSumCost::WeightedSumCost(std::vector<Edge> edges) {
  for (auto& [i, j, w] : edges) {
    if (w < 0.0) {
      throw GeometryError("weighted-sum: negative weight");
    }
    if (w > 0.0) edges_.emplace_back(i, j, w);
  }
}

double WeightedSumCost::value(const std::vector<Point>& config) const {
  double sum = 0.0;
  for (const auto& [i, j, w] : edges_) {
    sum += w * distance(config[i], config[j]);
  }
  return sum;
}

double HullPerimeterCost::value(const std::vector<Point>& config) const {
  return convex_hull_perimeter(config);
}

WeightedSumCost make_uniform_star_cost(int k, int handler) {
  std::vector<WeightedSumCost::Edge> edges;
  for (int i = 0; i < k; ++i) {
    if (i != handler) edges.emplace_back(handler, i, 1.0);
  }
  return WeightedSumCost(std::move(edges));
}

}  // namespace frechet
