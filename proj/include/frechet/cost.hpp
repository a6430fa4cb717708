#ifndef FRECHET_COST_HPP
#define FRECHET_COST_HPP

#include <memory>
#include <tuple>
#include <vector>

#include "frechet/geometry.hpp"

namespace frechet {

// f(p1, p2) = ||p1 - p2||.  Per-cell minimum via closed-form simplex
// distance, so weak-Frechet elevations are exact.
class PairwiseDistanceCost : public CostFunction {
 public:
  std::string_view name() const override { return "pairwise-distance"; }
  double value(const std::vector<Point>& config) const override;
  CellMinimum minimize(const Cell& cell) const override;
};

// f = max_i ||p_h - p_i||: the longest leash when p_h walks the dogs.
class StarMaxCost : public CostFunction {
 public:
  explicit StarMaxCost(int handler = 0) : handler_(handler) {}
  std::string_view name() const override { return "star-max"; }
  double value(const std::vector<Point>& config) const override;
  CellMinimum minimize(const Cell& cell) const override;
  int handler() const { return handler_; }

 private:
  int handler_;
};

// f = radius of the minimum enclosing ball of the configuration.
class MebRadiusCost : public CostFunction {
 public:
  std::string_view name() const override { return "meb-radius"; }
  double value(const std::vector<Point>& config) const override;
  CellMinimum minimize(const Cell& cell) const override;
};

// f = sum of w_e * ||p_i - p_j|| over the edges of a dependency graph.
// Zero-weight edges drop out at construction.
class WeightedSumCost : public CostFunction {
 public:
  using Edge = std::tuple<int, int, double>;
  explicit WeightedSumCost(std::vector<Edge> edges);
  std::string_view name() const override { return "weighted-sum"; }
  double value(const std::vector<Point>& config) const override;
  const std::vector<Edge>& dependency_edges() const { return edges_; }

 private:
  std::vector<Edge> edges_;
};

// f = perimeter of the planar convex hull of the configuration.
class HullPerimeterCost : public CostFunction {
 public:
  std::string_view name() const override { return "hull-perimeter"; }
  double value(const std::vector<Point>& config) const override;
};

// Complete star dependency graph with unit weights on all pairs touching
// the handler; convenience for the weighted-sum applications.
WeightedSumCost make_uniform_star_cost(int k, int handler);

}  // namespace frechet

#endif
