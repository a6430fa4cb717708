#ifndef FRECHET_GEOMETRY_HPP
#define FRECHET_GEOMETRY_HPP

#include <Eigen/Dense>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace frechet {

using Point = Eigen::VectorXd;

// Relative tolerance used for distance comparisons.
inline constexpr double kRelTol = 1e-9;
// Relative tolerance for iterative per-cell minimizations.
inline constexpr double kOptTol = 1e-7;
// Threshold on the singular-value ratio below which a vertex set is
// considered affinely dependent.
inline constexpr double kAffineRankTol = 1e-10;
// Iteration cap for iterative minimizers.
inline constexpr int kMinimizerIterationCap = 10000;

struct GeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double distance(const Point& p, const Point& q);

// An m-simplex embedded in R^d, stored as a d x (m+1) vertex matrix.
// Construction rejects affinely dependent vertex sets.
class SimplexGeometry {
 public:
  explicit SimplexGeometry(Eigen::MatrixXd vertices);
  static SimplexGeometry point(const Point& p);
  static SimplexGeometry segment(const Point& a, const Point& b);

  int dim() const { return static_cast<int>(vertices_.cols()) - 1; }
  int ambient_dim() const { return static_cast<int>(vertices_.rows()); }
  const Eigen::MatrixXd& vertices() const { return vertices_; }
  Point vertex(int i) const { return vertices_.col(i); }

  // Realized point for barycentric coordinates (length dim()+1, sum 1).
  Point at(const Eigen::VectorXd& bary) const { return vertices_ * bary; }

  // Closest point of the realization to x, with barycentric witness.
  Point project(const Point& x, Eigen::VectorXd* bary = nullptr) const;
  double distance_to(const Point& x) const;

  // True if bary is (numerically) inside the simplex.
  bool contains_bary(const Eigen::VectorXd& bary, double tol = 1e-9) const;

 private:
  Eigen::MatrixXd vertices_;
};

struct Ball {
  Point center;
  double radius = 0.0;
};

// Smallest enclosing ball of a nonempty point set (exact, Welzl-style).
Ball min_enclosing_ball(const std::vector<Point>& points);

struct SimplexDistanceResult {
  double value = 0.0;
  Point witness_a;
  Point witness_b;
  Eigen::VectorXd bary_a;
  Eigen::VectorXd bary_b;
};

// min ||a - b|| over a in conv(A), b in conv(B).
SimplexDistanceResult simplex_distance(const SimplexGeometry& a,
                                       const SimplexGeometry& b);

// A product-of-simplices cell, one factor per input complex.
struct Cell {
  std::vector<SimplexGeometry> simplices;

  int factors() const { return static_cast<int>(simplices.size()); }
  // Diameter of the joint bounding box, used to scale tolerances.
  double bounding_box_diameter() const;
};

struct CellMinimum {
  double value = 0.0;
  std::vector<Point> witness;
  bool converged = true;
};

// A cost functional over configurations (one point per factor), convex on
// every product-of-simplices cell.
class CostFunction {
 public:
  virtual ~CostFunction() = default;
  virtual std::string_view name() const = 0;
  virtual double value(const std::vector<Point>& config) const = 0;

  // Minimum of the cost over the realized cell.  The default runs the
  // generic barycentric coordinate-descent minimizer; costs with structure
  // override it.
  virtual CellMinimum minimize(const Cell& cell) const;

  // Throws on non-convergence, carrying the best value found.
  CellMinimum minimize_checked(const Cell& cell) const;
};

struct MinimizerError : GeometryError {
  MinimizerError(const std::string& what, double best)
      : GeometryError(what), best_value(best) {}
  double best_value;
};

// Golden-section search for a convex function on [lo, hi].
double golden_section(const std::function<double(double)>& f, double lo,
                      double hi, double tol, double* argmin = nullptr);

// Nested golden-section minimization of a convex function over a box.
double minimize_convex_box(const std::function<double(const Eigen::VectorXd&)>& f,
                           const Eigen::VectorXd& lo, const Eigen::VectorXd& hi,
                           double tol, Eigen::VectorXd* argmin = nullptr);

// Generic convex minimization over a cell: cyclic golden-section descent on
// the free barycentric coordinates of every factor.
CellMinimum minimize_cost_over_cell(const CostFunction& cost, const Cell& cell);

// Perimeter of the 2-D convex hull of a planar point set (monotone chain).
double convex_hull_perimeter(const std::vector<Point>& points);

}  // namespace frechet

#endif
