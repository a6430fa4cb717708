#ifndef FRECHET_SOLVER_HPP
#define FRECHET_SOLVER_HPP

#include "frechet/bottleneck.hpp"
#include "frechet/cellgraph.hpp"
#include "frechet/cost.hpp"

namespace frechet {

enum class SolveMode { lazy, explicit_graph };

// Lowest path between two product vertices of the cell graph under the given
// cost.  starts/ends are point indices (must be 0-simplices); value is the
// minimum over all cell walks of the maximum vertex elevation.
ProductPath k_complex_paths(const std::vector<const SimplicialComplex*>& complexes,
                            const std::vector<int>& starts,
                            const std::vector<int>& ends,
                            const CostFunction& cost,
                            SolveMode mode = SolveMode::lazy,
                            LazySearchStats* stats = nullptr);

// Two complexes under the distance cost: the weak Frechet optimum over all
// path pairs with matching endpoints.
ProductPath weak_frechet_paths(const SimplicialComplex& c1,
                               const SimplicialComplex& c2, int s1, int t1,
                               int s2, int t2,
                               SolveMode mode = SolveMode::lazy);

double weak_frechet_curves(const Curve& a, const Curve& b,
                           SolveMode mode = SolveMode::lazy);

struct MeanCurveResult {
  double value = 0.0;
  Curve mean;
  ProductPath path;
};

// Minimizes, over all curves sigma, the largest weak Frechet distance to the
// inputs; the optimum equals the lowest-path value under the enclosing-ball
// radius cost, and the mean is the curve of ball centers along that path,
// sampled at `resolution` points per path edge.
MeanCurveResult mean_curve(const std::vector<Curve>& curves,
                           int resolution = 16,
                           SolveMode mode = SolveMode::lazy);

// Curve of smallest-enclosing-ball centers along a product path, sampled at
// `resolution` points per path edge (witness configurations interpolated
// linearly between consecutive path vertices).
Curve mean_from_path(const ProductPath& path, int resolution);

// Handler-and-dogs motion: minimize the longest leash max_i |p_h - p_i|
// over non-monotone traversals.
ProductPath walk_dogs(const std::vector<const SimplicialComplex*>& complexes,
                      const std::vector<int>& starts,
                      const std::vector<int>& ends, int handler = 0,
                      SolveMode mode = SolveMode::lazy);

// Planar k-point motion minimizing the maximum convex-hull perimeter.
ProductPath min_perimeter_motion(
    const std::vector<const SimplicialComplex*>& complexes,
    const std::vector<int>& starts, const std::vector<int>& ends,
    SolveMode mode = SolveMode::lazy);

}  // namespace frechet

#endif
