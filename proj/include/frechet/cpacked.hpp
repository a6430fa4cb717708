#ifndef FRECHET_CPACKED_HPP
#define FRECHET_CPACKED_HPP

#include "frechet/bottleneck.hpp"
#include "frechet/cellgraph.hpp"
#include "frechet/complex.hpp"

namespace frechet {

// Greedy scan simplification: mark the first vertex, repeatedly mark the
// first vertex at distance >= mu from the current mark, always mark the
// final vertex.  Consecutive marks are >= mu apart except possibly the
// last pair.
struct SimplifiedCurve {
  double mu = 0.0;
  std::vector<int> marked;  // indices into the original vertex list
  Curve simplified;
};

SimplifiedCurve simplify(const Curve& curve, double mu);

enum class DeciderTag { approx, below, above };

// below certifies optimum <= delta, above certifies optimum > delta,
// approx certifies value in [optimum, (1+eps) optimum].
struct DeciderOutcome {
  DeciderTag tag = DeciderTag::below;
  double value = 0.0;  // meaningful for approx only
  std::size_t explored = 0;
  bool has_path = false;
  ProductPath path;  // motion on the simplified curves, when one was found
};

// Breadth-first decision for the mean-curve objective on the simplified
// curves, expanding only cells below the elevation threshold.
DeciderOutcome decider(double delta, double eps,
                       const std::vector<Curve>& curves);

// Sorted positive candidate values approximating every pairwise distance:
// for each pairwise distance y there are x <= y <= x' <= 2x in the set.
struct CandidateSet {
  std::vector<double> values;
};

CandidateSet approx_distances(const std::vector<Point>& points);

struct AtomicIntervalResult {
  bool approx = false;
  double value = 0.0;        // when approx
  double lo = 0.0, hi = 0.0; // atomic interval otherwise
  ProductPath path;
  bool has_path = false;
  std::size_t explored = 0;
};

// Binary search over the candidate set for the atomic interval holding the
// optimum; may short-circuit with an approx outcome of the decider.
AtomicIntervalResult approx_binary_search(const CandidateSet& z, double eps,
                                          const std::vector<Curve>& curves);

struct SearchIntervalResult {
  bool found = false;
  double value = 0.0;
  ProductPath path;
  bool has_path = false;
  std::size_t explored = 0;
};

// Geometric-grid binary search on [lo, hi]: a (1+eps)-approximation when the
// optimum lies in the interval, found=false otherwise.
SearchIntervalResult search_interval(double lo, double hi, double eps,
                                     const std::vector<Curve>& curves);

struct SolverResult {
  double value = 0.0;
  ProductPath path;
  std::size_t explored = 0;
};

// Lazy minimax search on the hi-simplified curves.  When [lo, hi] lies in an
// atomic interval of the true pairwise distances that contains the optimum,
// the result is within 2*lo of it.
SolverResult cpacked_solver(double lo, double hi,
                            const std::vector<Curve>& curves);

struct ApproxMeanResult {
  double value = 0.0;
  Curve mean;
  std::size_t explored = 0;  // total cells expanded by all decider calls
};

// The full (1+eps)-approximation driver for the mean-curve objective.
ApproxMeanResult aprx_mean(double eps, const std::vector<Curve>& curves,
                           int resolution = 16);

}  // namespace frechet

#endif
