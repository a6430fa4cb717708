#ifndef FRECHET_DAGFRECHET_HPP
#define FRECHET_DAGFRECHET_HPP

#include <cstdint>
#include <optional>

#include "frechet/cellgraph.hpp"
#include "frechet/complex.hpp"

namespace frechet {

struct DagDecision {
  bool reachable = false;
  bool has_witness = false;
  ProductPath witness;
};

// Decides whether directed paths s1->t1 in c1 and s2->t2 in c2 exist whose
// monotone Frechet distance is at most delta.  Product cells are visited in
// topological order; each 1-cell keeps only its earliest reachable
// parameter, which suffices by convexity of the free space per cell.
DagDecision dag_decide(const DagComplex& c1, const DagComplex& c2, int s1,
                       int t1, int s2, int t2, double delta,
                       bool want_witness = false);

enum class CriticalKind { vertex_vertex, vertex_edge, monotonicity };

struct CriticalValue {
  double radius = 0.0;
  CriticalKind kind = CriticalKind::vertex_vertex;
  // vertex_vertex: u in c1, w in c2, edge fields unused (-1).
  // vertex_edge: edge `edge` of complex `edge_complex`, vertex u of the
  // other complex, w unused.
  // monotonicity: edge of `edge_complex`, vertex pair u < w of the other.
  int edge_complex = -1;
  int edge = -1;
  int u = -1;
  int w = -1;

  friend bool operator<(const CriticalValue& a, const CriticalValue& b) {
    auto key = [](const CriticalValue& c) {
      return std::tuple(c.radius, static_cast<int>(c.kind), c.edge_complex,
                        c.edge, c.u, c.w);
    };
    return key(a) < key(b);
  }
  friend bool operator==(const CriticalValue& a, const CriticalValue& b) {
    return !(a < b) && !(b < a);
  }
};

// All vertex-vertex and vertex-edge radii (both directions) in [a, b].
std::vector<CriticalValue> enumerate_vv_ve(const DagComplex& c1,
                                           const DagComplex& c2, double a,
                                           double b);

// Smallest delta at which the spheres around u and w meet at a common point
// of segment ea->eb: the bisector of u, w intersected with the segment.
// Empty when the intersection misses the segment or no finite swap exists.
std::optional<double> monotonicity_radius(const Point& ea, const Point& eb,
                                          const Point& u, const Point& w,
                                          double* t_out = nullptr);

// All critical values with radius in [a, b]: the explicit vv/ve radii plus
// monotonicity events found by a growing-sphere sweep along each edge.
std::vector<CriticalValue> extract(const DagComplex& c1, const DagComplex& c2,
                                   double a, double b);

// i.i.d. uniform samples over the multiset of critical events, the event
// type weighted by its count; deterministic for a fixed seed.
std::vector<double> sample_critical(const DagComplex& c1, const DagComplex& c2,
                                    int count, std::uint64_t seed);

struct CompFrResult {
  double value = 0.0;
  ProductPath path;
};

// Exact optimum: sample 4n^2 critical values, binary search with the
// decider for an atomic interval, extract every critical value inside it,
// and binary search those for the smallest accepting one.
CompFrResult comp_fr(const DagComplex& c1, const DagComplex& c2, int s1,
                     int t1, int s2, int t2, std::uint64_t seed,
                     int sample_override = 0);

}  // namespace frechet

#endif
