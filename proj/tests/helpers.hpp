#ifndef FRECHET_TESTS_HELPERS_HPP
#define FRECHET_TESTS_HELPERS_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <queue>
#include <tuple>
#include <random>
#include <set>
#include <vector>

#include "frechet/complex.hpp"
#include "frechet/geometry.hpp"

namespace frechet::testing {

inline Point make_point(std::initializer_list<double> coords) {
  Point p(static_cast<int>(coords.size()));
  int i = 0;
  for (double c : coords) p[i++] = c;
  return p;
}

inline Point random_point(std::mt19937_64& rng, int d, double scale = 1.0) {
  std::uniform_real_distribution<double> unit(0.0, scale);
  Point p(d);
  for (int i = 0; i < d; ++i) p[i] = unit(rng);
  return p;
}

// Random polyline with vertices in [0, scale]^d; consecutive duplicates are
// impossible almost surely.
inline Curve random_curve(std::mt19937_64& rng, int n, int d = 2,
                          double scale = 1.0) {
  std::vector<Point> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i) pts.push_back(random_point(rng, d, scale));
  return Curve(std::move(pts));
}

// True when a is a proper face of b (strict subset of its vertex tuple).
inline bool is_proper_face(const std::vector<int>& a,
                           const std::vector<int>& b) {
  return a.size() < b.size() &&
         std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// ---------------------------------------------------------------------------
// Weak-Frechet oracle: exhaustive search over product cells of two
// complexes.  Elevation per cell from the closed-form simplex distance,
// adjacency by brute-force face tests, value by threshold BFS over the
// sorted elevations.
inline double weak_frechet_oracle(const SimplicialComplex& c1,
                                  const SimplicialComplex& c2, int s1, int t1,
                                  int s2, int t2) {
  const int n1 = c1.size(), n2 = c2.size();
  std::vector<double> elev(n1 * n2);
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n2; ++j) {
      elev[i * n2 + j] =
          simplex_distance(c1.geometry(i), c2.geometry(j)).value;
    }
  }
  auto adjacent = [&](int a, int b) {
    const int ai = a / n2, aj = a % n2, bi = b / n2, bj = b % n2;
    if (ai == bi) {
      return is_proper_face(c2.simplex(aj), c2.simplex(bj)) ||
             is_proper_face(c2.simplex(bj), c2.simplex(aj));
    }
    if (aj == bj) {
      return is_proper_face(c1.simplex(ai), c1.simplex(bi)) ||
             is_proper_face(c1.simplex(bi), c1.simplex(ai));
    }
    return false;
  };
  const int start = c1.vertex_simplex(s1) * n2 + c2.vertex_simplex(s2);
  const int goal = c1.vertex_simplex(t1) * n2 + c2.vertex_simplex(t2);
  auto connected = [&](double thr) {
    if (elev[start] > thr || elev[goal] > thr) return false;
    std::vector<char> seen(n1 * n2, 0);
    std::queue<int> q;
    q.push(start);
    seen[start] = 1;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      if (u == goal) return true;
      for (int v = 0; v < n1 * n2; ++v) {
        if (!seen[v] && elev[v] <= thr && adjacent(u, v)) {
          seen[v] = 1;
          q.push(v);
        }
      }
    }
    return false;
  };
  std::vector<double> levels = elev;
  std::sort(levels.begin(), levels.end());
  int lo = 0, hi = static_cast<int>(levels.size()) - 1;
  if (!connected(levels[hi])) {
    return std::numeric_limits<double>::infinity();
  }
  while (lo < hi) {
    const int mid = (lo + hi) / 2;
    if (connected(levels[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return levels[lo];
}

// ---------------------------------------------------------------------------
// Classical free-space-diagram decision procedure for the monotone Frechet
// distance between polylines (reachability over per-cell intervals).
struct Interval {
  double lo = 1.0, hi = 0.0;
  bool empty() const { return lo > hi; }
};

inline Interval free_on_segment(const Point& p, const Point& a,
                                const Point& b, double delta) {
  const Point d = b - a;
  const Point w = a - p;
  const double A = d.squaredNorm();
  if (A == 0.0) {
    return w.norm() <= delta ? Interval{0.0, 1.0} : Interval{};
  }
  const double B = 2.0 * d.dot(w);
  const double C = w.squaredNorm() - delta * delta;
  double disc = B * B - 4.0 * A * C;
  // At an exact critical radius the discriminant is zero up to roundoff;
  // treat tiny negative values as tangency so the interval opens.
  const double slack = 1e-12 * std::max(B * B, std::abs(4.0 * A * C));
  if (disc < 0.0) {
    if (disc < -slack) return {};
    disc = 0.0;
  }
  const double sq = std::sqrt(disc);
  Interval out{(-B - sq) / (2 * A), (-B + sq) / (2 * A)};
  // Roots carry a sqrt(machine epsilon) error at tangencies; keep intervals
  // that touch the segment within that slack before clamping.
  if (out.lo > 1.0 + 1e-7 || out.hi < -1e-7) return {};
  out.lo = std::clamp(out.lo, 0.0, 1.0);
  out.hi = std::clamp(out.hi, 0.0, 1.0);
  return out;
}

inline bool frechet_decide_oracle(const std::vector<Point>& P,
                                  const std::vector<Point>& Q, double delta) {
  const int n = static_cast<int>(P.size()), m = static_cast<int>(Q.size());
  // Parameter slack: near a tangency the interval endpoints carry a
  // sqrt(machine epsilon) error, which costs only ~tol^2 in radius.
  const double tol = 1e-6;
  const double dtol = 1e-12 * std::max(delta, 1.0);
  if ((P[0] - Q[0]).norm() > delta + dtol) return false;
  if ((P[n - 1] - Q[m - 1]).norm() > delta + dtol) return false;
  if (n == 1 || m == 1) {
    const auto& pts = n == 1 ? Q : P;
    const auto& p = n == 1 ? P[0] : Q[0];
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
      const auto f = free_on_segment(p, pts[i], pts[i + 1], delta);
      if (f.empty() || f.lo > tol || f.hi < 1.0 - tol) return false;
    }
    return true;
  }
  // LR[i][j]: reachable part of the vertical edge at P-vertex i against
  // Q-segment j; BR[i][j]: reachable part of the horizontal edge at
  // Q-vertex j against P-segment i.
  std::vector<std::vector<Interval>> LR(n, std::vector<Interval>(m - 1)),
      BR(n - 1, std::vector<Interval>(m));
  for (int j = 0; j < m - 1; ++j) {
    const Interval f = free_on_segment(P[0], Q[j], Q[j + 1], delta);
    const bool open = j == 0 ? (!f.empty() && f.lo <= tol)
                             : (!LR[0][j - 1].empty() &&
                                LR[0][j - 1].hi >= 1.0 - tol && !f.empty() &&
                                f.lo <= tol);
    LR[0][j] = open ? f : Interval{};
  }
  for (int i = 0; i < n - 1; ++i) {
    const Interval f = free_on_segment(Q[0], P[i], P[i + 1], delta);
    const bool open = i == 0 ? (!f.empty() && f.lo <= tol)
                             : (!BR[i - 1][0].empty() &&
                                BR[i - 1][0].hi >= 1.0 - tol && !f.empty() &&
                                f.lo <= tol);
    BR[i][0] = open ? f : Interval{};
  }
  for (int i = 0; i < n - 1; ++i) {
    for (int j = 0; j < m - 1; ++j) {
      const Interval right = free_on_segment(P[i + 1], Q[j], Q[j + 1], delta);
      const Interval top = free_on_segment(Q[j + 1], P[i], P[i + 1], delta);
      Interval r{}, t{};
      if (!BR[i][j].empty()) {
        r = right;  // bottom entry reaches all of the right edge
      } else if (!LR[i][j].empty() && !right.empty()) {
        // At a monotonicity critical radius the passage is a single point;
        // a small slack keeps it open under roundoff.
        const double lo2 = std::max(right.lo, LR[i][j].lo);
        if (lo2 <= right.hi + tol) r = {std::min(lo2, right.hi), right.hi};
      }
      if (!LR[i][j].empty()) {
        t = top;  // left entry reaches all of the top edge
      } else if (!BR[i][j].empty() && !top.empty()) {
        const double lo2 = std::max(top.lo, BR[i][j].lo);
        if (lo2 <= top.hi + tol) t = {std::min(lo2, top.hi), top.hi};
      }
      LR[i + 1][j] = r.empty() ? Interval{} : r;
      BR[i][j + 1] = t.empty() ? Interval{} : t;
    }
  }
  const Interval last_r = LR[n - 1][m - 2];
  const Interval last_t = BR[n - 2][m - 1];
  return (!last_r.empty() && last_r.hi >= 1.0 - tol) ||
         (!last_t.empty() && last_t.hi >= 1.0 - tol);
}

// Smallest critical value accepted by the classical decider.  Candidates
// are all vertex-vertex distances, vertex-edge distances and bisector
// (monotonicity) radii, computed from first principles.
inline double frechet_value_oracle(const std::vector<Point>& P,
                                   const std::vector<Point>& Q) {
  std::vector<double> cand;
  auto point_seg = [](const Point& p, const Point& a, const Point& b) {
    const Point d = b - a;
    const double A = d.squaredNorm();
    double t = A == 0.0 ? 0.0 : std::clamp(d.dot(p - a) / A, 0.0, 1.0);
    return (a + t * d - p).norm();
  };
  auto bisector = [&cand](const Point& u, const Point& w, const Point& a,
                          const Point& b) {
    const Point d = b - a;
    const Point uw = w - u;
    const double denom = d.dot(uw);
    if (std::abs(denom) < 1e-14) return;
    const double rhs = (w.squaredNorm() - u.squaredNorm()) / 2.0 - a.dot(uw);
    const double t = rhs / denom;
    if (t < 0.0 || t > 1.0) return;
    cand.push_back((a + t * d - u).norm());
  };
  for (const auto& p : P) {
    for (const auto& q : Q) cand.push_back((p - q).norm());
  }
  for (const auto& p : P) {
    for (size_t j = 0; j + 1 < Q.size(); ++j) {
      cand.push_back(point_seg(p, Q[j], Q[j + 1]));
    }
  }
  for (const auto& q : Q) {
    for (size_t i = 0; i + 1 < P.size(); ++i) {
      cand.push_back(point_seg(q, P[i], P[i + 1]));
    }
  }
  for (size_t u = 0; u < P.size(); ++u) {
    for (size_t w = 0; w < P.size(); ++w) {
      if (u == w) continue;
      for (size_t j = 0; j + 1 < Q.size(); ++j) {
        bisector(P[u], P[w], Q[j], Q[j + 1]);
      }
    }
  }
  for (size_t u = 0; u < Q.size(); ++u) {
    for (size_t w = 0; w < Q.size(); ++w) {
      if (u == w) continue;
      for (size_t i = 0; i + 1 < P.size(); ++i) {
        bisector(Q[u], Q[w], P[i], P[i + 1]);
      }
    }
  }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  int lo = 0, hi = static_cast<int>(cand.size()) - 1;
  if (!frechet_decide_oracle(P, Q, cand[hi])) {
    return std::numeric_limits<double>::infinity();
  }
  while (lo < hi) {
    const int mid = (lo + hi) / 2;
    if (frechet_decide_oracle(P, Q, cand[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return cand[lo];
}

// ---------------------------------------------------------------------------
// Sort-based bottleneck oracle: grow a union-find over edges in weight order
// until s and t connect.
inline double bottleneck_oracle(int n,
                                const std::vector<std::tuple<int, int, double>>& edges,
                                int s, int t) {
  std::vector<int> order(edges.size());
  for (size_t i = 0; i < edges.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::get<2>(edges[a]) < std::get<2>(edges[b]);
  });
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  if (s == t) return 0.0;
  for (int e : order) {
    parent[find(std::get<0>(edges[e]))] = find(std::get<1>(edges[e]));
    if (find(s) == find(t)) return std::get<2>(edges[e]);
  }
  return std::numeric_limits<double>::infinity();
}

}  // namespace frechet::testing

#endif
