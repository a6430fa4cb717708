#include "frechet/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace frechet {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double clamp01(double t) { return std::min(1.0, std::max(0.0, t)); }

}  // namespace

double distance(const Point& p, const Point& q) {
  if (p.size() != q.size()) {
    throw GeometryError("distance: dimension mismatch");
  }
  return (p - q).norm();
}

SimplexGeometry::SimplexGeometry(Eigen::MatrixXd vertices)
    : vertices_(std::move(vertices)) {
  const int d = static_cast<int>(vertices_.rows());
  const int m = static_cast<int>(vertices_.cols()) - 1;
  if (vertices_.cols() < 1) {
    throw GeometryError("simplex: needs at least one vertex");
  }
  if (m > d) {
    throw GeometryError("simplex: dimension exceeds ambient dimension");
  }
  if (!vertices_.allFinite()) {
    throw GeometryError("simplex: non-finite coordinates");
  }
  if (m >= 1) {
    Eigen::MatrixXd diff(d, m);
    for (int i = 0; i < m; ++i) {
      diff.col(i) = vertices_.col(i + 1) - vertices_.col(0);
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(diff);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) < kAffineRankTol * sv(0) || sv(0) == 0.0) {
      throw GeometryError("simplex: vertices affinely dependent");
    }
  }
}

SimplexGeometry SimplexGeometry::point(const Point& p) {
  Eigen::MatrixXd m(p.size(), 1);
  m.col(0) = p;
  return SimplexGeometry(std::move(m));
}

SimplexGeometry SimplexGeometry::segment(const Point& a, const Point& b) {
  Eigen::MatrixXd m(a.size(), 2);
  m.col(0) = a;
  m.col(1) = b;
  return SimplexGeometry(std::move(m));
}

bool SimplexGeometry::contains_bary(const Eigen::VectorXd& bary,
                                    double tol) const {
  if (bary.size() != dim() + 1) return false;
  if (std::abs(bary.sum() - 1.0) > tol) return false;
  return bary.minCoeff() >= -tol;
}

namespace {

// Away-step Frank-Wolfe for the convex quadratic f(g) = ||M g + c||^2 over
// the unit simplex.  Linear rate over polytopes makes the 1e-18 gap target
// reachable well inside the iteration cap for the cell sizes we see.
Eigen::VectorXd simplex_quadratic_min(const Eigen::MatrixXd& M,
                                      const Eigen::VectorXd& c,
                                      double gap_tol) {
  const int n = static_cast<int>(M.cols());
  Eigen::VectorXd g = Eigen::VectorXd::Zero(n);
  g(0) = 1.0;
  Eigen::VectorXd r = M.col(0) + c;
  for (int iter = 0; iter < kMinimizerIterationCap; ++iter) {
    Eigen::VectorXd grad = 2.0 * (M.transpose() * r);
    int s = 0;
    grad.minCoeff(&s);
    int v = -1;
    double worst = -kInf;
    for (int i = 0; i < n; ++i) {
      if (g(i) > 0.0 && grad(i) > worst) {
        worst = grad(i);
        v = i;
      }
    }
    const double gap_fw = grad.dot(g) - grad(s);
    if (gap_fw <= gap_tol) break;
    const double gap_away = worst - grad.dot(g);

    Eigen::VectorXd dir;
    double tmax;
    bool away = gap_away > gap_fw;
    if (!away) {
      dir = -g;
      dir(s) += 1.0;
      tmax = 1.0;
    } else {
      dir = g;
      dir(v) -= 1.0;
      tmax = g(v) >= 1.0 ? kInf : g(v) / (1.0 - g(v));
    }
    Eigen::VectorXd Md = M * dir;
    const double denom = Md.squaredNorm();
    if (denom <= 0.0) break;
    double t = -Md.dot(r) / denom;
    t = std::min(t, tmax);
    if (t <= 0.0) break;
    g += t * dir;
    r += t * Md;
    // Guard against drift off the simplex.
    for (int i = 0; i < n; ++i) g(i) = std::max(g(i), 0.0);
    g /= g.sum();
  }
  return g;
}

}  // namespace

Point SimplexGeometry::project(const Point& x, Eigen::VectorXd* bary) const {
  const int m = dim();
  if (m == 0) {
    if (bary) *bary = Eigen::VectorXd::Ones(1);
    return vertices_.col(0);
  }
  if (m == 1) {
    const Point a = vertices_.col(0), b = vertices_.col(1);
    const Point ab = b - a;
    const double len2 = ab.squaredNorm();
    double t = len2 > 0.0 ? clamp01((x - a).dot(ab) / len2) : 0.0;
    if (bary) {
      *bary = Eigen::VectorXd(2);
      (*bary)(0) = 1.0 - t;
      (*bary)(1) = t;
    }
    return a + t * ab;
  }
  // General case: quadratic over barycentric coordinates.
  const double scale2 = (vertices_.colwise() - x).colwise().norm().maxCoeff();
  Eigen::VectorXd g = simplex_quadratic_min(
      vertices_, -x, std::max(1e-18 * scale2 * scale2, 1e-300));
  if (bary) *bary = g;
  return vertices_ * g;
}

double SimplexGeometry::distance_to(const Point& x) const {
  return (project(x) - x).norm();
}

double Cell::bounding_box_diameter() const {
  if (simplices.empty()) return 0.0;
  const int d = simplices.front().ambient_dim();
  Eigen::VectorXd lo = Eigen::VectorXd::Constant(d, kInf);
  Eigen::VectorXd hi = Eigen::VectorXd::Constant(d, -kInf);
  for (const auto& s : simplices) {
    lo = lo.cwiseMin(s.vertices().rowwise().minCoeff());
    hi = hi.cwiseMax(s.vertices().rowwise().maxCoeff());
  }
  return (hi - lo).norm();
}

namespace {

// Circumball of an affinely independent support set (all points on the
// boundary, center in their affine hull).
Ball circumball(const std::vector<Point>& support) {
  Ball b;
  if (support.empty()) {
    b.radius = -1.0;  // sentinel: empty ball
    return b;
  }
  b.center = support[0];
  b.radius = 0.0;
  const int m = static_cast<int>(support.size()) - 1;
  if (m == 0) return b;
  const int d = static_cast<int>(support[0].size());
  Eigen::MatrixXd A(m, d);
  Eigen::VectorXd rhs(m);
  for (int i = 0; i < m; ++i) {
    A.row(i) = (support[i + 1] - support[0]).transpose();
    rhs(i) = 0.5 * (support[i + 1] - support[0]).squaredNorm();
  }
  // Center = p0 + A^T y with 2 A A^T y = rhs scaled form.
  Eigen::MatrixXd G = A * A.transpose();
  Eigen::VectorXd y = G.ldlt().solve(rhs);
  b.center = support[0] + A.transpose() * y;
  b.radius = (b.center - support[0]).norm();
  return b;
}

bool in_ball(const Ball& b, const Point& p, double tol) {
  if (b.radius < 0.0) return false;
  return (p - b.center).norm() <= b.radius + tol;
}

Ball welzl(std::vector<Point>& pts, std::vector<Point>& support, size_t n,
           int d) {
  if (n == 0 || static_cast<int>(support.size()) == d + 1) {
    return circumball(support);
  }
  const Point p = pts[n - 1];
  Ball b = welzl(pts, support, n - 1, d);
  const double tol = 1e-12 * (b.radius > 0 ? b.radius : 1.0);
  if (in_ball(b, p, tol)) return b;
  support.push_back(p);
  b = welzl(pts, support, n - 1, d);
  support.pop_back();
  return b;
}

}  // namespace

Ball min_enclosing_ball(const std::vector<Point>& points) {
  if (points.empty()) {
    throw GeometryError("min_enclosing_ball: empty input");
  }
  const int d = static_cast<int>(points[0].size());
  std::vector<Point> pts = points;
  std::mt19937 rng(0x5eb1u);
  std::shuffle(pts.begin(), pts.end(), rng);
  std::vector<Point> support;
  Ball b = welzl(pts, support, pts.size(), d);
  if (b.radius < 0.0) {
    b.center = points[0];
    b.radius = 0.0;
  }
  return b;
}

namespace {

SimplexDistanceResult segment_point(const SimplexGeometry& seg,
                                    const SimplexGeometry& pt, bool swapped) {
  SimplexDistanceResult r;
  Eigen::VectorXd bary;
  const Point x = pt.vertex(0);
  const Point w = seg.project(x, &bary);
  r.value = (w - x).norm();
  if (!swapped) {
    r.witness_a = w;
    r.witness_b = x;
    r.bary_a = bary;
    r.bary_b = Eigen::VectorXd::Ones(1);
  } else {
    r.witness_a = x;
    r.witness_b = w;
    r.bary_a = Eigen::VectorXd::Ones(1);
    r.bary_b = bary;
  }
  return r;
}

SimplexDistanceResult segment_segment(const SimplexGeometry& A,
                                      const SimplexGeometry& B) {
  // Closest points of two segments (clamped quadratic).
  const Point p1 = A.vertex(0), q1 = A.vertex(1);
  const Point p2 = B.vertex(0), q2 = B.vertex(1);
  const Point d1 = q1 - p1, d2 = q2 - p2, rr = p1 - p2;
  const double a = d1.squaredNorm(), e = d2.squaredNorm(), f = d2.dot(rr);
  double s = 0.0, t = 0.0;
  const double c = d1.dot(rr), b = d1.dot(d2);
  const double denom = a * e - b * b;
  if (denom > 1e-14 * a * e) {
    s = clamp01((b * f - c * e) / denom);
  }
  t = e > 0.0 ? (b * s + f) / e : 0.0;
  if (t < 0.0) {
    t = 0.0;
    s = a > 0.0 ? clamp01(-c / a) : 0.0;
  } else if (t > 1.0) {
    t = 1.0;
    s = a > 0.0 ? clamp01((b - c) / a) : 0.0;
  }
  SimplexDistanceResult r;
  r.witness_a = p1 + s * d1;
  r.witness_b = p2 + t * d2;
  r.value = (r.witness_a - r.witness_b).norm();
  r.bary_a = Eigen::VectorXd(2);
  r.bary_a << 1.0 - s, s;
  r.bary_b = Eigen::VectorXd(2);
  r.bary_b << 1.0 - t, t;
  return r;
}

}  // namespace

SimplexDistanceResult simplex_distance(const SimplexGeometry& a,
                                       const SimplexGeometry& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw GeometryError("simplex_distance: ambient dimension mismatch");
  }
  const int ma = a.dim(), mb = b.dim();
  if (ma == 0 && mb == 0) {
    SimplexDistanceResult r;
    r.witness_a = a.vertex(0);
    r.witness_b = b.vertex(0);
    r.value = (r.witness_a - r.witness_b).norm();
    r.bary_a = Eigen::VectorXd::Ones(1);
    r.bary_b = Eigen::VectorXd::Ones(1);
    return r;
  }
  if (ma == 1 && mb == 0) return segment_point(a, b, false);
  if (ma == 0 && mb == 1) {
    auto r = segment_point(b, a, true);
    return r;
  }
  if (ma == 1 && mb == 1) return segment_segment(a, b);

  // General case: distance from the origin to conv{a_i - b_j}.
  const int na = ma + 1, nb = mb + 1;
  Eigen::MatrixXd M(a.ambient_dim(), na * nb);
  for (int i = 0; i < na; ++i) {
    for (int j = 0; j < nb; ++j) {
      M.col(i * nb + j) = a.vertex(i) - b.vertex(j);
    }
  }
  const double scale = M.colwise().norm().maxCoeff();
  Eigen::VectorXd c = Eigen::VectorXd::Zero(a.ambient_dim());
  Eigen::VectorXd g = simplex_quadratic_min(
      M, c, std::max(1e-18 * scale * scale, 1e-300));
  SimplexDistanceResult r;
  r.bary_a = Eigen::VectorXd::Zero(na);
  r.bary_b = Eigen::VectorXd::Zero(nb);
  for (int i = 0; i < na; ++i) {
    for (int j = 0; j < nb; ++j) {
      r.bary_a(i) += g(i * nb + j);
      r.bary_b(j) += g(i * nb + j);
    }
  }
  r.witness_a = a.at(r.bary_a);
  r.witness_b = b.at(r.bary_b);
  r.value = (r.witness_a - r.witness_b).norm();
  return r;
}

double golden_section(const std::function<double(double)>& f, double lo,
                      double hi, double tol, double* argmin) {
  constexpr double invphi = 0.6180339887498949;
  if (hi - lo <= tol) {
    const double x = 0.5 * (lo + hi);
    if (argmin) *argmin = x;
    return f(x);
  }
  double x1 = hi - invphi * (hi - lo);
  double x2 = lo + invphi * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  // Each step shrinks the interval by 1/phi; cap the iteration count so the
  // loop terminates even when tol is below the ULP of the bounds.
  int iters = 8 + static_cast<int>(
      std::log(std::max((hi - lo) / std::max(tol, 1e-300), 1.0)) /
      std::log(1.0 / invphi));
  while (hi - lo > tol && iters-- > 0) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - invphi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + invphi * (hi - lo);
      f2 = f(x2);
    }
  }
  const double x = f1 <= f2 ? x1 : x2;
  if (argmin) *argmin = x;
  return std::min(f1, f2);
}

double minimize_convex_box(
    const std::function<double(const Eigen::VectorXd&)>& f,
    const Eigen::VectorXd& lo, const Eigen::VectorXd& hi, double tol,
    Eigen::VectorXd* argmin) {
  const int d = static_cast<int>(lo.size());
  Eigen::VectorXd x = 0.5 * (lo + hi);
  // Nested one-dimensional searches: partial minimization of a convex
  // function stays convex, so each level sees a unimodal slice.
  std::function<double(int)> level = [&](int i) -> double {
    if (i == d) return f(x);
    double best_t;
    double v = golden_section(
        [&](double t) {
          x(i) = t;
          return level(i + 1);
        },
        lo(i), hi(i), tol, &best_t);
    x(i) = best_t;
    return v;
  };
  double v = level(0);
  // One final pass pins x to the per-level argmins.
  v = std::min(v, f(x));
  if (argmin) *argmin = x;
  return v;
}

namespace {

std::vector<Point> cell_config(const Cell& cell,
                               const std::vector<Eigen::VectorXd>& barys) {
  std::vector<Point> pts;
  pts.reserve(cell.simplices.size());
  for (size_t i = 0; i < cell.simplices.size(); ++i) {
    pts.push_back(cell.simplices[i].at(barys[i]));
  }
  return pts;
}

void clamp_bary(Eigen::VectorXd& bary) {
  for (int i = 0; i < bary.size(); ++i) bary(i) = std::max(bary(i), 0.0);
  const double s = bary.sum();
  if (s > 0.0) bary /= s;
}

}  // namespace

CellMinimum minimize_cost_over_cell(const CostFunction& cost,
                                    const Cell& cell) {
  CellMinimum out;
  const int k = cell.factors();
  std::vector<Eigen::VectorXd> barys(k);
  int free_coords = 0;
  for (int i = 0; i < k; ++i) {
    const int m = cell.simplices[i].dim();
    barys[i] = Eigen::VectorXd::Constant(m + 1, 1.0 / (m + 1));
    free_coords += m;
  }
  auto eval = [&]() { return cost.value(cell_config(cell, barys)); };
  double value = eval();
  if (free_coords == 0) {
    out.value = value;
    out.witness = cell_config(cell, barys);
    return out;
  }

  const double scale = cell.bounding_box_diameter();
  // Non-smooth costs (max or hull type) zigzag with tiny decreases under
  // coordinate descent; a relative criterion terminates those sweeps.
  const double stop = std::max(1e-9 * std::max({scale, 1.0, value}), 1e-300);
  int evals = 0;
  bool converged = false;
  std::vector<Eigen::VectorXd> sweep_start = barys;
  // Cyclic golden-section coordinate descent on the free barycentric
  // coordinates u_1..u_m of each factor (lambda_0 = 1 - sum u).
  for (int sweep = 0; sweep < 400 && !converged; ++sweep) {
    const double before = value;
    for (int i = 0; i < k; ++i) {
      const int m = cell.simplices[i].dim();
      for (int j = 1; j <= m; ++j) {
        double others = 0.0;
        for (int l = 1; l <= m; ++l) {
          if (l != j) others += barys[i](l);
        }
        const double hi = std::max(0.0, 1.0 - others);
        double best;
        value = golden_section(
            [&](double u) {
              barys[i](j) = u;
              barys[i](0) = 1.0 - others - u;
              ++evals;
              return eval();
            },
            0.0, hi, 1e-11, &best);
        barys[i](j) = best;
        barys[i](0) = 1.0 - others - best;
      }
    }
    // Powell-style acceleration: line search along the net displacement of
    // the sweep, which cuts through the zigzag valley of pure coordinate
    // descent.
    if (sweep > 0) {
      std::vector<Eigen::VectorXd> dir(k);
      double t_max = std::numeric_limits<double>::infinity();
      bool moved = false;
      for (int i = 0; i < k; ++i) {
        dir[i] = barys[i] - sweep_start[i];
        for (int j = 0; j < dir[i].size(); ++j) {
          if (dir[i](j) < -1e-15) {
            t_max = std::min(t_max, barys[i](j) / -dir[i](j));
          }
          if (std::abs(dir[i](j)) > 1e-15) moved = true;
        }
      }
      if (moved && t_max > 1e-12) {
        t_max = std::min(t_max, 64.0);
        const std::vector<Eigen::VectorXd> base = barys;
        double t_best;
        const double accel = golden_section(
            [&](double t) {
              for (int i = 0; i < k; ++i) barys[i] = base[i] + t * dir[i];
              ++evals;
              return eval();
            },
            0.0, t_max, 1e-11, &t_best);
        if (accel < value) {
          value = accel;
          for (int i = 0; i < k; ++i) barys[i] = base[i] + t_best * dir[i];
        } else {
          barys = base;
        }
      }
    }
    sweep_start = barys;
    if (before - value <= stop && sweep > 0) converged = true;
    if (evals > kMinimizerIterationCap * 10) break;
  }
  for (auto& b : barys) clamp_bary(b);
  out.value = std::min(value, cost.value(cell_config(cell, barys)));
  out.witness = cell_config(cell, barys);
  out.converged = converged;
  return out;
}

CellMinimum CostFunction::minimize(const Cell& cell) const {
  return minimize_cost_over_cell(*this, cell);
}

CellMinimum CostFunction::minimize_checked(const Cell& cell) const {
  CellMinimum m = minimize(cell);
  if (!m.converged) {
    throw MinimizerError("cost minimization did not converge on cell",
                         m.value);
  }
  return m;
}

double convex_hull_perimeter(const std::vector<Point>& points) {
  std::vector<Eigen::Vector2d> pts;
  pts.reserve(points.size());
  for (const auto& p : points) {
    if (p.size() != 2) {
      throw GeometryError("convex_hull_perimeter: planar points required");
    }
    pts.emplace_back(p(0), p(1));
  }
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const auto& a, const auto& b) { return a == b; }),
            pts.end());
  const size_t n = pts.size();
  if (n <= 1) return 0.0;
  if (n == 2) return 2.0 * (pts[1] - pts[0]).norm();
  auto cross = [](const Eigen::Vector2d& o, const Eigen::Vector2d& a,
                  const Eigen::Vector2d& b) {
    return (a.x() - o.x()) * (b.y() - o.y()) -
           (a.y() - o.y()) * (b.x() - o.x());
  };
  std::vector<Eigen::Vector2d> hull(2 * n);
  size_t h = 0;
  for (size_t i = 0; i < n; ++i) {
    while (h >= 2 && cross(hull[h - 2], hull[h - 1], pts[i]) <= 0) --h;
    hull[h++] = pts[i];
  }
  for (size_t i = n - 1, lower = h + 1; i-- > 0;) {
    while (h >= lower && cross(hull[h - 2], hull[h - 1], pts[i]) <= 0) --h;
    hull[h++] = pts[i];
  }
  hull.resize(h);
  double perim = 0.0;
  for (size_t i = 0; i + 1 < hull.size(); ++i) {
    perim += (hull[i + 1] - hull[i]).norm();
  }
  // hull is closed: last point repeats the first.
  if (hull.size() >= 2 && hull.front() != hull.back()) {
    perim += (hull.front() - hull.back()).norm();
  }
  return perim;
}

}  // namespace frechet
