#include "frechet/dagfrechet.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>
#include <set>

namespace frechet {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Parameter interval along a segment where the distance to q is <= delta.
struct ParamInterval {
  double lo = 0.0, hi = -1.0;
  bool empty() const { return lo > hi; }
};

ParamInterval free_interval(const Point& q, const Point& a, const Point& b,
                            double delta) {
  const Eigen::VectorXd u = b - a;
  const Eigen::VectorXd w = a - q;
  const double A = u.squaredNorm();
  const double B = 2.0 * u.dot(w);
  const double C = w.squaredNorm() - delta * delta;
  double disc = B * B - 4.0 * A * C;
  // Tiny negative discriminants at exact critical radii are roundoff.
  const double slack = 1e-12 * std::max(B * B, std::abs(4.0 * A * C));
  if (disc < 0.0) {
    if (disc < -slack) return {};
    disc = 0.0;
  }
  const double sq = std::sqrt(disc);
  ParamInterval out;
  out.lo = (-B - sq) / (2.0 * A);
  out.hi = (-B + sq) / (2.0 * A);
  if (out.lo > 1.0 + 1e-12 || out.hi < -1e-12) return {};
  out.lo = std::min(std::max(out.lo, 0.0), 1.0);
  out.hi = std::min(std::max(out.hi, 0.0), 1.0);
  return out;
}

double point_segment_distance(const Point& q, const Point& a, const Point& b) {
  const Eigen::VectorXd u = b - a;
  const double t =
      std::min(1.0, std::max(0.0, u.dot(q - a) / u.squaredNorm()));
  return (a + t * u - q).norm();
}

// Cell kinds of the product complex during the decision sweep.
enum CellType { cell_vv = 0, cell_ev = 1, cell_ve = 2 };

struct CellRef {
  std::int64_t rank;
  int type;  // cell_vv: (v1, v2); cell_ev: (e1, v2); cell_ve: (v1, e2)
  int i, j;
  bool operator<(const CellRef& o) const {
    return std::tie(rank, type, i, j) < std::tie(o.rank, o.type, o.i, o.j);
  }
};

struct Pred {
  int type = -1;  // predecessor cell type, -1 for the start
  int i = 0, j = 0;
};

}  // namespace

DagDecision dag_decide(const DagComplex& c1, const DagComplex& c2, int s1,
                       int t1, int s2, int t2, double delta,
                       bool want_witness) {
  if (delta < 0.0) {
    throw GeometryError("dag_decide: delta must be nonnegative");
  }
  const int V1 = c1.num_vertices(), E1 = c1.num_edges();
  const int V2 = c2.num_vertices(), E2 = c2.num_edges();
  if (s1 < 0 || s1 >= V1 || t1 < 0 || t1 >= V1 || s2 < 0 || s2 >= V2 ||
      t2 < 0 || t2 >= V2) {
    throw GeometryError("dag_decide: endpoint out of range");
  }
  const auto& P1 = c1.points();
  const auto& P2 = c2.points();

  auto rank1v = [&](int v) { return 2 * c1.topo_rank(v); };
  auto rank1e = [&](int e) { return 2 * c1.topo_rank(c1.edges()[e].first) + 1; };
  auto rank2v = [&](int v) { return 2 * c2.topo_rank(v); };
  auto rank2e = [&](int e) { return 2 * c2.topo_rank(c2.edges()[e].first) + 1; };

  std::vector<CellRef> cells;
  cells.reserve(static_cast<size_t>(V1) * V2 + static_cast<size_t>(E1) * V2 +
                static_cast<size_t>(V1) * E2);
  for (int v1 = 0; v1 < V1; ++v1) {
    for (int v2 = 0; v2 < V2; ++v2) {
      cells.push_back({rank1v(v1) + rank2v(v2), cell_vv, v1, v2});
    }
  }
  for (int e1 = 0; e1 < E1; ++e1) {
    for (int v2 = 0; v2 < V2; ++v2) {
      cells.push_back({rank1e(e1) + rank2v(v2), cell_ev, e1, v2});
    }
  }
  for (int v1 = 0; v1 < V1; ++v1) {
    for (int e2 = 0; e2 < E2; ++e2) {
      cells.push_back({rank1v(v1) + rank2e(e2), cell_ve, v1, e2});
    }
  }
  std::sort(cells.begin(), cells.end());

  std::vector<char> reach0(static_cast<size_t>(V1) * V2, 0);
  std::vector<double> earlyEv(static_cast<size_t>(E1) * V2, kInf);
  std::vector<double> hiEv(static_cast<size_t>(E1) * V2, -1.0);
  std::vector<double> earlyVe(static_cast<size_t>(V1) * E2, kInf);
  std::vector<double> hiVe(static_cast<size_t>(V1) * E2, -1.0);
  std::vector<Pred> predVv(static_cast<size_t>(V1) * V2);
  std::vector<Pred> predEv(static_cast<size_t>(E1) * V2);
  std::vector<Pred> predVe(static_cast<size_t>(V1) * E2);

  auto iv = [&](int v1, int v2) { return static_cast<size_t>(v1) * V2 + v2; };
  auto ie = [&](int e1, int v2) { return static_cast<size_t>(e1) * V2 + v2; };
  auto iw = [&](int v1, int e2) { return static_cast<size_t>(v1) * E2 + e2; };

  const double vtol = 1e-12 * std::max(delta, 1e-12);

  for (const CellRef& cell : cells) {
    if (cell.type == cell_vv) {
      const int v1 = cell.i, v2 = cell.j;
      if ((P1[v1] - P2[v2]).norm() > delta + vtol) continue;
      if (v1 == s1 && v2 == s2) {
        reach0[iv(v1, v2)] = 1;
        predVv[iv(v1, v2)] = {-1, 0, 0};
        continue;
      }
      // A free end vertex forces the neighboring 1-cell interval to touch
      // parameter 1; the loose threshold only absorbs roundoff.
      for (int e1 : c1.in_edges(v1)) {
        if (earlyEv[ie(e1, v2)] < kInf && hiEv[ie(e1, v2)] >= 1.0 - 1e-6) {
          reach0[iv(v1, v2)] = 1;
          predVv[iv(v1, v2)] = {cell_ev, e1, v2};
          break;
        }
      }
      if (!reach0[iv(v1, v2)]) {
        for (int e2 : c2.in_edges(v2)) {
          if (earlyVe[iw(v1, e2)] < kInf && hiVe[iw(v1, e2)] >= 1.0 - 1e-6) {
            reach0[iv(v1, v2)] = 1;
            predVv[iv(v1, v2)] = {cell_ve, v1, e2};
            break;
          }
        }
      }
    } else if (cell.type == cell_ev) {
      // Edge of c1 against a vertex of c2; parameter s runs along e1.
      const int e1 = cell.i, v2 = cell.j;
      const auto [a1, b1] = c1.edges()[e1];
      const ParamInterval f = free_interval(P2[v2], P1[a1], P1[b1], delta);
      if (f.empty()) continue;
      hiEv[ie(e1, v2)] = f.hi;
      double best = kInf;
      Pred pred;
      if (reach0[iv(a1, v2)]) {
        // A free tail vertex means parameter 0 is free, so the interval
        // starts there up to roundoff.
        best = f.lo;
        pred = {cell_vv, a1, v2};
      }
      for (int e2 : c2.in_edges(v2)) {
        // This 1-cell is the top boundary of the 2-cell (e1, e2).
        const int u2 = c2.edges()[e2].first;
        const double rB = earlyEv[ie(e1, u2)];
        if (rB < kInf) {
          const double cand = std::max(f.lo, rB);
          if (cand <= f.hi + 1e-9 && cand < best) {
            best = std::min(cand, f.hi);
            pred = {cell_ev, e1, u2};
          }
        }
        if (earlyVe[iw(a1, e2)] < kInf && f.lo < best) {
          best = f.lo;
          pred = {cell_ve, a1, e2};
        }
        if (reach0[iv(a1, u2)] && f.lo < best) {
          best = f.lo;
          pred = {cell_vv, a1, u2};
        }
      }
      if (best < kInf) {
        earlyEv[ie(e1, v2)] = best;
        predEv[ie(e1, v2)] = pred;
      }
    } else {
      // Vertex of c1 against an edge of c2; parameter t runs along e2.
      const int v1 = cell.i, e2 = cell.j;
      const auto [a2, b2] = c2.edges()[e2];
      const ParamInterval f = free_interval(P1[v1], P2[a2], P2[b2], delta);
      if (f.empty()) continue;
      hiVe[iw(v1, e2)] = f.hi;
      double best = kInf;
      Pred pred;
      if (reach0[iv(v1, a2)]) {
        best = f.lo;
        pred = {cell_vv, v1, a2};
      }
      for (int e1 : c1.in_edges(v1)) {
        // This 1-cell is the right boundary of the 2-cell (e1, e2).
        const int u1 = c1.edges()[e1].first;
        const double rL = earlyVe[iw(u1, e2)];
        if (rL < kInf) {
          const double cand = std::max(f.lo, rL);
          if (cand <= f.hi + 1e-9 && cand < best) {
            best = std::min(cand, f.hi);
            pred = {cell_ve, u1, e2};
          }
        }
        if (earlyEv[ie(e1, a2)] < kInf && f.lo < best) {
          best = f.lo;
          pred = {cell_ev, e1, a2};
        }
        if (reach0[iv(u1, a2)] && f.lo < best) {
          best = f.lo;
          pred = {cell_vv, u1, a2};
        }
      }
      if (best < kInf) {
        earlyVe[iw(v1, e2)] = best;
        predVe[iw(v1, e2)] = pred;
      }
    }
  }

  DagDecision out;
  out.reachable = reach0[iv(t1, t2)] != 0;
  if (!out.reachable || !want_witness) return out;

  // Backtrack predecessor links, emitting one configuration per cell.
  auto edge_simplex = [](const DagComplex& c, int e) {
    auto [u, w] = c.edges()[e];
    return c.complex().simplex_id({std::min(u, w), std::max(u, w)});
  };
  std::vector<CellGraphVertex> rev;
  int type = cell_vv, i = t1, j = t2;
  while (true) {
    CellGraphVertex v;
    Pred pred;
    if (type == cell_vv) {
      v.id.simplex = {c1.complex().vertex_simplex(i),
                      c2.complex().vertex_simplex(j)};
      v.witness = {P1[i], P2[j]};
      pred = predVv[iv(i, j)];
    } else if (type == cell_ev) {
      const auto [a1, b1] = c1.edges()[i];
      const double s = earlyEv[ie(i, j)];
      v.id.simplex = {edge_simplex(c1, i), c2.complex().vertex_simplex(j)};
      v.witness = {P1[a1] + s * (P1[b1] - P1[a1]), P2[j]};
      pred = predEv[ie(i, j)];
    } else {
      const auto [a2, b2] = c2.edges()[j];
      const double t = earlyVe[iw(i, j)];
      v.id.simplex = {c1.complex().vertex_simplex(i), edge_simplex(c2, j)};
      v.witness = {P1[i], P2[a2] + t * (P2[b2] - P2[a2])};
      pred = predVe[iw(i, j)];
    }
    v.elevation = (v.witness[0] - v.witness[1]).norm();
    rev.push_back(std::move(v));
    if (pred.type < 0) break;
    type = pred.type;
    i = pred.i;
    j = pred.j;
  }
  out.witness.vertices.assign(rev.rbegin(), rev.rend());
  double worst = 0.0;
  for (const auto& v : out.witness.vertices) {
    worst = std::max(worst, v.elevation);
  }
  out.witness.value = worst;
  out.has_witness = true;
  return out;
}

std::vector<CriticalValue> enumerate_vv_ve(const DagComplex& c1,
                                           const DagComplex& c2, double a,
                                           double b) {
  if (a > b) {
    throw GeometryError("enumerate_vv_ve: interval reversed");
  }
  std::vector<CriticalValue> out;
  const auto& P1 = c1.points();
  const auto& P2 = c2.points();
  auto keep = [&](double r) { return r >= a && r <= b; };
  for (int u = 0; u < c1.num_vertices(); ++u) {
    for (int w = 0; w < c2.num_vertices(); ++w) {
      const double r = (P1[u] - P2[w]).norm();
      if (keep(r)) {
        out.push_back({r, CriticalKind::vertex_vertex, -1, -1, u, w});
      }
    }
  }
  for (int e = 0; e < c2.num_edges(); ++e) {
    const auto [ea, eb] = c2.edges()[e];
    for (int u = 0; u < c1.num_vertices(); ++u) {
      const double r = point_segment_distance(P1[u], P2[ea], P2[eb]);
      if (keep(r)) {
        out.push_back({r, CriticalKind::vertex_edge, 1, e, u, -1});
      }
    }
  }
  for (int e = 0; e < c1.num_edges(); ++e) {
    const auto [ea, eb] = c1.edges()[e];
    for (int u = 0; u < c2.num_vertices(); ++u) {
      const double r = point_segment_distance(P2[u], P1[ea], P1[eb]);
      if (keep(r)) {
        out.push_back({r, CriticalKind::vertex_edge, 0, e, u, -1});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<double> monotonicity_radius(const Point& ea, const Point& eb,
                                          const Point& u, const Point& w,
                                          double* t_out) {
  const Eigen::VectorXd d = eb - ea;
  const double len2 = d.squaredNorm();
  if (len2 <= 0.0) {
    throw GeometryError("monotonicity_radius: degenerate edge");
  }
  double t;
  if ((u - w).norm() <= 1e-15 * std::max(u.norm(), 1.0)) {
    // Coinciding spheres: the first common point on the edge is the
    // projection of the center.
    t = std::min(1.0, std::max(0.0, d.dot(u - ea) / len2));
  } else {
    // Bisector hyperplane (w - u) . x = (|w|^2 - |u|^2) / 2 meets the line.
    const Eigen::VectorXd nrm = w - u;
    const double denom = nrm.dot(d);
    if (std::abs(denom) <= 1e-14 * nrm.norm() * std::sqrt(len2)) {
      return std::nullopt;  // bisector parallel to the edge
    }
    const double rhs = 0.5 * (w.squaredNorm() - u.squaredNorm());
    t = (rhs - nrm.dot(ea)) / denom;
    if (t < -1e-12 || t > 1.0 + 1e-12) return std::nullopt;
    t = std::min(1.0, std::max(0.0, t));
  }
  if (t_out) *t_out = t;
  return (ea + t * d - u).norm();
}

namespace {

// Growing-sphere sweep along a single directed edge against a vertex set.
// Branches are the (up to two) sphere/segment intersection points; swap
// events between neighboring branches are the monotonicity radii.
struct EdgeSweep {
  const Point& ea;
  const Point& eb;
  const std::vector<Point>& centers;
  double len;

  struct Branch {
    int vertex;
    int side;  // -1: intersection moving toward the tail, +1: toward head
    double tproj, hdist;  // projection parameter and distance to the line
    double d_in, d_out;   // active radius interval on the segment
    bool valid = false;
  };
  std::vector<Branch> branches;

  EdgeSweep(const Point& a, const Point& b, const std::vector<Point>& pts)
      : ea(a), eb(b), centers(pts), len((b - a).norm()) {
    const Eigen::VectorXd d = eb - ea;
    for (int v = 0; v < static_cast<int>(centers.size()); ++v) {
      const double tp = d.dot(centers[v] - ea) / (len * len);
      const double h = (ea + tp * d - centers[v]).norm();
      const double da = (centers[v] - ea).norm();
      const double db = (centers[v] - eb).norm();
      Branch left{v, -1, tp, h, 0.0, 0.0, false};
      if (tp >= 0.0) {
        left.d_in = tp <= 1.0 ? h : db;
        left.d_out = da;
        left.valid = left.d_in <= left.d_out;
      }
      Branch right{v, +1, tp, h, 0.0, 0.0, false};
      if (tp <= 1.0) {
        right.d_in = tp >= 0.0 ? h : da;
        right.d_out = db;
        right.valid = right.d_in <= right.d_out;
      }
      branches.push_back(left);
      branches.push_back(right);
    }
  }

  double pos(int b, double delta) const {
    const Branch& br = branches[b];
    const double g =
        std::sqrt(std::max(delta * delta - br.hdist * br.hdist, 0.0)) / len;
    return br.tproj + br.side * g;
  }

  // Emits the monotonicity radii in [lo, hi] through `report`.
  template <class Report>
  void run(double lo, double hi, Report&& report) {
    struct Event {
      double delta;
      int kind;  // 0 insert, 1 remove, 2 swap
      int b1, b2;
      bool operator>(const Event& o) const {
        return std::tie(delta, kind, b1, b2) >
               std::tie(o.delta, o.kind, o.b1, o.b2);
      }
    };
    std::priority_queue<Event, std::vector<Event>, std::greater<Event>> pq;
    std::vector<int> order;              // active branches, sorted by position
    std::vector<int> where(branches.size(), -1);
    std::set<std::pair<int, int>> emitted;  // vertex pairs already reported

    auto schedule_swap = [&](int x, int y, double now) {
      const Branch& bx = branches[x];
      const Branch& by = branches[y];
      if (bx.vertex == by.vertex) return;
      double t = 0.0;
      // Canonical vertex order keeps the radius bitwise identical to other
      // call sites; the formula is not exactly symmetric in (u, w).
      const int cu = std::min(bx.vertex, by.vertex);
      const int cw = std::max(bx.vertex, by.vertex);
      auto r = monotonicity_radius(ea, eb, centers[cu], centers[cw], &t);
      if (!r) return;
      const double delta = *r;
      if (delta < now - 1e-9 * (1.0 + delta) || delta > hi) return;
      // The crossing belongs to exactly one branch of each sphere.
      const double tol = 1e-7 * (1.0 + len);
      if (std::abs(pos(x, delta) - t) > tol) return;
      if (std::abs(pos(y, delta) - t) > tol) return;
      pq.push({delta, 2, x, y});
    };
    auto insert_branch = [&](int b, double delta) {
      const double t = pos(b, delta);
      int at = static_cast<int>(order.size());
      for (int i = 0; i < static_cast<int>(order.size()); ++i) {
        const double ti = pos(order[i], delta);
        if (ti > t + 1e-15 || (std::abs(ti - t) <= 1e-15 && order[i] > b)) {
          at = i;
          break;
        }
      }
      order.insert(order.begin() + at, b);
      for (int i = at; i < static_cast<int>(order.size()); ++i) {
        where[order[i]] = i;
      }
      if (at > 0) schedule_swap(order[at - 1], b, delta);
      if (at + 1 < static_cast<int>(order.size())) {
        schedule_swap(b, order[at + 1], delta);
      }
    };
    auto remove_branch = [&](int b) {
      const int at = where[b];
      if (at < 0) return;
      order.erase(order.begin() + at);
      where[b] = -1;
      for (int i = at; i < static_cast<int>(order.size()); ++i) {
        where[order[i]] = i;
      }
      if (at > 0 && at < static_cast<int>(order.size())) {
        schedule_swap(order[at - 1], order[at], branches[b].d_out);
      }
    };

    // Seed the sweep analytically at radius lo instead of growing from 0.
    for (int b = 0; b < static_cast<int>(branches.size()); ++b) {
      if (!branches[b].valid) continue;
      if (branches[b].d_out < lo || branches[b].d_in > hi) continue;
      if (branches[b].d_in <= lo) {
        insert_branch(b, lo);
      } else {
        pq.push({branches[b].d_in, 0, b, -1});
      }
      if (branches[b].d_out <= hi) {
        pq.push({branches[b].d_out, 1, b, -1});
      }
    }
    for (int i = 0; i + 1 < static_cast<int>(order.size()); ++i) {
      schedule_swap(order[i], order[i + 1], lo);
    }

    while (!pq.empty()) {
      Event ev = pq.top();
      pq.pop();
      if (ev.kind == 0) {
        insert_branch(ev.b1, ev.delta);
      } else if (ev.kind == 1) {
        remove_branch(ev.b1);
      } else {
        const int x = ev.b1, y = ev.b2;
        if (where[x] < 0 || where[y] < 0) continue;
        // Stale unless x is still immediately left of y; duplicate events for
        // an already-performed swap fail this orientation check.
        if (where[x] + 1 != where[y]) continue;
        const int u = branches[x].vertex, w = branches[y].vertex;
        const auto key = std::minmax(u, w);
        std::swap(order[where[x]], order[where[y]]);
        std::swap(where[x], where[y]);
        if (ev.delta >= lo && emitted.insert(key).second) {
          report(ev.delta, key.first, key.second);
        }
        const int left = std::min(where[x], where[y]);
        if (left > 0) {
          schedule_swap(order[left - 1], order[left], ev.delta);
        }
        if (left + 2 < static_cast<int>(order.size())) {
          schedule_swap(order[left + 1], order[left + 2], ev.delta);
        }
      }
    }
  }
};

}  // namespace

std::vector<CriticalValue> extract(const DagComplex& c1, const DagComplex& c2,
                                   double a, double b) {
  std::vector<CriticalValue> out = enumerate_vv_ve(c1, c2, a, b);
  for (int e = 0; e < c1.num_edges(); ++e) {
    const auto [ea, eb] = c1.edges()[e];
    EdgeSweep sweep(c1.points()[ea], c1.points()[eb], c2.points());
    sweep.run(a, b, [&](double r, int u, int w) {
      out.push_back({r, CriticalKind::monotonicity, 0, e, u, w});
    });
  }
  for (int e = 0; e < c2.num_edges(); ++e) {
    const auto [ea, eb] = c2.edges()[e];
    EdgeSweep sweep(c2.points()[ea], c2.points()[eb], c1.points());
    sweep.run(a, b, [&](double r, int u, int w) {
      out.push_back({r, CriticalKind::monotonicity, 1, e, u, w});
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> sample_critical(const DagComplex& c1, const DagComplex& c2,
                                    int count, std::uint64_t seed) {
  if (count < 1) {
    throw GeometryError("sample_critical: count must be positive");
  }
  const double v1 = c1.num_vertices(), e1 = c1.num_edges();
  const double v2 = c2.num_vertices(), e2 = c2.num_edges();
  const double n_vv = v1 * v2;
  const double n_ve = v1 * e2 + v2 * e1;
  const double n_mono =
      0.5 * v1 * (v1 - 1.0) * e2 + 0.5 * v2 * (v2 - 1.0) * e1;
  const double total = n_vv + n_ve + n_mono;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> pick(0.0, total);
  auto unif = [&rng](int n) {
    return std::uniform_int_distribution<int>(0, n - 1)(rng);
  };
  std::vector<double> out;
  out.reserve(count);
  while (static_cast<int>(out.size()) < count) {
    const double r = pick(rng);
    if (r < n_vv) {
      out.push_back((c1.points()[unif(c1.num_vertices())] -
                     c2.points()[unif(c2.num_vertices())])
                        .norm());
    } else if (r < n_vv + n_ve) {
      const double share = v1 * e2;
      std::uniform_real_distribution<double> sub(0.0, n_ve);
      if (sub(rng) < share) {
        const auto [ea, eb] = c2.edges()[unif(c2.num_edges())];
        out.push_back(point_segment_distance(
            c1.points()[unif(c1.num_vertices())], c2.points()[ea],
            c2.points()[eb]));
      } else {
        const auto [ea, eb] = c1.edges()[unif(c1.num_edges())];
        out.push_back(point_segment_distance(
            c2.points()[unif(c2.num_vertices())], c1.points()[ea],
            c1.points()[eb]));
      }
    } else {
      const double share = 0.5 * v1 * (v1 - 1.0) * e2;
      std::uniform_real_distribution<double> sub(0.0, n_mono);
      const bool from1 = sub(rng) < share;
      const DagComplex& cv = from1 ? c1 : c2;  // supplies the vertex pair
      const DagComplex& ce = from1 ? c2 : c1;  // supplies the edge
      int u = unif(cv.num_vertices());
      int w = unif(cv.num_vertices());
      if (u == w) continue;  // resample; pairs are unordered and distinct
      if (u > w) std::swap(u, w);  // canonical order, see EdgeSweep
      const auto [ea, eb] = ce.edges()[unif(ce.num_edges())];
      auto r2 = monotonicity_radius(ce.points()[ea], ce.points()[eb],
                                    cv.points()[u], cv.points()[w]);
      if (!r2) continue;  // tuple defines no event; resample
      out.push_back(*r2);
    }
  }
  return out;
}

CompFrResult comp_fr(const DagComplex& c1, const DagComplex& c2, int s1,
                     int t1, int s2, int t2, std::uint64_t seed,
                     int sample_override) {
  const int n = std::max({c1.num_edges(), c2.num_edges(), 1});
  const int mu = sample_override > 0 ? sample_override : 4 * n * n;
  std::vector<double> r = sample_critical(c1, c2, mu, seed);
  std::sort(r.begin(), r.end());

  auto accept = [&](double delta) {
    return dag_decide(c1, c2, s1, t1, s2, t2, delta).reachable;
  };

  // Smallest accepting sample; the optimum then lies in (previous, it].
  int lo = -1, hi = static_cast<int>(r.size());
  while (hi - lo > 1) {
    const int mid = lo + (hi - lo) / 2;
    if (accept(r[mid])) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  double a = lo < 0 ? 0.0 : r[lo];
  double b;
  if (hi == static_cast<int>(r.size())) {
    // All samples reject; the optimum is bounded by the largest
    // vertex-vertex distance.
    b = 0.0;
    for (const Point& p : c1.points()) {
      for (const Point& q : c2.points()) {
        b = std::max(b, (p - q).norm());
      }
    }
  } else {
    b = r[hi];
  }

  // Widen the window by a few ulps so last-bit differences between sampled
  // and re-derived radii cannot drop the boundary value.
  std::vector<CriticalValue> crit =
      extract(c1, c2, a * (1.0 - 1e-12), b * (1.0 + 1e-12));
  std::vector<double> vals;
  vals.reserve(crit.size());
  for (const auto& cv : crit) vals.push_back(cv.radius);
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  if (vals.empty() || !accept(vals.back())) {
    throw GeometryError("comp_fr: no accepting critical value in interval");
  }
  lo = -1;
  hi = static_cast<int>(vals.size()) - 1;
  while (hi - lo > 1) {
    const int mid = lo + (hi - lo) / 2;
    if (accept(vals[mid])) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  const double x = vals[hi];
  DagDecision d = dag_decide(c1, c2, s1, t1, s2, t2, x, true);
  CompFrResult out;
  out.value = x;
  out.path = std::move(d.witness);
  return out;
}

}  // namespace frechet
