#include "frechet/complex.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

namespace frechet {

namespace {

std::string simplex_str(const std::vector<int>& s) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << "}";
  return os.str();
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<Point> points,
                                     std::vector<std::vector<int>> simplices,
                                     std::string name)
    : points_(std::move(points)), name_(std::move(name)) {
  for (auto& s : simplices) std::sort(s.begin(), s.end());
  std::sort(simplices.begin(), simplices.end(),
            [](const auto& a, const auto& b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
  simplices.erase(std::unique(simplices.begin(), simplices.end()),
                  simplices.end());
  simplices_ = std::move(simplices);
  for (int i = 0; i < size(); ++i) index_[simplices_[i]] = i;

  faces_.resize(size());
  cofaces_.resize(size());
  adjacent_.resize(size());
  for (int i = 0; i < size(); ++i) {
    const auto& s = simplices_[i];
    const int m = static_cast<int>(s.size());
    // All proper nonempty subsets; each simplex has at most 2^(dim+1) faces.
    for (unsigned mask = 1; mask + 1 < (1u << m); ++mask) {
      std::vector<int> sub;
      for (int b = 0; b < m; ++b) {
        if (mask & (1u << b)) sub.push_back(s[b]);
      }
      auto it = index_.find(sub);
      if (it != index_.end()) {
        faces_[i].push_back(it->second);
        cofaces_[it->second].push_back(i);
      }
    }
  }
  for (int i = 0; i < size(); ++i) {
    adjacent_[i] = faces_[i];
    adjacent_[i].insert(adjacent_[i].end(), cofaces_[i].begin(),
                        cofaces_[i].end());
    std::sort(adjacent_[i].begin(), adjacent_[i].end());
  }
}

SimplicialComplex SimplicialComplex::from_maximal(
    std::vector<Point> points, const std::vector<std::vector<int>>& maximal,
    std::string name) {
  std::set<std::vector<int>> closed;
  for (auto s : maximal) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    const int m = static_cast<int>(s.size());
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
      std::vector<int> sub;
      for (int b = 0; b < m; ++b) {
        if (mask & (1u << b)) sub.push_back(s[b]);
      }
      closed.insert(std::move(sub));
    }
  }
  return SimplicialComplex(std::move(points),
                           {closed.begin(), closed.end()}, std::move(name));
}

int SimplicialComplex::simplex_id(std::vector<int> verts) const {
  std::sort(verts.begin(), verts.end());
  auto it = index_.find(verts);
  return it == index_.end() ? -1 : it->second;
}

int SimplicialComplex::vertex_simplex(int point_index) const {
  return simplex_id({point_index});
}

SimplexGeometry SimplicialComplex::geometry(int id) const {
  const auto& s = simplices_[id];
  Eigen::MatrixXd m(ambient_dim(), s.size());
  for (size_t i = 0; i < s.size(); ++i) m.col(i) = points_[s[i]];
  return SimplexGeometry(std::move(m));
}

std::vector<Violation> SimplicialComplex::validate() const {
  std::vector<Violation> out;
  for (const auto& p : points_) {
    if (!p.allFinite() ||
        static_cast<int>(p.size()) != ambient_dim()) {
      out.push_back({"points", "non-finite or inconsistent coordinates"});
      break;
    }
  }
  // Downward closure.
  for (int i = 0; i < size(); ++i) {
    const auto& s = simplices_[i];
    const int m = static_cast<int>(s.size());
    for (unsigned mask = 1; mask + 1 < (1u << m); ++mask) {
      std::vector<int> sub;
      for (int b = 0; b < m; ++b) {
        if (mask & (1u << b)) sub.push_back(s[b]);
      }
      if (!index_.count(sub)) {
        out.push_back({"downward-closure", "simplex " + simplex_str(s) +
                                               " missing face " +
                                               simplex_str(sub)});
      }
    }
  }
  // Affine independence.
  for (int i = 0; i < size(); ++i) {
    for (int v : simplices_[i]) {
      if (v < 0 || v >= num_points()) {
        out.push_back({"index-range", "simplex " + simplex_str(simplices_[i])});
        return out;
      }
    }
    try {
      (void)geometry(i);
    } catch (const GeometryError& e) {
      out.push_back({"affine-independence",
                     "simplex " + simplex_str(simplices_[i]) + ": " +
                         e.what()});
    }
  }
  // Local consistency, sampled: a sample of rel(A) that also lies in rel(B)
  // must lie in the realization of the shared face.
  for (int i = 0; i < size(); ++i) {
    for (int j = i + 1; j < size(); ++j) {
      std::vector<int> shared;
      std::set_intersection(simplices_[i].begin(), simplices_[i].end(),
                            simplices_[j].begin(), simplices_[j].end(),
                            std::back_inserter(shared));
      if (shared.empty()) continue;
      int sid = -1;
      if (auto it = index_.find(shared); it != index_.end()) sid = it->second;
      std::optional<SimplexGeometry> ogi, ogj;
      try {
        ogi = geometry(i);
        ogj = geometry(j);
        if (sid >= 0) (void)geometry(sid);
      } catch (const GeometryError&) {
        continue;  // already reported as an affine-independence violation
      }
      SimplexGeometry gi = *ogi, gj = *ogj;
      const double tol =
          1e-9 * std::max(1.0, gi.vertices().cwiseAbs().maxCoeff());
      std::vector<Point> samples;
      samples.push_back(gi.vertices().rowwise().mean());
      for (int a = 0; a < gi.dim() + 1; ++a) {
        for (int b = a + 1; b < gi.dim() + 1; ++b) {
          samples.push_back(0.5 * (gi.vertex(a) + gi.vertex(b)));
        }
      }
      for (const auto& x : samples) {
        if (gj.distance_to(x) > tol) continue;
        bool ok = sid >= 0 && geometry(sid).distance_to(x) <= tol;
        if (!ok) {
          out.push_back({"local-consistency",
                         "simplices " + simplex_str(simplices_[i]) + " and " +
                             simplex_str(simplices_[j])});
          break;
        }
      }
    }
  }
  // Connectivity.
  if (num_points() > 0) {
    UnionFind uf(num_points());
    for (const auto& s : simplices_) {
      for (size_t v = 1; v < s.size(); ++v) uf.unite(s[0], s[v]);
    }
    std::set<int> roots;
    for (int p = 0; p < num_points(); ++p) roots.insert(uf.find(p));
    if (roots.size() > 1) {
      out.push_back({"connectivity",
                     std::to_string(roots.size()) + " components"});
    }
    for (int p = 0; p < num_points(); ++p) {
      if (!index_.count({p})) {
        out.push_back({"downward-closure",
                       "point " + std::to_string(p) + " has no 0-simplex"});
      }
    }
  }
  return out;
}

Curve::Curve(std::vector<Point> vertices, std::string name,
             bool keep_degenerate)
    : complex_({}, {}) {
  if (vertices.empty()) {
    throw GeometryError("curve: needs at least one vertex");
  }
  if (!keep_degenerate) {
    std::vector<Point> kept;
    for (auto& v : vertices) {
      if (kept.empty() || (kept.back() - v).norm() > 0.0) {
        kept.push_back(std::move(v));
      }
    }
    vertices = std::move(kept);
  }
  vertices_ = std::move(vertices);
  std::vector<std::vector<int>> maximal;
  if (vertices_.size() == 1) {
    maximal.push_back({0});
  } else {
    for (int i = 0; i + 1 < static_cast<int>(vertices_.size()); ++i) {
      maximal.push_back({i, i + 1});
    }
  }
  complex_ = SimplicialComplex::from_maximal(vertices_, maximal,
                                             std::move(name));
}

double Curve::length() const {
  double len = 0.0;
  for (int i = 0; i + 1 < num_vertices(); ++i) {
    len += (vertices_[i + 1] - vertices_[i]).norm();
  }
  return len;
}

Curve curve_to_complex(const std::vector<Point>& vertices, std::string name) {
  return Curve(vertices, std::move(name));
}

DagComplex::DagComplex(std::vector<Point> points,
                       std::vector<std::pair<int, int>> edges,
                       std::string name)
    : points_(std::move(points)), edges_(std::move(edges)), complex_({}, {}) {
  const int n = static_cast<int>(points_.size());
  out_edges_.resize(n);
  in_edges_.resize(n);
  std::vector<int> indeg(n, 0);
  for (int e = 0; e < num_edges(); ++e) {
    auto [u, v] = edges_[e];
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GeometryError("dag: edge index out of range");
    }
    out_edges_[u].push_back(e);
    in_edges_[v].push_back(e);
    ++indeg[v];
  }
  // Kahn topological sort; a leftover vertex means a directed cycle.
  topo_rank_.assign(n, -1);
  std::deque<int> q;
  for (int v = 0; v < n; ++v) {
    if (indeg[v] == 0) q.push_back(v);
  }
  int rank = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    topo_rank_[v] = rank++;
    for (int e : out_edges_[v]) {
      if (--indeg[edges_[e].second] == 0) q.push_back(edges_[e].second);
    }
  }
  if (rank != n) {
    throw GeometryError("dag: directed cycle detected");
  }
  std::vector<std::vector<int>> maximal;
  for (auto& [u, v] : edges_) maximal.push_back({u, v});
  if (maximal.empty() && n == 1) maximal.push_back({0});
  complex_ = SimplicialComplex::from_maximal(points_, maximal,
                                             std::move(name));
}

DagComplex DagComplex::from_curve(const Curve& curve) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < curve.num_vertices(); ++i) edges.emplace_back(i, i + 1);
  return DagComplex(curve.vertices(), std::move(edges), curve.name());
}

std::vector<Violation> DagComplex::validate() const {
  return complex_.validate();
}

}  // namespace frechet
