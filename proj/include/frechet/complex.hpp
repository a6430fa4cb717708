#ifndef FRECHET_COMPLEX_HPP
#define FRECHET_COMPLEX_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "frechet/geometry.hpp"

namespace frechet {

struct Violation {
  std::string rule;    // "downward-closure", "affine-independence", ...
  std::string detail;  // names the offending simplex
};

// An abstract simplicial complex with realization in R^d.  Simplices are
// stored as sorted vertex-index tuples; the face lattice is precomputed.
// Instances are immutable after construction and safe to share across
// threads for reads.
class SimplicialComplex {
 public:
  SimplicialComplex(std::vector<Point> points,
                    std::vector<std::vector<int>> simplices,
                    std::string name = "");

  // Builds the downward closure of the given maximal simplices.
  static SimplicialComplex from_maximal(std::vector<Point> points,
                                        const std::vector<std::vector<int>>& maximal,
                                        std::string name = "");

  int size() const { return static_cast<int>(simplices_.size()); }
  int num_points() const { return static_cast<int>(points_.size()); }
  int ambient_dim() const {
    return points_.empty() ? 0 : static_cast<int>(points_[0].size());
  }
  const std::string& name() const { return name_; }
  const std::vector<Point>& points() const { return points_; }
  const std::vector<std::vector<int>>& simplices() const { return simplices_; }
  const std::vector<int>& simplex(int id) const { return simplices_[id]; }
  int simplex_dim(int id) const {
    return static_cast<int>(simplices_[id].size()) - 1;
  }

  // Id lookup; -1 when the vertex tuple is not a simplex of the complex.
  int simplex_id(std::vector<int> verts) const;
  // Id of the 0-simplex {point_index}; -1 if absent.
  int vertex_simplex(int point_index) const;

  // Proper faces / cofaces present in the complex.
  const std::vector<int>& faces(int id) const { return faces_[id]; }
  const std::vector<int>& cofaces(int id) const { return cofaces_[id]; }
  // Faces and cofaces combined: the cells adjacent to `id`.
  const std::vector<int>& adjacent(int id) const { return adjacent_[id]; }

  SimplexGeometry geometry(int id) const;

  std::vector<Violation> validate() const;

 private:
  std::vector<Point> points_;
  std::vector<std::vector<int>> simplices_;
  std::string name_;
  std::map<std::vector<int>, int> index_;
  std::vector<std::vector<int>> faces_, cofaces_, adjacent_;
};

// A polygonal curve given by its ordered vertices; maximal simplices are the
// consecutive segments.
class Curve {
 public:
  // Coinciding consecutive vertices are collapsed unless keep_degenerate.
  explicit Curve(std::vector<Point> vertices, std::string name = "",
                 bool keep_degenerate = false);

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  const std::vector<Point>& vertices() const { return vertices_; }
  const Point& vertex(int i) const { return vertices_[i]; }
  const SimplicialComplex& complex() const { return complex_; }
  const std::string& name() const { return complex_.name(); }
  int start_point() const { return 0; }
  int end_point() const { return num_vertices() - 1; }
  double length() const;

 private:
  std::vector<Point> vertices_;
  SimplicialComplex complex_;
};

Curve curve_to_complex(const std::vector<Point>& vertices,
                       std::string name = "");

// A directed acyclic straight-line graph embedded in R^d.  The underlying
// undirected complex is used wherever orientation does not matter.
class DagComplex {
 public:
  DagComplex(std::vector<Point> points,
             std::vector<std::pair<int, int>> edges, std::string name = "");
  static DagComplex from_curve(const Curve& curve);

  const std::vector<Point>& points() const { return points_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int num_vertices() const { return static_cast<int>(points_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const SimplicialComplex& complex() const { return complex_; }
  // Topological rank of a vertex; ranks increase along directed edges.
  int topo_rank(int v) const { return topo_rank_[v]; }
  const std::vector<int>& out_edges(int v) const { return out_edges_[v]; }
  const std::vector<int>& in_edges(int v) const { return in_edges_[v]; }
  const std::string& name() const { return complex_.name(); }

  std::vector<Violation> validate() const;

 private:
  std::vector<Point> points_;
  std::vector<std::pair<int, int>> edges_;
  SimplicialComplex complex_;
  std::vector<int> topo_rank_;
  std::vector<std::vector<int>> out_edges_, in_edges_;
};

// A walk through the cells of one complex with witness points and shared
// parameter breakpoints.
struct SimplicialPath {
  std::vector<int> simplex_ids;
  std::vector<Point> witnesses;
  std::vector<double> breakpoints;
};

}  // namespace frechet

#endif
