#ifndef FRECHET_CELLGRAPH_HPP
#define FRECHET_CELLGRAPH_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "frechet/complex.hpp"
#include "frechet/cost.hpp"

namespace frechet {

// One cell of the product polyhedral complex: a simplex id per factor.
struct CellId {
  std::vector<int> simplex;

  bool operator==(const CellId&) const = default;
  bool operator<(const CellId& o) const { return simplex < o.simplex; }
};

struct CellIdHash {
  std::size_t operator()(const CellId& id) const {
    std::uint64_t h = 1469598103934665603ull;
    for (int s : id.simplex) {
      h ^= static_cast<std::uint64_t>(s) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

struct CellGraphVertex {
  CellId id;
  double elevation = 0.0;
  std::vector<Point> witness;
};

// The product complex of k input complexes as an implicit graph.  Vertices
// are materialized lazily; elevations are pure functions of the id, so the
// memo table only avoids repeated minimizations.
class CellGraph {
 public:
  CellGraph(std::vector<const SimplicialComplex*> complexes,
            const CostFunction* cost);

  int factors() const { return static_cast<int>(complexes_.size()); }
  const SimplicialComplex& complex(int i) const { return *complexes_[i]; }
  const CostFunction& cost() const { return *cost_; }

  bool valid(const CellId& id) const;
  std::vector<CellId> neighbors(const CellId& id) const;
  const CellGraphVertex& vertex(const CellId& id);
  double elevation(const CellId& id) { return vertex(id).elevation; }
  double edge_elevation(const CellId& u, const CellId& v);

  Cell realize(const CellId& id) const;

  // Every cell tuple, in lexicographic order.  Theta(n^k); tests and the
  // explicit solver only.
  std::vector<CellId> all_cells() const;

  std::size_t materialized() const { return memo_.size(); }
  void clear_cache() { memo_.clear(); }

 private:
  std::vector<const SimplicialComplex*> complexes_;
  const CostFunction* cost_;
  std::unordered_map<CellId, CellGraphVertex, CellIdHash> memo_;
};

// Walk through product cells with witnesses; value is the maximum vertex
// elevation along the walk.
struct ProductPath {
  std::vector<CellGraphVertex> vertices;
  double value = 0.0;

  std::vector<double> breakpoints() const;
};

// Projection of a product path to one factor complex.
SimplicialPath project_path(const ProductPath& path, int which);

}  // namespace frechet

#endif
