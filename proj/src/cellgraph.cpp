#include "frechet/cellgraph.hpp"

#include <algorithm>

namespace frechet {

CellGraph::CellGraph(std::vector<const SimplicialComplex*> complexes,
                     const CostFunction* cost)
    : complexes_(std::move(complexes)), cost_(cost) {
  if (complexes_.empty() || cost_ == nullptr) {
    throw GeometryError("cell graph: needs complexes and a cost");
  }
}

bool CellGraph::valid(const CellId& id) const {
  if (static_cast<int>(id.simplex.size()) != factors()) return false;
  for (int i = 0; i < factors(); ++i) {
    if (id.simplex[i] < 0 || id.simplex[i] >= complexes_[i]->size()) {
      return false;
    }
  }
  return true;
}

std::vector<CellId> CellGraph::neighbors(const CellId& id) const {
  if (!valid(id)) {
    throw GeometryError("cell graph: invalid cell id");
  }
  std::vector<CellId> out;
  for (int i = 0; i < factors(); ++i) {
    for (int adj : complexes_[i]->adjacent(id.simplex[i])) {
      CellId n = id;
      n.simplex[i] = adj;
      out.push_back(std::move(n));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Cell CellGraph::realize(const CellId& id) const {
  Cell cell;
  cell.simplices.reserve(factors());
  for (int i = 0; i < factors(); ++i) {
    cell.simplices.push_back(complexes_[i]->geometry(id.simplex[i]));
  }
  return cell;
}

const CellGraphVertex& CellGraph::vertex(const CellId& id) {
  auto it = memo_.find(id);
  if (it != memo_.end()) return it->second;
  if (!valid(id)) {
    throw GeometryError("cell graph: invalid cell id");
  }
  CellMinimum m = cost_->minimize_checked(realize(id));
  CellGraphVertex v;
  v.id = id;
  v.elevation = m.value;
  v.witness = std::move(m.witness);
  return memo_.emplace(id, std::move(v)).first->second;
}

double CellGraph::edge_elevation(const CellId& u, const CellId& v) {
  auto ns = neighbors(u);
  if (!std::binary_search(ns.begin(), ns.end(), v)) {
    throw GeometryError("cell graph: edge_elevation on non-adjacent cells");
  }
  return std::max(vertex(u).elevation, vertex(v).elevation);
}

std::vector<CellId> CellGraph::all_cells() const {
  std::vector<CellId> out;
  CellId cur;
  cur.simplex.assign(factors(), 0);
  while (true) {
    out.push_back(cur);
    int i = factors() - 1;
    while (i >= 0 && cur.simplex[i] + 1 >= complexes_[i]->size()) {
      cur.simplex[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++cur.simplex[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> ProductPath::breakpoints() const {
  const int m = static_cast<int>(vertices.size());
  std::vector<double> bp(m);
  for (int i = 0; i < m; ++i) {
    bp[i] = m == 1 ? 0.0 : static_cast<double>(i) / (m - 1);
  }
  return bp;
}

SimplicialPath project_path(const ProductPath& path, int which) {
  SimplicialPath out;
  out.breakpoints = path.breakpoints();
  for (const auto& v : path.vertices) {
    if (which < 0 || which >= static_cast<int>(v.id.simplex.size())) {
      throw GeometryError("project_path: complex index out of range");
    }
    out.simplex_ids.push_back(v.id.simplex[which]);
    out.witnesses.push_back(v.witness[which]);
  }
  return out;
}

}  // namespace frechet
