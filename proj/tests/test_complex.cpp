#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "frechet/complex.hpp"
#include "helpers.hpp"

using namespace frechet;
using namespace frechet::testing;

namespace {

SimplicialComplex random_complex(std::mt19937_64& rng, int n_points,
                                 int n_maximal) {
  std::vector<Point> pts;
  for (int i = 0; i < n_points; ++i) pts.push_back(random_point(rng, 2));
  std::vector<std::vector<int>> maximal;
  for (int i = 0; i < n_maximal; ++i) {
    const int sz = 1 + static_cast<int>(rng() % 3);
    std::set<int> verts;
    while (static_cast<int>(verts.size()) < sz) {
      verts.insert(static_cast<int>(rng() % n_points));
    }
    maximal.emplace_back(verts.begin(), verts.end());
  }
  for (int v = 0; v < n_points; ++v) maximal.push_back({v});
  return SimplicialComplex::from_maximal(std::move(pts), maximal);
}

}  // namespace

TEST_CASE("face lattice matches brute-force subset tests") {
  std::mt19937_64 rng(21);
  for (int iter = 0; iter < 30; ++iter) {
    const auto c = random_complex(rng, 4 + static_cast<int>(rng() % 4), 4);
    for (int i = 0; i < c.size(); ++i) {
      for (int j = 0; j < c.size(); ++j) {
        const bool face = is_proper_face(c.simplex(j), c.simplex(i));
        const auto& faces = c.faces(i);
        const bool listed =
            std::find(faces.begin(), faces.end(), j) != faces.end();
        CHECK(face == listed);
        const auto& cofaces = c.cofaces(j);
        const bool colisted =
            std::find(cofaces.begin(), cofaces.end(), i) != cofaces.end();
        CHECK(face == colisted);
        const auto& adj = c.adjacent(i);
        const bool adjacent =
            std::find(adj.begin(), adj.end(), j) != adj.end();
        CHECK(adjacent == (face || is_proper_face(c.simplex(i), c.simplex(j))));
      }
    }
  }
}

TEST_CASE("simplex id lookup") {
  std::vector<Point> pts = {make_point({0, 0}), make_point({1, 0}),
                            make_point({0, 1})};
  const auto c = SimplicialComplex::from_maximal(pts, {{0, 1, 2}});
  CHECK(c.size() == 7);
  CHECK(c.simplex_id({0, 1, 2}) >= 0);
  CHECK(c.simplex_id({2, 0, 1}) == c.simplex_id({0, 1, 2}));
  CHECK(c.simplex_id({0, 2}) >= 0);
  CHECK(c.simplex_id({1, 3}) == -1);
  for (int v = 0; v < 3; ++v) {
    CHECK(c.simplex(c.vertex_simplex(v)) == std::vector<int>{v});
  }
}

TEST_CASE("validate reports downward-closure violations") {
  std::vector<Point> pts = {make_point({0, 0}), make_point({1, 0}),
                            make_point({0, 1})};
  const SimplicialComplex broken(pts, {{0}, {1}, {2}, {0, 1, 2}});
  bool found = false;
  for (const auto& v : broken.validate()) {
    if (v.rule == "downward-closure") found = true;
  }
  CHECK(found);
  const auto good = SimplicialComplex::from_maximal(pts, {{0, 1, 2}});
  CHECK(good.validate().empty());
}

TEST_CASE("validate reports affine dependence") {
  std::vector<Point> pts = {make_point({0, 0}), make_point({1, 1}),
                            make_point({2, 2})};
  const auto c = SimplicialComplex::from_maximal(pts, {{0, 1, 2}});
  bool found = false;
  for (const auto& v : c.validate()) {
    if (v.rule == "affine-independence") found = true;
  }
  CHECK(found);
}

TEST_CASE("curve collapses duplicate consecutive vertices") {
  std::vector<Point> pts = {make_point({0, 0}), make_point({0, 0}),
                            make_point({1, 0}), make_point({2, 0})};
  const Curve c(pts);
  CHECK(c.num_vertices() == 3);
  CHECK(c.length() == doctest::Approx(2.0));
  // n vertices, n-1 segments.
  CHECK(c.complex().size() == 5);
  CHECK(c.start_point() == 0);
  CHECK(c.end_point() == 2);
}

TEST_CASE("dag complex ranks increase along edges") {
  std::vector<Point> pts = {make_point({0, 0}), make_point({1, 0}),
                            make_point({1, 1}), make_point({2, 0})};
  const DagComplex dag(pts, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  for (const auto& [u, w] : dag.edges()) {
    CHECK(dag.topo_rank(u) < dag.topo_rank(w));
  }
  CHECK(dag.out_edges(0).size() == 2);
  CHECK(dag.in_edges(3).size() == 2);
  CHECK(dag.validate().empty());
}

TEST_CASE("cyclic dag fails validation") {
  std::vector<Point> pts = {make_point({0, 0}), make_point({1, 0}),
                            make_point({0, 1})};
  CHECK_THROWS_AS(DagComplex(pts, {{0, 1}, {1, 2}, {2, 0}}), GeometryError);
}

TEST_CASE("dag from curve") {
  std::mt19937_64 rng(22);
  const Curve c = random_curve(rng, 5);
  const DagComplex dag = DagComplex::from_curve(c);
  CHECK(dag.num_vertices() == 5);
  CHECK(dag.num_edges() == 4);
  for (int i = 0; i + 1 < 5; ++i) {
    CHECK(dag.edges()[i] == std::pair<int, int>(i, i + 1));
  }
}
