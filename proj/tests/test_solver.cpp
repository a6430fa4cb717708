#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "frechet/solver.hpp"
#include "helpers.hpp"

using namespace frechet;
using namespace frechet::testing;

namespace {

void check_endpoints(const ProductPath& path,
                     const std::vector<const SimplicialComplex*>& complexes,
                     const std::vector<int>& starts,
                     const std::vector<int>& ends) {
  REQUIRE(!path.vertices.empty());
  for (size_t f = 0; f < complexes.size(); ++f) {
    CHECK(path.vertices.front().id.simplex[f] ==
          complexes[f]->vertex_simplex(starts[f]));
    CHECK(path.vertices.back().id.simplex[f] ==
          complexes[f]->vertex_simplex(ends[f]));
  }
  double value = 0.0;
  for (const auto& v : path.vertices) value = std::max(value, v.elevation);
  CHECK(path.value == doctest::Approx(value).epsilon(1e-12));
}

}  // namespace

TEST_CASE("weak frechet matches the exhaustive oracle") {
  std::mt19937_64 rng(61);
  for (int iter = 0; iter < 60; ++iter) {
    const Curve a = random_curve(rng, 2 + static_cast<int>(rng() % 5));
    const Curve b = random_curve(rng, 2 + static_cast<int>(rng() % 5));
    const double want =
        weak_frechet_oracle(a.complex(), b.complex(), 0, a.end_point(), 0,
                            b.end_point());
    for (SolveMode mode : {SolveMode::lazy, SolveMode::explicit_graph}) {
      const auto path = weak_frechet_paths(a.complex(), b.complex(), 0,
                                           a.end_point(), 0, b.end_point(),
                                           mode);
      CHECK(path.value == doctest::Approx(want).epsilon(1e-9));
      check_endpoints(path, {&a.complex(), &b.complex()},
                      {0, 0}, {a.end_point(), b.end_point()});
    }
  }
}

TEST_CASE("weak frechet of a curve with itself is zero") {
  std::mt19937_64 rng(62);
  for (int iter = 0; iter < 10; ++iter) {
    const Curve a = random_curve(rng, 5);
    CHECK(weak_frechet_curves(a, a) == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("weak frechet is symmetric") {
  std::mt19937_64 rng(63);
  for (int iter = 0; iter < 20; ++iter) {
    const Curve a = random_curve(rng, 4), b = random_curve(rng, 5);
    CHECK(weak_frechet_curves(a, b) ==
          doctest::Approx(weak_frechet_curves(b, a)).epsilon(1e-12));
  }
}

TEST_CASE("lazy and explicit solvers agree for every cost") {
  std::mt19937_64 rng(64);
  for (int iter = 0; iter < 15; ++iter) {
    std::vector<Curve> curves;
    for (int i = 0; i < 3; ++i) {
      curves.push_back(random_curve(rng, 2 + static_cast<int>(rng() % 3)));
    }
    std::vector<const SimplicialComplex*> complexes;
    std::vector<int> starts = {0, 0, 0}, ends;
    for (const auto& c : curves) {
      complexes.push_back(&c.complex());
      ends.push_back(c.end_point());
    }
    StarMaxCost star(0);
    MebRadiusCost meb;
    WeightedSumCost wsum({{0, 1, 1.0}, {0, 2, 1.0}, {1, 2, 0.5}});
    HullPerimeterCost perimeter;
    const CostFunction* costs[] = {&star, &meb, &wsum, &perimeter};
    for (const CostFunction* cost : costs) {
      const auto lazy =
          k_complex_paths(complexes, starts, ends, *cost, SolveMode::lazy);
      const auto full = k_complex_paths(complexes, starts, ends, *cost,
                                        SolveMode::explicit_graph);
      CHECK(lazy.value == doctest::Approx(full.value).epsilon(1e-9));
      check_endpoints(lazy, complexes, starts, ends);
      check_endpoints(full, complexes, starts, ends);
    }
  }
}

TEST_CASE("mean value is half the weak frechet distance for two curves") {
  std::mt19937_64 rng(65);
  for (int iter = 0; iter < 40; ++iter) {
    std::vector<Curve> curves = {
        random_curve(rng, 2 + static_cast<int>(rng() % 5)),
        random_curve(rng, 2 + static_cast<int>(rng() % 5))};
    const auto res = mean_curve(curves);
    const double weak = weak_frechet_curves(curves[0], curves[1]);
    CHECK(std::abs(res.value - weak / 2.0) <= 1e-7);
    CHECK(res.mean.num_vertices() >= 1);
  }
}

TEST_CASE("mean curve centers stay within the optimal radius") {
  std::mt19937_64 rng(66);
  std::vector<Curve> curves = {random_curve(rng, 4), random_curve(rng, 4),
                               random_curve(rng, 3)};
  const auto res = mean_curve(curves, 8);
  // Every sampled center is the enclosing-ball center of a configuration on
  // the optimal motion, so its ball radius is at most the optimum.
  for (size_t i = 0; i + 1 < res.path.vertices.size(); ++i) {
    const auto& u = res.path.vertices[i];
    const auto& v = res.path.vertices[i + 1];
    for (int s = 0; s <= 4; ++s) {
      const double t = s / 4.0;
      std::vector<Point> config;
      for (size_t f = 0; f < u.witness.size(); ++f) {
        config.push_back((1 - t) * u.witness[f] + t * v.witness[f]);
      }
      CHECK(min_enclosing_ball(config).radius <= res.value + 1e-7);
    }
  }
}

TEST_CASE("walk dogs equals the star-max lowest path") {
  std::mt19937_64 rng(67);
  std::vector<Curve> curves = {random_curve(rng, 3), random_curve(rng, 4),
                               random_curve(rng, 3)};
  std::vector<const SimplicialComplex*> complexes;
  std::vector<int> starts = {0, 0, 0}, ends;
  for (const auto& c : curves) {
    complexes.push_back(&c.complex());
    ends.push_back(c.end_point());
  }
  for (int handler = 0; handler < 3; ++handler) {
    StarMaxCost cost(handler);
    const auto direct = k_complex_paths(complexes, starts, ends, cost);
    const auto dogs = walk_dogs(complexes, starts, ends, handler);
    CHECK(dogs.value == doctest::Approx(direct.value).epsilon(1e-12));
  }
}

TEST_CASE("perimeter motion equals the hull-perimeter lowest path") {
  std::mt19937_64 rng(68);
  std::vector<Curve> curves = {random_curve(rng, 3), random_curve(rng, 3),
                               random_curve(rng, 4)};
  std::vector<const SimplicialComplex*> complexes;
  std::vector<int> starts = {0, 0, 0}, ends;
  for (const auto& c : curves) {
    complexes.push_back(&c.complex());
    ends.push_back(c.end_point());
  }
  HullPerimeterCost cost;
  const auto direct = k_complex_paths(complexes, starts, ends, cost);
  const auto motion = min_perimeter_motion(complexes, starts, ends);
  CHECK(motion.value == doctest::Approx(direct.value).epsilon(1e-12));
}

TEST_CASE("disconnected endpoints raise an error") {
  std::vector<Point> pts = {make_point({0, 0}), make_point({1, 0}),
                            make_point({0, 1})};
  // Two isolated vertices plus one segment: no path from 0 to 2.
  const SimplicialComplex c1 =
      SimplicialComplex::from_maximal(pts, {{0, 1}, {2}});
  std::mt19937_64 rng(69);
  const Curve b = random_curve(rng, 2);
  CHECK_THROWS_AS(
      weak_frechet_paths(c1, b.complex(), 0, 2, 0, b.end_point()),
      GeometryError);
}

TEST_CASE("solver works on branching complexes") {
  // A theta-shaped complex: two paths between the endpoints; the solver may
  // pick either branch against a straight segment.
  std::vector<Point> pts = {make_point({0, 0}), make_point({1, 1}),
                            make_point({1, -1}), make_point({2, 0})};
  const auto theta = SimplicialComplex::from_maximal(
      pts, {{0, 1}, {1, 3}, {0, 2}, {2, 3}});
  const Curve seg({make_point({0, 0}), make_point({2, 0})});
  const auto path = weak_frechet_paths(theta, seg.complex(), 0, 3, 0, 1);
  const double want =
      weak_frechet_oracle(theta, seg.complex(), 0, 3, 0, 1);
  CHECK(path.value == doctest::Approx(want).epsilon(1e-9));
  CHECK(path.value == doctest::Approx(1.0).epsilon(1e-9));
}
