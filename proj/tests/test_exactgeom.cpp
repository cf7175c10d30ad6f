#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

using namespace dcdecomp;
using namespace dcdecomp::testing;

namespace {

HPolyhedron unit_square() { return IntegralBox::cube(2, 0, 1).to_hrep(); }

}  // namespace

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(parse_rational("3/6"), q(1, 2));
  EXPECT_EQ(parse_rational("-4"), q(-4));
  EXPECT_EQ(format_rational(q(-2, 4)), "-1/2");
  EXPECT_EQ(format_rational(q(0, 5)), "0");
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("1/-2"), Error);
  EXPECT_THROW(parse_rational("x"), Error);
  EXPECT_EQ(floor_of(q(-1, 2)), -1);
  EXPECT_EQ(ceil_of(q(-1, 2)), 0);
}

TEST(LpSolve, BoxCorner) {
  auto r = lp_solve(unit_square(), pti({1, 1}), Sense::Maximize);
  ASSERT_TRUE(r.optimal());
  EXPECT_EQ(r.value, 2);
  EXPECT_EQ(r.point, pti({1, 1}));
}

TEST(LpSolve, UnboundedAlongDiagonal) {
  auto r = lp_solve(worked_example_2d(), pti({1, 1}), Sense::Maximize);
  ASSERT_TRUE(r.unbounded());
  EXPECT_EQ(r.ray, pti({1, 1}));
}

TEST(LpSolve, Infeasible) {
  auto P = hpoly(1, {{{1}, 0, "<="}, {{1}, 1, ">="}});
  EXPECT_TRUE(lp_solve(P, pti({1}), Sense::Maximize).infeasible());
}

TEST(LpSolve, MinimizeWithEquality) {
  auto P = hpoly(2, {{{1, 1}, 3, "="}, {{1, 0}, 0, ">="}, {{0, 1}, 0, ">="}});
  auto r = lp_solve(P, pti({1, 2}), Sense::Minimize);
  ASSERT_TRUE(r.optimal());
  EXPECT_EQ(r.value, 3);
  EXPECT_EQ(r.point, pti({3, 0}));
}

TEST(LpSolve, DegenerateContradictoryRow) {
  HPolyhedron P(2);
  P.add_le(pti({0, 0}), -1);
  EXPECT_TRUE(P.has_contradictory_row());
  EXPECT_TRUE(lp_solve(P, pti({1, 0}), Sense::Maximize).infeasible());
}

TEST(LpSolve, DimensionMismatch) {
  EXPECT_THROW(lp_solve(unit_square(), pti({1}), Sense::Maximize), Error);
}

TEST(ToVrep, WorkedExample) {
  auto V = to_vrep(worked_example_2d());
  EXPECT_EQ(V.vertices, (std::vector<Point>{pti({0, 1}), pti({1, 0})}));
  EXPECT_EQ(V.rays, (std::vector<Point>{pti({1, 1})}));
}

TEST(ToVrep, UnitSquare) {
  auto V = to_vrep(unit_square());
  EXPECT_EQ(V.vertices.size(), 4u);
  EXPECT_TRUE(V.rays.empty());
  EXPECT_EQ(V.vertices, brute_force_vertices(unit_square()));
}

TEST(ToVrep, PointedWedge) {
  auto P = hpoly(2, {{{1, -1}, 0, ">="}, {{0, 1}, 0, ">="}});
  auto V = to_vrep(P);
  EXPECT_EQ(V.vertices, (std::vector<Point>{pti({0, 0})}));
  EXPECT_EQ(V.rays, (std::vector<Point>{pti({1, 0}), pti({1, 1})}));
}

TEST(ToVrep, LinealityAsOppositeRays) {
  auto P = hpoly(2, {{{1, -1}, 0, "="}});
  auto V = to_vrep(P);
  EXPECT_EQ(V.vertices.size(), 1u);
  EXPECT_EQ(V.rays, (std::vector<Point>{pti({-1, -1}), pti({1, 1})}));
}

TEST(ToVrep, EmptyAndCap) {
  auto P = hpoly(1, {{{1}, 0, "<="}, {{1}, 1, ">="}});
  EXPECT_THROW(to_vrep(P), Error);
  Limits lim;
  lim.dim_cap = 2;
  EXPECT_THROW(to_vrep(IntegralBox::cube(3, 0, 1).to_hrep(), lim), Error);
}

TEST(ToHrep, TriangleIsPlaneSection) {
  VPolyhedron V{3, {pti({1, 0, 0}), pti({0, 1, 0}), pti({0, 0, 1})}, {}};
  auto H = to_hrep(V);
  auto expected = hpoly(3, {{{1, 1, 1}, 1, "="}, {{1, 0, 0}, 0, ">="}, {{0, 1, 0}, 0, ">="}, {{0, 0, 1}, 0, ">="}});
  EXPECT_TRUE(polyhedra_equal(H, expected));
}

TEST(ToHrep, SingleRay) {
  VPolyhedron V{2, {pti({0, 0})}, {pti({1, 1})}};
  auto H = to_hrep(V);
  EXPECT_TRUE(polyhedra_equal(H, hpoly(2, {{{1, -1}, 0, "="}, {{1, 0}, 0, ">="}})));
}

TEST(ToHrep, FourPointsGiveSquare) {
  VPolyhedron V{2, {pti({0, 0}), pti({1, 1}), pti({1, 0}), pti({0, 1})}, {}};
  EXPECT_TRUE(polyhedra_equal(to_hrep(V), unit_square()));
}

TEST(Intersect, IdentityWithUniverse) {
  auto P = worked_example_2d();
  EXPECT_TRUE(polyhedra_equal(intersect(P, HPolyhedron::universe(2)), P));
  EXPECT_THROW(intersect(P, HPolyhedron::universe(3)), Error);
}

TEST(Intersect, ParallelogramMeetsUnitBox) {
  VPolyhedron para{3, {pti({0, 0, 0}), pti({1, 1, 0}), pti({0, 1, 1}), pti({1, 2, 1})}, {}};
  auto tri = intersect(to_hrep(para), IntegralBox::cube(3, 0, 1).to_hrep());
  EXPECT_EQ(to_vrep(tri).vertices, (std::vector<Point>{pti({0, 0, 0}), pti({0, 1, 1}), pti({1, 1, 0})}));
}

TEST(Intersect, PentagonAgainstBruteForce) {
  auto P = intersect(worked_example_2d(), IntegralBox::cube(2, -1, 2).to_hrep());
  auto oracle = brute_force_vertices(P);
  EXPECT_EQ(oracle, (std::vector<Point>{pti({0, 1}), pti({1, 0}), pti({1, 2}), pti({2, 1}), pti({2, 2})}));
  EXPECT_EQ(to_vrep(P).vertices, oracle);
}

TEST(ContainsPoint, Examples) {
  VPolyhedron sum{3, {pti({1, 0, 0}), pti({0, 1, 0}), pti({0, 0, 1}), pti({2, 1, 1}), pti({1, 2, 1}), pti({1, 1, 2})}, {}};
  EXPECT_TRUE(contains_point(to_hrep(sum), pt({1, q(1, 2), 1})));
  auto C = char_cone(worked_example_2d());
  EXPECT_TRUE(contains_point(C, pti({0, 0})));
  EXPECT_FALSE(contains_point(worked_example_2d(), pti({2, 0})));
  EXPECT_THROW(contains_point(C, pti({0})), Error);
}

TEST(PolyhedraEqual, Examples) {
  auto P = worked_example_2d();
  auto R = hpoly(2, {{{-1, 1}, 1, "<="}, {{1, 1}, 1, ">="}, {{1, -1}, 1, "<="}});
  EXPECT_TRUE(polyhedra_equal(P, R));
  VPolyhedron tri{2, {pti({1, 0}), pti({0, 1}), pti({1, 1})}, {}};
  EXPECT_FALSE(polyhedra_equal(to_hrep(tri), unit_square()));
}

TEST(MinkowskiPolyhedra, SquareFromTwoSegments) {
  VPolyhedron a{2, {pti({0, 0}), pti({1, 1})}, {}}, b{2, {pti({1, 0}), pti({0, 1})}, {}};
  auto S = minkowski_sum_polyhedra(a, b);
  EXPECT_EQ(to_vrep(to_hrep(S)).vertices, (std::vector<Point>{pti({0, 1}), pti({1, 0}), pti({1, 2}), pti({2, 1})}));
  VPolyhedron zero{2, {pti({0, 0})}, {}};
  EXPECT_TRUE(polyhedra_equal(to_hrep(minkowski_sum_polyhedra(a, zero)), to_hrep(a)));
}

TEST(MinkowskiPolyhedra, TrianglePlusDiagonalRay) {
  VPolyhedron tri{3, {pti({1, 0, 0}), pti({0, 1, 0}), pti({0, 0, 1})}, {}};
  VPolyhedron ray{3, {pti({0, 0, 0})}, {pti({1, 1, 1})}};
  auto S = minkowski_sum_polyhedra(tri, ray);
  EXPECT_EQ(S.rays, (std::vector<Point>{pti({1, 1, 1})}));
  auto H = to_hrep(S);
  EXPECT_TRUE(contains_point(H, pt({1, q(1, 2), 1})));
  EXPECT_FALSE(contains_point(H, pti({1, 0, 1})));
}

TEST(IntegerPolyhedron, Examples) {
  EXPECT_TRUE(is_integer_polyhedron(worked_example_2d()));
  VPolyhedron seg{2, {pti({0, 0}), pt({q(1, 2), 1})}, {}};
  EXPECT_FALSE(is_integer_polyhedron(to_hrep(seg)));
  VPolyhedron cone4{4, {pti({0, 0, 0, 0})}, {pti({1, 1, 0, 1}), pti({0, 1, 1, 1}), pti({1, 0, 1, 1})}};
  EXPECT_TRUE(is_integer_polyhedron(to_hrep(cone4)));
}

TEST(IntegerPolyhedron, NonPointedUsesDiophantineTest) {
  // Lines x1 - x2 = 1 (integer points) and 2x1 - 2x2 = 1 (none).
  EXPECT_TRUE(is_integer_polyhedron(hpoly(2, {{{1, -1}, 1, "="}})));
  EXPECT_FALSE(is_integer_polyhedron(hpoly(2, {{{2, -2}, 1, "="}})));
  // Strip 0 <= 2x1 + 4x2 <= 1 has faces 2x1 + 4x2 = 0 (integral) and = 1 (not).
  EXPECT_FALSE(is_integer_polyhedron(hpoly(2, {{{2, 4}, 0, ">="}, {{2, 4}, 1, "<="}})));
  EXPECT_TRUE(is_integer_polyhedron(hpoly(2, {{{2, 4}, 0, ">="}, {{2, 4}, 2, "<="}})));
  EXPECT_THROW(is_integer_polyhedron(hpoly(1, {{{1}, 0, "<="}, {{1}, 1, ">="}})), Error);
}

TEST(IntegerSystem, HermiteSolve) {
  EXPECT_TRUE(has_integer_solution({{Integer(2), Integer(3)}}, {Integer(1)}));
  EXPECT_FALSE(has_integer_solution({{Integer(2), Integer(4)}}, {Integer(1)}));
  EXPECT_FALSE(has_integer_solution({{Integer(1), Integer(1)}, {Integer(1), Integer(-1)}}, {Integer(1), Integer(0)}));
  EXPECT_TRUE(has_integer_solution({{Integer(1), Integer(1)}, {Integer(1), Integer(-1)}}, {Integer(2), Integer(0)}));
  EXPECT_FALSE(has_integer_solution({{Integer(1), Integer(1)}, {Integer(2), Integer(2)}}, {Integer(1), Integer(3)}));
}

TEST(BoundingBox, Examples) {
  EXPECT_EQ(bounding_box(VPolyhedron{2, {pti({1, 0}), pti({0, 1})}, {}}), IntegralBox({0, 0}, {1, 1}));
  EXPECT_EQ(bounding_box(VPolyhedron{2, {pti({3, -2})}, {pti({1, 1})}}), IntegralBox({3, -2}, {3, -2}));
  EXPECT_EQ(bounding_box(VPolyhedron{2, {pt({q(1, 3), q(-1, 2)})}, {}}), IntegralBox({0, -1}, {1, 0}));
}

// Random H-representations: double description against brute force, round
// trip through the generator form, and LP optima against vertex maxima.
TEST(ExactgeomProperties, RandomRoundTrips) {
  std::mt19937 rng(20240611);
  int nonempty = 0;
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t n = 1 + trial % 4;
    std::size_t rows = 1 + rng() % 8;
    auto P = random_hpoly(rng, n, rows, 2);
    auto V = detail::vertex_enumeration(P, {});
    ASSERT_EQ(V.has_value(), is_feasible(P));
    if (!V) continue;
    ++nonempty;
    auto back = to_hrep(*V);
    ASSERT_TRUE(polyhedra_equal(P, back)) << "trial " << trial;
    bool pointed = !detail::has_lineality(*V);
    if (pointed) {
      ASSERT_EQ(V->vertices, brute_force_vertices(P)) << "trial " << trial;
    }
    std::uniform_int_distribution<int> c(-3, 3);
    Point obj(n);
    for (auto& x : obj) x = c(rng);
    auto r = lp_solve(P, obj, Sense::Maximize);
    bool improving_ray = std::any_of(V->rays.begin(), V->rays.end(), [&](const Point& ray) { return dot(obj, ray) > 0; });
    ASSERT_EQ(r.unbounded(), improving_ray);
    if (r.optimal()) {
      Rational best = dot(obj, V->vertices[0]);
      for (const auto& v : V->vertices) best = std::max(best, dot(obj, v));
      ASSERT_EQ(r.value, best);
    } else {
      ASSERT_TRUE(contains_point(char_cone(P), r.ray));
      ASSERT_GT(dot(obj, r.ray), 0);
    }
  }
  EXPECT_GT(nonempty, 50);
}

TEST(ExactgeomProperties, MinkowskiMatchesPointwiseHull) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> c(-2, 2);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + trial % 2;
    auto rand_pts = [&](std::size_t k) {
      std::vector<Point> v;
      for (std::size_t i = 0; i < k; ++i) {
        Point p(n);
        for (auto& x : p) x = c(rng);
        v.push_back(p);
      }
      return v;
    };
    VPolyhedron a{n, rand_pts(1 + rng() % 4), {}}, b{n, rand_pts(1 + rng() % 4), {}};
    std::vector<Point> sums;
    for (const auto& x : a.vertices)
      for (const auto& y : b.vertices) sums.push_back(add(x, y));
    auto pointwise = to_vrep(to_hrep(VPolyhedron{n, sums, {}}));
    ASSERT_TRUE(polyhedra_equal(to_hrep(pointwise), to_hrep(minkowski_sum_polyhedra(a, b))));
  }
}

TEST(ExactgeomProperties, Deterministic) {
  auto P = intersect(worked_example_2d(), IntegralBox::cube(2, -1, 2).to_hrep());
  auto a = to_vrep(P), b = to_vrep(P);
  EXPECT_EQ(a.vertices, b.vertices);
  EXPECT_EQ(a.rays, b.rays);
}
