// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "test_support.hpp"

using namespace dcdecomp;
using namespace dcdecomp::testing;

namespace {

struct Fixture {
  std::string name;
  HPolyhedron P;
};

struct Check {
  bool ok = true;
  std::ostringstream note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) note << what;
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<void(Check&)>& body) {
  Check c;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.note << "exception: " << e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s  %2d  %-50s %6.2fs  %s\n", c.ok ? "PASS" : "FAIL", id, title.c_str(), secs, c.note.str().c_str());
  std::fflush(stdout);
  if (!c.ok) ++failures;
}

LatticeSet sum_3d() {
  return minkowski_sum_sets(LatticeSet(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), LatticeSet(3, {{0, 0, 0}, {1, 1, 1}}));
}

HPolyhedron triangle_plus_diagonal() {
  return to_hrep(hull_of(3, {pti({1, 0, 0}), pti({0, 1, 0}), pti({0, 0, 1})}, {pti({1, 1, 1})}));
}

// seg(0, (1,1,0)) and seg(0, (0,1,1)).
LNatPair parallelogram() {
  LNatSystem a;
  a.dim = 3;
  a.lower = {{0, 0}, {2, 0}};
  a.upper = {{0, 1}, {2, 0}};
  a.edges = {{{0, 1}, 0}, {{1, 0}, 0}};
  LNatSystem b;
  b.dim = 3;
  b.lower = {{0, 0}, {1, 0}};
  b.upper = {{0, 0}, {1, 1}};
  b.edges = {{{1, 2}, 0}, {{2, 1}, 0}};
  return {a, b};
}

// First summand widened to {x1 = x2, x1 - 1 <= x3 <= x1, x3 >= 0}.
LNatPair parallelogram_with_ray() {
  auto p = parallelogram();
  p[0] = LNatSystem{};
  p[0].dim = 3;
  p[0].lower = {{2, 0}};
  p[0].edges = {{{0, 1}, 0}, {{1, 0}, 0}, {{2, 0}, 1}, {{0, 2}, 0}};
  return p;
}

// Random L♮ systems, M♮ pairs and {0,1}-subset hulls in dimensions 2..4.
std::vector<Fixture> box_integer_fixtures() {
  std::mt19937 rng(20240601);
  std::vector<Fixture> fx;
  for (int k = 0; k < 50; ++k) {
    std::size_t n = 2 + k % 3;
    fx.push_back({"lnat#" + std::to_string(k), lnat_to_hrep(random_lnat_system(rng, n))});
  }
  for (int k = 0; k < 40; ++k) {
    std::size_t n = 2 + k % 3;
    fx.push_back({"mnat#" + std::to_string(k), mnat_to_hrep(random_mnat_pair(rng, n, rng() % 4, rng() % 3))});
  }
  for (int k = 0; k < 40; ++k) {
    std::size_t n = 2 + k % 3;
    LatticeSet S(n);
    while (S.empty()) S = random_subset(rng, n, 1, 0.5);
    fx.push_back({"cube#" + std::to_string(k), hull_hrep(S)});
  }
  return fx;
}

bool cone_equals_generated(const HPolyhedron& C, const std::vector<IntVec>& gens) {
  return polyhedra_equal(generated_cone(C.dim(), gens), C);
}

}  // namespace

int main() {
  criterion(1, "Minkowski hole of {(0,0),(1,1)}+{(1,0),(0,1)}", [](Check& c) {
    LatticeSet s1(2, {{0, 0}, {1, 1}}), s2(2, {{1, 0}, {0, 1}});
    auto holes = find_minkowski_holes(s1, s2);
    c.require(holes == LatticeSet(2, {{1, 1}}), "holes != {(1,1)}");
    // Oracle: (1,1) is the midpoint of (0,1) and (2,1) but no sum x+y.
    bool reachable = false;
    for (const auto& x : s1)
      for (const auto& y : s2) reachable = reachable || (x[0] + y[0] == 1 && x[1] + y[1] == 1);
    c.require(!reachable, "(1,1) is a sum");
  });

  criterion(2, "3-D hull points of S1+S2 not integrally convex", [](Check& c) {
    const Point x = pt({q(1), q(1, 2), q(1)});
    LatticeSet S = integer_points(hull_hrep(sum_3d()));
    auto v = is_integrally_convex(S);
    c.require(!v.holds, "reported integrally convex; ");
    c.require(std::find(v.candidates.begin(), v.candidates.end(), x) != v.candidates.end(), "(1,1/2,1) not a witness; ");
    LatticeSet N = integral_neighborhood(x);
    c.require(N == LatticeSet(3, {{1, 0, 1}, {1, 1, 1}}), "N(x) wrong; ");
    c.require(set_intersection(S, N) == LatticeSet(3, {{1, 1, 1}}), "S ∩ N(x) wrong; ");
    // Oracle: x is the midpoint of (1,0,0) and (1,1,2), both in S.
    c.require(S.contains({1, 0, 0}) && S.contains({1, 1, 2}), "endpoints missing; ");
    c.require(x != pti({1, 1, 1}), "x coincides with S ∩ N(x)");
  });

  criterion(3, "triangle + ray(1,1,1) not box-integer on [0,2]^3", [](Check& c) {
    auto v = is_box_integer_within(triangle_plus_diagonal(), IntegralBox::cube(3, 0, 2));
    c.require(!v.holds, "reported box-integer; ");
    c.require(v.witness && !is_integral(v.witness->point), "no fractional witness; ");
    // Oracle: the witness is a vertex of P ∩ cell, found by brute force.
    if (v.witness) {
      HPolyhedron cell = intersect(triangle_plus_diagonal(), unit_cell(v.witness->cell).to_hrep());
      auto vs = brute_force_vertices(cell);
      c.require(std::find(vs.begin(), vs.end(), v.witness->point) != vs.end(), "witness is not a vertex");
    }
  });

  criterion(4, "{0,1}-generated cone in R^4 not box-integer", [](Check& c) {
    HPolyhedron C = generated_cone(4, {{1, 1, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}});
    const Point x = pt({q(1), q(1), q(1), q(3, 2)});
    auto v = is_box_integer_within(C, IntegralBox::cube(4, 0, 2));
    c.require(!v.holds, "reported box-integer; ");
    c.require(v.witness && unit_cell(v.witness->cell).contains(x), "witness cell misses (1,1,1,3/2); ");
    HPolyhedron cell = intersect(C, unit_cell(v.witness ? v.witness->cell : IntVec(4, 0)).to_hrep());
    auto vs = brute_force_vertices(cell);
    c.require(std::find(vs.begin(), vs.end(), x) != vs.end(), "(1,1,1,3/2) not a vertex of C ∩ cell; ");
    // (1,1,1,3/2) = ((1,1,0,1) + (0,1,1,1) + (1,0,1,1)) / 2.
    c.require(contains_point(C, x), "x outside C; ");
    for (const auto& z : integral_neighborhood(x)) c.require(!contains_point(C, to_point(z)), "N(x) meets C");
  });

  criterion(5, "worked decomposition S = T + G", [](Check& c) {
    HPolyhedron P = worked_example_2d();
    auto d = decompose_set(P);
    c.require(d.tg.generators == std::vector<IntVec>{{1, 1}}, "generators != {(1,1)}; ");
    for (const IntVec& z : {IntVec{1, 0}, IntVec{0, 1}, IntVec{1, 1}}) c.require(d.tg.base.contains(z), "T misses " + format_point(z) + "; ");
    Window w = IntegralBox::cube(2, -2, 6);
    // Oracle: direct scan of the defining inequalities.
    LatticeSet S(2);
    for (std::int64_t a = -2; a <= 6; ++a)
      for (std::int64_t b = -2; b <= 6; ++b)
        if (a + b >= 1 && a - b <= 1 && b - a <= 1) S.insert({a, b});
    c.require(truncate(d.tg, w) == S, "truncation differs from S on [-2,6]^2");
  });

  criterion(6, "L♮2 box intersection is not L♮2; summand-wise ok", [](Check& c) {
    auto b = box_intersect_class(parallelogram(), IntegralBox::cube(3, 0, 1), ClassTag::Lnat2);
    LatticeSet tri(3, {{0, 0, 0}, {0, 1, 1}, {1, 1, 0}});
    c.require(b.points == tri, "P ∩ box points differ; ");
    c.require(sorted(to_vrep(b.P).vertices) == sorted({pti({0, 0, 0}), pti({0, 1, 1}), pti({1, 1, 0})}), "not the triangle; ");
    c.require(b.in_class.has_value() && !*b.in_class, "triangle not flagged; ");
    c.require(!is_lnat2_set(tri), "point set not flagged; ");
    ClassRep rep = parallelogram_with_ray();
    auto pd = decompose_class_polyhedron(rep, ClassTag::Lnat2);
    c.require(polyhedra_equal(to_hrep(minkowski_sum_polyhedra(to_vrep(pd.Q), to_vrep(pd.C))), class_to_hrep(rep)), "Q + C != P; ");
    c.require(decompose_class_set(rep, ClassTag::Lnat2).verified, "T + G != S on window");
  });

  const auto fixtures = box_integer_fixtures();

  criterion(7, "char. cones generated by {-1,0,+1} vectors", [&](Check& c) {
    for (const auto& f : fixtures) {
      HPolyhedron C = char_cone(f.P);
      auto gens = cone_unit_generators(C);
      for (const auto& g : gens)
        for (auto x : g) c.require(x >= -1 && x <= 1, f.name + ": generator entry out of range; ");
      c.require(cone_equals_generated(C, gens), f.name + ": cone(generators) != C; ");
    }
    c.note << fixtures.size() << " fixtures";
  });

  criterion(8, "char. cones box-integer on [-3,3]^n", [&](Check& c) {
    for (const auto& f : fixtures) {
      HPolyhedron C = char_cone(f.P);
      c.require(is_box_integer_within(C, IntegralBox::cube(C.dim(), -3, 3)).holds, f.name + ": not box-integer; ");
    }
    c.note << fixtures.size() << " fixtures";
  });

  criterion(9, "cell test agrees with sampled definition", [](Check& c) {
    std::mt19937 rng(99);
    int count = 0, ic = 0;
    for (std::size_t n = 1; n <= 3; ++n)
      for (int k = 0; k < 200; ++k) {
        LatticeSet S = random_oracle_set(rng, n, k);
        bool cells = is_integrally_convex(S).holds;
        bool sampled = sample_integral_convexity(S).holds;
        c.require(cells == sampled, "disagreement on " + std::to_string(count) + "; ");
        ++count;
        ic += cells ? 1 : 0;
      }
    c.note << count << " sets, " << ic << " integrally convex";
  });

  criterion(10, "recomposition and Minkowski closure", [&](Check& c) {
    std::vector<Fixture> all = fixtures;
    all.push_back({"worked", worked_example_2d()});
    all.push_back({"triangle+ray", triangle_plus_diagonal()});
    for (const auto& f : all) {
      auto pd = decompose_polyhedron(f.P);
      c.require(polyhedra_equal(to_hrep(minkowski_sum_polyhedra(to_vrep(pd.Q), to_vrep(pd.C))), f.P), f.name + ": Q + C != P; ");
      auto sd = decompose_set(f.P);
      c.require(truncate(sd.tg, sd.window) == integer_points(f.P, sd.window), f.name + ": T + G != S; ");
    }
    std::mt19937 rng(7);
    int pairs = 0;
    for (int k = 0; k < 60; ++k) {
      std::size_t n = 2 + k % 2;
      LatticeSet a = integer_points(mnat_to_hrep(random_mnat_pair(rng, n, 3, 0)));
      LatticeSet b = integer_points(mnat_to_hrep(random_mnat_pair(rng, n, 3, 0)));
      c.require(is_mnat_set(minkowski_sum_sets(a, b)), "M♮ + M♮ left the class; ");
      ++pairs;
    }
    for (int k = 0; k < 60; ++k) {
      std::size_t n = 2 + k % 2;
      auto box = IntegralBox::cube(n, -2, 2);
      LatticeSet a = integer_points(lnat_to_hrep(random_lnat_system(rng, n)), box);
      LatticeSet b = integer_points(lnat_to_hrep(random_lnat_system(rng, n)), box);
      if (a.empty() || b.empty()) continue;
      c.require(is_integrally_convex(minkowski_sum_sets(a, b)).holds, "L♮ + L♮ not integrally convex; ");
      ++pairs;
    }
    c.require(pairs >= 100, "fewer than 100 closure pairs; ");
    c.note << all.size() << " fixtures, " << pairs << " pairs";
  });

  criterion(11, "cube separation on random (R, d)", [](Check& c) {
    std::mt19937 rng(4242);
    int ok = 0, empty_r = 0, integral_d = 0;
    for (int k = 0; ok < 240 && k < 5000; ++k) {
      std::size_t m = 1 + k % 4;
      std::vector<IntVec> R;
      if (k % 5 != 0) {
        for (const auto& x : random_subset(rng, m, 1, 0.3)) R.push_back(x);
      }
      Point d(m);
      for (auto& x : d) x = q(static_cast<long>(rng() % 5), 4);
      if (!R.empty() && in_generated_hull(d, LatticeSet(m, R).as_points())) continue;
      auto s = separate_cube_subset(R, d);
      c.require(verify_cube_separation(R, d, s.order), "instance " + std::to_string(k) + " fails; ");
      ++ok;
      empty_r += R.empty() ? 1 : 0;
      integral_d += is_integral(d) ? 1 : 0;
    }
    c.require(ok >= 200 && empty_r > 0 && integral_d > 0, "coverage too small; ");
    c.note << ok << " instances, " << empty_r << " with R empty, " << integral_d << " with d integral";
  });

  return failures == 0 ? 0 : 1;
}
