#pragma once

// Catalogue of small worked instances with known answers. Each entry
// recomputes its value and compares it, as JSON, with the expected one.

#include <functional>
#include <string>
#include <vector>

#include "dcdecomp/json_io.hpp"

namespace dcdecomp::showcase {

using nlohmann::json;

struct Example {
  std::string id;
  std::string anchor;  // the fact being reproduced, stated mathematically
  json expected;
  std::function<json()> compute;
};

struct Outcome {
  std::string id;
  std::string anchor;
  json expected;
  json computed;
  bool pass = false;
};

namespace detail {

inline Point pi(std::initializer_list<long> xs) {
  Point p;
  for (long x : xs) p.emplace_back(x);
  return p;
}

inline LatticeSet diag_pair() { return LatticeSet(2, {{0, 0}, {1, 1}}); }
inline LatticeSet antidiag_pair() { return LatticeSet(2, {{1, 0}, {0, 1}}); }

inline LatticeSet unit_vectors_3d() { return LatticeSet(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}); }

inline LatticeSet sum_3d() { return minkowski_sum_sets(unit_vectors_3d(), LatticeSet(3, {{0, 0, 0}, {1, 1, 1}})); }

// {x1 + x2 >= 1, |x1 - x2| <= 1}
inline HPolyhedron strip_2d() {
  HPolyhedron P(2);
  P.add_ge(pi({1, 1}), 1);
  P.add_le(pi({1, -1}), 1);
  P.add_le(pi({-1, 1}), 1);
  return P;
}

inline HPolyhedron triangle_plus_diagonal() {
  return to_hrep(hull_of(3, {pi({1, 0, 0}), pi({0, 1, 0}), pi({0, 0, 1})}, {pi({1, 1, 1})}));
}

inline HPolyhedron cone_4d() { return generated_cone(4, {{1, 1, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}}); }

// seg(0, (1,1,0)) and seg(0, (0,1,1)) as L♮ systems.
inline LNatPair parallelogram() {
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

// First summand extended to {x1 = x2, x1 - 1 <= x3 <= x1, x3 >= 0}, which
// adds the ray (1,1,1).
inline LNatPair parallelogram_with_ray() {
  auto p = parallelogram();
  LNatSystem a;
  a.dim = 3;
  a.lower = {{2, 0}};
  a.edges = {{{0, 1}, 0}, {{1, 0}, 0}, {{2, 0}, 1}, {{0, 2}, 0}};
  p[0] = a;
  return p;
}

inline json points(const LatticeSet& S) { return json_io::write_points(S); }

inline json points(const std::vector<Point>& v) {
  json a = json::array();
  for (const auto& p : v) a.push_back(json_io::write(p));
  return a;
}

inline json vectors(const std::vector<IntVec>& v) {
  json a = json::array();
  for (const auto& z : v) a.push_back(json_io::write(z));
  return a;
}

inline bool has_candidate(const IcVerdict& v, const Point& x) {
  return std::find(v.candidates.begin(), v.candidates.end(), x) != v.candidates.end();
}

}  // namespace detail

/// All examples, ordered by id.
inline std::vector<Example> catalogue() {
  using namespace detail;
  const Point x3 = {Rational(1), Rational(1, 2), Rational(1)};
  const Point x4 = {Rational(1), Rational(1), Rational(1), Rational(3, 2)};
  std::vector<Example> ex;

  ex.push_back({"boxint-cone-4d", "cone{(1,1,0,1),(0,1,1,1),(1,0,1,1)} ∩ [0,2]^4 has the vertex (1,1,1,3/2)",
                json{{"holds", false}, {"point", json_io::write(x4)}}, [=] {
                  auto v = is_box_integer_within(cone_4d(), IntegralBox::cube(4, 0, 2));
                  return json{{"holds", v.holds}, {"point", v.witness ? json_io::write(v.witness->point) : json()}};
                }});
  ex.push_back({"boxint-strip-2d", "conv{(1,0),(0,1)} + ray(1,1) is box-integer on [-1,3]^2", true,
                [] { return json(is_box_integer_within(strip_2d(), IntegralBox::cube(2, -1, 3)).holds); }});
  ex.push_back({"boxint-triangle-ray", "conv{e1,e2,e3} + ray(1,1,1) is not box-integer on [0,2]^3", false,
                [] { return json(is_box_integer_within(triangle_plus_diagonal(), IntegralBox::cube(3, 0, 2)).holds); }});
  ex.push_back({"charcone-2d", "char.cone{x1+x2 >= 1, |x1-x2| <= 1} = {d1+d2 >= 0, d1 = d2}", true, [] {
                  HPolyhedron C(2);
                  C.add_ge(pi({1, 1}), 0);
                  C.add_eq(pi({1, -1}), 0);
                  return json(polyhedra_equal(char_cone(strip_2d()), C));
                }});
  ex.push_back({"charcone-lnat", "char.cone of an L♮ system zeroes its right-hand sides",
                json{{"dim", 2}, {"lower", {{"1", 0}}}, {"upper", json::object()}, {"edges", json::array({{{"i", 1}, {"j", 2}, {"d", 0}}, {{"i", 2}, {"j", 1}, {"d", 0}}})}},
                [] {
                  LNatSystem s;
                  s.dim = 2;
                  s.lower[0] = 3;
                  s.edges[{0, 1}] = 1;
                  s.edges[{1, 0}] = 2;
                  return json_io::write(char_cone_class(s));
                }});
  ex.push_back({"conic-diagonal", "{(t,t) : t >= 0} is conic", true, [] {
                  return json(is_conic(GeneratedSet{LatticeSet(2, {{0, 0}}), {{1, 1}}}));
                }});
  ex.push_back({"decompose-polyhedron-2d", "Q = conv{(1,0),(0,1),(1,1)}, C = ray(1,1), Q + C = P",
                json{{"Q", json::parse(R"([["0","1"],["1","0"],["1","1"]])")}, {"C", json::parse(R"([["1","1"]])")}}, [] {
                  auto d = decompose_polyhedron(strip_2d());
                  return json{{"Q", points(to_vrep(d.Q).vertices)}, {"C", points(to_vrep(d.C).rays)}};
                }});
  ex.push_back({"decompose-set-2d", "S = T + G with G = {(t,t)}, T ⊇ {(1,0),(0,1),(1,1)}",
                json{{"generators", json::parse("[[1,1]]")}, {"base_covers", true}, {"verified", true}}, [] {
                  auto d = decompose_set(strip_2d());
                  bool covers = d.tg.base.contains({1, 0}) && d.tg.base.contains({0, 1}) && d.tg.base.contains({1, 1});
                  return json{{"generators", vectors(d.tg.generators)}, {"base_covers", covers}, {"verified", d.verified}};
                }});
  ex.push_back({"holefree-sum-2d", "{(0,0),(1,1)} + {(1,0),(0,1)} is not hole-free", false,
                [] { return json(is_hole_free(minkowski_sum_sets(diag_pair(), antidiag_pair()))); }});
  ex.push_back({"hull-contains-3d", "(1,1/2,1) = ((1,0,0) + (1,1,2))/2 lies in conv(S1+S2)", true,
                [=] { return json(contains_point(hull_hrep(sum_3d()), x3)); }});
  ex.push_back({"hull-points-2d", "conv(S1+S2) ∩ Z^2 = S1+S2 ∪ {(1,1)}", json::parse("[[0,1],[1,0],[1,1],[1,2],[2,1]]"), [] {
                  return points(integer_points(hull_hrep(minkowski_sum_sets(diag_pair(), antidiag_pair()))));
                }});
  ex.push_back({"ic-sum-3d", "x = (1,1/2,1) ∉ conv(S ∩ N(x)), S = conv(S1+S2) ∩ Z^3",
                json{{"holds", false}, {"has_candidate", true}, {"local", json::parse("[[1,1,1]]")}}, [=] {
                  auto S = integer_points(hull_hrep(sum_3d()));
                  auto v = is_integrally_convex(S);
                  return json{{"holds", v.holds}, {"has_candidate", has_candidate(v, x3)},
                              {"local", points(set_intersection(S, integral_neighborhood(x3)))}};
                }});
  ex.push_back({"ic-triangle-ray", "(conv{e1,e2,e3} + ray(1,1,1)) ∩ Z^3 ∩ [0,3]^3 fails at (1,1/2,1)",
                json{{"holds", false}, {"has_candidate", true}}, [=] {
                  auto v = is_integrally_convex(integer_points(triangle_plus_diagonal(), IntegralBox::cube(3, 0, 3)));
                  return json{{"holds", v.holds}, {"has_candidate", has_candidate(v, x3)}};
                }});
  ex.push_back({"ic-unit-square", "every nonempty subset of {0,1}^2 is integrally convex", 15, [] {
                  int count = 0;
                  for (unsigned mask = 1; mask < 16; ++mask) {
                    LatticeSet S(2);
                    for (unsigned b = 0; b < 4; ++b)
                      if (mask >> b & 1u) S.insert({static_cast<std::int64_t>(b & 1u), static_cast<std::int64_t>(b >> 1 & 1u)});
                    count += is_integrally_convex(S).holds ? 1 : 0;
                  }
                  return json(count);
                }});
  ex.push_back({"separate-vertex", "R = ∅, d = (1,1) gives B = {d}", json::parse("[[1,1]]"),
                [] { return vectors(separate_cube_subset({}, pi({1, 1})).order); }});
  ex.push_back({"lnat2-set-triangle", "{(0,0,0),(0,1,1),(1,1,0)} is not L♮2", false,
                [] { return json(is_lnat2_set(LatticeSet(3, {{0, 0, 0}, {0, 1, 1}, {1, 1, 0}}))); }});
  ex.push_back({"lnat2-summandwise", "L♮2 decomposition taken summand by summand recomposes exactly",
                json{{"polyhedron", true}, {"set", true}}, [] {
                  ClassRep rep = parallelogram_with_ray();
                  auto d = decompose_class_polyhedron(rep, ClassTag::Lnat2);
                  bool poly = polyhedra_equal(to_hrep(minkowski_sum_polyhedra(to_vrep(d.Q), to_vrep(d.C))), class_to_hrep(rep));
                  bool set = decompose_class_set(rep, ClassTag::Lnat2).verified;
                  return json{{"polyhedron", poly}, {"set", set}};
                }});
  ex.push_back({"lnat2-triangle", "(seg(0,(1,1,0)) + seg(0,(0,1,1))) ∩ [0,1]^3 = conv{(0,0,0),(0,1,1),(1,1,0)}, not L♮2",
                json{{"vertices", json::parse(R"([["0","0","0"],["0","1","1"],["1","1","0"]])")}, {"in_class", false}}, [] {
                  auto b = box_intersect_class(parallelogram(), IntegralBox::cube(3, 0, 1), ClassTag::Lnat2);
                  return json{{"vertices", points(to_vrep(b.P).vertices)}, {"in_class", b.in_class ? json(*b.in_class) : json()}};
                }});
  ex.push_back({"lp-unbounded-2d", "max x1+x2 over {x1+x2 >= 1, |x1-x2| <= 1} is unbounded", "unbounded", [] {
                  auto r = lp_solve(strip_2d(), pi({1, 1}), Sense::Maximize);
                  return json(r.status == LpResult::Status::Unbounded ? "unbounded" : "bounded");
                }});
  ex.push_back({"m-simplex-3d", "{e1,e2,e3} is M-convex", true, [] { return json(is_m_set(unit_vectors_3d())); }});
  ex.push_back({"minkowski-hole-2d", "(1,1) ∈ conv(S1+S2) \\ (S1+S2)", json::parse("[[1,1]]"),
                [] { return points(find_minkowski_holes(diag_pair(), antidiag_pair())); }});
  ex.push_back({"minkowski-lnat-2d", "{(0,0),(1,1)} + {(0,0),(0,1)} has no holes", json::array(), [] {
                  return points(find_minkowski_holes(diag_pair(), LatticeSet(2, {{0, 0}, {0, 1}})));
                }});
  ex.push_back({"minkowski-mnat-2d", "{0,e1,e2} + {0,e1,e2} has no holes", json::array(), [] {
                  LatticeSet s(2, {{0, 0}, {1, 0}, {0, 1}});
                  return points(find_minkowski_holes(s, s));
                }});
  ex.push_back({"minkowski-sum-2d", "{(0,0),(1,1)} + {(1,0),(0,1)} = {(1,0),(0,1),(2,1),(1,2)}",
                json::parse("[[0,1],[1,0],[1,2],[2,1]]"), [] { return points(minkowski_sum_sets(diag_pair(), antidiag_pair())); }});
  ex.push_back({"minkowski-sum-3d", "{e1,e2,e3} + {0,(1,1,1)} has six points",
                json::parse("[[0,0,1],[0,1,0],[1,0,0],[1,1,2],[1,2,1],[2,1,1]]"), [] { return points(sum_3d()); }});
  ex.push_back({"neighborhood-3d", "N((1,1/2,1)) = {(1,0,1),(1,1,1)}", json::parse("[[1,0,1],[1,1,1]]"),
                [=] { return points(integral_neighborhood(x3)); }});
  ex.push_back({"neighborhood-4d", "N((1,1,1,3/2)) = {(1,1,1,1),(1,1,1,2)}", json::parse("[[1,1,1,1],[1,1,1,2]]"),
                [=] { return points(integral_neighborhood(x4)); }});
  ex.push_back({"truncate-full-2d", "({(1,0),(0,1),(1,1)} + {(t,t)}) ∩ [0,3]^2 = S ∩ [0,3]^2", true, [] {
                  GeneratedSet G{LatticeSet(2, {{1, 0}, {0, 1}, {1, 1}}), {{1, 1}}};
                  Window w = IntegralBox::cube(2, 0, 3);
                  return json(truncate(G, w) == integer_points(strip_2d(), w));
                }});
  ex.push_back({"truncate-holes-2d", "({(1,0),(0,1)} + {(t,t)}) misses (t,t), t >= 1", json::parse("[[1,1],[2,2],[3,3]]"), [] {
                  GeneratedSet G{LatticeSet(2, {{1, 0}, {0, 1}}), {{1, 1}}};
                  Window w = IntegralBox::cube(2, 0, 3);
                  return points(set_difference(integer_points(strip_2d(), w), truncate(G, w)));
                }});
  ex.push_back({"vertices-2d", "{x1+x2 >= 1, |x1-x2| <= 1} = conv{(1,0),(0,1)} + ray(1,1)",
                json{{"vertices", json::parse(R"([["0","1"],["1","0"]])")}, {"rays", json::parse(R"([["1","1"]])")}}, [] {
                  auto V = to_vrep(strip_2d());
                  return json{{"vertices", points(V.vertices)}, {"rays", points(V.rays)}};
                }});
  return ex;
}

inline Outcome replay(const Example& e) {
  Outcome o{e.id, e.anchor, e.expected, json(), false};
  try {
    o.computed = e.compute();
    o.pass = o.computed == o.expected;
  } catch (const Error& err) {
    o.computed = json{{"error", err.what()}};
  }
  return o;
}

}  // namespace dcdecomp::showcase
