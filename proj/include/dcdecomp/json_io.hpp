#pragma once

// JSON encoding of the library's values (nlohmann::json). Readers report
// the offending location as a path such as $.rows[2].b.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <json.hpp>

#include "dcdecomp/dca_classes.hpp"
#include "dcdecomp/cube_separation.hpp"

namespace dcdecomp::json_io {

using nlohmann::json;

[[noreturn]] inline void fail(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::InvalidInput, "at " + path + ": " + what);
}

inline const json& field(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, "missing key \"" + key + "\"");
  return *it;
}

inline const json* optional_field(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

inline const json& array_at(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

inline std::string item(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }
inline std::string key(const std::string& path, const std::string& k) { return path + "." + k; }

// ---- readers ----

inline Rational read_rational(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      fail(path, e.what());
    }
  }
  fail(path, "expected a rational as string \"p/q\" or an integer");
}

inline std::int64_t read_int(const json& j, const std::string& path) {
  Rational q = read_rational(j, path);
  if (!is_integral(q)) fail(path, "expected an integer");
  return to_int64(q.get_num());
}

inline std::size_t read_dim(const json& j, const std::string& path) {
  const auto& d = field(j, "dim", path);
  if (!d.is_number_integer() || d.get<long>() < 1) fail(key(path, "dim"), "expected a positive integer");
  return d.get<std::size_t>();
}

inline Point read_point(const json& j, const std::string& path, std::optional<std::size_t> dim = std::nullopt) {
  Point p;
  const auto& a = array_at(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) p.push_back(read_rational(a[i], item(path, i)));
  if (dim && p.size() != *dim) fail(path, "expected " + std::to_string(*dim) + " coordinates, got " + std::to_string(p.size()));
  return p;
}

inline IntVec read_intvec(const json& j, const std::string& path, std::optional<std::size_t> dim = std::nullopt) {
  IntVec v;
  const auto& a = array_at(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) v.push_back(read_int(a[i], item(path, i)));
  if (dim && v.size() != *dim) fail(path, "expected " + std::to_string(*dim) + " coordinates, got " + std::to_string(v.size()));
  return v;
}

inline HPolyhedron read_hpoly(const json& j, const std::string& path = "$") {
  const std::size_t n = read_dim(j, path);
  HPolyhedron P(n);
  const std::string rp = key(path, "rows");
  const auto& rows = array_at(field(j, "rows", path), rp);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string ip = item(rp, i);
    Point a = read_point(field(rows[i], "a", ip), key(ip, "a"), n);
    Rational b = read_rational(field(rows[i], "b", ip), key(ip, "b"));
    std::string rel = "<=";
    if (const auto* r = optional_field(rows[i], "rel", ip)) {
      if (!r->is_string()) fail(key(ip, "rel"), "expected \"<=\", \">=\" or \"=\"");
      rel = r->get<std::string>();
    }
    if (rel == "<=")
      P.add_le(a, b);
    else if (rel == ">=")
      P.add_ge(a, b);
    else if (rel == "=")
      P.add_eq(a, b);
    else
      fail(key(ip, "rel"), "expected \"<=\", \">=\" or \"=\"");
  }
  return P;
}

inline VPolyhedron read_vpoly(const json& j, const std::string& path = "$") {
  VPolyhedron V;
  V.dim = read_dim(j, path);
  const std::string vp = key(path, "vertices");
  const auto& vs = array_at(field(j, "vertices", path), vp);
  for (std::size_t i = 0; i < vs.size(); ++i) V.vertices.push_back(read_point(vs[i], item(vp, i), V.dim));
  if (const auto* rs = optional_field(j, "rays", path)) {
    const std::string rp = key(path, "rays");
    array_at(*rs, rp);
    for (std::size_t i = 0; i < rs->size(); ++i) V.rays.push_back(read_point((*rs)[i], item(rp, i), V.dim));
  }
  return V;
}

inline LatticeSet read_points_array(const json& j, std::size_t n, const std::string& path) {
  LatticeSet S(n);
  const auto& a = array_at(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) S.insert(read_intvec(a[i], item(path, i), n));
  return S;
}

inline LatticeSet read_lattice(const json& j, const std::string& path = "$") {
  const std::size_t n = read_dim(j, path);
  return read_points_array(field(j, "points", path), n, key(path, "points"));
}

inline GeneratedSet read_generated(const json& j, const std::string& path = "$") {
  const std::size_t n = read_dim(j, path);
  GeneratedSet G{read_points_array(field(j, "base", path), n, key(path, "base")), {}};
  const std::string gp = key(path, "generators");
  const auto& gs = array_at(field(j, "generators", path), gp);
  for (std::size_t i = 0; i < gs.size(); ++i) G.generators.push_back(read_intvec(gs[i], item(gp, i), n));
  return G;
}

inline Window read_window(const json& j, const std::string& path = "$") {
  IntVec l = read_intvec(field(j, "l", path), key(path, "l"));
  IntVec u = read_intvec(field(j, "u", path), key(path, "u"), l.size());
  try {
    return Window(l, u);
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

// 1-based index given as an object key.
inline std::size_t read_index_key(const std::string& k, std::size_t n, const std::string& path) {
  std::size_t pos = 0;
  long v = -1;
  try {
    v = std::stol(k, &pos);
  } catch (const std::exception&) {
  }
  if (pos != k.size() || v < 1 || static_cast<std::size_t>(v) > n)
    fail(path, "index key \"" + k + "\" is not in 1.." + std::to_string(n));
  return static_cast<std::size_t>(v - 1);
}

inline std::size_t read_index(const json& j, std::size_t n, const std::string& path) {
  if (!j.is_number_integer() || j.get<long>() < 1 || j.get<std::size_t>() > n)
    fail(path, "expected an index in 1.." + std::to_string(n));
  return j.get<std::size_t>() - 1;
}

inline LNatSystem read_lnat(const json& j, const std::string& path = "$") {
  LNatSystem s;
  s.dim = read_dim(j, path);
  for (const char* side : {"lower", "upper"}) {
    const auto* m = optional_field(j, side, path);
    if (!m) continue;
    const std::string sp = key(path, side);
    if (!m->is_object()) fail(sp, "expected an object keyed by 1-based index");
    auto& target = std::string(side) == "lower" ? s.lower : s.upper;
    for (const auto& [k, v] : m->items()) target[read_index_key(k, s.dim, sp)] = read_int(v, key(sp, k));
  }
  if (const auto* es = optional_field(j, "edges", path)) {
    const std::string ep = key(path, "edges");
    array_at(*es, ep);
    for (std::size_t e = 0; e < es->size(); ++e) {
      const std::string ip = item(ep, e);
      std::size_t i = read_index(field((*es)[e], "i", ip), s.dim, key(ip, "i"));
      std::size_t jj = read_index(field((*es)[e], "j", ip), s.dim, key(ip, "j"));
      if (i == jj) fail(ip, "edge is a self-loop");
      if (s.edges.count({i, jj})) fail(ip, "duplicate edge");
      s.edges[{i, jj}] = read_int(field((*es)[e], "d", ip), key(ip, "d"));
    }
  }
  return s;
}

inline ParamodularPair read_mnat(const json& j, const std::string& path = "$") {
  ParamodularPair p;
  p.dim = read_dim(j, path);
  if (p.dim > 31) fail(key(path, "dim"), "too large for a subset table");
  for (const char* side : {"rho", "mu"}) {
    const auto* m = optional_field(j, side, path);
    if (!m) continue;
    const std::string sp = key(path, side);
    if (!m->is_object()) fail(sp, "expected an object keyed by subset bitmask");
    auto& target = std::string(side) == "rho" ? p.rho : p.mu;
    for (const auto& [k, v] : m->items()) {
      std::size_t pos = 0;
      unsigned long mask = ~0ul;
      try {
        mask = std::stoul(k, &pos);
      } catch (const std::exception&) {
      }
      if (pos != k.size() || mask > p.full()) fail(sp, "bitmask key \"" + k + "\" is not a subset of the ground set");
      target[static_cast<std::uint32_t>(mask)] = read_int(v, key(sp, k));
    }
  }
  return p;
}

inline std::pair<const json*, const json*> read_pair(const json& j, const std::string& path) {
  const std::string pp = key(path, "pair");
  const auto& a = array_at(field(j, "pair", path), pp);
  if (a.size() != 2) fail(pp, "expected exactly two entries");
  return {&a[0], &a[1]};
}

/// Representation expected by `tag`: a system, a pair table, or
/// {"pair":[A,B]} of either.
inline ClassRep read_class_rep(const json& j, ClassTag tag, const std::string& path = "$") {
  const std::string pp = key(path, "pair");
  switch (tag) {
    case ClassTag::Lnat:
    case ClassTag::L: return read_lnat(j, path);
    case ClassTag::Mnat:
    case ClassTag::M: return read_mnat(j, path);
    case ClassTag::Lnat2: {
      auto [a, b] = read_pair(j, path);
      return LNatPair{read_lnat(*a, item(pp, 0)), read_lnat(*b, item(pp, 1))};
    }
    case ClassTag::Mnat2: {
      auto [a, b] = read_pair(j, path);
      return MNatPair{read_mnat(*a, item(pp, 0)), read_mnat(*b, item(pp, 1))};
    }
  }
  fail(path, "unknown tag");
}

// ---- writers ----

inline json write(const Rational& q) { return format_rational(q); }

inline json write(const Point& p) {
  json a = json::array();
  for (const auto& c : p) a.push_back(format_rational(c));
  return a;
}

inline json write(const IntVec& v) {
  json a = json::array();
  for (auto c : v) a.push_back(c);
  return a;
}

inline json write(const HPolyhedron& P) {
  json rows = json::array();
  for (const auto& h : P.rows())
    rows.push_back({{"a", write(h.a)}, {"b", write(h.b)}, {"rel", h.rel == Relation::Equal ? "=" : "<="}});
  return {{"dim", P.dim()}, {"rows", rows}};
}

inline json write(const VPolyhedron& V) {
  json vs = json::array(), rs = json::array();
  for (const auto& v : V.vertices) vs.push_back(write(v));
  for (const auto& r : V.rays) rs.push_back(write(r));
  return {{"dim", V.dim}, {"vertices", vs}, {"rays", rs}};
}

inline json write_points(const LatticeSet& S) {
  json a = json::array();
  for (const auto& z : S) a.push_back(write(z));
  return a;
}

inline json write(const LatticeSet& S) { return {{"dim", S.dim()}, {"points", write_points(S)}}; }

inline json write(const GeneratedSet& G) {
  json gs = json::array();
  for (const auto& g : G.generators) gs.push_back(write(g));
  return {{"dim", G.dim()}, {"base", write_points(G.base)}, {"generators", gs}};
}

inline json write(const IntegralBox& w) { return {{"l", write(w.lower)}, {"u", write(w.upper)}}; }

inline json write(const CellWitness& w) { return {{"cell", write(w.cell)}, {"point", write(w.point)}}; }

inline json write(const LNatSystem& s) {
  json lower = json::object(), upper = json::object(), edges = json::array();
  for (const auto& [i, v] : s.lower) lower[std::to_string(i + 1)] = v;
  for (const auto& [i, v] : s.upper) upper[std::to_string(i + 1)] = v;
  for (const auto& [e, d] : s.edges) edges.push_back({{"i", e.first + 1}, {"j", e.second + 1}, {"d", d}});
  return {{"dim", s.dim}, {"lower", lower}, {"upper", upper}, {"edges", edges}};
}

inline json write(const ParamodularPair& p) {
  json rho = json::object(), mu = json::object();
  for (const auto& [X, v] : p.rho) rho[std::to_string(X)] = v;
  for (const auto& [X, v] : p.mu) mu[std::to_string(X)] = v;
  return {{"dim", p.dim}, {"rho", rho}, {"mu", mu}};
}

inline json write(const ClassRep& rep) {
  return std::visit(
      [](const auto& r) -> json {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, LNatPair> || std::is_same_v<T, MNatPair>)
          return {{"pair", json::array({write(r[0]), write(r[1])})}};
        else
          return write(r);
      },
      rep);
}

// ---- files ----

/// Parses a file ("-" reads stdin); syntax errors name the file and offset.
inline json read_file(const std::string& filename) {
  std::string text;
  if (filename == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(filename);
    if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + filename);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, filename + ": malformed JSON at byte " + std::to_string(e.byte));
  }
}

}  // namespace dcdecomp::json_io
