#pragma once

// Exact scalar and vector types shared by every module.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dcdecomp/errors.hpp"

namespace dcdecomp {

/// Arbitrary-precision fraction, always kept in lowest terms with a positive
/// denominator (GMP canonical form).
using Rational = mpq_class;
using Integer = mpz_class;

/// A point (or direction) of R^n with exact coordinates.
using Point = std::vector<Rational>;

/// An integer vector of Z^n. Lattice coordinates stay small in every use of
/// this library, so 64 bits are plenty.
using IntVec = std::vector<std::int64_t>;

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
  if (den == 0) throw Error(ErrorCode::InvalidInput, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline bool is_integral(const Point& p) {
  return std::all_of(p.begin(), p.end(), [](const Rational& q) { return is_integral(q); });
}

inline std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw Error(ErrorCode::InvalidInput, "integer coordinate out of range");
  return z.get_si();
}

/// "p/q" or "p"; surrounding whitespace and a leading '+' are rejected.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorCode::InvalidInput, "empty rational");
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    return std::all_of(t.begin() + static_cast<std::ptrdiff_t>(i), t.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-')
    throw Error(ErrorCode::InvalidInput, "malformed rational '" + s + "'");
  return make_rational(Integer(num), Integer(den));
}

inline std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Point to_point(const IntVec& v) {
  Point p;
  p.reserve(v.size());
  for (auto c : v) p.emplace_back(static_cast<long>(c));
  return p;
}

/// Throws unless every coordinate is an integer.
inline IntVec to_intvec(const Point& p) {
  IntVec v;
  v.reserve(p.size());
  for (const auto& q : p) {
    if (!is_integral(q)) throw Error(ErrorCode::InvalidInput, "non-integral coordinate " + format_rational(q));
    v.push_back(to_int64(q.get_num()));
  }
  return v;
}

inline Rational dot(const Point& a, const Point& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Point add(const Point& a, const Point& b) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Point scale(const Point& a, const Rational& s) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

inline bool is_zero(const Point& a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& q) { return q == 0; });
}

/// Smallest positive multiple of `v` with coprime integer entries. The zero
/// vector maps to itself.
inline std::vector<Integer> primitive_integer(const Point& v) {
  Integer l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> out(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i].get_num() * (l / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g > 1)
    for (auto& z : out) z /= g;
  return out;
}

inline Point primitive_direction(const Point& v) {
  auto z = primitive_integer(v);
  Point p;
  p.reserve(z.size());
  for (auto& c : z) p.emplace_back(c);
  return p;
}

inline std::string format_point(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += format_rational(p[i]);
  }
  return s + ")";
}

inline std::string format_point(const IntVec& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

}  // namespace dcdecomp
