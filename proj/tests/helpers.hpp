#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "latfree/polyhedron.hpp"
#include "latfree/quadext.hpp"

namespace latfree::testutil {

inline Rational rat(long p, long q = 1) { return Rational(Int(p), Int(q)); }

inline Vec<Rational> rvec(std::initializer_list<long> entries) {
  Vec<Rational> v;
  for (long e : entries) v.push_back(Rational(Int(e)));
  return v;
}

inline IntVec ivec(std::initializer_list<long> entries) {
  IntVec v;
  for (long e : entries) v.push_back(Int(e));
  return v;
}

/// Polyhedron from (normal, rhs) rows with integer normals.
inline Polyhedron<Rational> poly(
    std::size_t d,
    const std::vector<std::pair<std::vector<long>, Rational>>& rows) {
  std::vector<Inequality<Rational>> qs;
  for (const auto& [a, b] : rows) {
    Vec<Rational> av;
    for (long e : a) av.push_back(Rational(Int(e)));
    qs.push_back({av, b});
  }
  return Polyhedron<Rational>(d, qs);
}

/// Axis-aligned box given per-coordinate [lo, hi] ranges.
inline Polyhedron<Rational> box(
    const std::vector<std::pair<Rational, Rational>>& ranges) {
  std::size_t d = ranges.size();
  std::vector<Inequality<Rational>> qs;
  for (std::size_t i = 0; i < d; ++i) {
    Vec<Rational> up(d, Rational(0)), down(d, Rational(0));
    up[i] = Rational(1);
    down[i] = Rational(-1);
    qs.push_back({up, ranges[i].second});
    qs.push_back({down, -ranges[i].first});
  }
  return Polyhedron<Rational>(d, qs);
}

inline Polyhedron<Rational> unit_square() {
  return box({{rat(0), rat(1)}, {rat(0), rat(1)}});
}

/// The x2-split band {0 <= x2 <= 1}, a maximal lattice-free set in the plane.
inline Polyhedron<Rational> split_band() {
  return poly(2, {{{0, 1}, rat(1)}, {{0, -1}, rat(0)}});
}

inline bool same_rows(const Polyhedron<Rational>& p, const Polyhedron<Rational>& q) {
  auto key = [](const Polyhedron<Rational>& r) {
    std::vector<std::pair<Vec<Rational>, Rational>> rows;
    for (const auto& iq : r.ineqs()) rows.push_back({iq.a, iq.b});
    std::sort(rows.begin(), rows.end());
    return rows;
  };
  return key(canonicalize(p)) == key(canonicalize(q));
}

}  // namespace latfree::testutil
