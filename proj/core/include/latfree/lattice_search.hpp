#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "latfree/intlat.hpp"
#include "latfree/polyhedron.hpp"

namespace latfree {

/// A search budget ran out before the question was decided.  Distinct from a
/// definite "absent" answer; callers surface it as "undecided".
struct CapExhaustedError : std::runtime_error {
  explicit CapExhaustedError(const std::string& what) : std::runtime_error(what) {}
};

/// A lattice point together with where it sits relative to a polyhedron.
struct Witness {
  enum class Location { interior, facet_relint, boundary };

  IntVec z;
  Location location = Location::interior;
  /// Facet index (canonical inequality order), set for facet_relint.
  std::optional<std::size_t> facet_index;
};

/// Result of the finite-tolerance line approximation: integer point z, its
/// orthogonal projection x onto span(u), tolerance t with 0 < |z-x|_inf < 1/t,
/// and the cylinder half-length n that succeeded.
struct ApproxResult {
  IntVec z;
  Vec<QuadExt> x;
  long t = 0;
  long n = 0;
};

struct ParityPair {
  std::size_t i = 0, j = 0;  // 1-based, i < j
  IntVec midpoint;
};

/// Total order on integer vectors that visits points near the origin first:
/// per coordinate, 0 precedes 1 precedes -1 precedes 2 precedes -2 ...; the
/// LAST coordinate is the most significant.  Used as the deterministic
/// tie-break wherever a single lattice point is returned.
bool near_origin_less(const IntVec& a, const IntVec& b);

/// All points of P (bounded) intersected with Z^d, in ascending
/// lexicographic order, by recursive coordinate slicing with exact LP bounds.
std::vector<IntVec> enumerate_lattice_points(const Polyhedron<Rational>& p);

/// Integer points of the axis window [lo, hi] that belong to P (closed
/// membership), ascending lexicographic.  Works over any exact scalar.
template <class S>
std::vector<IntVec> lattice_points_in_window(const Polyhedron<S>& p,
                                             const IntVec& lo, const IntVec& hi);

/// Same, with strict membership (interior points only).
template <class S>
std::vector<IntVec> interior_points_in_window(const Polyhedron<S>& p,
                                              const IntVec& lo, const IntVec& hi);

/// Where z sits relative to canonical P: interior (no tight inequality),
/// relative interior of facet i (exactly one), or boundary (several).
/// Throws std::invalid_argument when z is outside P.
Witness classify_point(const Polyhedron<Rational>& p, const IntVec& z);

/// A point of int(P) cap Z^d if one exists, else absent with certainty.
/// Decision strategy: lower-dimensional P has empty interior; bounded P is
/// enumerated; unbounded P is reduced modulo the linear hull of its recession
/// cone (the sum with that hull preserves freeness both ways) to a bounded
/// transversal section.  The witness inside P itself is then recovered by a
/// doubling window search (guaranteed to terminate; cap bounds the window
/// half-width and a breach raises CapExhaustedError).
std::optional<Witness> interior_lattice_point(const Polyhedron<Rational>& p,
                                              std::uint64_t cap = 4096);

/// Nonzero point of (t Z^d) inside a bounded, full-dimensional, centrally
/// symmetric P with volume >= (2t)^d; existence is guaranteed under these
/// preconditions, which are verified exactly (violations raise
/// std::invalid_argument naming the failing one, with an asymmetry witness or
/// the exact volume shortfall).  Deterministic choice: near_origin_less
/// minimum.
IntVec minkowski_find(const Polyhedron<Rational>& p, long t);

/// Smallest-residual integer point in the cylinder [-N,N]u + (1/t)B_inf,
/// where N doubles starting from the least power of two >= t, up to n_cap.
/// The returned point satisfies 0 < |z - x|_inf < 1/t exactly, x being the
/// orthogonal projection of z onto span(u).  Directions whose span contains a
/// nonzero integer vector are rejected (the residual would vanish).
ApproxResult approximate_line(const Vec<QuadExt>& u, long t, long n_cap);

/// Lexicographically first pair (i, j), i < j, with w_i congruent to w_j
/// componentwise mod 2; the midpoint (w_i + w_j)/2 is then integral.  With
/// more than 2^d vectors a pair always exists; otherwise absence raises
/// std::domain_error.
ParityPair parity_pair(const std::vector<IntVec>& w);

// ---------------------------------------------------------------------------

template <class S>
std::vector<IntVec> lattice_points_in_window(const Polyhedron<S>& p,
                                             const IntVec& lo, const IntVec& hi) {
  std::size_t d = p.ambient_dim();
  if (lo.size() != d || hi.size() != d)
    throw std::invalid_argument("window dimension mismatch");
  std::vector<IntVec> out;
  if (d == 0) return out;
  for (std::size_t i = 0; i < d; ++i)
    if (lo[i] > hi[i]) return out;
  IntVec z = lo;
  for (;;) {
    Vec<S> xs(d);
    for (std::size_t i = 0; i < d; ++i) xs[i] = S(Rational(z[i]));
    if (p.contains(xs)) out.push_back(z);
    std::size_t c = d;
    while (c-- > 0) {
      if (z[c] < hi[c]) {
        ++z[c];
        for (std::size_t j = c + 1; j < d; ++j) z[j] = lo[j];
        break;
      }
      if (c == 0) return out;
    }
  }
}

template <class S>
std::vector<IntVec> interior_points_in_window(const Polyhedron<S>& p,
                                              const IntVec& lo, const IntVec& hi) {
  std::size_t d = p.ambient_dim();
  if (lo.size() != d || hi.size() != d)
    throw std::invalid_argument("window dimension mismatch");
  std::vector<IntVec> out;
  if (d == 0) return out;
  for (std::size_t i = 0; i < d; ++i)
    if (lo[i] > hi[i]) return out;
  IntVec z = lo;
  for (;;) {
    Vec<S> xs(d);
    for (std::size_t i = 0; i < d; ++i) xs[i] = S(Rational(z[i]));
    if (p.strictly_contains(xs)) out.push_back(z);
    std::size_t c = d;
    while (c-- > 0) {
      if (z[c] < hi[c]) {
        ++z[c];
        for (std::size_t j = c + 1; j < d; ++j) z[j] = lo[j];
        break;
      }
      if (c == 0) return out;
    }
  }
}

}  // namespace latfree
