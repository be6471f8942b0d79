#pragma once

#include <cstdint>
#include <stdexcept>

#include "latfree/maximality.hpp"
#include "latfree/polyhedron.hpp"

namespace latfree {

/// Unimodular change of coordinates exhibiting a polyhedron with linear
/// recession space as (free coordinates) x (bounded transversal part): the
/// image of P under `a` constrains only the last d - r coordinates, and
/// `transversal` is that bounded part.
struct SplitForm {
  UnimodularMap a;
  std::size_t r = 0;
  Polyhedron<Rational> transversal;  // dimension d - r
};

/// Splits off the lattice part of the linear recession space onto the first r
/// coordinates.  Requires rec(P) to be a linear space (std::domain_error
/// otherwise).
SplitForm normalize_split(const Polyhedron<Rational>& p);

/// Inverse of normalize_split: rebuilds the full-dimensional polyhedron from
/// a transversal part (dimension must match; std::invalid_argument otherwise).
Polyhedron<Rational> lift_back(const SplitForm& s, const Polyhedron<Rational>& q_prime);

/// The bounding box was too small to reach a certifiable maximal superset;
/// retry with a larger box.
struct BoxTooSmallError : std::runtime_error {
  explicit BoxTooSmallError(const std::string& what) : std::runtime_error(what) {}
};

struct EnlargeResult {
  Polyhedron<Rational> result;
  MaximalityCertificate certificate;
};

/// Default enlargement box half-width: twice the largest vertex coordinate
/// magnitude plus two.
long default_box_half_width(const Polyhedron<Rational>& p);

/// Grows a bounded, full-dimensional, lattice-free polytope into a certified
/// maximal lattice-free polyhedron: clip to the box [-box_n, box_n]^d, then
/// repeatedly relax the first (in lexicographic inequality order) facet whose
/// relative interior holds no lattice point -- out to the nearest lattice
/// level beyond, or away entirely when the boxed relaxation holds no lattice
/// point -- and finally try to delete each box constraint (newest first)
/// whenever lattice-freeness survives.  The output always contains the input
/// and carries a re-validated certificate; failure to certify raises
/// BoxTooSmallError.
EnlargeResult enlarge_to_maximal(const Polyhedron<Rational>& p, long box_n,
                                 std::uint64_t cap = 4096);

}  // namespace latfree
