#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "latfree/linalg.hpp"
#include "latfree/quadext.hpp"
#include "latfree/rational.hpp"

namespace latfree {

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;

IntMat int_identity(std::size_t n);
IntMat int_mat_mul(const IntMat& a, const IntMat& b);
IntMat int_transpose(const IntMat& m);
bool int_mat_eq(const IntMat& a, const IntMat& b);
Int int_det(const IntMat& m);

/// Invertible integer change of lattice basis.  Points are row vectors and
/// transform as x -> x * forward; forward * inverse == identity and both
/// matrices are integer, so |det| == 1.
struct UnimodularMap {
  IntMat forward;
  IntMat inverse;

  std::size_t dim() const { return forward.size(); }
  /// Throws std::invalid_argument unless forward * inverse == I.
  void validate() const;
  UnimodularMap inverted() const { return {inverse, forward}; }
};

IntVec apply_map(const IntVec& x, const IntMat& m);

/// Basis of Z^d: d row vectors with determinant +-1.
struct LatticeBasis {
  IntMat rows;

  std::size_t dim() const { return rows.size(); }
  /// Throws std::invalid_argument unless square with |det| == 1.
  void validate() const;
};

struct HnfResult {
  IntMat h;
  UnimodularMap u;  // u.forward * m == h
};

/// Row-style Hermite normal form H = U M with U unimodular.
///
/// Convention: pivots are assigned bottom-up while scanning columns right to
/// left, so H is lower-triangular up to the pivot columns, zero rows sit on
/// top, pivots are positive, and every entry below a pivot lies in [0, pivot).
/// This form is unique for a given row lattice; U is tracked together with its
/// inverse.
HnfResult hnf(const IntMat& m);

/// Thrown by extend_to_basis when the input vectors generate a proper
/// sublattice of the lattice points in their span; witness is a lattice point
/// of the span that the inputs do not generate.
struct NotPrimitiveError : std::domain_error {
  IntVec witness;
  explicit NotPrimitiveError(IntVec w)
      : std::domain_error("vectors are not a primitive system; witness point is not "
                          "an integer combination of them"),
        witness(std::move(w)) {}
};

/// Completes r primitive, linearly independent integer vectors to a basis of
/// Z^d whose first r rows are the inputs.  Throws NotPrimitiveError when the
/// inputs are not primitive, std::invalid_argument when dependent/ill-shaped.
LatticeBasis extend_to_basis(const IntMat& vectors);

/// Canonical (Hermite-form) basis of L intersected with Z^d, where L is the
/// subspace spanned by the given rational vectors.  Returns an empty matrix
/// for L = {0}.
IntMat sublattice_of_subspace(const Mat<Rational>& spanning);

/// Primitive integer vector parallel to v with positive leading nonzero
/// entry, or empty when v is not parallel to any rational vector.  Throws
/// std::invalid_argument for the zero vector.
std::optional<IntVec> is_rational_direction(const Vec<QuadExt>& v);

/// Primitive integer vector parallel to a nonzero rational vector, sign fixed
/// so the first nonzero entry is positive.
IntVec primitive_vector(const Vec<Rational>& v);

/// Map sending basis row u_i to e_i (forward = rows^-1, inverse = rows).
UnimodularMap unimodular_from_basis(const LatticeBasis& basis);

}  // namespace latfree
