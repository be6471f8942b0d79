#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "latfree/lattice_search.hpp"
#include "latfree/polyhedron.hpp"

namespace latfree {

/// Constructive proof that a full-dimensional polyhedron is maximal among
/// lattice-free sets: an integral spanning set of the recession space and one
/// lattice point in the relative interior of every facet of the canonical
/// form.
struct MaximalityCertificate {
  /// (canonical facet index, lattice point in that facet's relative interior)
  std::vector<std::pair<std::size_t, IntVec>> facet_witnesses;
  IntMat rec_basis;             // r integer vectors spanning rec(K)
  std::size_t facet_count = 0;  // m, satisfies m <= 2^(d-r)
  std::size_t r = 0;
};

/// Constructive negation: an interior lattice point, or a strictly larger
/// polyhedron that is still lattice-free, or a dimension defect.
struct Refutation {
  enum class Kind { not_lattice_free, not_maximal, not_full_dimensional };

  Kind kind;
  std::optional<Witness> witness;                   // not_lattice_free
  std::optional<Polyhedron<Rational>> enlargement;  // not_maximal
};

using CertifyResult = std::variant<MaximalityCertificate, Refutation>;

struct FreenessResult {
  bool free = false;
  std::optional<Witness> witness;  // interior lattice point when not free
};

/// Whether int(P) contains a lattice point; raises CapExhaustedError when the
/// underlying search cannot decide within the cap.
FreenessResult is_lattice_free(const Polyhedron<Rational>& p, std::uint64_t cap = 4096);

/// Quadratic-field overload.  Rational data and lower-dimensional sets decide
/// exactly; genuinely irrational full-dimensional bounded sets decide by
/// window enumeration; irrational unbounded sets fall back to a capped
/// doubling window search whose exhaustion raises CapExhaustedError.
FreenessResult is_lattice_free(const Polyhedron<QuadExt>& p, std::uint64_t cap = 4096);

/// Decision procedure for maximality of full-dimensional rational polyhedra:
/// lattice-freeness, a linear recession space with integral spanning set, and
/// an occupied relative interior for every facet together certify maximality;
/// each failure is refuted constructively (witness point or strictly larger
/// lattice-free polyhedron).  Facet counts beyond 2^(d-r) on otherwise
/// certified input signal an internal arithmetic fault and raise
/// std::logic_error.
CertifyResult certify_maximal_fulldim(const Polyhedron<Rational>& p,
                                      std::uint64_t cap = 4096);

/// Re-validates a certificate against the polyhedron with exact predicates:
/// every canonical facet carries exactly one witness, each witness is on its
/// own facet and strictly inside all other facets, the recession basis is
/// integral and spans rec(P), and the facet-count bound holds.  Throws
/// std::domain_error describing the first violation.
void validate_certificate(const Polyhedron<Rational>& p,
                          const MaximalityCertificate& cert);

/// Verdict for affine subspaces: a hyperplane is maximal lattice-free exactly
/// when its normal direction is irrational; lower-dimensional subspaces never
/// are.  Not-maximal verdicts carry a strictly larger lattice-free slab.
struct HyperplaneVerdict {
  bool maximal = false;
  std::string reason;                               // set when not maximal
  Vec<QuadExt> normal;                              // hyperplane normal (d-1 case)
  std::optional<IntVec> integer_normal;             // present iff direction rational
  std::optional<Polyhedron<Rational>> enlargement;  // containing slab, rational
};

HyperplaneVerdict certify_maximal_lowdim(const AffineSubspace<QuadExt>& h);

/// Report for the recession-space sum property: for lattice-free P, the sum
/// P + span(rec P) stays lattice-free, and equals P - rec(P) pointwise.
struct SumFreenessReport {
  Polyhedron<Rational> sum;             // P + linear hull of rec(P)
  std::vector<IntVec> interior_points;  // inside the window; expect empty
  bool free_within_window = false;
  /// P - rec(P) and P + span(rec P) agree on a coarse sample of window
  /// lattice points (at most 7 values per axis).
  bool difference_identity_ok = false;
  std::vector<IntVec> identity_mismatches;
};

/// Verifies the sum property within an axis window.  Throws std::domain_error
/// when P itself is not lattice-free (the hypothesis fails).
SumFreenessReport check_sum_freeness(const Polyhedron<Rational>& p,
                                     const IntVec& window_lo, const IntVec& window_hi,
                                     std::uint64_t cap = 4096);

/// One basis vector's membership evidence for the dense-subspace sum check:
/// either an exact decomposition into an integer vector plus a recession
/// vector, or a line approximation bundle with strictly improving tolerances.
struct MembershipDecomposition {
  IntVec z;
  Vec<QuadExt> l_coeffs;  // coefficients over the recession-space basis
};
struct ApproxCertificate {
  Vec<QuadExt> u;
  std::vector<ApproxResult> steps;  // >= 3 entries, t strictly increasing
};
using SpaceMembershipCert = std::variant<MembershipDecomposition, ApproxCertificate>;

struct DenseSumReport {
  bool certified = false;               // all basis vectors carried valid evidence
  std::vector<IntVec> interior_points;  // int(P+M) lattice points in the window
  bool free_within_window = false;
};

/// Validates the membership evidence for every vector of m_basis, sums P with
/// span(m_basis), and reports the interior lattice points of the sum within
/// the window.  Invalid evidence raises std::domain_error.
DenseSumReport check_dense_sum(const Polyhedron<QuadExt>& p, const Mat<QuadExt>& m_basis,
                               const std::vector<SpaceMembershipCert>& certs,
                               const IntVec& window_lo, const IntVec& window_hi);

}  // namespace latfree
