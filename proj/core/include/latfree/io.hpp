#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latfree/lattice_search.hpp"
#include "latfree/maximality.hpp"
#include "latfree/maximalize.hpp"
#include "latfree/polyhedron.hpp"

/// JSON input/output for every object the tools exchange.  All parsers accept
/// a JSON document as text and throw std::invalid_argument with a readable
/// message on malformed input; all writers return deterministic JSON text
/// (fixed key order, fixed formatting) so outputs are byte-stable.
///
/// Scalars: an integer, a string "p" or "p/q" with q > 0 (arbitrary
/// precision), or a two-element array [a, b] meaning a + b*sqrt(k) with k
/// taken from the enclosing document.
namespace latfree::io {

/// {"d": ..., "k": (optional, squarefree >= 2), "ineqs": [{"a": [...], "b": ...}]}
struct ParsedPolyhedron {
  Polyhedron<QuadExt> poly;
  std::optional<Polyhedron<Rational>> rational;  // set when every entry is rational
  long k = 0;                                    // 0 when absent
};
ParsedPolyhedron parse_polyhedron(const std::string& text);

/// {"d": ..., "vectors": [[...], ...]} with integer entries.
struct VectorList {
  std::size_t d = 0;
  std::vector<IntVec> vectors;
};
VectorList parse_vector_list(const std::string& text);

/// {"d": ..., "k": ..., "u": [...]} -- a direction in Q(sqrt(k))^d.
struct ParsedDirection {
  std::size_t d = 0;
  long k = 0;
  Vec<QuadExt> u;
};
ParsedDirection parse_direction(const std::string& text);

/// {"d": ..., "k": ..., "base": [...], "directions": [[...], ...]}
struct ParsedHyperplane {
  long k = 0;
  AffineSubspace<QuadExt> flat;
};
ParsedHyperplane parse_hyperplane(const std::string& text);

/// {"polyhedron": {...}, "basis": [[...], ...], "certificates": [...]} where a
/// certificate is {"type": "decomposition", "z": [...], "coeffs": [...]} or
/// {"type": "line", "u": [...], "steps": [{"z": [...], "t": ..., "n": ...}]}.
struct DenseSumBundle {
  Polyhedron<QuadExt> poly;
  Mat<QuadExt> basis;
  std::vector<SpaceMembershipCert> certs;
};
DenseSumBundle parse_dense_sum_bundle(const std::string& text);

std::string write_rational(const Rational& x);  // "p" or "p/q"
std::string write_polyhedron(const Polyhedron<Rational>& p);
std::string write_freeness(const FreenessResult& r);
std::string write_certify(const CertifyResult& r);
std::string write_hyperplane_verdict(const HyperplaneVerdict& v);
std::string write_enlarge(const EnlargeResult& r);
std::string write_split(const SplitForm& s);
std::string write_minkowski(const IntVec& z);
std::string write_parity(const ParityPair& p);
std::string write_approx(const ApproxResult& r);
std::string write_volume(const Rational& v);
std::string write_points(const std::vector<IntVec>& pts);
std::string write_sum_report(const SumFreenessReport& r);
std::string write_dense_report(const DenseSumReport& r);

}  // namespace latfree::io
