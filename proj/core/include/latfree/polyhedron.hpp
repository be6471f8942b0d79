#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "latfree/intlat.hpp"
#include "latfree/linalg.hpp"
#include "latfree/quadext.hpp"
#include "latfree/rational.hpp"
#include "latfree/simplex.hpp"

namespace latfree {

struct EmptyPolyhedronError : std::domain_error {
  EmptyPolyhedronError() : std::domain_error("polyhedron is empty") {}
};
struct UnboundedPolyhedronError : std::domain_error {
  explicit UnboundedPolyhedronError(const std::string& what)
      : std::domain_error(what) {}
};

/// One inequality <a, x> <= b.
template <class S>
struct Inequality {
  Vec<S> a;
  S b;

  bool operator==(const Inequality& o) const { return a == o.a && b == o.b; }
};

/// Closed convex polyhedron in H-representation.  An empty inequality list
/// denotes all of R^d.  Normals are nonzero; emptiness of the set itself is
/// discovered by the operations, not encoded in the type.
template <class S>
class Polyhedron {
 public:
  explicit Polyhedron(std::size_t d) : d_(d) {}
  Polyhedron(std::size_t d, std::vector<Inequality<S>> ineqs)
      : d_(d), ineqs_(std::move(ineqs)) {
    for (const Inequality<S>& q : ineqs_) {
      if (q.a.size() != d_) throw std::invalid_argument("normal of wrong dimension");
      if (is_zero_vec(q.a)) throw std::invalid_argument("zero normal in inequality");
    }
  }

  std::size_t ambient_dim() const { return d_; }
  const std::vector<Inequality<S>>& ineqs() const { return ineqs_; }
  std::size_t size() const { return ineqs_.size(); }

  void add(Inequality<S> q) {
    if (q.a.size() != d_) throw std::invalid_argument("normal of wrong dimension");
    if (is_zero_vec(q.a)) throw std::invalid_argument("zero normal in inequality");
    ineqs_.push_back(std::move(q));
  }

  /// Adds the pair <a,x> <= b, -<a,x> <= -b encoding <a,x> == b.
  void add_equality(const Vec<S>& a, const S& b) {
    add({a, b});
    Vec<S> neg(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
    add({std::move(neg), -b});
  }

  bool contains(const Vec<S>& x) const {
    for (const Inequality<S>& q : ineqs_)
      if (sgn(dot(q.a, x) - q.b) > 0) return false;
    return true;
  }

  /// Strict satisfaction of every inequality; equals interior membership for
  /// any valid H-representation.
  bool strictly_contains(const Vec<S>& x) const {
    for (const Inequality<S>& q : ineqs_)
      if (sgn(dot(q.a, x) - q.b) >= 0) return false;
    return true;
  }

  Mat<S> normal_matrix() const {
    Mat<S> a;
    a.reserve(ineqs_.size());
    for (const Inequality<S>& q : ineqs_) a.push_back(q.a);
    return a;
  }
  Vec<S> rhs_vector() const {
    Vec<S> b;
    b.reserve(ineqs_.size());
    for (const Inequality<S>& q : ineqs_) b.push_back(q.b);
    return b;
  }

 private:
  std::size_t d_;
  std::vector<Inequality<S>> ineqs_;
};

/// Polyhedral cone {u : A u <= 0}.
template <class S>
struct Cone {
  std::size_t d;
  Mat<S> a;
};

/// base + span(directions).
template <class S>
struct AffineSubspace {
  Vec<S> base;
  Mat<S> directions;

  std::size_t ambient_dim() const { return base.size(); }
};

// ---------------------------------------------------------------------------
// LP wrappers

template <class S>
LpResult<S> max_linear(const Polyhedron<S>& p, const Vec<S>& c) {
  return lp_maximize(p.normal_matrix(), p.rhs_vector(), c);
}

template <class S>
LpResult<S> min_linear(const Polyhedron<S>& p, const Vec<S>& c) {
  return lp_minimize(p.normal_matrix(), p.rhs_vector(), c);
}

template <class S>
bool is_empty(const Polyhedron<S>& p) {
  return lp_feasible(p.normal_matrix(), p.rhs_vector(), p.ambient_dim()).status ==
         LpStatus::infeasible;
}

struct CoordinateBounds {
  bool has_lo = false, has_hi = false;
  Rational lo, hi;
};

/// Exact per-coordinate range of a nonempty rational polyhedron; open sides
/// flagged.
inline std::vector<CoordinateBounds> coordinate_ranges(const Polyhedron<Rational>& p) {
  std::size_t d = p.ambient_dim();
  std::vector<CoordinateBounds> out(d);
  for (std::size_t j = 0; j < d; ++j) {
    Vec<Rational> c(d, Rational(0));
    c[j] = Rational(1);
    LpResult<Rational> hi = max_linear(p, c);
    LpResult<Rational> lo = min_linear(p, c);
    if (hi.status == LpStatus::infeasible) throw EmptyPolyhedronError();
    if (hi.status == LpStatus::optimal) {
      out[j].has_hi = true;
      out[j].hi = hi.value;
    }
    if (lo.status == LpStatus::optimal) {
      out[j].has_lo = true;
      out[j].lo = lo.value;
    }
  }
  return out;
}

template <class S>
bool is_bounded(const Polyhedron<S>& p) {
  std::size_t d = p.ambient_dim();
  for (std::size_t j = 0; j < d; ++j) {
    Vec<S> c(d, S(0));
    c[j] = S(1);
    LpResult<S> hi = max_linear(p, c);
    if (hi.status == LpStatus::infeasible) return true;  // empty set is bounded
    if (hi.status == LpStatus::unbounded) return false;
    if (min_linear(p, c).status == LpStatus::unbounded) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Canonical form

namespace detail {

template <class S>
S abs_val(const S& x) {
  return sgn(x) < 0 ? -x : x;
}

/// Positive rescale: primitive integer data for rational rows, leading
/// coefficient +-1 otherwise.  Applied to (a, b) jointly.
template <class S>
Inequality<S> normalize_inequality(Inequality<S> q) {
  bool all_rat = true;
  for (const S& x : q.a)
    if (!exactly_rational(x)) { all_rat = false; break; }
  if (all_rat && exactly_rational(q.b)) {
    Int lcm = 1, gcd = 0;
    for (const S& x : q.a) {
      Rational r = rational_value(x);
      lcm = boost::multiprecision::lcm(lcm, denominator(r));
    }
    for (const S& x : q.a) {
      Rational r = rational_value(x);
      gcd = boost::multiprecision::gcd(gcd, Int(numerator(r) * (lcm / denominator(r))));
    }
    Rational scale = Rational(lcm, gcd);  // gcd > 0 since a != 0
    S s(scale);
    for (S& x : q.a) x *= s;
    q.b *= s;
    return q;
  }
  std::size_t lead = 0;
  while (sgn(q.a[lead]) == 0) ++lead;
  S inv = S(1) / abs_val(q.a[lead]);
  for (S& x : q.a) x *= inv;
  q.b *= inv;
  return q;
}

}  // namespace detail

/// Irredundant representation with deterministically rescaled rows, in input
/// order.  Throws EmptyPolyhedronError for infeasible systems.  For
/// full-dimensional P every surviving inequality supports a facet.
template <class S>
Polyhedron<S> canonicalize(const Polyhedron<S>& p) {
  if (is_empty(p)) throw EmptyPolyhedronError();
  std::vector<Inequality<S>> rows;
  rows.reserve(p.size());
  for (const Inequality<S>& q : p.ineqs())
    rows.push_back(detail::normalize_inequality(q));

  // Duplicate normals: keep the tightest bound, first occurrence order.
  std::vector<Inequality<S>> dedup;
  for (const Inequality<S>& q : rows) {
    bool merged = false;
    for (Inequality<S>& kept : dedup) {
      if (kept.a == q.a) {
        if (q.b < kept.b) kept.b = q.b;
        merged = true;
        break;
      }
    }
    if (!merged) dedup.push_back(q);
  }

  // Sequential exact redundancy elimination against the current system.
  std::vector<Inequality<S>> active = dedup;
  std::size_t i = 0;
  while (i < active.size()) {
    Mat<S> a;
    Vec<S> b;
    for (std::size_t j = 0; j < active.size(); ++j) {
      if (j == i) continue;
      a.push_back(active[j].a);
      b.push_back(active[j].b);
    }
    // Cap the objective so the test LP cannot be unbounded.
    a.push_back(active[i].a);
    b.push_back(active[i].b + S(1));
    LpResult<S> r = lp_maximize(a, b, active[i].a);
    if (r.status == LpStatus::optimal && r.value <= active[i].b)
      active.erase(active.begin() + i);
    else
      ++i;
  }
  return Polyhedron<S>(p.ambient_dim(), std::move(active));
}

// ---------------------------------------------------------------------------
// Dimension and recession

/// Affine dimension of nonempty P: ambient dimension minus the rank of the
/// implicit equality normals (rows whose minimum over P equals their bound).
template <class S>
std::size_t dimension(const Polyhedron<S>& p) {
  if (is_empty(p)) throw EmptyPolyhedronError();
  Mat<S> implicit;
  for (const Inequality<S>& q : p.ineqs()) {
    LpResult<S> lo = min_linear(p, q.a);
    if (lo.status == LpStatus::optimal && lo.value == q.b) implicit.push_back(q.a);
  }
  return p.ambient_dim() - rank(std::move(implicit));
}

template <class S>
Cone<S> recession_cone(const Polyhedron<S>& p) {
  return Cone<S>{p.ambient_dim(), p.normal_matrix()};
}

/// When the cone is a linear space, its basis (rows; empty for {0}); absent
/// otherwise.
template <class S>
std::optional<Mat<S>> is_linear_space(const Cone<S>& c) {
  // Bounding box keeps the test LPs bounded; scaling invariance of the cone
  // makes the restriction harmless.
  Mat<S> a = c.a;
  Vec<S> b(c.a.size(), S(0));
  for (std::size_t j = 0; j < c.d; ++j) {
    Vec<S> e(c.d, S(0));
    e[j] = S(1);
    a.push_back(e);
    b.push_back(S(1));
    Vec<S> ne(c.d, S(0));
    ne[j] = S(-1);
    a.push_back(ne);
    b.push_back(S(1));
  }
  for (const Vec<S>& row : c.a) {
    LpResult<S> lo = lp_minimize(a, b, row);
    if (lo.status != LpStatus::optimal)
      throw std::logic_error("boxed cone LP must be bounded");
    if (sgn(lo.value) < 0) return std::nullopt;
  }
  return kernel_basis(c.a, c.d);
}

/// Linear hull of the cone (basis rows): the kernel of its implicit equality
/// rows.  For a linear-space cone this coincides with is_linear_space.
template <class S>
Mat<S> cone_linear_hull(const Cone<S>& c) {
  Mat<S> a = c.a;
  Vec<S> b(c.a.size(), S(0));
  for (std::size_t j = 0; j < c.d; ++j) {
    Vec<S> e(c.d, S(0));
    e[j] = S(1);
    a.push_back(e);
    b.push_back(S(1));
    Vec<S> ne(c.d, S(0));
    ne[j] = S(-1);
    a.push_back(ne);
    b.push_back(S(1));
  }
  Mat<S> implicit;
  for (const Vec<S>& row : c.a) {
    LpResult<S> lo = lp_minimize(a, b, row);
    if (lo.status != LpStatus::optimal)
      throw std::logic_error("boxed cone LP must be bounded");
    if (sgn(lo.value) == 0) implicit.push_back(row);
  }
  return kernel_basis(std::move(implicit), c.d);
}

// ---------------------------------------------------------------------------
// Minkowski sum with a linear space (exact Fourier-Motzkin projection)

namespace detail {

/// Eliminates variable v from the system; exact FM step with pairwise
/// combination, trivial-row filtering and duplicate removal.
/// Returns false (infeasible) when a contradictory constant row appears.
template <class S>
bool fm_eliminate(std::vector<Inequality<S>>& rows, std::size_t v) {
  std::vector<Inequality<S>> pos, neg, out;
  for (Inequality<S>& q : rows) {
    int s = sgn(q.a[v]);
    if (s > 0) pos.push_back(std::move(q));
    else if (s < 0) neg.push_back(std::move(q));
    else out.push_back(std::move(q));
  }
  for (const Inequality<S>& qp : pos) {
    for (const Inequality<S>& qn : neg) {
      // alpha > 0, beta < 0: beta-weighted difference cancels coordinate v.
      const S& alpha = qp.a[v];
      const S& beta = qn.a[v];
      Inequality<S> mix;
      mix.a.resize(qp.a.size());
      for (std::size_t j = 0; j < qp.a.size(); ++j)
        mix.a[j] = qp.a[j] * (-beta) + qn.a[j] * alpha;
      mix.b = qp.b * (-beta) + qn.b * alpha;
      if (is_zero_vec(mix.a)) {
        if (sgn(mix.b) < 0) return false;
        continue;
      }
      out.push_back(detail::normalize_inequality(std::move(mix)));
    }
  }
  std::vector<Inequality<S>> dedup;
  for (Inequality<S>& q : out) {
    bool seen = false;
    for (const Inequality<S>& kept : dedup)
      if (kept == q) { seen = true; break; }
    if (!seen) dedup.push_back(std::move(q));
  }
  rows = std::move(dedup);
  return true;
}

}  // namespace detail

/// H-representation of P + span(l_rows): change coordinates so the space is
/// spanned by trailing coordinates, project them out by Fourier-Motzkin, and
/// pull the result back.  Canonicalized.  Throws EmptyPolyhedronError for
/// empty P.
template <class S>
Polyhedron<S> sum_with_space(const Polyhedron<S>& p, const Mat<S>& l_rows) {
  std::size_t d = p.ambient_dim();
  Mat<S> l;
  for (const Vec<S>& row : l_rows)
    if (!is_zero_vec(row)) l.push_back(row);
  if (l.empty()) return canonicalize(p);
  std::size_t s = rank(l);

  // Invertible T whose last s columns span the space: greedily prepend
  // standard basis vectors that grow the rank.
  Mat<S> chosen;
  for (std::size_t j = 0; j < d && chosen.size() < d - s; ++j) {
    Mat<S> trial = l;
    for (const Vec<S>& r : chosen) trial.push_back(r);
    Vec<S> e(d, S(0));
    e[j] = S(1);
    trial.push_back(e);
    if (rank(std::move(trial)) == s + chosen.size() + 1)
      chosen.push_back(std::move(e));
  }
  if (chosen.size() != d - s) throw std::logic_error("basis completion failed");

  Mat<S> t(d, Vec<S>(d, S(0)));  // columns: chosen then space basis
  {
    // Use an independent subset of l of size s for the trailing columns.
    Mat<S> picked;
    for (const Vec<S>& row : l) {
      Mat<S> trial = picked;
      trial.push_back(row);
      if (rank(trial) > picked.size()) picked.push_back(row);
      if (picked.size() == s) break;
    }
    for (std::size_t j = 0; j < d - s; ++j)
      for (std::size_t i = 0; i < d; ++i) t[i][j] = chosen[j][i];
    for (std::size_t j = 0; j < s; ++j)
      for (std::size_t i = 0; i < d; ++i) t[i][d - s + j] = picked[j][i];
  }
  std::optional<Mat<S>> tinv = inverse(t);
  if (!tinv) throw std::logic_error("coordinate change is singular");

  // Rows in y coordinates (x = T y): normal becomes a * T.
  std::vector<Inequality<S>> rows;
  for (const Inequality<S>& q : p.ineqs())
    rows.push_back({row_times_mat(q.a, t), q.b});
  for (std::size_t v = d; v-- > d - s;) {
    if (!detail::fm_eliminate(rows, v)) throw EmptyPolyhedronError();
  }

  // Pull back: g . y_top = (g_ext T^-1) . x.
  std::vector<Inequality<S>> lifted;
  for (const Inequality<S>& q : rows) {
    Vec<S> n = row_times_mat(q.a, *tinv);
    if (is_zero_vec(n)) {
      if (sgn(q.b) < 0) throw EmptyPolyhedronError();
      continue;
    }
    lifted.push_back({std::move(n), q.b});
  }
  return canonicalize(Polyhedron<S>(d, std::move(lifted)));
}

// ---------------------------------------------------------------------------
// Vertices, volume, facets

/// All vertices (0-dimensional faces), lexicographically sorted.  Requires a
/// bounded polyhedron.
template <class S>
std::vector<Vec<S>> vertices(const Polyhedron<S>& p) {
  if (is_empty(p)) throw EmptyPolyhedronError();
  if (!is_bounded(p))
    throw UnboundedPolyhedronError("vertex enumeration requires a bounded polyhedron");
  std::size_t d = p.ambient_dim(), m = p.size();
  std::vector<Vec<S>> verts;
  auto emit = [&](const std::vector<std::size_t>& subset) {
    Mat<S> a(d, Vec<S>(d));
    Vec<S> b(d);
    for (std::size_t r = 0; r < d; ++r) {
      a[r] = p.ineqs()[subset[r]].a;
      b[r] = p.ineqs()[subset[r]].b;
    }
    std::optional<Vec<S>> x = solve_square(std::move(a), std::move(b));
    if (!x || !p.contains(*x)) return;
    for (const Vec<S>& v : verts)
      if (v == *x) return;
    verts.push_back(std::move(*x));
  };
  std::vector<std::size_t> subset;
  // Iterative combination enumeration.
  if (m >= d && d > 0) {
    subset.resize(d);
    for (std::size_t i = 0; i < d; ++i) subset[i] = i;
    for (;;) {
      emit(subset);
      std::size_t i = d;
      while (i-- > 0) {
        if (subset[i] != i + m - d) {
          ++subset[i];
          for (std::size_t j = i + 1; j < d; ++j) subset[j] = subset[j - 1] + 1;
          break;
        }
        if (i == 0) { i = d + 1; break; }
      }
      if (i == d + 1) break;
    }
  }
  std::sort(verts.begin(), verts.end(), [](const Vec<S>& x, const Vec<S>& y) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] < y[i]) return true;
      if (y[i] < x[i]) return false;
    }
    return false;
  });
  return verts;
}

namespace detail {

/// Recursive triangulation: fan from the lexicographically smallest vertex
/// over recursively triangulated facets.  verts must be the (sorted) vertex
/// set of the canonical polytope poly of affine dimension cd.
template <class S>
void triangulate(const Polyhedron<S>& poly, const std::vector<Vec<S>>& verts,
                 std::size_t cd, std::vector<std::vector<Vec<S>>>& out) {
  if (verts.size() == cd + 1) {
    out.push_back(verts);
    return;
  }
  const Vec<S>& apex = verts.front();  // lexicographically smallest (sorted)
  for (const Inequality<S>& q : poly.ineqs()) {
    if (dot(q.a, apex) == q.b) continue;
    std::vector<Vec<S>> fv;
    for (const Vec<S>& v : verts)
      if (dot(q.a, v) == q.b) fv.push_back(v);
    if (fv.size() < cd) continue;  // not a facet of this face
    Polyhedron<S> face = poly;
    face.add_equality(q.a, q.b);
    std::vector<std::vector<Vec<S>>> sub;
    triangulate(canonicalize(face), fv, cd - 1, sub);
    for (std::vector<Vec<S>>& simplex : sub) {
      simplex.push_back(apex);
      out.push_back(std::move(simplex));
    }
  }
}

}  // namespace detail

/// Exact d-dimensional volume of a bounded full-dimensional polyhedron.
inline Rational volume(const Polyhedron<Rational>& p) {
  Polyhedron<Rational> canon = canonicalize(p);
  if (dimension(canon) != canon.ambient_dim())
    throw std::domain_error("volume requires a full-dimensional polytope");
  if (!is_bounded(canon))
    throw UnboundedPolyhedronError("volume requires a bounded polyhedron");
  std::vector<Vec<Rational>> verts = vertices(canon);
  std::size_t d = canon.ambient_dim();
  std::vector<std::vector<Vec<Rational>>> simplices;
  detail::triangulate(canon, verts, d, simplices);
  Rational total(0);
  Rational dfact(1);
  for (std::size_t i = 2; i <= d; ++i) dfact *= Rational(static_cast<long>(i));
  for (const std::vector<Vec<Rational>>& simplex : simplices) {
    Mat<Rational> edges(d, Vec<Rational>(d));
    for (std::size_t i = 0; i < d; ++i)
      edges[i] = vec_sub(simplex[i], simplex[d]);
    Rational det = determinant(std::move(edges));
    if (sgn(det) < 0) det = -det;
    total += det / dfact;
  }
  return total;
}

/// Facets of a full-dimensional canonical polyhedron, one per inequality and
/// in inequality order, each encoded with the defining equality as a pair.
template <class S>
std::vector<Polyhedron<S>> facets(const Polyhedron<S>& p) {
  std::vector<Polyhedron<S>> out;
  for (const Inequality<S>& q : p.ineqs()) {
    Polyhedron<S> f = p;
    f.add_equality(q.a, q.b);
    out.push_back(std::move(f));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Unimodular transport and conversions

/// Image of P under the map (x -> x * forward): normals transform with the
/// transposed inverse so that membership is preserved exactly.
template <class S>
Polyhedron<S> apply_unimodular(const Polyhedron<S>& p, const UnimodularMap& map) {
  std::size_t d = p.ambient_dim();
  if (map.dim() != d) throw std::invalid_argument("map dimension mismatch");
  std::vector<Inequality<S>> rows;
  for (const Inequality<S>& q : p.ineqs()) {
    Vec<S> n(d, S(0));
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t i = 0; i < d; ++i) n[j] += q.a[i] * S(Rational(map.inverse[j][i]));
    rows.push_back({std::move(n), q.b});
  }
  return Polyhedron<S>(d, std::move(rows));
}

template <class S>
Vec<S> apply_point(const Vec<S>& x, const IntMat& forward) {
  std::size_t d = forward.size();
  Vec<S> y(d, S(0));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) y[j] += x[i] * S(Rational(forward[i][j]));
  return y;
}

inline Polyhedron<QuadExt> to_quad(const Polyhedron<Rational>& p) {
  std::vector<Inequality<QuadExt>> rows;
  for (const Inequality<Rational>& q : p.ineqs()) {
    Vec<QuadExt> a(q.a.size());
    for (std::size_t i = 0; i < q.a.size(); ++i) a[i] = QuadExt(q.a[i]);
    rows.push_back({std::move(a), QuadExt(q.b)});
  }
  return Polyhedron<QuadExt>(p.ambient_dim(), std::move(rows));
}

/// Rational copy of a quadratic-field polyhedron; absent when any coefficient
/// is genuinely irrational.
inline std::optional<Polyhedron<Rational>> to_rational(const Polyhedron<QuadExt>& p) {
  std::vector<Inequality<Rational>> rows;
  for (const Inequality<QuadExt>& q : p.ineqs()) {
    Vec<Rational> a(q.a.size());
    for (std::size_t i = 0; i < q.a.size(); ++i) {
      if (!exactly_rational(q.a[i])) return std::nullopt;
      a[i] = rational_value(q.a[i]);
    }
    if (!exactly_rational(q.b)) return std::nullopt;
    rows.push_back({std::move(a), rational_value(q.b)});
  }
  return Polyhedron<Rational>(p.ambient_dim(), std::move(rows));
}

/// P with coordinate `coord` fixed to `value`, as a polyhedron in the
/// remaining coordinates; empty when the substitution is contradictory.
template <class S>
std::optional<Polyhedron<S>> substitute(const Polyhedron<S>& p, std::size_t coord,
                                        const S& value) {
  std::size_t d = p.ambient_dim();
  std::vector<Inequality<S>> rows;
  for (const Inequality<S>& q : p.ineqs()) {
    Vec<S> a;
    a.reserve(d - 1);
    for (std::size_t i = 0; i < d; ++i)
      if (i != coord) a.push_back(q.a[i]);
    S b = q.b - q.a[coord] * value;
    if (is_zero_vec(a)) {
      if (sgn(b) < 0) return std::nullopt;
      continue;
    }
    rows.push_back({std::move(a), std::move(b)});
  }
  return Polyhedron<S>(d - 1, std::move(rows));
}

/// P intersected with the axis box [lo_i, hi_i].
template <class S>
Polyhedron<S> clip_to_box(const Polyhedron<S>& p, const Vec<Rational>& lo,
                          const Vec<Rational>& hi) {
  Polyhedron<S> out = p;
  std::size_t d = p.ambient_dim();
  for (std::size_t j = 0; j < d; ++j) {
    Vec<S> e(d, S(0));
    e[j] = S(1);
    out.add({e, S(hi[j])});
    Vec<S> ne(d, S(0));
    ne[j] = S(-1);
    out.add({std::move(ne), S(-lo[j])});
  }
  return out;
}

}  // namespace latfree
