#include "latfree/maximality.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "latfree/maximalize.hpp"

namespace latfree {

namespace {

Vec<Rational> to_rational_vec(const IntVec& z) {
  Vec<Rational> x(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) x[i] = Rational(z[i]);
  return x;
}

std::string format_point(const IntVec& z) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (i) os << ", ";
    os << z[i];
  }
  os << ")";
  return os.str();
}

/// Integer bounding window of a bounded polyhedron over any exact scalar,
/// widened to integers.
template <class S>
std::pair<IntVec, IntVec> integer_window(const Polyhedron<S>& p) {
  std::size_t d = p.ambient_dim();
  IntVec lo(d), hi(d);
  for (std::size_t j = 0; j < d; ++j) {
    Vec<S> c(d, S(0));
    c[j] = S(1);
    LpResult<S> mx = max_linear(p, c);
    LpResult<S> mn = min_linear(p, c);
    if (mx.status != LpStatus::optimal || mn.status != LpStatus::optimal)
      throw UnboundedPolyhedronError("window extraction requires a bounded polyhedron");
    hi[j] = floor_int(mx.value);
    lo[j] = ceil_int(mn.value);
  }
  return {lo, hi};
}

/// Strictly larger lattice-free polyhedron obtained by relaxing facet i of
/// the bounded canonical polytope kp: drop the inequality if the relaxation
/// stays free, otherwise relax its bound to the nearest lattice level beyond.
Polyhedron<Rational> push_refutation(const Polyhedron<Rational>& kp, std::size_t i,
                                     std::uint64_t cap) {
  std::size_t d = kp.ambient_dim();
  Polyhedron<Rational> rest(d);
  for (std::size_t j = 0; j < kp.size(); ++j)
    if (j != i) rest.add(kp.ineqs()[j]);
  std::optional<Witness> inner = interior_lattice_point(rest, cap);
  if (!inner) return canonicalize(rest);

  const Inequality<Rational>& row = kp.ineqs()[i];
  Rational level_cap = dot(row.a, to_rational_vec(inner->z));
  Polyhedron<Rational> region = rest;
  region.add({row.a, level_cap});
  std::optional<Rational> best;
  for (const IntVec& z : enumerate_lattice_points(region)) {
    Rational v = dot(row.a, to_rational_vec(z));
    if (v > row.b && (!best || v < *best)) best = v;
  }
  if (!best)
    throw std::logic_error("no lattice level beyond an unoccupied facet despite witness");
  Polyhedron<Rational> out = rest;
  out.add({row.a, *best});
  return canonicalize(out);
}

}  // namespace

FreenessResult is_lattice_free(const Polyhedron<Rational>& p, std::uint64_t cap) {
  std::optional<Witness> w = interior_lattice_point(p, cap);
  if (w) return {false, std::move(w)};
  return {true, std::nullopt};
}

FreenessResult is_lattice_free(const Polyhedron<QuadExt>& p, std::uint64_t cap) {
  if (std::optional<Polyhedron<Rational>> rp = to_rational(p))
    return is_lattice_free(*rp, cap);
  std::size_t d = p.ambient_dim();
  if (is_empty(p)) return {true, std::nullopt};
  if (dimension(p) < d) return {true, std::nullopt};
  if (is_bounded(p)) {
    auto [lo, hi] = integer_window(p);
    std::vector<IntVec> pts = interior_points_in_window(p, lo, hi);
    if (pts.empty()) return {true, std::nullopt};
    IntVec best = pts.front();
    for (const IntVec& z : pts)
      if (near_origin_less(z, best)) best = z;
    return {false, Witness{best, Witness::Location::interior, std::nullopt}};
  }
  // Unbounded with genuinely irrational data: a witness can be found but
  // absence cannot be certified from a finite window.
  for (Int w = 1; w <= Int(cap); w *= 2) {
    IntVec lo(d, -w), hi(d, w);
    std::vector<IntVec> pts = interior_points_in_window(p, lo, hi);
    if (!pts.empty()) {
      IntVec best = pts.front();
      for (const IntVec& z : pts)
        if (near_origin_less(z, best)) best = z;
      return {false, Witness{best, Witness::Location::interior, std::nullopt}};
    }
  }
  throw CapExhaustedError(
      "freeness of an unbounded irrational polyhedron is undecided within the window cap");
}

CertifyResult certify_maximal_fulldim(const Polyhedron<Rational>& p, std::uint64_t cap) {
  Polyhedron<Rational> canon = canonicalize(p);
  std::size_t d = canon.ambient_dim();
  if (dimension(canon) != d)
    return Refutation{Refutation::Kind::not_full_dimensional, std::nullopt, std::nullopt};

  FreenessResult fr = is_lattice_free(canon, cap);
  if (!fr.free)
    return Refutation{Refutation::Kind::not_lattice_free, std::move(fr.witness),
                      std::nullopt};

  Cone<Rational> rc = recession_cone(canon);
  std::optional<Mat<Rational>> lin = is_linear_space(rc);
  if (!lin) {
    // A non-linear recession cone refutes maximality: adding the linear hull
    // of the cone strictly enlarges the set and preserves freeness.
    Polyhedron<Rational> bigger = sum_with_space(canon, cone_linear_hull(rc));
    return Refutation{Refutation::Kind::not_maximal, std::nullopt, std::move(bigger)};
  }

  SplitForm split = normalize_split(canon);
  const Polyhedron<Rational>& kp = split.transversal;
  std::size_t m = kp.size();
  if (m != canon.size())
    throw std::logic_error("facet count changed across the unimodular split");

  std::vector<IntVec> kp_witnesses(m);
  for (std::size_t i = 0; i < m; ++i) {
    Polyhedron<Rational> facet = kp;
    facet.add_equality(kp.ineqs()[i].a, kp.ineqs()[i].b);
    std::optional<IntVec> best;
    for (const IntVec& z : enumerate_lattice_points(facet)) {
      Vec<Rational> x = to_rational_vec(z);
      bool relint = true;
      for (std::size_t j = 0; j < m && relint; ++j) {
        if (j == i) continue;
        if (dot(kp.ineqs()[j].a, x) >= kp.ineqs()[j].b) relint = false;
      }
      if (relint && (!best || near_origin_less(z, *best))) best = z;
    }
    if (!best) {
      Polyhedron<Rational> bigger = lift_back(split, push_refutation(kp, i, cap));
      return Refutation{Refutation::Kind::not_maximal, std::nullopt, std::move(bigger)};
    }
    kp_witnesses[i] = std::move(*best);
  }

  MaximalityCertificate cert;
  cert.r = split.r;
  cert.facet_count = m;
  if (split.r > 0) {
    Mat<Rational> hull = cone_linear_hull(rc);
    cert.rec_basis = sublattice_of_subspace(hull);
  }
  if (d - split.r < 63 && m > (std::size_t{1} << (d - split.r)))
    throw std::logic_error(
        "facet count exceeds 2^(d-r) on otherwise certified input: arithmetic fault");

  std::set<std::size_t> seen;
  for (const IntVec& w : kp_witnesses) {
    IntVec full(d, 0);
    for (std::size_t i = 0; i < d - split.r; ++i) full[split.r + i] = w[i];
    IntVec z = apply_map(full, split.a.inverse);
    Witness located = classify_point(canon, z);
    if (located.location != Witness::Location::facet_relint)
      throw std::logic_error("lifted facet witness is not in a facet relative interior");
    if (!seen.insert(*located.facet_index).second)
      throw std::logic_error("two facet witnesses landed on the same canonical facet");
    cert.facet_witnesses.emplace_back(*located.facet_index, std::move(z));
  }
  if (seen.size() != m)
    throw std::logic_error("facet witnesses do not cover every canonical facet");
  std::sort(cert.facet_witnesses.begin(), cert.facet_witnesses.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  validate_certificate(canon, cert);
  return cert;
}

void validate_certificate(const Polyhedron<Rational>& p,
                          const MaximalityCertificate& cert) {
  Polyhedron<Rational> canon = canonicalize(p);
  std::size_t d = canon.ambient_dim();
  std::size_t m = canon.size();
  if (cert.facet_count != m)
    throw std::domain_error("certificate facet count differs from the canonical form");
  if (cert.facet_witnesses.size() != m)
    throw std::domain_error("certificate must carry exactly one witness per facet");

  std::set<std::size_t> seen;
  for (const auto& [idx, z] : cert.facet_witnesses) {
    if (idx >= m) throw std::domain_error("facet index out of range");
    if (!seen.insert(idx).second)
      throw std::domain_error("duplicate facet index in certificate");
    Vec<Rational> x = to_rational_vec(z);
    if (dot(canon.ineqs()[idx].a, x) != canon.ineqs()[idx].b)
      throw std::domain_error("witness " + format_point(z) +
                              " is not on its claimed facet");
    for (std::size_t j = 0; j < m; ++j) {
      if (j == idx) continue;
      if (dot(canon.ineqs()[j].a, x) >= canon.ineqs()[j].b)
        throw std::domain_error("witness " + format_point(z) +
                                " is not strictly inside facet " + std::to_string(j));
    }
  }

  std::optional<Mat<Rational>> lin = is_linear_space(recession_cone(canon));
  if (!lin) throw std::domain_error("recession cone is not a linear space");
  if (cert.r != lin->size())
    throw std::domain_error("certificate r differs from the recession space dimension");
  Mat<Rational> basis_rat;
  for (const IntVec& v : cert.rec_basis) {
    if (v.size() != d) throw std::domain_error("recession basis vector of wrong dimension");
    Vec<Rational> vr = to_rational_vec(v);
    for (const Inequality<Rational>& q : canon.ineqs())
      if (sgn(dot(q.a, vr)) != 0)
        throw std::domain_error("recession basis vector leaves the recession space");
    basis_rat.push_back(std::move(vr));
  }
  if (rank(basis_rat) != cert.r)
    throw std::domain_error("recession basis does not span the recession space");
  if (d - cert.r < 63 && m > (std::size_t{1} << (d - cert.r)))
    throw std::domain_error("facet count exceeds 2^(d-r)");
}

HyperplaneVerdict certify_maximal_lowdim(const AffineSubspace<QuadExt>& h) {
  std::size_t d = h.ambient_dim();
  HyperplaneVerdict v;
  std::size_t dir_rank = rank(h.directions);
  if (d == 0 || dir_rank + 1 != d) {
    v.maximal = false;
    v.reason = dir_rank + 1 < d
                   ? "direction dimension is below d-1; such flats are never maximal"
                   : "direction dimension must be exactly d-1";
    return v;
  }
  Mat<QuadExt> normals = kernel_basis(h.directions, d);
  if (normals.size() != 1)
    throw std::logic_error("hyperplane must have a one-dimensional normal space");
  v.normal = normals.front();

  std::optional<IntVec> iv = is_rational_direction(v.normal);
  if (!iv) {
    v.maximal = true;
    return v;
  }
  v.maximal = false;
  v.reason = "the normal direction is rational, so a containing slab is still free";
  v.integer_normal = iv;

  // Slab between consecutive lattice levels of the primitive integer normal.
  QuadExt level(Rational(0));
  for (std::size_t i = 0; i < d; ++i)
    level = level + QuadExt(Rational((*iv)[i])) * h.base[i];
  Int lo = floor_int(level);
  Polyhedron<Rational> slab(d);
  Vec<Rational> a(d), na(d);
  for (std::size_t i = 0; i < d; ++i) {
    a[i] = Rational((*iv)[i]);
    na[i] = -a[i];
  }
  slab.add({a, Rational(lo + 1)});
  slab.add({na, Rational(-lo)});
  v.enlargement = std::move(slab);
  return v;
}

SumFreenessReport check_sum_freeness(const Polyhedron<Rational>& p,
                                     const IntVec& window_lo, const IntVec& window_hi,
                                     std::uint64_t cap) {
  FreenessResult fr = is_lattice_free(p, cap);
  if (!fr.free)
    throw std::domain_error("hypothesis fails: interior lattice point " +
                            format_point(fr.witness->z));
  Polyhedron<Rational> canon = canonicalize(p);
  Mat<Rational> hull = cone_linear_hull(recession_cone(canon));
  SumFreenessReport report{
      hull.empty() ? canon : sum_with_space(canon, hull), {}, false, false, {}};
  report.interior_points =
      interior_points_in_window(report.sum, window_lo, window_hi);
  report.free_within_window = report.interior_points.empty();

  // Pointwise identity P - rec(P) == P + span(rec P): z belongs to P - rec(P)
  // iff some c with A c <= 0 satisfies A(z + c) <= b (an exact LP).  The
  // identity is a theorem for closed convex sets, so it is sampled on a coarse
  // sub-grid of the window (at most 7 values per axis) as an implementation
  // guard rather than swept exhaustively.
  std::size_t d = canon.ambient_dim();
  Mat<Rational> a;
  for (const Inequality<Rational>& q : canon.ineqs()) a.push_back(q.a);
  for (const Inequality<Rational>& q : canon.ineqs()) a.push_back(q.a);
  std::vector<std::vector<Int>> axis_values(d);
  bool empty_window = d == 0;
  for (std::size_t i = 0; i < d; ++i) {
    if (window_lo[i] > window_hi[i]) {
      empty_window = true;
      break;
    }
    Int span = window_hi[i] - window_lo[i];
    Int step = span / 6 + (span % 6 != 0 ? 1 : 0);
    if (step == 0) step = 1;
    for (Int v = window_lo[i]; v < window_hi[i]; v += step) axis_values[i].push_back(v);
    axis_values[i].push_back(window_hi[i]);
  }
  if (!empty_window) {
    std::vector<std::size_t> pos(d, 0);
    while (true) {
      IntVec z(d);
      for (std::size_t i = 0; i < d; ++i) z[i] = axis_values[i][pos[i]];
      Vec<Rational> x = to_rational_vec(z);
      Vec<Rational> b;
      for (const Inequality<Rational>& q : canon.ineqs()) b.push_back(q.b - dot(q.a, x));
      for (const Inequality<Rational>& q : canon.ineqs()) b.push_back(Rational(0));
      bool in_diff = lp_feasible(a, b, d).status == LpStatus::optimal;
      bool in_sum = report.sum.contains(x);
      if (in_diff != in_sum) report.identity_mismatches.push_back(z);
      std::size_t c = d;
      bool advanced = false;
      while (c-- > 0) {
        if (pos[c] + 1 < axis_values[c].size()) {
          ++pos[c];
          for (std::size_t j = c + 1; j < d; ++j) pos[j] = 0;
          advanced = true;
          break;
        }
        if (c == 0) break;
      }
      if (!advanced) break;
    }
  }
  report.difference_identity_ok = report.identity_mismatches.empty();
  return report;
}

DenseSumReport check_dense_sum(const Polyhedron<QuadExt>& p, const Mat<QuadExt>& m_basis,
                               const std::vector<SpaceMembershipCert>& certs,
                               const IntVec& window_lo, const IntVec& window_hi) {
  Polyhedron<QuadExt> canon = canonicalize(p);
  std::size_t d = canon.ambient_dim();
  std::optional<Mat<QuadExt>> lbasis = is_linear_space(recession_cone(canon));
  if (!lbasis)
    throw std::domain_error("the recession cone must be a linear space");
  if (certs.size() != m_basis.size())
    throw std::domain_error("one membership certificate per basis vector is required");

  for (std::size_t i = 0; i < m_basis.size(); ++i) {
    const Vec<QuadExt>& m = m_basis[i];
    if (m.size() != d) throw std::domain_error("basis vector of wrong dimension");
    if (const auto* dec = std::get_if<MembershipDecomposition>(&certs[i])) {
      if (dec->z.size() != d || dec->l_coeffs.size() != lbasis->size())
        throw std::domain_error("decomposition certificate has wrong shape");
      for (std::size_t c = 0; c < d; ++c) {
        QuadExt acc((Rational(dec->z[c])));
        for (std::size_t j = 0; j < lbasis->size(); ++j)
          acc = acc + dec->l_coeffs[j] * (*lbasis)[j][c];
        if (!(acc == m[c]))
          throw std::domain_error(
              "decomposition does not reproduce the certified vector");
      }
    } else {
      const auto& ap = std::get<ApproxCertificate>(certs[i]);
      if (ap.steps.size() < 3)
        throw std::domain_error("line certificate needs at least three tolerances");
      if (ap.u.size() != d) throw std::domain_error("line direction of wrong dimension");
      QuadExt uu(Rational(0));
      for (const QuadExt& c : ap.u) uu = uu + c * c;
      if (uu.sign() == 0) throw std::domain_error("line direction must be nonzero");
      long prev_t = 0;
      Vec<QuadExt> last_resid(d);
      for (const ApproxResult& step : ap.steps) {
        if (step.t <= prev_t)
          throw std::domain_error("line certificate tolerances must strictly increase");
        prev_t = step.t;
        if (step.z.size() != d)
          throw std::domain_error("line certificate point of wrong dimension");
        QuadExt zu(Rational(0));
        for (std::size_t c = 0; c < d; ++c)
          zu = zu + QuadExt(Rational(step.z[c])) * ap.u[c];
        QuadExt coeff = zu / uu;
        QuadExt resid(Rational(0));
        for (std::size_t c = 0; c < d; ++c) {
          last_resid[c] = QuadExt(Rational(step.z[c])) - coeff * ap.u[c];
          QuadExt mag = last_resid[c].sign() < 0 ? -last_resid[c] : last_resid[c];
          if (mag > resid) resid = mag;
        }
        QuadExt tol(Rational(Int(1), Int(step.t)));
        if (!(resid.sign() > 0 && resid < tol))
          throw std::domain_error("line certificate step fails its exact residual bound");
      }
      for (std::size_t c1 = 0; c1 < d; ++c1)
        for (std::size_t c2 = c1 + 1; c2 < d; ++c2)
          if (!((m[c1] * last_resid[c2] - m[c2] * last_resid[c1]).sign() == 0))
            throw std::domain_error(
                "certified vector is not parallel to the approximated line");
    }
  }

  Mat<QuadExt> nonzero;
  for (const Vec<QuadExt>& row : m_basis)
    if (!is_zero_vec(row)) nonzero.push_back(row);
  Polyhedron<QuadExt> sum =
      nonzero.empty() ? canon : sum_with_space(canon, nonzero);
  DenseSumReport report;
  report.certified = true;
  report.interior_points = interior_points_in_window(sum, window_lo, window_hi);
  report.free_within_window = report.interior_points.empty();
  return report;
}

}  // namespace latfree
