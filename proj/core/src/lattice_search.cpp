#include "latfree/lattice_search.hpp"

#include <algorithm>
#include <sstream>

namespace latfree {

namespace {

Int coord_rank(const Int& v) {
  if (v == 0) return 0;
  if (v > 0) return 2 * v - 1;
  return -2 * v;
}

void enum_rec(const Polyhedron<Rational>& p, IntVec& prefix,
              std::vector<IntVec>& out) {
  if (p.ambient_dim() == 0) {
    out.push_back(prefix);
    return;
  }
  Vec<Rational> c(p.ambient_dim(), Rational(0));
  c[0] = Rational(1);
  LpResult<Rational> hi = max_linear(p, c);
  if (hi.status == LpStatus::infeasible) return;
  LpResult<Rational> lo = min_linear(p, c);
  if (hi.status != LpStatus::optimal || lo.status != LpStatus::optimal)
    throw UnboundedPolyhedronError("slice is unbounded in a coordinate direction");
  Int z_hi = floor_int(hi.value);
  for (Int z = ceil_int(lo.value); z <= z_hi; ++z) {
    std::optional<Polyhedron<Rational>> slice = substitute(p, 0, Rational(z));
    if (!slice) continue;
    prefix.push_back(z);
    enum_rec(*slice, prefix, out);
    prefix.pop_back();
  }
}

Vec<Rational> to_rational_vec(const IntVec& z) {
  Vec<Rational> x(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) x[i] = Rational(z[i]);
  return x;
}

IntVec shifted_window(const IntVec& center, const Int& w, int sign) {
  IntVec out(center.size());
  for (std::size_t i = 0; i < center.size(); ++i)
    out[i] = center[i] + sign * w;
  return out;
}

/// Strict interior points of P within the window, smallest in near-origin
/// order, searched over doubling window half-widths until found or the cap is
/// breached.  Presence of some interior lattice point must be guaranteed by
/// the caller; the cap is a resource bound, not a decision bound.
Witness expanding_search(const Polyhedron<Rational>& p, const IntVec& center,
                         std::uint64_t cap) {
  for (Int w = 1;; w *= 2) {
    if (w > Int(cap))
      throw CapExhaustedError(
          "interior point exists but was not located within window cap " +
          std::to_string(cap));
    std::vector<IntVec> hits = interior_points_in_window(
        p, shifted_window(center, w, -1), shifted_window(center, w, +1));
    if (!hits.empty()) {
      IntVec best = hits.front();
      for (const IntVec& h : hits)
        if (near_origin_less(h, best)) best = h;
      return Witness{best, Witness::Location::interior, std::nullopt};
    }
  }
}

}  // namespace

bool near_origin_less(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("comparing vectors of different dimension");
  for (std::size_t i = a.size(); i-- > 0;) {
    Int ra = coord_rank(a[i]), rb = coord_rank(b[i]);
    if (ra != rb) return ra < rb;
  }
  return false;
}

std::vector<IntVec> enumerate_lattice_points(const Polyhedron<Rational>& p) {
  if (is_empty(p)) return {};
  if (!is_bounded(p))
    throw UnboundedPolyhedronError("lattice enumeration requires a bounded polyhedron");
  std::vector<IntVec> out;
  IntVec prefix;
  enum_rec(p, prefix, out);
  return out;
}

Witness classify_point(const Polyhedron<Rational>& p, const IntVec& z) {
  Vec<Rational> x = to_rational_vec(z);
  if (!p.contains(x)) throw std::invalid_argument("point lies outside the polyhedron");
  std::vector<std::size_t> tight;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (dot(p.ineqs()[i].a, x) == p.ineqs()[i].b) tight.push_back(i);
  Witness w;
  w.z = z;
  if (tight.empty()) {
    w.location = Witness::Location::interior;
  } else if (tight.size() == 1) {
    w.location = Witness::Location::facet_relint;
    w.facet_index = tight.front();
  } else {
    w.location = Witness::Location::boundary;
  }
  return w;
}

std::optional<Witness> interior_lattice_point(const Polyhedron<Rational>& p,
                                              std::uint64_t cap) {
  if (is_empty(p)) return std::nullopt;
  Polyhedron<Rational> canon = canonicalize(p);
  std::size_t d = canon.ambient_dim();
  if (dimension(canon) < d) return std::nullopt;  // empty interior

  if (is_bounded(canon)) {
    std::optional<IntVec> best;
    for (const IntVec& z : enumerate_lattice_points(canon)) {
      if (!canon.strictly_contains(to_rational_vec(z))) continue;
      if (!best || near_origin_less(z, *best)) best = z;
    }
    if (!best) return std::nullopt;
    return Witness{*best, Witness::Location::interior, std::nullopt};
  }

  // Unbounded: adding the linear hull of the recession cone preserves
  // freeness in both directions, and the sum has a bounded transversal
  // section once the hull's lattice is split onto leading coordinates.
  Mat<Rational> hull = cone_linear_hull(recession_cone(canon));
  std::size_t r = hull.size();
  if (r == d) {
    // The sum is all of space: an interior lattice point of P must exist.
    return expanding_search(canon, IntVec(d, 0), cap);
  }

  Polyhedron<Rational> q = sum_with_space(canon, hull);
  IntMat lat = sublattice_of_subspace(hull);
  LatticeBasis basis = extend_to_basis(lat);
  UnimodularMap a = unimodular_from_basis(basis);
  Polyhedron<Rational> qa = canonicalize(apply_unimodular(q, a));

  std::vector<Inequality<Rational>> flat_rows;
  for (const Inequality<Rational>& row : qa.ineqs()) {
    for (std::size_t i = 0; i < r; ++i)
      if (sgn(row.a[i]) != 0)
        throw std::logic_error("summed polyhedron is not free on split coordinates");
    Vec<Rational> tail(row.a.begin() + static_cast<std::ptrdiff_t>(r), row.a.end());
    flat_rows.push_back({std::move(tail), row.b});
  }
  Polyhedron<Rational> section(d - r, std::move(flat_rows));
  if (!is_bounded(section))
    throw std::logic_error("transversal section of the recession reduction is unbounded");

  std::optional<IntVec> flat;
  for (const IntVec& z : enumerate_lattice_points(section)) {
    if (!section.strictly_contains(to_rational_vec(z))) continue;
    if (!flat || near_origin_less(z, *flat)) flat = z;
  }
  if (!flat) return std::nullopt;  // section free => P free

  IntVec lifted(d, 0);
  for (std::size_t i = 0; i < d - r; ++i) lifted[r + i] = (*flat)[i];
  IntVec center = apply_map(lifted, a.inverse);
  if (!q.strictly_contains(to_rational_vec(center)))
    throw std::logic_error("lifted section witness is not interior to the sum");
  return expanding_search(canon, center, cap);
}

IntVec minkowski_find(const Polyhedron<Rational>& p, long t) {
  if (t <= 0) throw std::invalid_argument("scaling factor t must be positive");
  Polyhedron<Rational> canon = canonicalize(p);
  std::size_t d = canon.ambient_dim();
  if (dimension(canon) != d)
    throw std::invalid_argument("symmetric-body search requires a full-dimensional polytope");
  if (!is_bounded(canon))
    throw std::invalid_argument("symmetric-body search requires a bounded polytope");
  for (std::size_t i = 0; i < canon.size(); ++i) {
    const Inequality<Rational>& row = canon.ineqs()[i];
    Vec<Rational> neg(d);
    for (std::size_t j = 0; j < d; ++j) neg[j] = -row.a[j];
    LpResult<Rational> m = max_linear(canon, neg);
    if (m.status != LpStatus::optimal)
      throw std::logic_error("symmetry probe LP failed on a bounded nonempty polytope");
    if (m.value > row.b) {
      std::ostringstream os;
      os << "not centrally symmetric: mirrored inequality " << i
         << " is violated at (";
      for (std::size_t j = 0; j < d; ++j) {
        if (j) os << ", ";
        os << to_string(-m.point[j]);
      }
      os << ")";
      throw std::invalid_argument(os.str());
    }
  }
  Rational vol = volume(canon);
  Rational need(1);
  for (std::size_t i = 0; i < d; ++i) need *= Rational(Int(2 * t));
  if (vol < need)
    throw std::invalid_argument("volume shortfall: volume " + to_string(vol) +
                                " is below the required " + to_string(need));

  std::vector<CoordinateBounds> ranges = coordinate_ranges(canon);
  std::optional<IntVec> best;
  IntVec m_lo(d), m_hi(d);
  for (std::size_t i = 0; i < d; ++i) {
    m_lo[i] = ceil_int(ranges[i].lo / Rational(Int(t)));
    m_hi[i] = floor_int(ranges[i].hi / Rational(Int(t)));
  }
  IntVec m = m_lo;
  for (bool more = d > 0; more;) {
    IntVec z(d);
    for (std::size_t i = 0; i < d; ++i) z[i] = m[i] * t;
    bool zero = true;
    for (const Int& v : z)
      if (v != 0) { zero = false; break; }
    if (!zero && canon.contains(to_rational_vec(z)))
      if (!best || near_origin_less(z, *best)) best = z;
    std::size_t c = d;
    more = false;
    while (c-- > 0) {
      if (m[c] < m_hi[c]) {
        ++m[c];
        for (std::size_t j = c + 1; j < d; ++j) m[j] = m_lo[j];
        more = true;
        break;
      }
      if (c == 0) break;
    }
  }
  if (!best)
    throw std::logic_error(
        "no nonzero scaled lattice point found despite certified preconditions");
  return *best;
}

ApproxResult approximate_line(const Vec<QuadExt>& u, long t, long n_cap) {
  std::size_t d = u.size();
  if (d == 0 || t <= 0 || n_cap <= 0)
    throw std::invalid_argument("direction must be nonzero, t and the cap positive");
  bool all_zero = true;
  for (const QuadExt& c : u)
    if (c.sign() != 0) { all_zero = false; break; }
  if (all_zero) throw std::invalid_argument("direction must be nonzero");
  if (std::optional<IntVec> iv = is_rational_direction(u)) {
    std::ostringstream os;
    os << "span(u) contains the integer vector (";
    for (std::size_t i = 0; i < iv->size(); ++i) {
      if (i) os << ", ";
      os << (*iv)[i];
    }
    os << "); the projection residual would vanish";
    throw std::invalid_argument(os.str());
  }

  QuadExt uu(Rational(0));
  for (const QuadExt& c : u) uu = uu + c * c;
  QuadExt tol = QuadExt(Rational(Int(1), Int(t)));

  long n = 1;
  while (n < t) {
    if (n > n_cap / 2)
      throw CapExhaustedError("cylinder cap below tolerance-mandated start length");
    n *= 2;
  }
  for (; n <= n_cap; n *= 2) {
    QuadExt nq = QuadExt(Rational(n));
    IntVec lo(d), hi(d);
    for (std::size_t i = 0; i < d; ++i) {
      QuadExt mag = u[i].sign() < 0 ? -u[i] : u[i];
      lo[i] = ceil_int(-(nq * mag) - tol);
      hi[i] = floor_int(nq * mag + tol);
    }
    std::optional<IntVec> best_z;
    std::optional<Vec<QuadExt>> best_x;
    std::optional<QuadExt> best_r;
    IntVec z = lo;
    for (bool more = true; more;) {
      // Cylinder membership: the alpha-interval from |z_i - alpha u_i| <= 1/t
      // intersected over i and with [-N, N] must be nonempty.
      bool inside = true;
      QuadExt alo = -nq, ahi = nq;
      for (std::size_t i = 0; i < d && inside; ++i) {
        QuadExt zi((Rational(z[i])));
        if (u[i].sign() == 0) {
          QuadExt mag = zi.sign() < 0 ? -zi : zi;
          if (mag > tol) inside = false;
          continue;
        }
        QuadExt c1 = (zi - tol) / u[i], c2 = (zi + tol) / u[i];
        if (c1 > c2) std::swap(c1, c2);
        if (c1 > alo) alo = c1;
        if (c2 < ahi) ahi = c2;
        if (alo > ahi) inside = false;
      }
      if (inside) {
        QuadExt zu(Rational(0));
        for (std::size_t i = 0; i < d; ++i) zu = zu + QuadExt(Rational(z[i])) * u[i];
        QuadExt coeff = zu / uu;
        Vec<QuadExt> x(d);
        QuadExt resid(Rational(0));
        for (std::size_t i = 0; i < d; ++i) {
          x[i] = coeff * u[i];
          QuadExt diff = QuadExt(Rational(z[i])) - x[i];
          if (diff.sign() < 0) diff = -diff;
          if (diff > resid) resid = diff;
        }
        if (resid.sign() > 0 && resid < tol) {
          if (!best_r || resid < *best_r ||
              (resid == *best_r && near_origin_less(z, *best_z))) {
            best_r = resid;
            best_z = z;
            best_x = x;
          }
        }
      }
      std::size_t c = d;
      more = false;
      while (c-- > 0) {
        if (z[c] < hi[c]) {
          ++z[c];
          for (std::size_t j = c + 1; j < d; ++j) z[j] = lo[j];
          more = true;
          break;
        }
        if (c == 0) break;
      }
    }
    if (best_z) return ApproxResult{*best_z, *best_x, t, n};
    if (n > n_cap / 2) break;  // next doubling would overflow the cap
  }
  throw CapExhaustedError("no admissible point inside any cylinder up to length cap");
}

ParityPair parity_pair(const std::vector<IntVec>& w) {
  if (w.empty()) throw std::invalid_argument("empty vector list");
  std::size_t d = w.front().size();
  for (const IntVec& v : w)
    if (v.size() != d) throw std::invalid_argument("vectors of mixed dimension");
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      bool same = true;
      for (std::size_t c = 0; c < d && same; ++c)
        if ((w[i][c] - w[j][c]) % 2 != 0) same = false;
      if (same) {
        IntVec mid(d);
        for (std::size_t c = 0; c < d; ++c) mid[c] = (w[i][c] + w[j][c]) / 2;
        return ParityPair{i + 1, j + 1, mid};
      }
    }
  }
  throw std::domain_error(
      "no two vectors share a parity class (possible only with at most 2^d vectors)");
}

}  // namespace latfree
