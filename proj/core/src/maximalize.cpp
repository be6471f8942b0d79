#include "latfree/maximalize.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

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

/// A working inequality, remembering whether it came from the input or from
/// the enclosing search box. Box rows are pinned during the relaxation loop
/// and only released (or kept) at the very end.
struct TaggedRow {
  Inequality<Rational> q;
  bool user = false;
};

Polyhedron<Rational> assemble(std::size_t d, const std::vector<TaggedRow>& rows) {
  Polyhedron<Rational> w(d);
  for (const TaggedRow& t : rows) w.add(t.q);
  return w;
}

bool lex_less(const Inequality<Rational>& x, const Inequality<Rational>& y) {
  for (std::size_t i = 0; i < x.a.size(); ++i) {
    if (x.a[i] != y.a[i]) return x.a[i] < y.a[i];
  }
  return x.b < y.b;
}

}  // namespace

SplitForm normalize_split(const Polyhedron<Rational>& p) {
  Polyhedron<Rational> canon = canonicalize(p);
  std::size_t d = canon.ambient_dim();
  std::optional<Mat<Rational>> lin = is_linear_space(recession_cone(canon));
  if (!lin)
    throw std::domain_error("splitting requires a linear recession space");
  std::size_t r = lin->size();
  if (r == 0) {
    IntMat id(d, IntVec(d, 0));
    for (std::size_t i = 0; i < d; ++i) id[i][i] = 1;
    return SplitForm{UnimodularMap{id, id}, 0, std::move(canon)};
  }
  LatticeBasis basis = extend_to_basis(sublattice_of_subspace(*lin));
  UnimodularMap a = unimodular_from_basis(basis);
  Polyhedron<Rational> image = canonicalize(apply_unimodular(canon, a));
  Polyhedron<Rational> trans(d - r);
  for (const Inequality<Rational>& q : image.ineqs()) {
    for (std::size_t j = 0; j < r; ++j)
      if (sgn(q.a[j]) != 0)
        throw std::logic_error("split image has a nonzero recession coefficient");
    trans.add({Vec<Rational>(q.a.begin() + r, q.a.end()), q.b});
  }
  return SplitForm{std::move(a), r, std::move(trans)};
}

Polyhedron<Rational> lift_back(const SplitForm& s, const Polyhedron<Rational>& t) {
  std::size_t d = s.a.dim();
  if (t.ambient_dim() + s.r != d)
    throw std::invalid_argument("transversal dimension does not match the split");
  Polyhedron<Rational> padded(d);
  for (const Inequality<Rational>& q : t.ineqs()) {
    Vec<Rational> a(d, Rational(0));
    for (std::size_t j = 0; j < q.a.size(); ++j) a[s.r + j] = q.a[j];
    padded.add({std::move(a), q.b});
  }
  return canonicalize(apply_unimodular(padded, s.a.inverted()));
}

long default_box_half_width(const Polyhedron<Rational>& p) {
  Polyhedron<Rational> canon = canonicalize(p);
  if (!is_bounded(canon))
    throw std::invalid_argument("default box requires a bounded polytope");
  Int m = 0;
  for (const CoordinateBounds& cb : coordinate_ranges(canon)) {
    Int lo = ceil_int(-cb.lo);
    Int hi = ceil_int(cb.hi);
    if (lo > m) m = lo;
    if (hi > m) m = hi;
  }
  Int n = 2 * m + 2;
  if (n > Int(std::numeric_limits<long>::max()))
    throw std::invalid_argument("polytope coordinates too large for a default box");
  return static_cast<long>(n);
}

EnlargeResult enlarge_to_maximal(const Polyhedron<Rational>& p, long box_n,
                                 std::uint64_t cap) {
  Polyhedron<Rational> canon = canonicalize(p);
  std::size_t d = canon.ambient_dim();
  if (dimension(canon) != d)
    throw std::invalid_argument("enlargement requires a full-dimensional polytope");
  if (!is_bounded(canon))
    throw std::invalid_argument("enlargement requires a bounded polytope");
  if (box_n <= 0) throw std::invalid_argument("box half-width must be positive");
  FreenessResult fr = is_lattice_free(canon, cap);
  if (!fr.free)
    throw std::invalid_argument("input has interior lattice point " +
                                format_point(fr.witness->z));
  Rational n_rat((Int(box_n)));
  for (const CoordinateBounds& cb : coordinate_ranges(canon))
    if (cb.lo < -n_rat || cb.hi > n_rat)
      throw std::invalid_argument("the box [-n, n]^d must contain the polytope");

  std::vector<TaggedRow> working;
  for (const Inequality<Rational>& q : canon.ineqs()) working.push_back({q, true});
  for (std::size_t j = 0; j < d; ++j) {
    Vec<Rational> pos(d, Rational(0)), neg(d, Rational(0));
    pos[j] = Rational(1);
    neg[j] = Rational(-1);
    working.push_back({{pos, n_rat}, false});
    working.push_back({{neg, n_rat}, false});
  }

  // Relaxation loop: find the lexicographically first canonical facet with an
  // empty relative interior (lattice-wise), relax it to the nearest occupied
  // lattice level beyond -- or drop it when the boxed relaxation stays free --
  // and rescan. Box rows are never relaxed here.
  bool changed = true;
  while (changed) {
    changed = false;
    Polyhedron<Rational> c = canonicalize(assemble(d, working));
    // Drop user rows that stopped supporting a facet: they are implied by the
    // remaining system (typically after climbing into a box corner), so
    // removing them keeps the set identical -- but left in place they would
    // resurface as spurious facets once the box rows are released.  Box rows
    // stay pinned; the release phase decides their fate.
    for (std::size_t i = working.size(); i-- > 0;) {
      if (!working[i].user) continue;
      bool present = false;
      for (const Inequality<Rational>& row : c.ineqs())
        if (working[i].q == row) {
          present = true;
          break;
        }
      if (!present) working.erase(working.begin() + static_cast<std::ptrdiff_t>(i));
    }
    std::vector<std::size_t> order(c.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return lex_less(c.ineqs()[x], c.ineqs()[y]);
    });
    for (std::size_t idx : order) {
      const Inequality<Rational>& row = c.ineqs()[idx];
      std::size_t match = working.size();
      for (std::size_t i = 0; i < working.size(); ++i) {
        if (!(working[i].q == row)) continue;
        match = i;
        if (working[i].user) break;  // prefer the user copy of a duplicated row
      }
      if (match == working.size())
        throw std::logic_error("canonical row missing from the working system");
      if (!working[match].user) continue;

      Polyhedron<Rational> facet = c;
      facet.add_equality(row.a, row.b);
      bool occupied = false;
      for (const IntVec& z : enumerate_lattice_points(facet)) {
        Vec<Rational> x = to_rational_vec(z);
        bool relint = true;
        for (std::size_t j = 0; j < c.size() && relint; ++j) {
          if (j == idx) continue;
          if (dot(c.ineqs()[j].a, x) >= c.ineqs()[j].b) relint = false;
        }
        if (relint) {
          occupied = true;
          break;
        }
      }
      if (occupied) continue;

      Polyhedron<Rational> region(d);
      for (std::size_t i = 0; i < working.size(); ++i)
        if (i != match) region.add(working[i].q);
      std::optional<Rational> target;
      for (const IntVec& z : enumerate_lattice_points(region)) {
        Rational v = dot(row.a, to_rational_vec(z));
        if (v > row.b && (!target || v < *target)) target = v;
      }
      if (target)
        working[match].q.b = *target;
      else
        working.erase(working.begin() + static_cast<std::ptrdiff_t>(match));
      if (std::optional<Witness> bad = interior_lattice_point(assemble(d, working), cap))
        throw std::logic_error("relaxation step broke freeness at " +
                               format_point(bad->z));
      changed = true;
      break;
    }
  }

  // Release box rows, last inserted first, whenever freeness survives without
  // them; the survivors become genuine facets of the result.
  for (std::size_t k = working.size(); k-- > 0;) {
    if (working[k].user) continue;
    std::vector<TaggedRow> trial = working;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(k));
    if (!interior_lattice_point(assemble(d, trial), cap)) working = std::move(trial);
  }

  Polyhedron<Rational> result = canonicalize(assemble(d, working));
  CertifyResult cr = certify_maximal_fulldim(result, cap);
  if (const Refutation* ref = std::get_if<Refutation>(&cr)) {
    if (ref->kind == Refutation::Kind::not_maximal)
      throw BoxTooSmallError(
          "the relaxed polyhedron is free but not maximal; retry with a larger box");
    throw std::logic_error("enlargement produced an uncertifiable result");
  }
  return EnlargeResult{std::move(result), std::get<MaximalityCertificate>(cr)};
}

}  // namespace latfree
