#include "latfree/intlat.hpp"

#include <algorithm>

namespace latfree {

IntMat int_identity(std::size_t n) {
  IntMat id(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

IntMat int_mat_mul(const IntMat& a, const IntMat& b) {
  std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  IntMat r(n, IntVec(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
    }
  return r;
}

IntMat int_transpose(const IntMat& m) {
  std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  IntMat t(cols, IntVec(rows));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
  return t;
}

bool int_mat_eq(const IntMat& a, const IntMat& b) { return a == b; }

Int int_det(const IntMat& m) {
  Mat<Rational> q(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    q[i].assign(m[i].begin(), m[i].end());
  Rational d = determinant(std::move(q));
  return numerator(d) / denominator(d);
}

IntVec apply_map(const IntVec& x, const IntMat& m) {
  std::size_t cols = m.empty() ? 0 : m[0].size();
  IntVec r(cols, 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) r[j] += x[i] * m[i][j];
  return r;
}

void UnimodularMap::validate() const {
  if (!int_mat_eq(int_mat_mul(forward, inverse), int_identity(forward.size())))
    throw std::invalid_argument("forward and inverse are not mutually inverse");
}

void LatticeBasis::validate() const {
  for (const IntVec& row : rows)
    if (row.size() != rows.size())
      throw std::invalid_argument("lattice basis must be square");
  Int d = int_det(rows);
  if (d != 1 && d != -1)
    throw std::invalid_argument("lattice basis determinant is not +-1");
}

HnfResult hnf(const IntMat& m) {
  std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  IntMat h = m, u = int_identity(rows), uinv = int_identity(rows);

  // Row operations mirrored on u; uinv gets the inverse column operations so
  // that u * uinv == I is maintained throughout.
  auto swap_rows = [&](std::size_t x, std::size_t y) {
    std::swap(h[x], h[y]);
    std::swap(u[x], u[y]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(uinv[i][x], uinv[i][y]);
  };
  auto negate_row = [&](std::size_t x) {
    for (Int& v : h[x]) v = -v;
    for (Int& v : u[x]) v = -v;
    for (std::size_t i = 0; i < rows; ++i) uinv[i][x] = -uinv[i][x];
  };
  // row_x -= c * row_y  <=>  col_y += c * col_x on the inverse.
  auto add_row = [&](std::size_t x, std::size_t y, const Int& c) {
    for (std::size_t j = 0; j < cols; ++j) h[x][j] -= c * h[y][j];
    for (std::size_t j = 0; j < rows; ++j) u[x][j] -= c * u[y][j];
    for (std::size_t i = 0; i < rows; ++i) uinv[i][y] += c * uinv[i][x];
  };
  // rows (x, y) <- [[p, q], [r, s]] * (row_x, row_y), with ps - qr = +-1.
  auto block_rows = [&](std::size_t x, std::size_t y, const Int& p, const Int& q,
                        const Int& r, const Int& s) {
    Int det = p * s - q * r;  // +-1
    for (std::size_t j = 0; j < cols; ++j) {
      Int hx = h[x][j], hy = h[y][j];
      h[x][j] = p * hx + q * hy;
      h[y][j] = r * hx + s * hy;
    }
    for (std::size_t j = 0; j < rows; ++j) {
      Int ux = u[x][j], uy = u[y][j];
      u[x][j] = p * ux + q * uy;
      u[y][j] = r * ux + s * uy;
    }
    // Inverse block is det * [[s, -q], [-r, p]]; applied to columns (x, y).
    for (std::size_t i = 0; i < rows; ++i) {
      Int cx = uinv[i][x], cy = uinv[i][y];
      uinv[i][x] = det * (s * cx - r * cy);
      uinv[i][y] = det * (-q * cx + p * cy);
    }
  };

  std::size_t t = rows;  // one past the current pivot row, moving upward
  for (std::size_t jj = cols; jj-- > 0 && t > 0;) {
    std::size_t pivot_row = t - 1;
    if (h[pivot_row][jj] == 0) {
      std::size_t first = rows;
      for (std::size_t i = 0; i < t; ++i)
        if (h[i][jj] != 0) { first = i; break; }
      if (first == rows) continue;  // no pivot in this column
      swap_rows(first, pivot_row);
    }
    for (std::size_t i = 0; i < pivot_row; ++i) {
      if (h[i][jj] == 0) continue;
      Xgcd e = xgcd(h[pivot_row][jj], h[i][jj]);
      Int a = h[pivot_row][jj] / e.g, b = h[i][jj] / e.g;
      block_rows(pivot_row, i, e.s, e.t, -b, a);
    }
    if (h[pivot_row][jj] < 0) negate_row(pivot_row);
    for (std::size_t i = pivot_row + 1; i < rows; ++i) {
      Int c = floor_div(h[i][jj], h[pivot_row][jj]);
      if (c != 0) add_row(i, pivot_row, c);
    }
    --t;
  }
  return {std::move(h), UnimodularMap{std::move(u), std::move(uinv)}};
}

IntVec primitive_vector(const Vec<Rational>& v) {
  Int lcm = 1;
  for (const Rational& x : v) lcm = boost::multiprecision::lcm(lcm, denominator(x));
  IntVec w(v.size());
  Int g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    w[i] = numerator(v[i]) * (lcm / denominator(v[i]));
    g = boost::multiprecision::gcd(g, w[i]);
  }
  if (g == 0) throw std::invalid_argument("zero vector has no direction");
  int lead = 0;
  for (const Int& x : w)
    if (x != 0) { lead = (x > 0) ? 1 : -1; break; }
  if (lead < 0) g = -g;
  for (Int& x : w) x /= g;
  return w;
}

IntMat sublattice_of_subspace(const Mat<Rational>& spanning) {
  if (spanning.empty()) return {};
  std::size_t d = spanning[0].size();

  // Integer matrix with the same row space.
  IntMat b;
  for (const Vec<Rational>& row : spanning) {
    if (row.size() != d) throw std::invalid_argument("ragged spanning set");
    if (is_zero_vec(row)) continue;
    b.push_back(primitive_vector(row));
  }
  if (b.empty()) return {};

  // Constraint matrix for the subspace: rows spanning its orthogonal
  // complement, cleared to integers.
  Mat<Rational> bq(b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    bq[i].assign(b[i].begin(), b[i].end());
  Mat<Rational> complement = kernel_basis(std::move(bq), d);
  if (complement.empty()) {
    // L is all of R^d.
    HnfResult full = hnf(int_identity(d));
    return full.h;
  }
  IntMat n;
  for (const Vec<Rational>& row : complement) n.push_back(primitive_vector(row));

  // Integer kernel of n: rows of U aligned with the zero rows of hnf(n^T).
  HnfResult kr = hnf(int_transpose(n));
  IntMat kernel;
  for (std::size_t i = 0; i < kr.h.size(); ++i) {
    bool zero = true;
    for (const Int& x : kr.h[i])
      if (x != 0) { zero = false; break; }
    if (zero) kernel.push_back(kr.u.forward[i]);
  }
  if (kernel.empty()) return {};

  // Canonical form of the resulting lattice basis.
  HnfResult canon = hnf(kernel);
  IntMat out;
  for (const IntVec& row : canon.h)
    if (!std::all_of(row.begin(), row.end(), [](const Int& x) { return x == 0; }))
      out.push_back(row);
  return out;
}

LatticeBasis extend_to_basis(const IntMat& vectors) {
  std::size_t r = vectors.size();
  if (r == 0) throw std::invalid_argument("no vectors to extend");
  std::size_t d = vectors[0].size();
  for (const IntVec& v : vectors)
    if (v.size() != d) throw std::invalid_argument("ragged vector list");
  if (r > d) throw std::invalid_argument("more vectors than the dimension");

  Mat<Rational> q(r);
  for (std::size_t i = 0; i < r; ++i) q[i].assign(vectors[i].begin(), vectors[i].end());
  if (rank(std::move(q)) != r)
    throw std::invalid_argument("vectors are linearly dependent");

  // U * vectors^T has its nonzero block in the last r rows; the inputs are
  // primitive exactly when that block is the identity.
  HnfResult res = hnf(int_transpose(vectors));
  bool primitive = true;
  for (std::size_t i = 0; i < r && primitive; ++i)
    for (std::size_t j = 0; j < r && primitive; ++j)
      if (res.h[d - r + i][j] != Int(i == j ? 1 : 0)) primitive = false;
  if (!primitive) {
    // Witness: a lattice point of the span outside the integer span of the
    // inputs.  The saturated basis must contain one.
    Mat<Rational> span(r);
    for (std::size_t i = 0; i < r; ++i)
      span[i].assign(vectors[i].begin(), vectors[i].end());
    IntMat saturated = sublattice_of_subspace(span);
    HnfResult input_form = hnf(vectors);
    IntMat input_rows;
    for (const IntVec& row : input_form.h)
      if (!std::all_of(row.begin(), row.end(), [](const Int& x) { return x == 0; }))
        input_rows.push_back(row);
    for (const IntVec& cand : saturated) {
      // Membership of cand in the row lattice of input_rows (echelon form):
      // exact back-substitution against the pivot structure.
      IntVec rem = cand;
      bool in_lattice = true;
      for (std::size_t ri = input_rows.size(); ri-- > 0 && in_lattice;) {
        const IntVec& row = input_rows[ri];
        std::size_t pj = row.size();
        for (std::size_t j = row.size(); j-- > 0;)
          if (row[j] != 0) { pj = j; break; }
        if (pj == row.size()) continue;
        if (rem[pj] % row[pj] != 0) { in_lattice = false; break; }
        Int c = rem[pj] / row[pj];
        for (std::size_t j = 0; j < rem.size(); ++j) rem[j] -= c * row[j];
      }
      if (in_lattice && !std::all_of(rem.begin(), rem.end(),
                                     [](const Int& x) { return x == 0; }))
        in_lattice = false;
      if (!in_lattice) throw NotPrimitiveError(cand);
    }
    throw std::logic_error("non-primitive system without witness");  // unreachable
  }

  // vectors^T = U^-1 * [0; I_r], so the inputs are the last r columns of U^-1
  // and the first d-r columns complete them to a basis.
  LatticeBasis basis;
  basis.rows = vectors;
  for (std::size_t j = 0; j < d - r; ++j) {
    IntVec row(d);
    for (std::size_t i = 0; i < d; ++i) row[i] = res.u.inverse[i][j];
    basis.rows.push_back(std::move(row));
  }
  basis.validate();
  return basis;
}

std::optional<IntVec> is_rational_direction(const Vec<QuadExt>& v) {
  if (v.empty() || std::all_of(v.begin(), v.end(),
                               [](const QuadExt& x) { return x.is_zero(); }))
    throw std::invalid_argument("zero vector has no direction");
  std::size_t d = v.size();
  Vec<Rational> a(d), b(d);
  for (std::size_t i = 0; i < d; ++i) {
    a[i] = v[i].rat_part();
    b[i] = v[i].root_part();
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (a[i] * b[j] != a[j] * b[i]) return std::nullopt;

  const Vec<Rational>& base = is_zero_vec(a) ? b : a;
  IntVec w = primitive_vector(base);

  // Defensive exact verification: v must be a field multiple of w.
  std::size_t lead = 0;
  while (w[lead] == 0) ++lead;
  QuadExt lambda = v[lead] / QuadExt(Rational(w[lead]));
  for (std::size_t i = 0; i < d; ++i)
    if (v[i] != lambda * QuadExt(Rational(w[i])))
      return std::nullopt;
  return w;
}

UnimodularMap unimodular_from_basis(const LatticeBasis& basis) {
  basis.validate();
  std::size_t d = basis.dim();
  Mat<Rational> rows(d);
  for (std::size_t i = 0; i < d; ++i)
    rows[i].assign(basis.rows[i].begin(), basis.rows[i].end());
  std::optional<Mat<Rational>> inv = inverse(rows);
  if (!inv) throw std::invalid_argument("basis is singular");
  IntMat forward(d, IntVec(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Rational& x = (*inv)[i][j];
      if (denominator(x) != 1)
        throw std::logic_error("inverse of a unimodular basis must be integer");
      forward[i][j] = numerator(x);
    }
  UnimodularMap map{forward, basis.rows};
  map.validate();
  return map;
}

}  // namespace latfree
