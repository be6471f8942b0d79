#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "latfree/intlat.hpp"
#include "latfree/linalg.hpp"
#include "latfree/quadext.hpp"
#include "latfree/rational.hpp"
#include "latfree/simplex.hpp"

using namespace latfree;
using latfree::testutil::ivec;
using latfree::testutil::rat;
using latfree::testutil::rvec;

TEST_CASE("rational parsing accepts integers and fractions, rejects junk") {
  CHECK(parse_rational("3/4") == rat(3, 4));
  CHECK(parse_rational("-3/4") == rat(-3, 4));
  CHECK(parse_rational("7") == rat(7));
  CHECK(parse_rational("-0") == rat(0));
  CHECK(parse_rational("3/-4") == rat(-3, 4));  // canonical sign on the numerator
  CHECK(parse_rational("6/4") == rat(3, 2));
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(" 1"), std::invalid_argument);
}

TEST_CASE("rational printing is canonical and round-trips") {
  CHECK(to_string(rat(3, 4)) == "3/4");
  CHECK(to_string(rat(-3, 4)) == "-3/4");
  CHECK(to_string(rat(7)) == "7");
  CHECK(to_string(rat(0)) == "0");
  CHECK(to_string(rat(6, 4)) == "3/2");
  for (long p = -9; p <= 9; ++p)
    for (long q = 1; q <= 5; ++q) CHECK(parse_rational(to_string(rat(p, q))) == rat(p, q));
}

TEST_CASE("normalize_rational fixes the sign to the numerator") {
  CHECK(normalize_rational(Int(6), Int(-4)) == rat(-3, 2));
  CHECK(normalize_rational(Int(0), Int(-7)) == rat(0));
  CHECK_THROWS_AS(normalize_rational(Int(1), Int(0)), std::domain_error);
}

TEST_CASE("floor and ceiling of rationals") {
  CHECK(floor_int(rat(7, 2)) == 3);
  CHECK(floor_int(rat(-7, 2)) == -4);
  CHECK(floor_int(rat(4)) == 4);
  CHECK(ceil_int(rat(7, 2)) == 4);
  CHECK(ceil_int(rat(-7, 2)) == -3);
  CHECK(ceil_int(rat(-4)) == -4);
  CHECK(floor_div(Int(7), Int(2)) == 3);
  CHECK(floor_div(Int(-7), Int(2)) == -4);
  CHECK(floor_div(Int(7), Int(-2)) == -4);
  CHECK(is_integer(rat(4, 2)));
  CHECK_FALSE(is_integer(rat(1, 2)));
}

TEST_CASE("extended gcd identity on a grid") {
  for (long a = -12; a <= 12; ++a)
    for (long b = -12; b <= 12; ++b) {
      Xgcd r = xgcd(Int(a), Int(b));
      CHECK(r.g == gcd(Int(a < 0 ? -a : a), Int(b < 0 ? -b : b)));
      CHECK(r.s * a + r.t * b == r.g);
    }
}

TEST_CASE("squarefree discriminant table") {
  for (long k : {2L, 3L, 5L, 6L, 7L, 10L, 11L, 13L, 14L, 15L}) CHECK(is_squarefree(k));
  for (long k : {4L, 8L, 9L, 12L, 16L, 18L, 20L, 0L, -4L}) CHECK_FALSE(is_squarefree(k));
}

TEST_CASE("quadratic field elements: construction and field rules") {
  QuadExt root2(rat(0), rat(1), 2);
  CHECK(root2.field_k() == 2);
  CHECK(root2.rat_part() == rat(0));
  CHECK(root2.root_part() == rat(1));
  // A vanishing root coefficient collapses to the rational field.
  QuadExt plain(rat(3, 2), rat(0), 7);
  CHECK(plain.field_k() == 0);
  CHECK_THROWS_AS(QuadExt(rat(1), rat(1), 4), std::domain_error);
  CHECK_THROWS_AS(QuadExt(rat(1), rat(1), 1), std::domain_error);
  QuadExt root3(rat(0), rat(1), 3);
  CHECK_THROWS_AS(root2 + root3, std::domain_error);
  CHECK((root2 * rat(0) + root3).field_k() == 3);  // zero mixes with any field
}

TEST_CASE("quadratic field elements: exact signs near zero") {
  QuadExt root2(rat(0), rat(1), 2);
  CHECK((QuadExt(rat(3)) - root2 * rat(2)).sign() == 1);   // 3 - 2*sqrt(2) > 0
  CHECK((root2 * rat(2) - QuadExt(rat(3))).sign() == -1);  // 2*sqrt(2) - 3 < 0
  CHECK((QuadExt(rat(1)) + root2).sign() == 1);
  CHECK((QuadExt(rat(1)) - root2).sign() == -1);
  CHECK((root2 - root2).sign() == 0);
  CHECK((root2 * root2 - QuadExt(rat(2))).is_zero());
  // 99/70 slightly overshoots sqrt(2); 140/99 undershoots... check both sides.
  CHECK((QuadExt(rat(99, 70)) - root2).sign() == 1);
  CHECK((QuadExt(rat(140, 99)) - root2).sign() == -1);
}

TEST_CASE("quadratic field elements: arithmetic closes exactly") {
  QuadExt root2(rat(0), rat(1), 2);
  QuadExt x = QuadExt(rat(1)) + root2;  // 1 + sqrt(2)
  QuadExt y = QuadExt(rat(1)) - root2;  // 1 - sqrt(2)
  QuadExt prod = x * y;
  CHECK(exactly_rational(prod));
  CHECK(rational_value(prod) == rat(-1));
  CHECK((x / x - QuadExt(rat(1))).is_zero());
  QuadExt q = x / root2;  // (1 + sqrt 2)/sqrt 2 = 1 + (1/2) sqrt 2
  CHECK(q.rat_part() == rat(1));
  CHECK(q.root_part() == rat(1, 2));
  CHECK_THROWS_AS(x / (root2 - root2), std::domain_error);
  CHECK_THROWS_AS(rational_value(x), std::domain_error);
  CHECK(quad_is_rational(prod).has_value());
  CHECK_FALSE(quad_is_rational(x).has_value());
}

TEST_CASE("quadratic field elements: floor") {
  QuadExt root2(rat(0), rat(1), 2);
  CHECK(root2.floor() == 1);
  CHECK((-root2).floor() == -2);
  CHECK((QuadExt(rat(3)) - root2 * rat(2)).floor() == 0);
  CHECK((QuadExt(rat(1)) + root2).floor() == 2);
  CHECK(QuadExt(rat(17, 12)).floor() == 1);
  CHECK(QuadExt(rat(-17, 12)).floor() == -2);
  CHECK(ceil_int(root2) == 2);
  QuadExt root5(rat(0), rat(1), 5);
  CHECK(root5.floor() == 2);
  CHECK((root5 * rat(10)).floor() == 22);  // 10 sqrt(5) = 22.36...
}

TEST_CASE("rational linear algebra: rank, kernel, inverse, determinant") {
  Mat<Rational> m = {rvec({1, 2}), rvec({2, 4})};
  CHECK(rank(m) == 1);
  Mat<Rational> full = {rvec({1, 2}), rvec({3, 4})};
  CHECK(rank(full) == 2);
  CHECK(determinant(full) == rat(-2));

  Mat<Rational> ker = kernel_basis(Mat<Rational>{rvec({1, 1})}, 2);
  REQUIRE(ker.size() == 1);
  CHECK(dot(rvec({1, 1}), ker[0]) == rat(0));
  CHECK_FALSE(is_zero_vec(ker[0]));

  auto inv = inverse(full);
  REQUIRE(inv.has_value());
  // full * inv == identity
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Rational s(0);
      for (std::size_t l = 0; l < 2; ++l) s += full[i][l] * (*inv)[l][j];
      CHECK(s == (i == j ? rat(1) : rat(0)));
    }
  CHECK_FALSE(inverse(m).has_value());

  auto sol = solve_square(full, rvec({1, 1}));
  REQUIRE(sol.has_value());
  CHECK(dot(full[0], *sol) == rat(1));
  CHECK(dot(full[1], *sol) == rat(1));
}

TEST_CASE("simplex: optima, unboundedness, infeasibility") {
  // max x + y over [0,1]^2 written as Ax <= b.
  Mat<Rational> a = {rvec({1, 0}), rvec({-1, 0}), rvec({0, 1}), rvec({0, -1})};
  Vec<Rational> b = {rat(1), rat(0), rat(1), rat(0)};
  auto r = lp_maximize(a, b, rvec({1, 1}));
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.value == rat(2));
  CHECK(r.point == rvec({1, 1}));

  auto rmin = lp_minimize(a, b, rvec({1, 1}));
  REQUIRE(rmin.status == LpStatus::optimal);
  CHECK(rmin.value == rat(0));

  // Unbounded: maximize x over {x >= 0}.
  auto ru = lp_maximize(Mat<Rational>{rvec({-1})}, Vec<Rational>{rat(0)}, rvec({1}));
  CHECK(ru.status == LpStatus::unbounded);

  // Infeasible: x <= 0 and x >= 1.
  auto ri = lp_feasible(Mat<Rational>{rvec({1}), rvec({-1})},
                        Vec<Rational>{rat(0), rat(-1)}, 1);
  CHECK(ri.status == LpStatus::infeasible);

  // Fractional optimum stays exact: max x subject to 3x <= 1.
  auto rf = lp_maximize(Mat<Rational>{rvec({3})}, Vec<Rational>{rat(1)}, rvec({1}));
  REQUIRE(rf.status == LpStatus::optimal);
  CHECK(rf.value == rat(1, 3));
}

TEST_CASE("simplex over a quadratic field") {
  // max y subject to y <= sqrt(2), y >= 0: optimum is exactly sqrt(2).
  QuadExt root2(rat(0), rat(1), 2);
  Mat<QuadExt> a = {{QuadExt(rat(1))}, {QuadExt(rat(-1))}};
  Vec<QuadExt> b = {root2, QuadExt(rat(0))};
  auto r = lp_maximize(a, b, Vec<QuadExt>{QuadExt(rat(1))});
  REQUIRE(r.status == LpStatus::optimal);
  CHECK((r.value - root2).is_zero());
}

static IntMat im(std::initializer_list<std::initializer_list<long>> rows) {
  IntMat m;
  for (const auto& r : rows) {
    IntVec v;
    for (long e : r) v.push_back(Int(e));
    m.push_back(v);
  }
  return m;
}

TEST_CASE("hermite form: pinned small cases") {
  CHECK(int_mat_eq(hnf(im({{2, 1}, {0, 1}})).h, im({{2, 0}, {0, 1}})));
  CHECK(int_mat_eq(hnf(im({{2, 4}, {4, 2}})).h, im({{6, 0}, {4, 2}})));
  // Rank-deficient input: the zero row surfaces on top.
  CHECK(int_mat_eq(hnf(im({{0, 0}, {1, 0}})).h, im({{0, 0}, {1, 0}})));
  CHECK(int_mat_eq(hnf(im({{1, 0}, {1, 0}})).h, im({{0, 0}, {1, 0}})));
}

static void check_hnf_shape(const IntMat& h) {
  std::size_t n = h.size();
  std::vector<std::ptrdiff_t> pivot(n, -1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = h[i].size(); c-- > 0;)
      if (h[i][c] != 0) {
        pivot[i] = static_cast<std::ptrdiff_t>(c);
        break;
      }
  // Zero rows first, then strictly increasing pivot columns.
  std::size_t i = 0;
  while (i < n && pivot[i] < 0) ++i;
  for (; i + 1 < n; ++i) CHECK(pivot[i] < pivot[i + 1]);
  for (std::size_t r = 0; r < n; ++r) {
    if (pivot[r] < 0) continue;
    Int p = h[r][static_cast<std::size_t>(pivot[r])];
    CHECK(p > 0);
    for (std::size_t below = r + 1; below < n; ++below) {
      Int e = h[below][static_cast<std::size_t>(pivot[r])];
      CHECK(e >= 0);
      CHECK(e < p);
    }
  }
}

TEST_CASE("hermite form: invariants on a pseudo-random battery") {
  std::mt19937_64 rng(20260823);
  std::uniform_int_distribution<long> entry(-9, 9);
  std::uniform_int_distribution<std::size_t> dims(1, 4);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t rows = dims(rng), cols = dims(rng);
    IntMat m(rows, IntVec(cols));
    for (auto& r : m)
      for (auto& e : r) e = Int(entry(rng));
    HnfResult res = hnf(m);
    res.u.validate();
    CHECK(int_mat_eq(int_mat_mul(res.u.forward, m), res.h));
    Int du = int_det(res.u.forward);
    CHECK((du == 1 || du == -1));
    check_hnf_shape(res.h);
    // Same row lattice in both directions: the inverse carries H back to M.
    CHECK(int_mat_eq(int_mat_mul(res.u.inverse, res.h), m));
  }
}

TEST_CASE("completing primitive vectors to a lattice basis: pinned rows") {
  auto rows_of = [](const LatticeBasis& b) { return b.rows; };
  CHECK(int_mat_eq(rows_of(extend_to_basis(im({{0, 1}}))), im({{0, 1}, {1, 0}})));
  CHECK(int_mat_eq(rows_of(extend_to_basis(im({{1, -1}}))), im({{1, -1}, {0, -1}})));
  CHECK(int_mat_eq(rows_of(extend_to_basis(im({{1, 1}}))), im({{1, 1}, {0, -1}})));
  CHECK(int_mat_eq(rows_of(extend_to_basis(im({{2, 1}}))), im({{2, 1}, {1, 0}})));
  CHECK(int_mat_eq(rows_of(extend_to_basis(im({{0, 0, 1}}))),
                   im({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}})));
}

TEST_CASE("completing primitive vectors to a lattice basis: determinant and errors") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> entry(-5, 5);
  int done = 0;
  while (done < 30) {
    IntVec v{Int(entry(rng)), Int(entry(rng)), Int(entry(rng))};
    Int g = gcd(gcd(abs(v[0]), abs(v[1])), abs(v[2]));
    if (g != 1) continue;  // keep primitive samples only
    LatticeBasis b = extend_to_basis({v});
    b.validate();
    CHECK(b.rows[0] == v);
    Int d = int_det(b.rows);
    CHECK((d == 1 || d == -1));
    ++done;
  }
  // Non-primitive input carries a witness in the span but outside the span set.
  CHECK_THROWS_AS(extend_to_basis(im({{2, 0}})), NotPrimitiveError);
  try {
    extend_to_basis(im({{2, 0}}));
  } catch (const NotPrimitiveError& e) {
    CHECK(e.witness == ivec({1, 0}));
  }
  CHECK_THROWS_AS(extend_to_basis(im({{1, 0}, {2, 0}})), std::invalid_argument);
}

TEST_CASE("lattice of a rational subspace") {
  // span{(1/2, 1)} meets Z^2 in the multiples of (1, 2).
  Mat<Rational> half = {{rat(1, 2), rat(1)}};
  CHECK(int_mat_eq(sublattice_of_subspace(half), im({{1, 2}})));
  Mat<Rational> diag = {rvec({1, -1})};
  CHECK(int_mat_eq(sublattice_of_subspace(diag), im({{-1, 1}})));
  // A full-dimensional span recovers a determinant +-1 basis of Z^2.
  IntMat full = sublattice_of_subspace({rvec({1, 1}), rvec({1, -1})});
  Int d = int_det(full);
  CHECK((d == 1 || d == -1));
  CHECK(sublattice_of_subspace(Mat<Rational>{rvec({0, 0})}).empty());
}

TEST_CASE("primitive direction extraction") {
  CHECK(primitive_vector(rvec({4, 6})) == ivec({2, 3}));
  CHECK(primitive_vector(rvec({0, -3})) == ivec({0, 1}));
  CHECK(primitive_vector({rat(1, 2), rat(1, 3)}) == ivec({3, 2}));
  CHECK(primitive_vector(rvec({-2, 4})) == ivec({1, -2}));  // leading entry positive
}

TEST_CASE("rational-direction test over the quadratic field") {
  QuadExt root2(rat(0), rat(1), 2);
  Vec<QuadExt> irr = {QuadExt(rat(1)), root2};
  CHECK_FALSE(is_rational_direction(irr).has_value());
  Vec<QuadExt> plain = {QuadExt(rat(1)), QuadExt(rat(2))};
  CHECK(is_rational_direction(plain) == ivec({1, 2}));
  // sqrt(2) * (1, 2) is parallel to the rational direction (1, 2).
  Vec<QuadExt> scaled = {root2, root2 * rat(2)};
  CHECK(is_rational_direction(scaled) == ivec({1, 2}));
  Vec<QuadExt> fractional = {QuadExt(rat(1, 2)), QuadExt(rat(1, 3))};
  CHECK(is_rational_direction(fractional) == ivec({3, 2}));
  Vec<QuadExt> zero = {QuadExt(rat(0)), QuadExt(rat(0))};
  CHECK_THROWS_AS(is_rational_direction(zero), std::invalid_argument);
}

TEST_CASE("coordinate map from a lattice basis") {
  LatticeBasis b{im({{1, 1}, {0, 1}})};
  UnimodularMap map = unimodular_from_basis(b);
  map.validate();
  CHECK(int_mat_eq(map.inverse, b.rows));
  CHECK(int_mat_eq(map.forward, im({{1, -1}, {0, 1}})));
  // The map sends the basis rows to the unit vectors.
  CHECK(apply_map(ivec({1, 1}), map.forward) == ivec({1, 0}));
  CHECK(apply_map(ivec({0, 1}), map.forward) == ivec({0, 1}));
  CHECK(apply_map(apply_map(ivec({5, -3}), map.forward), map.inverse) == ivec({5, -3}));
}
