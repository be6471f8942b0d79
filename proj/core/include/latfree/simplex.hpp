#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "latfree/linalg.hpp"

namespace latfree {

enum class LpStatus { optimal, unbounded, infeasible };

template <class S>
struct LpResult {
  LpStatus status;
  S value;      // optimal objective, valid when status == optimal
  Vec<S> point;  // an optimizer, valid when status == optimal
};

/// Exact two-phase dense simplex with Bland's rule (no cycling), maximizing
/// c.x over {x : A x <= b} with x free.  S may be any exact ordered field.
template <class S>
class SimplexSolver {
 public:
  SimplexSolver(const Mat<S>& a, const Vec<S>& b, std::size_t dim)
      : m_(a.size()), d_(dim) {
    // Columns: d_ positive parts, d_ negative parts, m_ slacks, m_ artificials.
    cols_ = 2 * d_ + 2 * m_;
    tab_.assign(m_, Vec<S>(cols_ + 1, S(0)));
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      int flip = sgn(b[i]) < 0 ? -1 : 1;
      for (std::size_t j = 0; j < d_; ++j) {
        tab_[i][j] = S(flip) * a[i][j];
        tab_[i][d_ + j] = S(-flip) * a[i][j];
      }
      tab_[i][2 * d_ + i] = S(flip);
      tab_[i][2 * d_ + m_ + i] = S(1);
      tab_[i][cols_] = S(flip) * b[i];
      basis_[i] = 2 * d_ + m_ + i;
    }
  }

  LpResult<S> maximize(const Vec<S>& c) {
    if (!phase1_done_) {
      if (!run_phase1()) return {LpStatus::infeasible, S(0), {}};
      phase1_done_ = true;
    }
    set_objective(c);
    for (;;) {
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < 2 * d_ + m_; ++j)
        if (sgn(obj_[j]) > 0) { enter = j; break; }  // Bland: first improving
      if (enter == cols_) break;
      std::size_t leave = pick_leaving(enter);
      if (leave == m_) return {LpStatus::unbounded, S(0), {}};
      pivot(leave, enter);
    }
    Vec<S> x(d_, S(0));
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < d_) x[basis_[i]] += tab_[i][cols_];
      else if (basis_[i] < 2 * d_) x[basis_[i] - d_] -= tab_[i][cols_];
    }
    return {LpStatus::optimal, value_, std::move(x)};
  }

 private:
  bool run_phase1() {
    // Maximize minus the sum of artificials; start with them basic.
    obj_.assign(cols_, S(0));
    value_ = S(0);
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < 2 * d_ + m_; ++j) obj_[j] += tab_[i][j];
      value_ -= tab_[i][cols_];
    }
    for (;;) {
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < 2 * d_ + m_; ++j)
        if (sgn(obj_[j]) > 0) { enter = j; break; }
      if (enter == cols_) break;
      std::size_t leave = pick_leaving(enter);
      if (leave == m_) throw std::logic_error("phase-1 objective is bounded");
      pivot(leave, enter);
    }
    if (sgn(value_) != 0) return false;  // some artificial stuck positive
    // Drive residual basic artificials out (degenerate rows).
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < 2 * d_ + m_) continue;
      std::size_t j = 0;
      for (; j < 2 * d_ + m_; ++j)
        if (sgn(tab_[i][j]) != 0) break;
      if (j < 2 * d_ + m_) pivot(i, j);
      // else: redundant zero row; harmless to keep, artificial stays at 0.
    }
    return true;
  }

  void set_objective(const Vec<S>& c) {
    Vec<S> full(cols_, S(0));
    for (std::size_t j = 0; j < d_ && j < c.size(); ++j) {
      full[j] = c[j];
      full[d_ + j] = -c[j];
    }
    obj_ = full;
    value_ = S(0);
    for (std::size_t i = 0; i < m_; ++i) {
      const S& cb = full[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j < cols_; ++j) obj_[j] -= cb * tab_[i][j];
      value_ += cb * tab_[i][cols_];
    }
    // Keep artificials unattractive in phase 2.
    for (std::size_t j = 2 * d_ + m_; j < cols_; ++j) obj_[j] = S(-1);
  }

  /// Smallest-ratio row, ties broken by smallest basic variable index
  /// (Bland); m_ when the column is nonpositive (unbounded direction).
  std::size_t pick_leaving(std::size_t enter) {
    std::size_t best = m_;
    S best_ratio(0);
    for (std::size_t i = 0; i < m_; ++i) {
      if (sgn(tab_[i][enter]) <= 0) continue;
      S ratio = tab_[i][cols_] / tab_[i][enter];
      if (best == m_ || ratio < best_ratio ||
          (ratio == best_ratio && basis_[i] < basis_[best])) {
        best = i;
        best_ratio = ratio;
      }
    }
    return best;
  }

  void pivot(std::size_t row, std::size_t col) {
    S inv = S(1) / tab_[row][col];
    for (std::size_t j = 0; j <= cols_; ++j) tab_[row][j] *= inv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row || sgn(tab_[i][col]) == 0) continue;
      S f = tab_[i][col];
      for (std::size_t j = 0; j <= cols_; ++j) tab_[i][j] -= f * tab_[row][j];
    }
    if (sgn(obj_[col]) != 0) {
      S f = obj_[col];
      for (std::size_t j = 0; j < cols_; ++j) obj_[j] -= f * tab_[row][j];
      value_ += f * tab_[row][cols_];
    }
    basis_[row] = col;
  }

  std::size_t m_, d_, cols_ = 0;
  Mat<S> tab_;
  Vec<S> obj_;
  S value_ = S(0);
  std::vector<std::size_t> basis_;
  bool phase1_done_ = false;
};

template <class S>
LpResult<S> lp_maximize(const Mat<S>& a, const Vec<S>& b, const Vec<S>& c) {
  std::size_t dim = a.empty() ? c.size() : a[0].size();
  SimplexSolver<S> solver(a, b, dim);
  return solver.maximize(c);
}

template <class S>
LpResult<S> lp_minimize(const Mat<S>& a, const Vec<S>& b, const Vec<S>& c) {
  Vec<S> neg(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) neg[i] = -c[i];
  LpResult<S> r = lp_maximize(a, b, neg);
  if (r.status == LpStatus::optimal) r.value = -r.value;
  return r;
}

/// A feasible point of {A x <= b}, or infeasible status.
template <class S>
LpResult<S> lp_feasible(const Mat<S>& a, const Vec<S>& b, std::size_t dim) {
  SimplexSolver<S> solver(a, b, dim);
  return solver.maximize(Vec<S>(dim, S(0)));
}

}  // namespace latfree
