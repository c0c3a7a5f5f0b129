#pragma once

// Dense two-phase simplex with Bland's rule. Sized for the tiny feasibility
// problems that arise here (a few dozen variables at most).
//
//   minimize    cost . x
//   subject to  A_ub x <= b_ub,  A_eq x = b_eq,  x >= 0

#include "coxdavis/core.hpp"

#include <limits>
#include <vector>

namespace coxdavis::lp {

struct Problem {
  Vector cost;
  Matrix a_ub;
  Vector b_ub;
  Matrix a_eq;
  Vector b_eq;
};

enum class Status { Optimal, Infeasible, Unbounded, IterationLimit };

struct Solution {
  Status status = Status::Infeasible;
  Vector x;
  double objective = 0.0;
};

namespace detail {

class Tableau {
 public:
  Tableau(Matrix t, std::vector<int> basis, double eps) : t_(std::move(t)), basis_(std::move(basis)), eps_(eps) {}

  // Objective row is the last row; rhs the last column.
  Eigen::Index rows() const { return t_.rows() - 1; }
  Eigen::Index rhs() const { return t_.cols() - 1; }

  void set_objective(const Vector& cost) {
    t_.row(rows()).setZero();
    t_.row(rows()).head(cost.size()) = cost.transpose();
    for (Eigen::Index r = 0; r < rows(); ++r) {
      const double c = t_(rows(), basis_[static_cast<std::size_t>(r)]);
      if (c != 0.0) t_.row(rows()) -= c * t_.row(r);
    }
  }

  /// Runs simplex iterations over columns [0, allowed). Returns false if unbounded.
  Status optimize(Eigen::Index allowed, int max_iter) {
    for (int iter = 0; iter < max_iter; ++iter) {
      Eigen::Index enter = -1;
      for (Eigen::Index j = 0; j < allowed; ++j)
        if (t_(rows(), j) < -eps_) {
          enter = j;
          break;
        }
      if (enter < 0) return Status::Optimal;
      Eigen::Index leave = -1;
      double best = std::numeric_limits<double>::infinity();
      for (Eigen::Index r = 0; r < rows(); ++r) {
        if (t_(r, enter) <= eps_) continue;
        const double ratio = t_(r, rhs()) / t_(r, enter);
        if (ratio < best - eps_ ||
            (ratio <= best + eps_ && leave >= 0 && basis_[static_cast<std::size_t>(r)] < basis_[static_cast<std::size_t>(leave)])) {
          best = std::min(best, ratio);
          leave = r;
        }
      }
      if (leave < 0) return Status::Unbounded;
      pivot(leave, enter);
    }
    return Status::IterationLimit;
  }

  void pivot(Eigen::Index r, Eigen::Index c) {
    t_.row(r) /= t_(r, c);
    for (Eigen::Index i = 0; i < t_.rows(); ++i)
      if (i != r && t_(i, c) != 0.0) t_.row(i) -= t_(i, c) * t_.row(r);
    basis_[static_cast<std::size_t>(r)] = static_cast<int>(c);
  }

  double objective() const { return -t_(rows(), rhs()); }
  double at(Eigen::Index r, Eigen::Index c) const { return t_(r, c); }
  int basic(Eigen::Index r) const { return basis_[static_cast<std::size_t>(r)]; }

  Vector values(Eigen::Index count) const {
    Vector x = Vector::Zero(count);
    for (Eigen::Index r = 0; r < rows(); ++r)
      if (basis_[static_cast<std::size_t>(r)] < count) x[basis_[static_cast<std::size_t>(r)]] = t_(r, rhs());
    return x;
  }

 private:
  Matrix t_;
  std::vector<int> basis_;
  double eps_;
};

}  // namespace detail

inline Solution solve(const Problem& p, double eps = 1e-11, int max_iter = 10'000) {
  const Eigen::Index n = p.cost.size();
  const Eigen::Index m_ub = p.a_ub.rows();
  const Eigen::Index m_eq = p.a_eq.rows();
  const Eigen::Index m = m_ub + m_eq;
  if ((m_ub && p.a_ub.cols() != n) || (m_eq && p.a_eq.cols() != n) || p.b_ub.size() != m_ub || p.b_eq.size() != m_eq)
    throw Error(ErrorCode::DimensionMismatch, "linear program shapes disagree");

  // Columns: x (n) | slacks (m_ub) | artificials (m) | rhs.
  const Eigen::Index structural = n + m_ub;
  Matrix t = Matrix::Zero(m + 1, structural + m + 1);
  for (Eigen::Index r = 0; r < m; ++r) {
    const bool ub = r < m_ub;
    Eigen::RowVectorXd row = Eigen::RowVectorXd::Zero(structural);
    row.head(n) = ub ? p.a_ub.row(r) : p.a_eq.row(r - m_ub);
    if (ub) row[n + r] = 1.0;
    double b = ub ? p.b_ub[r] : p.b_eq[r - m_ub];
    if (b < 0) {
      row = -row;
      b = -b;
    }
    t.row(r).head(structural) = row;
    t(r, structural + r) = 1.0;
    t(r, structural + m) = b;
  }
  std::vector<int> basis(static_cast<std::size_t>(m));
  for (Eigen::Index r = 0; r < m; ++r) basis[static_cast<std::size_t>(r)] = static_cast<int>(structural + r);

  detail::Tableau tab(std::move(t), std::move(basis), eps);
  Vector phase1 = Vector::Zero(structural + m);
  phase1.tail(m).setOnes();
  tab.set_objective(phase1);
  Solution sol;
  if (tab.optimize(structural + m, max_iter) == Status::IterationLimit) {
    sol.status = Status::IterationLimit;
    return sol;
  }
  if (tab.objective() > 1e-9) {
    sol.status = Status::Infeasible;
    return sol;
  }
  // Drive remaining artificials out of the basis where possible.
  for (Eigen::Index r = 0; r < tab.rows(); ++r) {
    if (tab.basic(r) < structural) continue;
    for (Eigen::Index j = 0; j < structural; ++j)
      if (std::abs(tab.at(r, j)) > 1e-9) {
        tab.pivot(r, j);
        break;
      }
  }
  Vector phase2 = Vector::Zero(structural + m);
  phase2.head(n) = p.cost;
  tab.set_objective(phase2);
  sol.status = tab.optimize(structural, max_iter);
  sol.x = tab.values(n);
  sol.objective = p.cost.dot(sol.x);
  return sol;
}

}  // namespace coxdavis::lp
