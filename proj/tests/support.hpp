#pragma once

// Fixture loading and independent oracles shared by the unit and acceptance tests.
// The oracles deliberately avoid the library's own reflection and LP code.

#include "coxdavis/coxeter_datum.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#ifndef COXDAVIS_DATA_DIR
#error "COXDAVIS_DATA_DIR must point at the fixture directory"
#endif

namespace testsupport {

using coxdavis::Matrix;
using coxdavis::Vector;

inline std::string data_path(const std::string& name) { return std::string(COXDAVIS_DATA_DIR) + "/" + name + ".json"; }

inline coxdavis::CoxeterDatum load(const std::string& name) {
  std::ifstream in(data_path(name));
  std::stringstream buf;
  buf << in.rdbuf();
  return coxdavis::parse_datum(buf.str());
}

inline coxdavis::CoxeterDatum dihedral(int m, double c = -1.0) {
  nlohmann::json doc = {{"generators", {"s", "t"}}};
  if (m == 0) {
    doc["bonds"] = {{"s", "t", "inf"}};
    doc["infinite_bond_values"] = {{"s", "t", c}};
  } else {
    doc["bonds"] = {{"s", "t", m}};
  }
  return coxdavis::parse_datum(doc);
}

/// Fixtures with at least one infinite parabolic of each flavour.
inline const std::vector<std::string>& all_fixtures() {
  static const std::vector<std::string> names = {"a2",           "a3",          "affine_a1", "affine_a2",
                                                 "affine_pair3", "hyperbolic_dihedral", "mixed3", "triangle334",
                                                 "universal3"};
  return names;
}

/// sigma_s(v) = v - 2 (e_s^T B v) e_s, written out by hand.
inline Vector oracle_reflect(const Matrix& b, int s, Vector v) {
  double dot = 0.0;
  for (int j = 0; j < v.size(); ++j) dot += b(s, j) * v[j];
  v[s] -= 2.0 * dot;
  return v;
}

/// Orbit coefficients of (rho_r rho_s)^i alpha_r in a rank-2 system with off-diagonal entry `off`.
inline std::pair<double, double> oracle_dihedral(double off, int i) {
  Matrix b(2, 2);
  b << 1.0, off, off, 1.0;
  Vector v = Vector::Unit(2, 0);
  for (int k = 0; k < i; ++k) v = oracle_reflect(b, 0, oracle_reflect(b, 1, v));
  return {v[0], v[1]};
}

/// Order of the subgroup of GL_n generated by the given reflections, by brute
/// closure over matrices rounded to 1e-9; returns -1 past `cap`.
inline long oracle_group_order(const Matrix& b, const std::vector<int>& gens, long cap = 5000) {
  const int n = static_cast<int>(b.rows());
  auto key = [](const Matrix& m) {
    std::vector<long long> k;
    for (Eigen::Index i = 0; i < m.size(); ++i) k.push_back(std::llround(m.data()[i] * 1e9));
    return k;
  };
  std::vector<Matrix> gen_mats;
  for (int s : gens) {
    Matrix r = Matrix::Identity(n, n);
    for (int j = 0; j < n; ++j) r(s, j) -= 2.0 * b(s, j);
    gen_mats.push_back(r);
  }
  std::set<std::vector<long long>> seen{key(Matrix::Identity(n, n))};
  std::vector<Matrix> frontier{Matrix::Identity(n, n)};
  while (!frontier.empty()) {
    std::vector<Matrix> next;
    for (const auto& m : frontier)
      for (const auto& g : gen_mats) {
        Matrix p = m * g;
        // Finite reflection groups have small entries; runaway growth means infinite.
        if (!p.allFinite() || p.cwiseAbs().maxCoeff() > 1e6) return -1;
        if (seen.insert(key(p)).second) {
          next.push_back(p);
          if (static_cast<long>(seen.size()) > cap) return -1;
        }
      }
    frontier = std::move(next);
  }
  return static_cast<long>(seen.size());
}

/// Order of the permutation group generated by adjacent transpositions of
/// {0..n}; the closure of A_n type generators without any linear algebra.
inline long oracle_symmetric_order(int n) {
  std::vector<int> id(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) id[static_cast<std::size_t>(i)] = i;
  std::set<std::vector<int>> seen{id};
  std::vector<std::vector<int>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& p : frontier)
      for (int i = 0; i < n; ++i) {
        auto q = p;
        std::swap(q[static_cast<std::size_t>(i)], q[static_cast<std::size_t>(i + 1)]);
        if (seen.insert(q).second) next.push_back(q);
      }
    frontier = std::move(next);
  }
  return static_cast<long>(seen.size());
}

/// Feasibility of {x >= 0, sum x = 1, (Bx)_s = 0 for s in T, (Bx)_t <= 0 otherwise}
/// by vertex enumeration: the region is a polytope inside the simplex, so it is
/// nonempty iff some choice of n independent active constraints gives a
/// feasible point.
inline bool oracle_wall_intersection(const Matrix& b, std::uint32_t subset, double tol = 1e-9) {
  const int n = static_cast<int>(b.rows());
  std::vector<Vector> rows;
  std::vector<double> rhs;
  rows.push_back(Vector::Ones(n));
  rhs.push_back(1.0);
  for (int s = 0; s < n; ++s) {
    rows.push_back(b.row(s).transpose());
    rhs.push_back(0.0);
    }
  for (int a = 0; a < n; ++a) {
    rows.push_back(Vector::Unit(n, a));
    rhs.push_back(0.0);
    }
  const int m = static_cast<int>(rows.size());
  auto feasible = [&](const Vector& x) {
    for (int a = 0; a < n; ++a)
      if (x[a] < -tol) return false;
    if (std::abs(x.sum() - 1.0) > tol) return false;
    const Vector w = b * x;
    for (int s = 0; s < n; ++s) {
      if ((subset >> s) & 1u) {
        if (std::abs(w[s]) > tol) return false;
      } else if (w[s] > tol) {
        return false;
      }
    }
    return true;
  };
  // Every n-subset of constraint rows.
  std::vector<bool> mask(static_cast<std::size_t>(m), false);
  std::fill(mask.begin(), mask.begin() + n, true);
  do {
    Matrix a(n, n);
    Vector r(n);
    int k = 0;
    for (int i = 0; i < m; ++i)
      if (mask[static_cast<std::size_t>(i)]) {
        a.row(k) = rows[static_cast<std::size_t>(i)].transpose();
        r[k] = rhs[static_cast<std::size_t>(i)];
        ++k;
      }
    Eigen::FullPivLU<Matrix> lu(a);
    if (lu.rank() < n) continue;
    if (feasible(lu.solve(r))) return true;
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return false;
}

}  // namespace testsupport
