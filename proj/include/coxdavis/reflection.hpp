#pragma once

// Reflection representation: reflections, group elements with cached action
// matrices, lengths and reduced words, word balls, and root generation.

#include "coxdavis/coxeter_datum.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

namespace coxdavis {

/// rho_x v = v - 2 (x, v) / (x, x) x.
inline Vector reflect(const CoxeterDatum& d, const Vector& x, const Vector& v) {
  const double xx = d.bilinear(x, x);
  if (std::abs(xx) <= tol::kEps) throw Error(ErrorCode::IsotropicMirror, "reflection in an isotropic vector");
  return v - 2.0 * d.bilinear(x, v) / xx * x;
}

/// Matrix of rho_{alpha_s} in the simple-root basis.
inline Matrix reflection_matrix(const CoxeterDatum& d, int s) {
  Matrix r = Matrix::Identity(d.rank(), d.rank());
  r.row(s) -= 2.0 * d.gram().row(s);
  return r;
}

/// A root is negative iff its coordinate sum is; roots are never mixed-sign.
inline bool is_negative_root(const Vector& root) { return root.sum() < 0.0; }

inline bool in_plc(const Vector& v, double eps = tol::kEps) {
  return v.size() > 0 && v.minCoeff() >= -eps && v.maxCoeff() > eps;
}

/// Element of W with its action on V. `word` is the lexicographically least
/// reduced word when the element was produced by `reduce` or a ball BFS.
struct GroupElement {
  std::vector<int> word;
  Matrix matrix;
  Matrix inverse;

  int length() const { return static_cast<int>(word.size()); }

  /// Right multiplication by a simple reflection: w -> w r_s.
  GroupElement times_generator(const CoxeterDatum& d, int s) const {
    GroupElement out;
    out.word = word;
    out.word.push_back(s);
    out.matrix = matrix - 2.0 * matrix.col(s) * d.gram().row(s);
    out.inverse = inverse;
    out.inverse.row(s) -= 2.0 * d.gram().row(s) * inverse;
    return out;
  }

  bool same_action(const GroupElement& o, double eps = tol::kEps) const {
    const Eigen::Map<const Vector> a(matrix.data(), matrix.size());
    const Eigen::Map<const Vector> b(o.matrix.data(), o.matrix.size());
    return approx_equal(a, b, eps);
  }
};

inline GroupElement identity_element(const CoxeterDatum& d) {
  return {{}, Matrix::Identity(d.rank(), d.rank()), Matrix::Identity(d.rank(), d.rank())};
}

/// Element for an arbitrary (possibly non-reduced) word; the word is kept as given.
inline GroupElement element_from_word(const CoxeterDatum& d, const std::vector<int>& word) {
  GroupElement w = identity_element(d);
  for (int s : word) {
    if (s < 0 || s >= d.rank()) throw Error(ErrorCode::UnknownGenerator, "generator index out of range");
    w = w.times_generator(d, s);
  }
  w.word = word;
  return w;
}

inline Vector act(const GroupElement& w, const Vector& v) {
  if (v.size() != w.matrix.cols()) throw Error(ErrorCode::DimensionMismatch, "act");
  return w.matrix * v;
}

/// Product u * w as an unreduced word concatenation.
inline GroupElement compose(const GroupElement& u, const GroupElement& w) {
  GroupElement out;
  out.word = u.word;
  out.word.insert(out.word.end(), w.word.begin(), w.word.end());
  out.matrix = u.matrix * w.matrix;
  out.inverse = w.inverse * u.inverse;
  return out;
}

inline GroupElement inverse_of(const GroupElement& w) {
  return {std::vector<int>(w.word.rbegin(), w.word.rend()), w.inverse, w.matrix};
}

struct LengthInfo {
  int length = 0;
  /// {s : w(alpha_s) is negative}, i.e. l(w r_s) < l(w).
  GeneratorSet descents;
  /// {s : w^{-1}(alpha_s) is negative}, i.e. l(r_s w) < l(w).
  GeneratorSet left_descents;
  std::vector<int> reduced_word;
};

/// Length, descent sets and the lexicographically least reduced word, by
/// repeatedly stripping the smallest left descent.
inline LengthInfo length_and_descents(const CoxeterDatum& d, const std::vector<int>& word) {
  const GroupElement w = element_from_word(d, word);
  LengthInfo info;
  for (int s = 0; s < d.rank(); ++s) {
    if (is_negative_root(w.matrix.col(s))) info.descents = info.descents.with(s);
    if (is_negative_root(w.inverse.col(s))) info.left_descents = info.left_descents.with(s);
  }
  // Strip left descents from u^{-1}; each step lowers the length by one.
  Matrix inv = w.inverse;
  for (std::size_t guard = 0; guard <= word.size(); ++guard) {
    int found = -1;
    for (int s = 0; s < d.rank(); ++s)
      if (is_negative_root(inv.col(s))) {
        found = s;
        break;
      }
    if (found < 0) break;
    info.reduced_word.push_back(found);
    inv -= 2.0 * inv.col(found) * d.gram().row(found);
  }
  info.length = static_cast<int>(info.reduced_word.size());
  return info;
}

/// Same element, relabelled by its lexicographically least reduced word.
inline GroupElement reduce(const CoxeterDatum& d, const GroupElement& w) {
  auto info = length_and_descents(d, w.word);
  GroupElement out = w;
  out.word = std::move(info.reduced_word);
  return out;
}

inline GroupElement reduce(const CoxeterDatum& d, const std::vector<int>& word) {
  return reduce(d, element_from_word(d, word));
}

/// Coefficients (of alpha_r, of alpha_s) in (rho_r rho_s)^i alpha_r for a
/// rank-2 pair with bond m (kInfiniteBond for infinity) and form value c.
inline std::pair<double, double> dihedral_orbit_closed_form(int m, double c, int i) {
  if (m == kInfiniteBond) {
    if (!(c <= -1.0)) throw Error(ErrorCode::InvalidBond, "infinite bond requires c <= -1");
    if (c == -1.0) return {2.0 * i + 1.0, 2.0 * i};
    const double theta = std::acosh(-c);
    return {std::sinh((2.0 * i + 1.0) * theta) / std::sinh(theta), std::sinh(2.0 * i * theta) / std::sinh(theta)};
  }
  if (m < 2) throw Error(ErrorCode::InvalidBond, "dihedral bond must be >= 2");
  const double theta = std::numbers::pi / m;
  return {std::sin((2.0 * i + 1.0) * theta) / std::sin(theta), std::sin(2.0 * i * theta) / std::sin(theta)};
}

struct BallOptions {
  GeneratorSet generators = GeneratorSet(~0u);
  std::size_t cap = 200'000;
};

struct BallResult {
  /// Sorted by length, then lexicographically by canonical word.
  std::vector<GroupElement> elements;
  /// True when the closure under the generators is complete (the next level is empty).
  bool closed = false;
};

/// Breadth-first enumeration of {w : l(w) <= radius} inside the standard
/// parabolic subgroup generated by `opts.generators`. Elements are compared by
/// their action matrices. Processing each level in lexicographic order makes
/// the first word that reaches an element its lexicographically least one.
inline BallResult generate_ball(const CoxeterDatum& d, int radius, BallOptions opts = {}) {
  if (radius < 0) throw Error(ErrorCode::PreconditionViolated, "radius must be >= 0");
  const GeneratorSet gens = opts.generators & d.all();
  BallResult out;
  ApproxIndex index(tol::kRootGrid, tol::kEps);
  auto key = [](const GroupElement& g) { return Vector(Eigen::Map<const Vector>(g.matrix.data(), g.matrix.size())); };

  out.elements.push_back(identity_element(d));
  index.insert(key(out.elements.front()));
  std::size_t level_begin = 0;
  for (int len = 0;; ++len) {
    const std::size_t level_end = out.elements.size();
    bool grew = false;
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (int s : gens.members()) {
        // Only length-increasing extensions.
        if (is_negative_root(out.elements[i].matrix.col(s))) continue;
        GroupElement next = out.elements[i].times_generator(d, s);
        if (!next.matrix.allFinite())
          throw Error(ErrorCode::BudgetExceeded, "matrix entries overflow at length " + std::to_string(len + 1));
        if (!index.insert(key(next)).second) continue;
        grew = true;
        if (len == radius) {
          // Probe only: the next level exists.
          out.closed = false;
          return out;
        }
        out.elements.push_back(std::move(next));
        if (out.elements.size() > opts.cap)
          throw Error(ErrorCode::BudgetExceeded, "word ball exceeds " + std::to_string(opts.cap) + " elements");
      }
    }
    if (!grew) {
      out.closed = true;
      return out;
    }
    level_begin = level_end;
  }
}

inline std::vector<GroupElement> enumerate_ball(const CoxeterDatum& d, int radius, BallOptions opts = {}) {
  return generate_ball(d, radius, opts).elements;
}

struct RootRecord {
  Vector coords;
  int depth = 0;  ///< BFS level; simple roots are level 0.
  bool positive = true;
};

struct RootOptions {
  GeneratorSet generators = GeneratorSet(~0u);
  std::size_t cap = 100'000;
};

struct RootSet {
  /// Positive roots, sorted by depth then lexicographically by coordinates.
  std::vector<RootRecord> roots;
  /// True when every positive root of the (parabolic) root system was found.
  bool exhausted = false;
};

/// BFS from the simple roots under the simple reflections, keeping positive roots.
inline RootSet generate_roots(const CoxeterDatum& d, int max_depth, RootOptions opts = {}) {
  if (max_depth < 0) throw Error(ErrorCode::PreconditionViolated, "max_depth must be >= 0");
  const GeneratorSet gens = opts.generators & d.all();
  RootSet out;
  ApproxIndex index(tol::kRootGrid, tol::kEps);
  for (int s : gens.members()) {
    out.roots.push_back({d.simple_root(s), 0, true});
    index.insert(out.roots.back().coords);
  }
  std::size_t level_begin = 0;
  for (int depth = 0;; ++depth) {
    const std::size_t level_end = out.roots.size();
    bool grew = false;
    for (std::size_t i = level_begin; i < level_end; ++i) {
      const Vector walls = d.wall_values(out.roots[i].coords);
      for (int s : gens.members()) {
        Vector image = out.roots[i].coords;
        image[s] -= 2.0 * walls[s];
        if (is_negative_root(image)) continue;
        if (!index.insert(image).second) continue;
        grew = true;
        if (depth == max_depth) break;
        out.roots.push_back({std::move(image), depth + 1, true});
        if (out.roots.size() > opts.cap)
          throw Error(ErrorCode::BudgetExceeded, "root set exceeds " + std::to_string(opts.cap) + " roots");
      }
      if (grew && depth == max_depth) break;
    }
    if (!grew) {
      out.exhausted = true;
      break;
    }
    if (depth == max_depth) break;
    level_begin = level_end;
  }
  std::stable_sort(out.roots.begin(), out.roots.end(), [](const RootRecord& a, const RootRecord& b) {
    if (a.depth != b.depth) return a.depth < b.depth;
    return std::lexicographical_compare(a.coords.begin(), a.coords.end(), b.coords.begin(), b.coords.end());
  });
  return out;
}

/// Coefficients of (rho_r rho_s)^i alpha_r computed by applying the two
/// reflections 2i times; the iterative counterpart of the closed form.
inline std::pair<double, double> dihedral_orbit_by_reflection(const CoxeterDatum& d, int r, int s, int i) {
  Vector v = d.simple_root(r);
  for (int k = 0; k < i; ++k) {
    v = reflect(d, d.simple_root(s), v);
    v = reflect(d, d.simple_root(r), v);
  }
  return {v[r], v[s]};
}

}  // namespace coxdavis
