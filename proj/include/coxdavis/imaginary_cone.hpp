#pragma once

// The cone K = {v in PLC(Pi) : (v, a) <= 0 for all simple a}, its W-translates
// (the imaginary cone), and facts about it: displacement,
// averaging over finite parabolics, stabilizers, isotropic points, the
// finite-or-affine wall criterion and positive independence.

#include "coxdavis/lp.hpp"
#include "coxdavis/normalizer.hpp"
#include "coxdavis/parabolic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace coxdavis {

struct ChamberMembership {
  bool member = false;
  bool interior = false;
};

inline double scale_of(const Vector& v) { return std::max(1.0, v.cwiseAbs().maxCoeff()); }

/// `margin` is the strictness required of the interior inequalities.
inline ChamberMembership in_fundamental_chamber(const CoxeterDatum& d, const Vector& v, double margin = tol::kEps) {
  ChamberMembership out;
  if (v.size() != d.rank()) throw Error(ErrorCode::DimensionMismatch, "in_fundamental_chamber");
  const double eps = tol::kEps * scale_of(v);
  const Vector walls = d.wall_values(v);
  out.member = in_plc(v, eps) && walls.maxCoeff() <= eps;
  out.interior = out.member && v.minCoeff() > eps && walls.maxCoeff() < -margin;
  return out;
}

struct ConePoint {
  Vector coords;
  bool in_interior = false;
  /// min over a of v_a and of -(v, alpha_a); positive iff strictly interior.
  double margin = 0.0;
};

inline double interior_margin(const CoxeterDatum& d, const Vector& v) {
  return std::min(v.minCoeff(), (-d.wall_values(v)).minCoeff());
}

/// W irreducible, infinite and not affine; the only case with nonempty interior.
inline bool has_interior(const CoxeterDatum& d) {
  return is_connected(d, d.all()) && classify_parabolic(d, d.all()).kind == ParabolicKind::OtherInfinite;
}

/// A point of the interior of K normalized to V1. Tries B lambda = -1 first,
/// then maximizes the margin t subject to (v, alpha_s) <= -t, v_a >= t,
/// sum v = 1.
inline ConePoint find_interior_basepoint(const CoxeterDatum& d) {
  if (!has_interior(d))
    throw Error(ErrorCode::NotApplicable, "interior of K may be empty: W is finite, affine or reducible");
  const int n = d.rank();
  Eigen::FullPivLU<Matrix> lu(d.gram());
  if (lu.isInvertible()) {
    Vector lambda = lu.solve(-Vector::Ones(n));
    if ((d.gram() * lambda + Vector::Ones(n)).norm() < 1e-9 && lambda.minCoeff() > tol::kEps) {
      const Vector v = lambda / phi(lambda);
      if (interior_margin(d, v) > tol::kEps) return {v, true, interior_margin(d, v)};
    }
  }

  lp::Problem p;
  p.cost = Vector::Zero(n + 1);
  p.cost[n] = -1.0;
  p.a_ub = Matrix::Zero(2 * n, n + 1);
  p.b_ub = Vector::Zero(2 * n);
  p.a_ub.topLeftCorner(n, n) = d.gram();
  p.a_ub.block(0, n, n, 1).setOnes();
  p.a_ub.bottomLeftCorner(n, n) = -Matrix::Identity(n, n);
  p.a_ub.block(n, n, n, 1).setOnes();
  p.a_eq = Matrix::Zero(1, n + 1);
  p.a_eq.block(0, 0, 1, n).setOnes();
  p.b_eq = Vector::Ones(1);
  const auto sol = lp::solve(p);
  if (sol.status != lp::Status::Optimal || sol.x[n] <= tol::kEps)
    throw Error(ErrorCode::Infeasible, "no interior point found");
  const Vector v = sol.x.head(n) / sol.x.head(n).sum();
  return {v, true, interior_margin(d, v)};
}

/// Accepts a caller-supplied base point; normalizes it and checks interiority.
inline ConePoint make_basepoint(const CoxeterDatum& d, const Vector& v) {
  if (v.size() != d.rank()) throw Error(ErrorCode::DimensionMismatch, "basepoint has wrong length");
  const Vector x = normalize(v).coords();
  if (!in_fundamental_chamber(d, x).interior) throw Error(ErrorCode::NotInterior, "basepoint is not interior to K");
  return {x, true, interior_margin(d, x)};
}

inline void require_nonpositive_walls(const CoxeterDatum& d, const Vector& v) {
  if (v.size() != d.rank()) throw Error(ErrorCode::DimensionMismatch, "vector has wrong length");
  if (d.wall_values(v).maxCoeff() > tol::kEps * scale_of(v))
    throw Error(ErrorCode::PreconditionViolated, "(v, alpha_s) > 0 for some s");
}

/// Smallest coordinate of w v - v over the given elements (>= -eps means the
/// displacement property holds) together with the worst element.
struct DisplacementReport {
  double min_coordinate = 0.0;
  std::vector<int> worst_word;
  bool holds = true;
};

inline DisplacementReport displacement_report(const CoxeterDatum& d, const Vector& v,
                                              const std::vector<GroupElement>& ball) {
  require_nonpositive_walls(d, v);
  DisplacementReport out;
  for (const auto& w : ball) {
    const Vector diff = act(w, v) - v;
    const double m = diff.size() ? diff.minCoeff() : 0.0;
    if (m < out.min_coordinate) {
      out.min_coordinate = m;
      out.worst_word = w.word;
    }
  }
  out.holds = out.min_coordinate >= -tol::kEps;
  return out;
}

inline bool check_displacement(const CoxeterDatum& d, const Vector& v, int ball_radius) {
  require_nonpositive_walls(d, v);
  return displacement_report(d, v, enumerate_ball(d, ball_radius)).holds;
}

/// (1/|W_T|) sum over W_T of w v0, using the linear action.
inline Vector average_over_parabolic(const CoxeterDatum& d, GeneratorSet subset, const ConePoint& v0) {
  if (!in_fundamental_chamber(d, v0.coords).interior) throw Error(ErrorCode::NotInterior, "v0 must be interior to K");
  const auto elements = enumerate_finite_parabolic_elements(d, subset);
  Vector sum = Vector::Zero(d.rank());
  for (const auto& w : elements) sum += act(w, v0.coords);
  return sum / static_cast<double>(elements.size());
}

struct AveragingCheck {
  double max_inside = 0.0;   ///< max |(c, alpha_s)| over s in T
  double max_outside = -std::numeric_limits<double>::infinity();  ///< max (c, alpha_t) over t outside T
  bool in_cone = false;
  bool holds = false;
};

inline AveragingCheck check_averaging(const CoxeterDatum& d, GeneratorSet subset, const Vector& c) {
  AveragingCheck out;
  const Vector walls = d.wall_values(c);
  for (int s = 0; s < d.rank(); ++s) {
    if (subset.contains(s))
      out.max_inside = std::max(out.max_inside, std::abs(walls[s]));
    else
      out.max_outside = std::max(out.max_outside, walls[s]);
  }
  out.in_cone = in_fundamental_chamber(d, c).member;
  out.holds = out.max_inside <= tol::kWall && out.max_outside < -tol::kEps && out.in_cone;
  return out;
}

/// Seeded vectors with (v, alpha_s) <= 0 for all s. With B invertible these
/// are v = -B^{-1} y for random y >= 0 (some entries zeroed so walls are hit);
/// otherwise random kernel combinations, plus a pseudo-inverse part when it
/// keeps every wall value nonpositive.
inline std::vector<Vector> random_nonpositive_wall_vectors(const CoxeterDatum& d, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int n = d.rank();
  Eigen::FullPivLU<Matrix> lu(d.gram());
  const Matrix kernel = lu.isInvertible() ? Matrix(n, 0) : Matrix(lu.kernel());
  const Matrix pinv = d.gram().completeOrthogonalDecomposition().pseudoInverse();
  std::vector<Vector> out;
  out.reserve(static_cast<std::size_t>(count));
  while (static_cast<int>(out.size()) < count) {
    Vector y(n);
    for (int i = 0; i < n; ++i) y[i] = uniform01(rng) < 0.25 ? 0.0 : uniform01(rng);
    if (lu.isInvertible()) {
      out.push_back(lu.solve(-y));
      continue;
    }
    Vector v = Vector::Zero(n);
    for (Eigen::Index j = 0; j < kernel.cols(); ++j) v += (2.0 * uniform01(rng) - 1.0) * kernel.col(j);
    const Vector extended = v + pinv * (-y);
    out.push_back(d.wall_values(extended).maxCoeff() <= 0.0 ? extended : v);
  }
  return out;
}

/// S' = {s : (v, alpha_s) = 0}; generates the stabilizer of v.
inline GeneratorSet stabilizer_generators(const CoxeterDatum& d, const Vector& v) {
  require_nonpositive_walls(d, v);
  const Vector walls = d.wall_values(v);
  const double eps = tol::kEps * scale_of(v);
  GeneratorSet out;
  for (int s = 0; s < d.rank(); ++s)
    if (std::abs(walls[s]) <= eps) out = out.with(s);
  return out;
}

struct StabilizerReport {
  bool holds = true;
  GeneratorSet generators;
  /// Canonical words of the ball elements fixing v.
  std::vector<std::vector<int>> fixers;
};

inline bool word_within(const std::vector<int>& word, GeneratorSet gens) {
  return std::all_of(word.begin(), word.end(), [&](int s) { return gens.contains(s); });
}

/// For every ball element: w v = v iff w lies in <S'>. Elements of a standard
/// parabolic subgroup are exactly those whose reduced words use its letters.
inline StabilizerReport verify_stabilizer(const CoxeterDatum& d, const Vector& v, int ball_radius) {
  StabilizerReport out;
  out.generators = stabilizer_generators(d, v);
  for (const auto& w : enumerate_ball(d, ball_radius)) {
    const bool fixes = approx_equal(act(w, v), v, tol::kEps);
    if (fixes) out.fixers.push_back(w.word);
    if (fixes != word_within(w.word, out.generators)) out.holds = false;
  }
  return out;
}

struct IsotropicStructure {
  GeneratorSet support_walls;  ///< M = {a : (x, a) = 0}
  bool supported_on_walls = false;
  bool in_radical = false;
};

/// For nonzero isotropic x in K: x is supported on M and lies in the radical
/// of the form restricted to span(M).
inline IsotropicStructure isotropic_boundary_structure(const CoxeterDatum& d, const Vector& x) {
  if (x.size() != d.rank()) throw Error(ErrorCode::DimensionMismatch, "isotropic_boundary_structure");
  if (x.cwiseAbs().maxCoeff() <= tol::kEps) throw Error(ErrorCode::PreconditionViolated, "x = 0");
  if (!in_fundamental_chamber(d, x).member) throw Error(ErrorCode::PreconditionViolated, "x is not in K");
  if (std::abs(d.bilinear(x, x)) > tol::kEps * scale_of(x) * scale_of(x))
    throw Error(ErrorCode::PreconditionViolated, "x is not isotropic");
  IsotropicStructure out;
  const Vector walls = d.wall_values(x);
  const double eps = tol::kEps * scale_of(x);
  for (int a = 0; a < d.rank(); ++a)
    if (std::abs(walls[a]) <= eps) out.support_walls = out.support_walls.with(a);
  out.supported_on_walls = true;
  out.in_radical = true;
  for (int a = 0; a < d.rank(); ++a) {
    if (!out.support_walls.contains(a) && std::abs(x[a]) > tol::kWall) out.supported_on_walls = false;
    if (out.support_walls.contains(a) && std::abs(walls[a]) > tol::kWall) out.in_radical = false;
  }
  return out;
}

enum class WitnessSource { None, Averaging, AffineRadical, LinearProgram };

struct WallIntersection {
  bool meets = false;
  std::optional<NormalizedPoint> witness;
  WitnessSource source = WitnessSource::None;
};

/// Decides whether the intersection of the walls H_s (s in subset) meets the
/// normalized cone, producing a witness. Spherical subsets average an interior
/// point over W_T; affine ones use the positive radical vector. When W has no
/// interior (finite, affine or reducible W) a spherical subset falls back on a
/// small feasibility program.
inline WallIntersection hyperplane_meets_chamber(const CoxeterDatum& d, GeneratorSet subset) {
  WallIntersection out;
  const auto cls = classify_parabolic(d, subset);
  if (cls.kind == ParabolicKind::AffineIrreducible) {
    out.meets = true;
    out.witness = normalize(*cls.radical);
    out.source = WitnessSource::AffineRadical;
    return out;
  }
  if (cls.kind == ParabolicKind::OtherInfinite) return out;
  if (has_interior(d)) {
    const ConePoint v0 = find_interior_basepoint(d);
    out.meets = true;
    out.witness = normalize(average_over_parabolic(d, subset, v0));
    out.source = WitnessSource::Averaging;
    return out;
  }
  const int n = d.rank();
  lp::Problem p;
  p.cost = Vector::Zero(n);
  std::vector<int> inside = subset.members();
  p.a_eq = Matrix::Zero(static_cast<Eigen::Index>(inside.size()) + 1, n);
  p.b_eq = Vector::Zero(p.a_eq.rows());
  for (std::size_t i = 0; i < inside.size(); ++i) p.a_eq.row(static_cast<Eigen::Index>(i)) = d.gram().row(inside[i]);
  p.a_eq.row(p.a_eq.rows() - 1).setOnes();
  p.b_eq[p.b_eq.size() - 1] = 1.0;
  const auto outside = (d.all() & GeneratorSet(~subset.bits())).members();
  p.a_ub = Matrix::Zero(static_cast<Eigen::Index>(outside.size()), n);
  p.b_ub = Vector::Zero(p.a_ub.rows());
  for (std::size_t i = 0; i < outside.size(); ++i) p.a_ub.row(static_cast<Eigen::Index>(i)) = d.gram().row(outside[i]);
  const auto sol = lp::solve(p);
  if (sol.status == lp::Status::Optimal) {
    out.meets = true;
    out.witness = normalize(sol.x);
    out.source = WitnessSource::LinearProgram;
  }
  return out;
}

enum class IndependenceRoute { Auto, LinearProgram };

/// True iff no nonzero nonnegative combination of the points vanishes. When
/// every point lies in PLC(Pi) the coordinate-sum functional separates them
/// from 0; otherwise the program sum l_i p_i = 0, l >= 0, sum l = 1 decides.
inline bool positively_independent(const std::vector<Vector>& points,
                                   IndependenceRoute route = IndependenceRoute::Auto) {
  if (points.empty()) throw Error(ErrorCode::PreconditionViolated, "empty point list");
  const Eigen::Index n = points.front().size();
  if (route == IndependenceRoute::Auto &&
      std::all_of(points.begin(), points.end(), [](const Vector& p) { return in_plc(p, tol::kEps * scale_of(p)); }))
    return true;
  const auto k = static_cast<Eigen::Index>(points.size());
  lp::Problem p;
  p.cost = Vector::Zero(k);
  p.a_eq = Matrix::Zero(n + 1, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    const Vector& pt = points[static_cast<std::size_t>(i)];
    if (pt.size() != n) throw Error(ErrorCode::DimensionMismatch, "points differ in dimension");
    p.a_eq.block(0, i, n, 1) = pt / scale_of(pt);
  }
  p.a_eq.row(n).setOnes();
  p.b_eq = Vector::Zero(n + 1);
  p.b_eq[n] = 1.0;
  p.a_ub = Matrix::Zero(0, k);
  p.b_ub = Vector::Zero(0);
  return lp::solve(p).status == lp::Status::Infeasible;
}

struct ConeSample {
  ConePoint base;
  GroupElement element;
  Vector image;
  NormalizedPoint normalized_image;
  double isotropy = 0.0;  ///< (x, x) of the normalized image
};

/// Extreme points of the normalized cone used for sampling: the base point,
/// the averaged points of every nonempty spherical subset, and normalized
/// radicals of affine subsets.
inline std::vector<Vector> cone_generators(const CoxeterDatum& d, const ConePoint& v0) {
  std::vector<Vector> gens{v0.coords};
  for (GeneratorSet t : enumerate_spherical_poset(d).elements)
    if (!t.empty()) gens.push_back(normalize(average_over_parabolic(d, t, v0)).coords());
  for (std::uint32_t bits = 1; bits < (1u << d.rank()); ++bits) {
    const auto cls = classify_parabolic(d, GeneratorSet(bits));
    if (cls.kind == ParabolicKind::AffineIrreducible) gens.push_back(normalize(*cls.radical).coords());
  }
  return gens;
}

/// Seeded random convex combinations of cone generators pushed through every
/// element of the word ball.
inline std::vector<ConeSample> sample_imaginary_cone(const CoxeterDatum& d, int ball_radius, int samples_per_chamber,
                                                     std::uint64_t seed) {
  if (samples_per_chamber < 0) throw Error(ErrorCode::PreconditionViolated, "samples_per_chamber must be >= 0");
  const ConePoint v0 = find_interior_basepoint(d);
  const auto gens = cone_generators(d, v0);
  std::mt19937_64 rng(seed);
  std::vector<ConeSample> out;
  for (const auto& w : enumerate_ball(d, ball_radius)) {
    for (int k = 0; k < samples_per_chamber; ++k) {
      Vector base = Vector::Zero(d.rank());
      double total = 0.0;
      for (const auto& g : gens) {
        const double weight = -std::log1p(-uniform01(rng));
        base += weight * g;
        total += weight;
      }
      base /= total;
      ConeSample s;
      s.base = {base, in_fundamental_chamber(d, base).interior, interior_margin(d, base)};
      s.element = w;
      s.image = act(w, base);
      s.normalized_image = normalize(s.image);
      s.isotropy = d.bilinear(s.normalized_image.coords(), s.normalized_image.coords());
      out.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace coxdavis
