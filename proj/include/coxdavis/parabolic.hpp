#pragma once

// Standard parabolic subgroups classified by the signature of the restricted
// form, and the poset of spherical subsets.

#include "coxdavis/reflection.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <climits>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace coxdavis {

enum class ParabolicKind { Finite, AffineIrreducible, OtherInfinite };

inline const char* to_string(ParabolicKind k) {
  switch (k) {
    case ParabolicKind::Finite: return "finite";
    case ParabolicKind::AffineIrreducible: return "affine-irreducible";
    case ParabolicKind::OtherInfinite: return "other-infinite";
  }
  return "?";
}

struct ParabolicClass {
  GeneratorSet subset;
  ParabolicKind kind = ParabolicKind::Finite;
  /// Present iff affine-irreducible: positive on the subset, zero elsewhere,
  /// scaled so its smallest nonzero coordinate is 1.
  std::optional<Vector> radical;
};

inline Matrix restricted_form(const CoxeterDatum& d, GeneratorSet subset) {
  const auto idx = subset.members();
  const auto k = static_cast<Eigen::Index>(idx.size());
  Matrix b(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) b(i, j) = d.gram()(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
  return b;
}

/// Connectivity of the Coxeter graph (edges where m_st != 2) on the subset.
inline bool is_connected(const CoxeterDatum& d, GeneratorSet subset) {
  const auto idx = subset.members();
  if (idx.size() <= 1) return true;
  GeneratorSet reached = GeneratorSet::single(idx.front());
  std::vector<int> stack{idx.front()};
  while (!stack.empty()) {
    const int s = stack.back();
    stack.pop_back();
    for (int t : idx)
      if (!reached.contains(t) && d.bonded(s, t)) {
        reached = reached.with(t);
        stack.push_back(t);
      }
  }
  return reached == subset;
}

/// Sylvester's criterion; a smallest minor close to zero is confirmed
/// against the smallest eigenvalue.
inline bool is_positive_definite(const Matrix& b) {
  double smallest = std::numeric_limits<double>::infinity();
  for (Eigen::Index k = 1; k <= b.rows(); ++k) {
    const double minor = b.topLeftCorner(k, k).determinant();
    if (minor <= tol::kMinor) return false;
    smallest = std::min(smallest, minor);
  }
  if (smallest < 1e-6) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(b, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() > tol::kMinor;
  }
  return true;
}

inline ParabolicClass classify_parabolic(const CoxeterDatum& d, GeneratorSet subset) {
  if (!subset.subset_of(d.all())) throw Error(ErrorCode::UnknownGenerator, "subset outside S");
  ParabolicClass out{subset, ParabolicKind::Finite, std::nullopt};
  if (subset.empty()) return out;
  const Matrix b = restricted_form(d, subset);
  if (is_positive_definite(b)) return out;

  out.kind = ParabolicKind::OtherInfinite;
  if (!is_connected(d, subset)) return out;
  Eigen::SelfAdjointEigenSolver<Matrix> es(b);
  const Vector& ev = es.eigenvalues();
  constexpr double kZero = 1e-9;
  if (std::abs(ev[0]) > kZero) return out;
  if (ev.size() > 1 && ev[1] <= kZero) return out;
  Vector kernel = es.eigenvectors().col(0);
  if (kernel.sum() < 0) kernel = -kernel;
  if (kernel.minCoeff() <= kZero) return out;
  kernel /= kernel.minCoeff();

  Vector radical = Vector::Zero(d.rank());
  const auto idx = subset.members();
  for (std::size_t i = 0; i < idx.size(); ++i) radical[idx[i]] = kernel[static_cast<Eigen::Index>(i)];
  out.kind = ParabolicKind::AffineIrreducible;
  out.radical = std::move(radical);
  return out;
}

inline bool is_spherical(const CoxeterDatum& d, GeneratorSet subset) {
  return classify_parabolic(d, subset).kind == ParabolicKind::Finite;
}

struct SphericalPoset {
  /// Spherical subsets including the empty set, ordered by size then bits.
  std::vector<GeneratorSet> elements;
  /// Hasse diagram: (i, j) with elements[i] covered by elements[j].
  std::vector<std::pair<int, int>> covers;

  int index_of(GeneratorSet t) const {
    auto it = std::find(elements.begin(), elements.end(), t);
    return it == elements.end() ? -1 : static_cast<int>(it - elements.begin());
  }
  bool contains(GeneratorSet t) const { return index_of(t) >= 0; }
};

/// Grows spherical subsets one generator at a time, only testing candidates
/// whose maximal proper subsets are all spherical.
inline SphericalPoset enumerate_spherical_poset(const CoxeterDatum& d) {
  if (d.rank() > 20) throw Error(ErrorCode::RankTooLarge, "spherical poset enumeration needs rank <= 20");
  std::set<std::uint32_t> found{0u};
  std::vector<GeneratorSet> level{GeneratorSet{}};
  SphericalPoset poset;
  poset.elements.push_back(GeneratorSet{});
  while (!level.empty()) {
    std::vector<GeneratorSet> next;
    for (GeneratorSet t : level) {
      const int start = t.empty() ? 0 : 32 - std::countl_zero(t.bits());
      for (int s = start; s < d.rank(); ++s) {
        const GeneratorSet candidate = t.with(s);
        bool faces_ok = true;
        for (int a : candidate.members())
          if (!found.count(candidate.without(a).bits())) {
            faces_ok = false;
            break;
          }
        if (!faces_ok || !is_spherical(d, candidate)) continue;
        found.insert(candidate.bits());
        next.push_back(candidate);
      }
    }
    std::sort(next.begin(), next.end(), BySizeThenBits{});
    poset.elements.insert(poset.elements.end(), next.begin(), next.end());
    level = std::move(next);
  }
  for (std::size_t j = 0; j < poset.elements.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      const GeneratorSet a = poset.elements[i], b = poset.elements[j];
      if (a.subset_of(b) && b.size() == a.size() + 1) poset.covers.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return poset;
}

/// All elements of a finite standard parabolic subgroup W_T.
inline std::vector<GroupElement> enumerate_finite_parabolic_elements(const CoxeterDatum& d, GeneratorSet subset) {
  if (!is_spherical(d, subset)) throw Error(ErrorCode::NotSpherical, "W_T is infinite");
  auto ball = generate_ball(d, INT_MAX / 2, {subset, 200'000});
  return std::move(ball.elements);
}

}  // namespace coxdavis
