#pragma once

// Shared vocabulary: vectors, tolerances, generator subsets, the error type,
// and an approximate point index used for floating-point deduplication.

#include <Eigen/Dense>

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace coxdavis {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

namespace tol {
/// Equality predicates on vectors, form values and cone membership.
inline constexpr double kEps = 1e-9;
/// Validation of Gram entries against -cos(pi/m).
inline constexpr double kForm = 1e-12;
/// Grid pitch for root and group-element keys.
inline constexpr double kRootGrid = 1e-7;
/// Grid pitch for clustering limit-root estimates.
inline constexpr double kCluster = 1e-4;
/// Leading principal minors.
inline constexpr double kMinor = 1e-10;
/// Hyperplane / radical checks on computed points.
inline constexpr double kWall = 1e-8;
}  // namespace tol

enum class ErrorCode {
  Parse,
  DuplicateGenerator,
  UnknownGenerator,
  AsymmetricEntry,
  InvalidBond,
  InvalidInfiniteBondValue,
  DimensionMismatch,
  IsotropicMirror,
  BudgetExceeded,
  OnV0,
  LeftDomain,
  FiniteGroup,
  RankTooLarge,
  NotSpherical,
  NotApplicable,
  NotInterior,
  Infeasible,
  PreconditionViolated,
  DegenerateSimplex,
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::DuplicateGenerator: return "DuplicateGenerator";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::AsymmetricEntry: return "AsymmetricEntry";
    case ErrorCode::InvalidBond: return "InvalidBond";
    case ErrorCode::InvalidInfiniteBondValue: return "InvalidInfiniteBondValue";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::IsotropicMirror: return "IsotropicMirror";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::OnV0: return "OnV0";
    case ErrorCode::LeftDomain: return "LeftDomain";
    case ErrorCode::FiniteGroup: return "FiniteGroup";
    case ErrorCode::RankTooLarge: return "RankTooLarge";
    case ErrorCode::NotSpherical: return "NotSpherical";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::NotInterior: return "NotInterior";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::DegenerateSimplex: return "DegenerateSimplex";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// A subset of the generating set, stored as a bitmask over generator
/// indices (rank is capped at 32).
class GeneratorSet {
 public:
  constexpr GeneratorSet() = default;
  constexpr explicit GeneratorSet(std::uint32_t bits) : bits_(bits) {}

  static constexpr GeneratorSet single(int s) { return GeneratorSet(1u << s); }
  static constexpr GeneratorSet full(int rank) {
    return GeneratorSet(rank >= 32 ? ~0u : ((1u << rank) - 1u));
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(int s) const { return (bits_ >> s) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool subset_of(GeneratorSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr GeneratorSet with(int s) const { return GeneratorSet(bits_ | (1u << s)); }
  constexpr GeneratorSet without(int s) const { return GeneratorSet(bits_ & ~(1u << s)); }
  constexpr GeneratorSet operator|(GeneratorSet o) const { return GeneratorSet(bits_ | o.bits_); }
  constexpr GeneratorSet operator&(GeneratorSet o) const { return GeneratorSet(bits_ & o.bits_); }

  std::vector<int> members() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  constexpr auto operator<=>(const GeneratorSet&) const = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Orders subsets by size, then by bitmask. Used for every poset listing.
struct BySizeThenBits {
  bool operator()(GeneratorSet a, GeneratorSet b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
  }
};

inline bool approx_equal(const Vector& a, const Vector& b, double tolerance) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    const double scale = std::max(1.0, std::max(std::abs(a[i]), std::abs(b[i])));
    if (std::abs(a[i] - b[i]) > tolerance * scale) return false;
  }
  return true;
}

/// Hash index over real vectors. Keys are coordinates rounded to a grid; a
/// lookup also probes the neighbouring cell along every coordinate that sits
/// within the match tolerance of a cell boundary, so near-boundary values are
/// never split across cells.
class ApproxIndex {
 public:
  ApproxIndex(double grid, double match_tol) : grid_(grid), tol_(match_tol) {}

  /// Returns the id stored for a matching point, or -1.
  long find(const Vector& p) const {
    long hit = -1;
    probe(p, [&](const Key& k) {
      auto it = cells_.find(k);
      if (it == cells_.end()) return false;
      for (long id : it->second) {
        if (approx_equal(points_[static_cast<std::size_t>(id)], p, tol_)) {
          hit = id;
          return true;
        }
      }
      return false;
    });
    return hit;
  }

  /// Inserts p if no match exists; returns (id, inserted).
  std::pair<long, bool> insert(const Vector& p) {
    if (long id = find(p); id >= 0) return {id, false};
    const long id = static_cast<long>(points_.size());
    points_.push_back(p);
    cells_[key_of(p)].push_back(id);
    return {id, true};
  }

  std::size_t size() const { return points_.size(); }

 private:
  using Key = std::vector<long long>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::size_t h = 1469598103934665603ull;
      for (long long x : k) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
      return h;
    }
  };

  Key key_of(const Vector& p) const {
    Key k(static_cast<std::size_t>(p.size()));
    for (Eigen::Index i = 0; i < p.size(); ++i) k[static_cast<std::size_t>(i)] = std::llround(p[i] / grid_);
    return k;
  }

  template <class Visit>
  void probe(const Vector& p, Visit&& visit) const {
    Key base = key_of(p);
    std::vector<std::size_t> ambiguous;
    std::vector<int> direction;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
      const double scaled = p[i] / grid_;
      const double frac = scaled - std::round(scaled);
      const double slack = tol_ * std::max(1.0, std::abs(p[i])) / grid_;
      if (std::abs(frac) > 0.5 - slack) {
        ambiguous.push_back(static_cast<std::size_t>(i));
        direction.push_back(frac > 0 ? 1 : -1);
      }
    }
    // Enumerating 2^k corners; k is almost always 0.
    const std::size_t corners = std::size_t{1} << std::min<std::size_t>(ambiguous.size(), 16);
    for (std::size_t mask = 0; mask < corners; ++mask) {
      Key k = base;
      for (std::size_t j = 0; j < ambiguous.size() && j < 16; ++j)
        if ((mask >> j) & 1u) k[ambiguous[j]] += direction[j];
      if (visit(k)) return;
    }
  }

  double grid_;
  double tol_;
  std::vector<Vector> points_;
  std::unordered_map<Key, std::vector<long>, KeyHash> cells_;
};

/// Deterministic, platform-independent uniform draws in [0, 1).
template <class Engine>
double uniform01(Engine& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace coxdavis
