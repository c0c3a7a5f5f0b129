#pragma once

// The transverse hyperplane V1 = {sum of coordinates = 1}, normalization onto
// it, the induced dot-action, and empirical limit-root estimates.

#include "coxdavis/reflection.hpp"

#include <cmath>
#include <vector>

namespace coxdavis {

/// A point of V1 (coordinate sum 1).
class NormalizedPoint {
 public:
  NormalizedPoint() = default;
  const Vector& coords() const { return coords_; }
  Eigen::Index size() const { return coords_.size(); }

  /// Wraps coordinates already known to sum to 1.
  static NormalizedPoint trusted(Vector v) {
    NormalizedPoint p;
    p.coords_ = std::move(v);
    return p;
  }

 private:
  Vector coords_;
};

/// The linear functional vanishing on V0 and equal to 1 on V1.
inline double phi(const Vector& v) { return v.sum(); }

inline NormalizedPoint normalize(const Vector& v) {
  const double f = phi(v);
  if (std::abs(f) <= tol::kEps) throw Error(ErrorCode::OnV0, "cannot normalize a vector of V0");
  return NormalizedPoint::trusted(v / f);
}

/// w . x = normalize(w x).
inline NormalizedPoint dot_act(const GroupElement& w, const NormalizedPoint& x) {
  const Vector image = act(w, x.coords());
  if (std::abs(phi(image)) <= tol::kEps) throw Error(ErrorCode::LeftDomain, "w x lies on V0");
  return NormalizedPoint::trusted(image / phi(image));
}

struct LimitRootEstimate {
  NormalizedPoint point;
  double isotropy = 0.0;  ///< (x, x) of the normalized point
  int source_depth = 0;
};

/// Normalized roots from the two deepest BFS levels whose isotropy is within
/// `isotropy_tol`, clustered on a 1e-4 grid. A heuristic approximation of the
/// accumulation set; nothing here proves convergence.
inline std::vector<LimitRootEstimate> approximate_limit_roots(const CoxeterDatum& d, int max_depth,
                                                              double isotropy_tol) {
  if (max_depth < 1) throw Error(ErrorCode::PreconditionViolated, "max_depth must be >= 1");
  const RootSet roots = generate_roots(d, max_depth);
  if (roots.exhausted) throw Error(ErrorCode::FiniteGroup, "root system is finite");

  std::vector<LimitRootEstimate> out;
  ApproxIndex clusters(tol::kCluster, 0.5 * tol::kCluster);
  for (const auto& r : roots.roots) {
    if (r.depth < max_depth - 1) continue;
    const NormalizedPoint x = normalize(r.coords);
    const double q = d.bilinear(x.coords(), x.coords());
    if (std::abs(q) > isotropy_tol) continue;
    if (!clusters.insert(x.coords()).second) continue;
    out.push_back({x, q, r.depth});
  }
  return out;
}

}  // namespace coxdavis
