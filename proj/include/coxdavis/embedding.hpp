#pragma once

// The W-equivariant map F from the Davis complex into the normalized imaginary
// cone: vertex images v_T, affine extension over simplices of K, the
// extension F((w, k)) = w . F(k), and a numerical verification harness.

#include "coxdavis/davis_complex.hpp"
#include "coxdavis/imaginary_cone.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <limits>
#include <map>
#include <string>
#include <vector>

namespace coxdavis {

/// How v_T averages over W_T: normalize the linear average (default), or
/// average the dot-action images.
enum class VertexMode { Linear, Dot };

inline NormalizedPoint vertex_image(const CoxeterDatum& d, GeneratorSet t, const ConePoint& v0,
                                    VertexMode mode = VertexMode::Linear) {
  if (!in_fundamental_chamber(d, v0.coords).interior) throw Error(ErrorCode::NotInterior, "v0 must be interior to K");
  if (mode == VertexMode::Linear) return normalize(average_over_parabolic(d, t, v0));
  const auto elements = enumerate_finite_parabolic_elements(d, t);
  const NormalizedPoint x = normalize(v0.coords);
  Vector sum = Vector::Zero(d.rank());
  for (const auto& w : elements) sum += dot_act(w, x).coords();
  return NormalizedPoint::trusted(sum / static_cast<double>(elements.size()));
}

struct VertexImageTable {
  ConePoint basepoint;
  VertexMode mode = VertexMode::Linear;
  std::map<std::uint32_t, NormalizedPoint> images;

  const NormalizedPoint& at(GeneratorSet t) const {
    auto it = images.find(t.bits());
    if (it == images.end()) throw Error(ErrorCode::NotSpherical, "no vertex image for this subset");
    return it->second;
  }
};

inline VertexImageTable build_vertex_table(const CoxeterDatum& d, const SphericalPoset& poset, const ConePoint& v0,
                                           VertexMode mode = VertexMode::Linear) {
  VertexImageTable table{v0, mode, {}};
  for (GeneratorSet t : poset.elements) table.images.emplace(t.bits(), vertex_image(d, t, v0, mode));
  return table;
}

/// Largest distance between the linear and dot-action vertex images.
inline double vertex_mode_discrepancy(const CoxeterDatum& d, const SphericalPoset& poset, const ConePoint& v0) {
  double worst = 0.0;
  for (GeneratorSet t : poset.elements)
    worst = std::max(worst, (vertex_image(d, t, v0, VertexMode::Linear).coords() -
                             vertex_image(d, t, v0, VertexMode::Dot).coords()).norm());
  return worst;
}

struct ChainCheck {
  bool independent = true;
  /// Smallest singular value of the difference frame (infinity for one point).
  double min_singular_value = std::numeric_limits<double>::infinity();
};

/// Affine independence of the images of a chain.
inline ChainCheck chain_simplex_check(const std::vector<NormalizedPoint>& images) {
  ChainCheck out;
  if (images.size() <= 1) return out;
  const auto k = static_cast<Eigen::Index>(images.size());
  Matrix frame(images.front().size(), k - 1);
  for (Eigen::Index i = 1; i < k; ++i)
    frame.col(i - 1) = images[static_cast<std::size_t>(i)].coords() - images.front().coords();
  if (frame.rows() < frame.cols()) {
    out.independent = false;
    out.min_singular_value = 0.0;
    return out;
  }
  Eigen::JacobiSVD<Matrix> svd(frame);
  out.min_singular_value = svd.singularValues().minCoeff();
  out.independent = out.min_singular_value > tol::kWall;
  return out;
}

inline std::vector<NormalizedPoint> chain_images(const Chain& c, const VertexImageTable& table) {
  std::vector<NormalizedPoint> out;
  for (GeneratorSet t : c) out.push_back(table.at(t));
  return out;
}

/// F(k) = sum_i weight_i v_{T_i}.
inline NormalizedPoint embed_chamber_point(const ChamberPoint& k, const VertexImageTable& table) {
  validate(k);
  const auto images = chain_images(k.carrier, table);
  if (!chain_simplex_check(images).independent)
    throw Error(ErrorCode::DegenerateSimplex, "vertex images of the carrier are affinely dependent");
  Vector sum = Vector::Zero(images.front().size());
  for (std::size_t i = 0; i < images.size(); ++i) sum += k.barycentric[i] * images[i].coords();
  return NormalizedPoint::trusted(sum);
}

struct EmbeddedPoint {
  DavisCell source;
  NormalizedPoint image;
  double isotropy = 0.0;
};

/// F((w, k)) = w . F(k).
inline EmbeddedPoint embed_cell(const CoxeterDatum& d, const DavisCell& cell, const VertexImageTable& table) {
  EmbeddedPoint out{cell, dot_act(cell.element, embed_chamber_point(cell.point, table)), 0.0};
  out.isotropy = d.bilinear(out.image.coords(), out.image.coords());
  return out;
}

struct EmbeddingReport {
  std::size_t chambers = 0;
  std::size_t cells = 0;
  /// max |F(canon(u w, k)) - u . F((w, k))|
  double equivariance_max = 0.0;
  /// max distance between images of two representatives of one cell
  double well_defined_max = 0.0;
  /// min distance between images of distinct cells
  double min_separation = std::numeric_limits<double>::infinity();
  /// max |(F(k), alpha_s)| over k in K_s
  double mirror_inside_max = 0.0;
  /// min |(F(k), alpha_s)| over k not in K_s
  double mirror_outside_min = std::numeric_limits<double>::infinity();
  double isotropy_max = -std::numeric_limits<double>::infinity();
  /// k whose image has a stabilizer differing from W_k
  std::size_t stabilizer_mismatches = 0;
  /// (w, k) with w . F(k) back in K but w outside W_k
  std::size_t cone_return_violations = 0;

  bool equivariant() const { return equivariance_max < tol::kWall && well_defined_max < tol::kWall; }
  bool injective() const { return min_separation > 1e-7; }
  bool mirror_aligned() const {
    return mirror_inside_max < tol::kWall && mirror_outside_min >= tol::kWall && stabilizer_mismatches == 0;
  }
  bool isotropic() const { return isotropy_max <= tol::kEps; }
  bool passed() const {
    return equivariant() && injective() && mirror_aligned() && isotropic() && cone_return_violations == 0;
  }
};

/// Samples every chamber of the ball at the barycenters of all simplices of K
/// and checks equivariance, injectivity, mirror alignment and image isotropy.
inline EmbeddingReport verify_embedding(const CoxeterDatum& d, const DavisBall& ball, const VertexImageTable& table) {
  EmbeddingReport r;
  r.chambers = ball.chambers.size();
  const auto& simplices = ball.chamber.simplices;

  std::vector<NormalizedPoint> base_images;
  for (const auto& c : simplices) base_images.push_back(embed_chamber_point(ChamberPoint::barycenter(c), table));

  // Mirror alignment and stabilizers on K itself.
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    const ChamberPoint k = ChamberPoint::barycenter(simplices[i]);
    const Vector walls = d.wall_values(base_images[i].coords());
    for (int s = 0; s < d.rank(); ++s) {
      if (in_mirror(k, s))
        r.mirror_inside_max = std::max(r.mirror_inside_max, std::abs(walls[s]));
      else
        r.mirror_outside_min = std::min(r.mirror_outside_min, std::abs(walls[s]));
    }
    if (stabilizer_generators(d, base_images[i].coords()) != point_stabilizer(k)) ++r.stabilizer_mismatches;
  }

  // Images of every raw representative, grouped by canonical cell.
  std::map<decltype(cell_key(std::declval<DavisCell>())), Vector> by_cell;
  for (const auto& w : ball.chambers) {
    for (std::size_t i = 0; i < simplices.size(); ++i) {
      const Vector image = dot_act(w, base_images[i]).coords();
      r.isotropy_max = std::max(r.isotropy_max, d.bilinear(image, image));
      const DavisCell canon = canonicalize_cell(d, {w, ChamberPoint::barycenter(simplices[i])});
      auto [it, fresh] = by_cell.emplace(cell_key(canon), image);
      if (!fresh) r.well_defined_max = std::max(r.well_defined_max, (it->second - image).norm());

      const bool fixes = approx_equal(image, base_images[i].coords(), tol::kEps);
      if (!fixes && in_fundamental_chamber(d, image).member) ++r.cone_return_violations;
    }
  }
  r.cells = by_cell.size();

  std::vector<Vector> images;
  images.reserve(by_cell.size());
  for (const auto& [key, image] : by_cell) images.push_back(image);
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j)
      r.min_separation = std::min(r.min_separation, (images[i] - images[j]).norm());

  // Equivariance: u . F((w, k)) against F evaluated on the canonical form of (u w, k).
  for (const auto& u : ball.chambers) {
    for (const auto& w : ball.chambers) {
      const GroupElement uw = compose(u, w);
      for (std::size_t i = 0; i < simplices.size(); ++i) {
        const ChamberPoint k = ChamberPoint::barycenter(simplices[i]);
        const Vector lhs = dot_act(u, dot_act(w, base_images[i])).coords();
        const DavisCell canon = canonicalize_cell(d, {uw, k});
        const Vector rhs = dot_act(canon.element, base_images[i]).coords();
        r.equivariance_max = std::max(r.equivariance_max, (lhs - rhs).norm());
      }
    }
  }
  return r;
}

}  // namespace coxdavis
