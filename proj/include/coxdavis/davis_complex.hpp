#pragma once

// The fundamental chamber K (order complex of the spherical poset), its
// mirrors, and the Davis complex over a finite word ball as the quotient of
// W x K by (w, k) ~ (w', k) when w^{-1} w' lies in the stabilizer of k.

#include "coxdavis/parabolic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>
#include <vector>

namespace coxdavis {

/// A simplex of K: a chain T_1 < ... < T_k of spherical subsets.
using Chain = std::vector<GeneratorSet>;

struct FundamentalChamber {
  SphericalPoset poset;
  /// Every nonempty chain, shortest first, then in poset order.
  std::vector<Chain> simplices;

  bool is_maximal(const Chain& c) const {
    for (GeneratorSet t : poset.elements) {
      if (std::find(c.begin(), c.end(), t) != c.end()) continue;
      bool comparable = true;
      for (GeneratorSet u : c)
        if (!u.subset_of(t) && !t.subset_of(u)) {
          comparable = false;
          break;
        }
      if (comparable) return false;
    }
    return true;
  }

  std::vector<Chain> maximal_simplices() const {
    std::vector<Chain> out;
    for (const auto& c : simplices)
      if (is_maximal(c)) out.push_back(c);
    return out;
  }
};

inline FundamentalChamber build_fundamental_chamber(const SphericalPoset& poset) {
  FundamentalChamber k{poset, {}};
  const auto& el = poset.elements;
  std::vector<std::vector<int>> stack;
  for (int i = 0; i < static_cast<int>(el.size()); ++i) stack.push_back({i});
  std::vector<std::vector<int>> chains;
  while (!stack.empty()) {
    auto c = std::move(stack.back());
    stack.pop_back();
    for (int j = c.back() + 1; j < static_cast<int>(el.size()); ++j)
      if (el[static_cast<std::size_t>(c.back())].subset_of(el[static_cast<std::size_t>(j)])) {
        auto next = c;
        next.push_back(j);
        stack.push_back(std::move(next));
      }
    chains.push_back(std::move(c));
  }
  std::sort(chains.begin(), chains.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  for (const auto& c : chains) {
    Chain chain;
    for (int i : c) chain.push_back(el[static_cast<std::size_t>(i)]);
    k.simplices.push_back(std::move(chain));
  }
  return k;
}

/// K_s: the simplices whose minimal subset contains s.
inline std::vector<Chain> mirror(const FundamentalChamber& k, int s) {
  std::vector<Chain> out;
  for (const auto& c : k.simplices)
    if (c.front().contains(s)) out.push_back(c);
  return out;
}

/// A point of K in the relative interior of its carrier simplex.
struct ChamberPoint {
  Chain carrier;
  std::vector<double> barycentric;

  static ChamberPoint vertex(GeneratorSet t) { return {{t}, {1.0}}; }
  static ChamberPoint barycenter(const Chain& c) {
    return {c, std::vector<double>(c.size(), 1.0 / static_cast<double>(c.size()))};
  }
};

inline void validate(const ChamberPoint& p) {
  if (p.carrier.empty() || p.carrier.size() != p.barycentric.size())
    throw Error(ErrorCode::PreconditionViolated, "carrier and weights differ in length");
  double total = 0.0;
  for (std::size_t i = 0; i < p.carrier.size(); ++i) {
    if (!(p.barycentric[i] > 0.0)) throw Error(ErrorCode::PreconditionViolated, "barycentric weights must be positive");
    total += p.barycentric[i];
    if (i > 0 && (!p.carrier[i - 1].subset_of(p.carrier[i]) || p.carrier[i - 1] == p.carrier[i]))
      throw Error(ErrorCode::PreconditionViolated, "carrier is not a strict chain");
  }
  if (std::abs(total - 1.0) > tol::kEps) throw Error(ErrorCode::PreconditionViolated, "weights must sum to 1");
}

/// Generators of W_k: the minimal subset of the carrier.
inline GeneratorSet point_stabilizer(const ChamberPoint& p) { return p.carrier.front(); }

inline bool in_mirror(const ChamberPoint& p, int s) { return point_stabilizer(p).contains(s); }

struct DavisCell {
  GroupElement element;
  ChamberPoint point;
};

/// Replaces the element by the minimal-length representative of its coset
/// modulo W_{T_1}, labelled with its lexicographically least reduced word.
inline DavisCell canonicalize_cell(const CoxeterDatum& d, const DavisCell& cell) {
  const GeneratorSet stab = point_stabilizer(cell.point);
  GroupElement w = cell.element;
  for (bool stripped = true; stripped;) {
    stripped = false;
    for (int s : stab.members())
      if (is_negative_root(w.matrix.col(s))) {
        w = w.times_generator(d, s);
        stripped = true;
        break;
      }
  }
  return {reduce(d, w), cell.point};
}

/// Identity key of a canonical cell.
inline auto cell_key(const DavisCell& c) {
  std::vector<std::uint32_t> carrier;
  for (GeneratorSet t : c.point.carrier) carrier.push_back(t.bits());
  std::vector<long long> weights;
  for (double x : c.point.barycentric) weights.push_back(std::llround(x * 1e12));
  return std::make_tuple(c.element.word, carrier, weights);
}

struct Adjacency {
  int from = 0;
  int to = 0;
  int generator = 0;
};

struct FrontierMirror {
  int chamber = 0;
  int generator = 0;
};

struct DavisBall {
  FundamentalChamber chamber;
  /// One copy wK per element, sorted by length then canonical word.
  std::vector<GroupElement> chambers;
  /// s-adjacent pairs w -- w r_s with from < to.
  std::vector<Adjacency> adjacency;
  /// Mirrors wK_s whose neighbour w r_s lies outside the ball.
  std::vector<FrontierMirror> frontier;

  bool closed() const { return frontier.empty(); }
};

inline DavisBall build_davis_ball(const CoxeterDatum& d, int radius) {
  DavisBall ball;
  ball.chamber = build_fundamental_chamber(enumerate_spherical_poset(d));
  ball.chambers = enumerate_ball(d, radius);
  ApproxIndex index(tol::kRootGrid, tol::kEps);
  for (const auto& w : ball.chambers) index.insert(Eigen::Map<const Vector>(w.matrix.data(), w.matrix.size()));
  for (int i = 0; i < static_cast<int>(ball.chambers.size()); ++i) {
    for (int s = 0; s < d.rank(); ++s) {
      const GroupElement n = ball.chambers[static_cast<std::size_t>(i)].times_generator(d, s);
      const long j = index.find(Eigen::Map<const Vector>(n.matrix.data(), n.matrix.size()));
      if (j < 0)
        ball.frontier.push_back({i, s});
      else if (i < j)
        ball.adjacency.push_back({i, static_cast<int>(j), s});
    }
  }
  return ball;
}

/// Canonical cells at the barycenter of every simplex of every chamber copy
/// (vertices, edge midpoints, triangle barycenters, ...), deduplicated.
inline std::vector<DavisCell> sample_cells(const CoxeterDatum& d, const DavisBall& ball) {
  std::vector<DavisCell> out;
  std::map<decltype(cell_key(std::declval<DavisCell>())), bool> seen;
  for (const auto& w : ball.chambers)
    for (const auto& c : ball.chamber.simplices) {
      DavisCell cell = canonicalize_cell(d, {w, ChamberPoint::barycenter(c)});
      if (seen.emplace(cell_key(cell), true).second) out.push_back(std::move(cell));
    }
  return out;
}

}  // namespace coxdavis
