#pragma once

// Invariant suites run by the `check` command: one entry per module invariant,
// each with a pass/fail/skip status and the largest violation observed.

#include "coxdavis/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

namespace coxdavis {

enum class CheckStatus { Pass, Fail, Skipped };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skipped: return "SKIP";
  }
  return "?";
}

struct CheckResult {
  std::string module;
  std::string invariant;
  CheckStatus status = CheckStatus::Pass;
  double max_violation = 0.0;
  std::string detail;
};

struct SuiteOptions {
  int root_depth = 10;
  int ball_radius = 4;
  int displacement_samples = 200;
  std::uint64_t seed = 1;
};

namespace detail {

inline CheckResult verdict(std::string module, std::string invariant, bool ok, double violation,
                           std::string detail = {}) {
  return {std::move(module), std::move(invariant), ok ? CheckStatus::Pass : CheckStatus::Fail, violation,
          std::move(detail)};
}

inline CheckResult skipped(std::string module, std::string invariant, std::string why) {
  return {std::move(module), std::move(invariant), CheckStatus::Skipped, 0.0, std::move(why)};
}

inline std::string format(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

/// Whether BFS over W_T closes within the budget. Running out of budget or
/// overflowing the matrix entries counts as infinite.
inline bool bfs_terminates(const CoxeterDatum& d, GeneratorSet t, std::size_t cap = 5000) {
  try {
    return generate_ball(d, 1 << 20, {t, cap}).closed;
  } catch (const Error&) {
    return false;
  }
}

inline double form_invariance_violation(const CoxeterDatum& d, const std::vector<GroupElement>& ball,
                                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int k = 0; k < 8; ++k) {
    Vector v(d.rank()), u(d.rank());
    for (int i = 0; i < d.rank(); ++i) {
      v[i] = 2.0 * uniform01(rng) - 1.0;
      u[i] = 2.0 * uniform01(rng) - 1.0;
    }
    const double ref = d.bilinear(v, u);
    for (const auto& w : ball) worst = std::max(worst, std::abs(d.bilinear(act(w, v), act(w, u)) - ref));
  }
  return worst;
}

}  // namespace detail

inline std::vector<CheckResult> run_checks(const CoxeterDatum& d, const SuiteOptions& opt = {}) {
  using detail::skipped;
  using detail::verdict;
  std::vector<CheckResult> out;
  const int n = d.rank();
  const auto& m = d.matrix();

  // coxeter-datum
  {
    double worst = 0.0;
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t) {
        worst = std::max(worst, std::abs(d.gram()(s, t) - d.gram()(t, s)));
        if (s != t && !m.is_infinite(s, t))
          worst = std::max(worst, std::abs(d.gram()(s, t) + std::cos(std::numbers::pi / m.entries[s][t])));
      }
    out.push_back(verdict("coxeter-datum", "finite-bond form entries equal -cos(pi/m)", worst < tol::kForm, worst));
    const bool round_trip = parse_datum(to_json(d)) == d && to_json(parse_datum(to_json(d))) == to_json(d);
    out.push_back(verdict("coxeter-datum", "document round-trip", round_trip, round_trip ? 0.0 : 1.0));
  }

  const auto ball6 = enumerate_ball(d, std::min(6, std::max(opt.ball_radius, 0) + 2));
  out.push_back([&] {
    const double v = detail::form_invariance_violation(d, ball6, opt.seed);
    return verdict("reflection-engine", "form is W-invariant on the word ball", v < tol::kEps * 10, v);
  }());

  // reflection-engine
  {
    const RootSet roots = generate_roots(d, opt.root_depth);
    double worst = 0.0;
    for (const auto& r : roots.roots) worst = std::max(worst, -r.coords.minCoeff());
    out.push_back(verdict("reflection-engine", "sign dichotomy: generated roots lie in PLC(Pi)", worst <= tol::kEps, worst,
                          std::to_string(roots.roots.size()) + " positive roots"));

    double dihedral = 0.0;
    double order = 0.0;
    bool order_ok = true;
    for (int r = 0; r < n; ++r)
      for (int s = 0; s < n; ++s) {
        if (r == s) continue;
        const double c = d.gram()(r, s);
        for (int i = 0; i <= 20; ++i) {
          const auto closed = dihedral_orbit_closed_form(m.entries[r][s], c, i);
          const auto iter = dihedral_orbit_by_reflection(d, r, s, i);
          const double scale = std::max({1.0, std::abs(closed.first), std::abs(closed.second)});
          dihedral = std::max({dihedral, std::abs(closed.first - iter.first) / scale,
                               std::abs(closed.second - iter.second) / scale});
        }
        const Matrix rot = reflection_matrix(d, r) * reflection_matrix(d, s);
        Matrix p = Matrix::Identity(n, n);
        const int limit = m.is_infinite(r, s) ? 50 : m.entries[r][s];
        for (int k = 1; k <= limit; ++k) {
          p = p * rot;
          const double dist = (p - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
          const bool should_close = !m.is_infinite(r, s) && k == limit;
          if (should_close) {
            order = std::max(order, dist);
            order_ok = order_ok && dist < 1e-8;
          } else if (dist < 1e-8) {
            order_ok = false;
          }
        }
      }
    out.push_back(verdict("reflection-engine", "dihedral orbits match the closed form", dihedral < 1e-7, dihedral));
    out.push_back(verdict("reflection-engine", "rho_s rho_t has order m_st", order_ok, order));

    double plc = 0.0;
    for (const auto& w : ball6)
      for (int a = 0; a < n; ++a) {
        const Vector image = w.matrix.col(a);
        if (!is_negative_root(image)) plc = std::max(plc, -image.minCoeff());
      }
    out.push_back(verdict("reflection-engine", "l(w r_a) >= l(w) implies w(alpha_a) in PLC(Pi)", plc <= tol::kEps, plc));

    // normalizer
    double transversal = std::numeric_limits<double>::infinity();
    double evenness = 0.0;
    for (const auto& r : roots.roots) {
      transversal = std::min(transversal, phi(r.coords));
      evenness = std::max(evenness, (normalize(r.coords).coords() - normalize(-r.coords).coords()).norm());
    }
    out.push_back(verdict("normalizer", "phi > 0 on every positive root", transversal > 0.0, std::max(0.0, -transversal)));
    out.push_back(verdict("normalizer", "normalize(-v) = normalize(v)", evenness < tol::kEps, evenness));
  }

  // parabolic-classifier
  const SphericalPoset poset = enumerate_spherical_poset(d);
  {
    bool closed = true;
    for (GeneratorSet t : poset.elements)
      for (int a : t.members())
        if (!poset.contains(t.without(a))) closed = false;
    out.push_back(verdict("parabolic-classifier", "spherical poset is downward closed", closed, closed ? 0.0 : 1.0));

    if (n <= 8) {
      int mismatches = 0;
      for (std::uint32_t bits = 1; bits < (1u << n); ++bits) {
        const GeneratorSet t(bits);
        const bool finite = classify_parabolic(d, t).kind == ParabolicKind::Finite;
        const bool terminates = detail::bfs_terminates(d, t);
        if (finite != terminates) ++mismatches;
      }
      out.push_back(verdict("parabolic-classifier", "positive definite restriction iff W_T closes under BFS",
                            mismatches == 0, mismatches));
    } else {
      out.push_back(skipped("parabolic-classifier", "positive definite restriction iff W_T closes under BFS",
                            "rank above 8"));
    }
  }

  // davis-complex
  const DavisBall ball = build_davis_ball(d, opt.ball_radius);
  {
    const auto elements = enumerate_ball(d, opt.ball_radius);
    out.push_back(verdict("davis-complex", "one chamber per ball element", ball.chambers.size() == elements.size(),
                          std::abs(static_cast<double>(ball.chambers.size()) - static_cast<double>(elements.size()))));
    bool idempotent = true;
    for (const auto& w : ball.chambers)
      for (const auto& c : ball.chamber.simplices) {
        const DavisCell once = canonicalize_cell(d, {w, ChamberPoint::barycenter(c)});
        const DavisCell twice = canonicalize_cell(d, once);
        if (cell_key(once) != cell_key(twice)) idempotent = false;
        // Every representative w u with u in W_{T_1} lands on the same cell.
        for (int s : point_stabilizer(once.point).members()) {
          const DavisCell moved = canonicalize_cell(d, {once.element.times_generator(d, s), once.point});
          if (cell_key(moved) != cell_key(once)) idempotent = false;
        }
      }
    out.push_back(verdict("davis-complex", "canonical cells are idempotent and class-invariant", idempotent,
                          idempotent ? 0.0 : 1.0));
    bool mirrors = true;
    for (int s = 0; s < n; ++s) {
      const auto ks = mirror(ball.chamber, s);
      for (const auto& c : ball.chamber.simplices) {
        const bool listed = std::find(ks.begin(), ks.end(), c) != ks.end();
        if (listed != point_stabilizer(ChamberPoint::barycenter(c)).contains(s)) mirrors = false;
      }
    }
    out.push_back(verdict("davis-complex", "k in K_s iff s in the stabilizer of k", mirrors, mirrors ? 0.0 : 1.0));
    const auto whole = generate_ball(d, opt.ball_radius);
    if (whole.closed)
      out.push_back(verdict("davis-complex", "finite W: complex closes up with no frontier", ball.closed(),
                            static_cast<double>(ball.frontier.size())));
  }

  // imaginary-cone
  const bool infinite = !detail::bfs_terminates(d, d.all());
  const auto radius6 = enumerate_ball(d, 6);
  {
    double worst = 0.0;
    for (const Vector& v : random_nonpositive_wall_vectors(d, opt.displacement_samples, opt.seed))
      worst = std::min(worst, displacement_report(d, v, radius6).min_coordinate);
    out.push_back(verdict("imaginary-cone", "displacement: w v - v in PLC(Pi) or 0", worst >= -tol::kEps, -worst));

    // For finite W the form is positive definite and K = {0}.
    int disagreements = 0;
    for (std::uint32_t bits = 1; bits < (1u << n); ++bits) {
      const GeneratorSet t(bits);
      const auto kind = classify_parabolic(d, t).kind;
      const auto meet = hyperplane_meets_chamber(d, t);
      bool ok = meet.meets == (infinite && kind != ParabolicKind::OtherInfinite);
      if (meet.witness) {
        const Vector& x = meet.witness->coords();
        const Vector walls = d.wall_values(x);
        for (int s : t.members()) ok = ok && std::abs(walls[s]) <= tol::kWall;
        ok = ok && in_fundamental_chamber(d, x).member;
      }
      if (!ok) ++disagreements;
    }
    out.push_back(verdict("imaginary-cone", "wall intersection meets K iff finite or affine", disagreements == 0,
                          disagreements));
  }

  const bool interior = has_interior(d);
  {
    bool stab_ok = true;
    for (std::uint32_t bits = 1; bits < (1u << n); ++bits)
      if (auto cls = classify_parabolic(d, GeneratorSet(bits)); cls.radical)
        stab_ok = stab_ok && verify_stabilizer(d, *cls.radical, 5).holds;
    if (interior) {
      const ConePoint v0 = find_interior_basepoint(d);
      stab_ok = stab_ok && verify_stabilizer(d, v0.coords, 5).holds;
      for (GeneratorSet t : poset.elements)
        if (t.size() == 1) stab_ok = stab_ok && verify_stabilizer(d, average_over_parabolic(d, t, v0), 5).holds;
    }
    out.push_back(verdict("imaginary-cone", "stabilizer of v is generated by S'", stab_ok, stab_ok ? 0.0 : 1.0));
  }

  if (!interior) {
    const std::string why = "NotApplicable: W is finite, affine or reducible, so K has empty interior";
    for (const char* inv : {"averaging witness lies on the walls of T",
                            "finite parabolic orbits are positively independent"})
      out.push_back(skipped("imaginary-cone", inv, why));
    for (const char* inv : {"vertex images fixed exactly by T", "chain images are affinely independent",
                            "F is equivariant, injective, mirror-aligned and isotropic"})
      out.push_back(skipped("embedding", inv, why));
    return out;
  }

  const ConePoint v0 = find_interior_basepoint(d);
  {
    double averaging = 0.0;
    bool averaging_ok = true;
    for (GeneratorSet t : poset.elements) {
      const auto chk = check_averaging(d, t, average_over_parabolic(d, t, v0));
      averaging = std::max(averaging, chk.max_inside);
      averaging_ok = averaging_ok && chk.holds;
    }
    out.push_back(verdict("imaginary-cone", "averaging witness lies on the walls of T", averaging_ok, averaging));

    bool independent = true;
    for (GeneratorSet t : poset.elements) {
      std::vector<Vector> orbit;
      for (const auto& w : enumerate_finite_parabolic_elements(d, t)) orbit.push_back(act(w, v0.coords));
      independent = independent && positively_independent(orbit, IndependenceRoute::LinearProgram);
    }
    out.push_back(verdict("imaginary-cone", "finite parabolic orbits are positively independent", independent,
                          independent ? 0.0 : 1.0));
  }

  {
    const VertexImageTable table = build_vertex_table(d, poset, v0);
    double fixed = 0.0;
    bool fixed_ok = true;
    for (GeneratorSet t : poset.elements)
      for (int s = 0; s < n; ++s) {
        const Vector& x = table.at(t).coords();
        const double moved = (dot_act(element_from_word(d, {s}), table.at(t)).coords() - x).norm();
        if (t.contains(s)) {
          fixed = std::max(fixed, moved);
          fixed_ok = fixed_ok && moved < tol::kWall;
        } else {
          fixed_ok = fixed_ok && moved > tol::kWall;
        }
      }
    out.push_back(verdict("embedding", "vertex images fixed exactly by T", fixed_ok, fixed));

    double smallest = std::numeric_limits<double>::infinity();
    for (const auto& c : ball.chamber.maximal_simplices())
      smallest = std::min(smallest, chain_simplex_check(chain_images(c, table)).min_singular_value);
    out.push_back(verdict("embedding", "chain images are affinely independent", smallest > tol::kWall, smallest));

    const EmbeddingReport r = verify_embedding(d, ball, table);
    out.push_back(verdict("embedding", "F is equivariant, injective, mirror-aligned and isotropic", r.passed(),
                          std::max(r.equivariance_max, r.mirror_inside_max),
                          "min separation " + detail::format(r.min_separation)));
  }
  return out;
}

}  // namespace coxdavis
