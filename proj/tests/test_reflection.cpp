#include "support.hpp"

#include "coxdavis/reflection.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace coxdavis;
using testsupport::dihedral;
using testsupport::load;

TEST(Reflect, SimpleRootGoesToItsNegative) {
  const auto d = load("universal3");
  for (int s = 0; s < 3; ++s) EXPECT_TRUE(approx_equal(reflect(d, d.simple_root(s), d.simple_root(s)), -d.simple_root(s), 1e-15));
}

TEST(Reflect, OrthogonalVectorIsFixed) {
  const auto d = dihedral(2);
  EXPECT_TRUE(approx_equal(reflect(d, d.simple_root(0), d.simple_root(1)), d.simple_root(1), 1e-15));
}

TEST(Reflect, BondThree) {
  const auto d = dihedral(3);
  EXPECT_TRUE(approx_equal(reflect(d, d.simple_root(0), d.simple_root(1)), Vector::Ones(2), 1e-15));
}

TEST(Reflect, IsotropicMirrorIsRejected) {
  const auto d = load("affine_a1");
  try {
    reflect(d, Vector::Ones(2), d.simple_root(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IsotropicMirror);
  }
}

TEST(Act, Identity) {
  const auto d = load("triangle334");
  const Vector v(Vector::LinSpaced(3, 0.3, 1.7));
  EXPECT_TRUE(approx_equal(act(identity_element(d), v), v, 1e-15));
  EXPECT_THROW(act(identity_element(d), Vector::Ones(2)), Error);
}

TEST(Act, BondThreeRotation) {
  const auto d = dihedral(3);
  const auto w = element_from_word(d, {0, 1});
  EXPECT_TRUE(approx_equal(act(w, d.simple_root(0)), d.simple_root(1), 1e-12));
}

TEST(Act, InfiniteDihedral) {
  const auto d = dihedral(0, -1.0);
  const auto w = element_from_word(d, {0, 1});
  Vector expected(2);
  expected << 3.0, 2.0;
  EXPECT_TRUE(approx_equal(act(w, d.simple_root(0)), expected, 1e-12));
}

TEST(Act, FormIsPreserved) {
  for (const auto& name : testsupport::all_fixtures()) {
    const auto d = load(name);
    for (const auto& w : enumerate_ball(d, 4)) {
      const Matrix m = w.matrix;
      const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
      EXPECT_LT((m.transpose() * d.gram() * m - d.gram()).cwiseAbs().maxCoeff(), 1e-10 * scale * scale) << name;
      EXPECT_LT((m * w.inverse - Matrix::Identity(d.rank(), d.rank())).cwiseAbs().maxCoeff(), 1e-9 * scale * scale);
    }
  }
}

TEST(Act, ComposeAndInverse) {
  const auto d = load("triangle334");
  const auto u = element_from_word(d, {0, 1, 2});
  const auto w = element_from_word(d, {2, 0});
  const auto uw = compose(u, w);
  EXPECT_TRUE(uw.same_action(element_from_word(d, {0, 1, 2, 2, 0})));
  EXPECT_TRUE(compose(u, inverse_of(u)).same_action(identity_element(d)));
}

TEST(ClosedForm, Examples) {
  auto [a, b] = dihedral_orbit_closed_form(3, -1.0, 1);
  EXPECT_NEAR(a, 0.0, 1e-12);
  EXPECT_NEAR(b, 1.0, 1e-12);
  EXPECT_EQ(dihedral_orbit_closed_form(kInfiniteBond, -1.0, 2), std::make_pair(5.0, 4.0));
  EXPECT_EQ(dihedral_orbit_closed_form(kInfiniteBond, -1.0, 0), std::make_pair(1.0, 0.0));
}

TEST(ClosedForm, AgreesWithHandReflections) {
  for (int m : {3, 4, 5, 7, 9}) {
    const double off = -std::cos(std::numbers::pi / m);
    for (int i = 0; i <= 20; ++i) {
      const auto [a, b] = dihedral_orbit_closed_form(m, -1.0, i);
      const auto [oa, ob] = testsupport::oracle_dihedral(off, i);
      EXPECT_NEAR(a, oa, 1e-9);
      EXPECT_NEAR(b, ob, 1e-9);
    }
  }
  for (double c : {-1.0, -1.5, -2.0}) {
    for (int i = 0; i <= 15; ++i) {
      const auto [a, b] = dihedral_orbit_closed_form(kInfiniteBond, c, i);
      const auto [oa, ob] = testsupport::oracle_dihedral(c, i);
      EXPECT_NEAR(a, oa, 1e-7 * std::max(1.0, std::abs(oa)));
      EXPECT_NEAR(b, ob, 1e-7 * std::max(1.0, std::abs(ob)));
    }
  }
}

TEST(Roots, FiniteDihedral) {
  const auto roots = generate_roots(dihedral(3), 2);
  ASSERT_EQ(roots.roots.size(), 3u);
  EXPECT_TRUE(roots.exhausted);
  EXPECT_TRUE(approx_equal(roots.roots[2].coords, Vector::Ones(2), 1e-12));
}

TEST(Roots, DepthZeroIsSimpleRoots) {
  for (const auto& name : testsupport::all_fixtures()) {
    const auto d = load(name);
    const auto roots = generate_roots(d, 0);
    ASSERT_EQ(static_cast<int>(roots.roots.size()), d.rank()) << name;
    for (const auto& r : roots.roots) EXPECT_EQ(r.depth, 0);
  }
}

// Under the level convention (Pi at depth 0) the roots (1,0),(0,1),(1,2),(2,1)
// make up depth 1 and depth 2 adds (2,3),(3,2).
TEST(Roots, InfiniteDihedralLevels) {
  const auto d = dihedral(0, -1.0);
  const auto one = generate_roots(d, 1);
  ASSERT_EQ(one.roots.size(), 4u);
  std::vector<std::pair<long, long>> got;
  for (const auto& r : one.roots) got.emplace_back(std::lround(r.coords[0]), std::lround(r.coords[1]));
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, (std::vector<std::pair<long, long>>{{0, 1}, {1, 0}, {1, 2}, {2, 1}}));
  EXPECT_FALSE(one.exhausted);
  EXPECT_EQ(generate_roots(d, 2).roots.size(), 6u);
}

TEST(Roots, FiniteCountsMatchGroupTheory) {
  EXPECT_EQ(generate_roots(load("a3"), 20).roots.size(), 6u);
  EXPECT_EQ(generate_roots(dihedral(5), 20).roots.size(), 5u);
}

TEST(Roots, BudgetExceeded) {
  try {
    generate_roots(load("universal3"), 30, {GeneratorSet(~0u), 100});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
}

TEST(Length, InvolutionCancels) {
  const auto d = dihedral(3);
  const auto info = length_and_descents(d, {0, 0});
  EXPECT_EQ(info.length, 0);
  EXPECT_TRUE(info.reduced_word.empty());
}

TEST(Length, LongestElementOfOrderSix) {
  const auto d = dihedral(3);
  const auto info = length_and_descents(d, {0, 1, 0});
  EXPECT_EQ(info.length, 3);
  EXPECT_EQ(info.descents, d.all());
  EXPECT_EQ(info.left_descents, d.all());
  EXPECT_EQ(length_and_descents(d, {1, 0, 1}).reduced_word, (std::vector<int>{0, 1, 0}));
}

TEST(Length, SimpleReflectionHasDescent) {
  const auto d = load("universal3");
  const auto w = element_from_word(d, {0});
  EXPECT_TRUE(is_negative_root(act(w, d.simple_root(0))));
  EXPECT_EQ(length_and_descents(d, {0}).descents, GeneratorSet::single(0));
  EXPECT_EQ(length_and_descents(d, {0, 0}).length, 0);
}

TEST(Length, LeftAndRightDescentsDiffer) {
  const auto d = load("universal3");
  const auto info = length_and_descents(d, {0, 1});
  EXPECT_EQ(info.descents, GeneratorSet::single(1));
  EXPECT_EQ(info.left_descents, GeneratorSet::single(0));
}

TEST(Ball, Sizes) {
  EXPECT_EQ(enumerate_ball(dihedral(3), 0).size(), 1u);
  EXPECT_EQ(enumerate_ball(dihedral(3), 3).size(), 6u);
  EXPECT_TRUE(generate_ball(dihedral(3), 3).closed);
  EXPECT_FALSE(generate_ball(dihedral(3), 2).closed);
  EXPECT_EQ(enumerate_ball(dihedral(0), 4).size(), 9u);
  // 1 + 3 + 6 + 12 + 24 in the free product of three Z/2.
  EXPECT_EQ(enumerate_ball(load("universal3"), 4).size(), 46u);
}

TEST(Ball, WordsAreReducedAndLexLeast) {
  for (const auto& name : testsupport::all_fixtures()) {
    const auto d = load(name);
    for (const auto& w : enumerate_ball(d, 4)) {
      const auto info = length_and_descents(d, w.word);
      EXPECT_EQ(info.length, w.length()) << name;
      EXPECT_EQ(info.reduced_word, w.word) << name;
    }
  }
}

TEST(Ball, OverflowCountsAsBudget) {
  const auto d = load("hyperbolic_dihedral");
  try {
    generate_ball(d, 1 << 20, {d.all(), 100'000});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
}

// Every image rho_s(r) of a generated root is entirely positive or entirely negative.
TEST(SignDichotomy, Depth10) {
  for (const auto& name : testsupport::all_fixtures()) {
    const auto d = load(name);
    for (const auto& r : generate_roots(d, 10).roots)
      for (int s = 0; s < d.rank(); ++s) {
        const Vector image = reflect(d, d.simple_root(s), r.coords);
        const double eps = 1e-9 * std::max(1.0, image.cwiseAbs().maxCoeff());
        const bool positive = image.minCoeff() >= -eps;
        const bool negative = image.maxCoeff() <= eps;
        EXPECT_TRUE(positive != negative) << name;
      }
  }
}
