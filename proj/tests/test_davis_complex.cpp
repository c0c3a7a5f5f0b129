#include "support.hpp"

#include "coxdavis/davis_complex.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace coxdavis;
using testsupport::dihedral;
using testsupport::load;

namespace {

const GeneratorSet kS = GeneratorSet::single(0);
const GeneratorSet kT = GeneratorSet::single(1);
const GeneratorSet kST = GeneratorSet(3);
const GeneratorSet kEmpty{};

FundamentalChamber chamber_of(const CoxeterDatum& d) { return build_fundamental_chamber(enumerate_spherical_poset(d)); }

}  // namespace

TEST(Chamber, FiniteDihedral) {
  const auto k = chamber_of(dihedral(3));
  EXPECT_EQ(k.poset.elements.size(), 4u);
  const auto maximal = k.maximal_simplices();
  ASSERT_EQ(maximal.size(), 2u);
  EXPECT_EQ(maximal[0], (Chain{kEmpty, kS, kST}));
  EXPECT_EQ(maximal[1], (Chain{kEmpty, kT, kST}));
}

TEST(Chamber, InfiniteDihedral) {
  const auto k = chamber_of(dihedral(0));
  EXPECT_EQ(k.poset.elements.size(), 3u);
  const auto maximal = k.maximal_simplices();
  ASSERT_EQ(maximal.size(), 2u);
  EXPECT_EQ(maximal[0], (Chain{kEmpty, kS}));
  EXPECT_EQ(maximal[1], (Chain{kEmpty, kT}));
}

TEST(Chamber, RankOne) {
  const auto d = parse_datum(std::string(R"({"generators":["s"]})"));
  const auto k = chamber_of(d);
  EXPECT_EQ(k.poset.elements.size(), 2u);
  EXPECT_EQ(k.maximal_simplices().size(), 1u);
  const auto m = mirror(k, 0);
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0], (Chain{kS}));
}

TEST(Mirror, FiniteDihedral) {
  const auto m = mirror(chamber_of(dihedral(3)), 0);
  EXPECT_EQ(m, (std::vector<Chain>{{kS}, {kST}, {kS, kST}}));
}

TEST(Mirror, InfiniteDihedral) {
  EXPECT_EQ(mirror(chamber_of(dihedral(0)), 0), (std::vector<Chain>{{kS}}));
}

TEST(PointStabilizer, Examples) {
  EXPECT_EQ(point_stabilizer(ChamberPoint::barycenter({kEmpty, kS})), kEmpty);
  EXPECT_EQ(point_stabilizer(ChamberPoint::vertex(kST)), kST);
  EXPECT_EQ(point_stabilizer(ChamberPoint::barycenter({kS, kST})), kS);
}

TEST(ChamberPoint, Validation) {
  EXPECT_THROW(validate({{kS, kEmpty}, {0.5, 0.5}}), Error);
  EXPECT_THROW(validate({{kEmpty, kS}, {0.7, 0.7}}), Error);
  EXPECT_THROW(validate({{kEmpty, kS}, {1.0, 0.0}}), Error);
  EXPECT_NO_THROW(validate({{kEmpty, kS}, {0.25, 0.75}}));
}

TEST(Ball, Hexagon) {
  const auto d = dihedral(3);
  const auto ball = build_davis_ball(d, 3);
  ASSERT_EQ(ball.chambers.size(), 6u);
  EXPECT_TRUE(ball.closed());
  EXPECT_EQ(ball.adjacency.size(), 6u);
  std::map<int, int> degree;
  for (const auto& a : ball.adjacency) {
    ++degree[a.from];
    ++degree[a.to];
  }
  for (const auto& [c, deg] : degree) EXPECT_EQ(deg, 2);
  std::vector<std::vector<int>> words;
  for (const auto& w : ball.chambers) words.push_back(w.word);
  EXPECT_EQ(words, (std::vector<std::vector<int>>{{}, {0}, {1}, {0, 1}, {1, 0}, {0, 1, 0}}));
}

TEST(Ball, RadiusZero) {
  const auto ball = build_davis_ball(load("universal3"), 0);
  EXPECT_EQ(ball.chambers.size(), 1u);
  EXPECT_TRUE(ball.adjacency.empty());
  EXPECT_EQ(ball.frontier.size(), 3u);
}

TEST(Ball, InfiniteDihedralPath) {
  const auto ball = build_davis_ball(dihedral(0), 4);
  EXPECT_EQ(ball.chambers.size(), 9u);
  EXPECT_EQ(ball.adjacency.size(), 8u);
  EXPECT_EQ(ball.frontier.size(), 2u);
}

TEST(Canonical, Examples) {
  const auto d = dihedral(3);
  const auto a = canonicalize_cell(d, {element_from_word(d, {0}), ChamberPoint::vertex(kS)});
  EXPECT_TRUE(a.element.word.empty());
  const auto interior = ChamberPoint::barycenter({kEmpty, kS, kST});
  const auto b = canonicalize_cell(d, {element_from_word(d, {0, 1}), interior});
  EXPECT_EQ(b.element.word, (std::vector<int>{0, 1}));
  const auto c = canonicalize_cell(d, {element_from_word(d, {0, 1}), ChamberPoint::vertex(kT)});
  EXPECT_EQ(c.element.word, (std::vector<int>{0}));
}

TEST(Canonical, IdempotentAndClassInvariant) {
  for (const char* name : {"a2", "a3", "universal3", "triangle334", "mixed3"}) {
    const auto d = load(name);
    const auto ball = build_davis_ball(d, 3);
    for (const auto& w : ball.chambers)
      for (const auto& c : ball.chamber.simplices) {
        const DavisCell cell{w, ChamberPoint::barycenter(c)};
        const auto canon = canonicalize_cell(d, cell);
        EXPECT_EQ(cell_key(canonicalize_cell(d, canon)), cell_key(canon));
        for (const auto& u : enumerate_finite_parabolic_elements(d, c.front())) {
          const auto other = canonicalize_cell(d, {compose(w, u), cell.point});
          EXPECT_EQ(cell_key(other), cell_key(canon)) << name;
        }
      }
  }
}

TEST(Ball, FiniteGroupCloses) {
  const auto a3 = build_davis_ball(load("a3"), 6);
  EXPECT_EQ(a3.chambers.size(), 24u);
  EXPECT_TRUE(a3.closed());
  EXPECT_FALSE(build_davis_ball(load("a3"), 5).closed());
}
