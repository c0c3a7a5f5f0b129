#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace coxdavis;
using testsupport::dihedral;
using testsupport::load;

namespace {

ErrorCode code_of(const std::string& text) {
  try {
    parse_datum(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for " << text;
  return ErrorCode::Parse;
}

}  // namespace

TEST(CoxeterDatum, BondThreeGivesMinusHalf) {
  const auto d = dihedral(3);
  EXPECT_NEAR(d.gram()(0, 0), 1.0, 1e-15);
  EXPECT_NEAR(d.gram()(0, 1), -0.5, 1e-15);
  EXPECT_NEAR(d.gram()(1, 0), -0.5, 1e-15);
}

TEST(CoxeterDatum, BondTwoIsOrthogonal) {
  const auto d = dihedral(2);
  EXPECT_NEAR(d.gram()(0, 1), 0.0, 1e-15);
}

TEST(CoxeterDatum, InfiniteBondDefaultsToMinusOne) {
  const auto d = parse_datum(std::string(R"({"generators":["s","t"],"bonds":[["s","t","inf"]]})"));
  EXPECT_EQ(d.gram()(0, 1), -1.0);
}

TEST(CoxeterDatum, InfiniteBondValueIsUsed) {
  EXPECT_EQ(load("hyperbolic_dihedral").gram()(0, 1), -1.5);
}

TEST(CoxeterDatum, FiniteBondsMatchCosine) {
  for (int m = 2; m <= 12; ++m) EXPECT_NEAR(dihedral(m).gram()(0, 1), -std::cos(std::numbers::pi / m), 1e-15) << m;
}

TEST(CoxeterDatum, Bilinear) {
  const auto d = dihedral(3);
  EXPECT_DOUBLE_EQ(d.bilinear(d.simple_root(0), d.simple_root(0)), 1.0);
  EXPECT_DOUBLE_EQ(d.bilinear(d.simple_root(0), d.simple_root(1)), -0.5);
  EXPECT_THROW(d.bilinear(Vector::Ones(3), Vector::Ones(2)), Error);
}

TEST(CoxeterDatum, FixturesAreSymmetricWithUnitDiagonal) {
  for (const auto& name : testsupport::all_fixtures()) {
    const auto d = load(name);
    EXPECT_LT((d.gram() - d.gram().transpose()).cwiseAbs().maxCoeff(), 1e-15) << name;
    for (int s = 0; s < d.rank(); ++s) EXPECT_EQ(d.gram()(s, s), 1.0) << name;
  }
}

TEST(CoxeterDatum, RoundTrip) {
  for (const auto& name : testsupport::all_fixtures()) {
    const auto d = load(name);
    const auto again = parse_datum(to_json(d));
    EXPECT_TRUE(d == again) << name;
    EXPECT_EQ(to_json(again).dump(), to_json(d).dump()) << name;
  }
}

TEST(CoxeterDatum, ParseErrors) {
  EXPECT_EQ(code_of("{not json"), ErrorCode::Parse);
  EXPECT_EQ(code_of(R"({"bonds":[]})"), ErrorCode::Parse);
  EXPECT_EQ(code_of(R"({"generators":["s","s"]})"), ErrorCode::DuplicateGenerator);
  EXPECT_EQ(code_of(R"({"generators":["s","t"],"bonds":[["s","x",3]]})"), ErrorCode::UnknownGenerator);
  EXPECT_EQ(code_of(R"({"generators":["s","t"],"bonds":[["s","t",3],["t","s",4]]})"), ErrorCode::AsymmetricEntry);
  EXPECT_EQ(code_of(R"({"generators":["s","t"],"bonds":[["s","t",1]]})"), ErrorCode::InvalidBond);
  EXPECT_EQ(code_of(R"({"generators":["s","t"],"bonds":[["s","s",2]]})"), ErrorCode::InvalidBond);
  EXPECT_EQ(code_of(R"({"generators":["s","t"],"bonds":[["s","t","inf"]],"infinite_bond_values":[["s","t",-0.5]]})"),
            ErrorCode::InvalidInfiniteBondValue);
  EXPECT_EQ(code_of(R"({"generators":["s","t"],"bonds":[["s","t",3]],"infinite_bond_values":[["s","t",-2]]})"),
            ErrorCode::InvalidInfiniteBondValue);
}

TEST(CoxeterDatum, SymmetricDuplicateBondIsAccepted) {
  const auto d = parse_datum(std::string(R"({"generators":["s","t"],"bonds":[["s","t",3],["t","s",3]]})"));
  EXPECT_EQ(d.matrix().entries[0][1], 3);
}

TEST(GeneratorSet, BasicOperations) {
  const GeneratorSet st = GeneratorSet::single(0).with(1);
  EXPECT_EQ(st.size(), 2);
  EXPECT_TRUE(GeneratorSet::single(1).subset_of(st));
  EXPECT_FALSE(st.subset_of(GeneratorSet::single(1)));
  EXPECT_EQ(st.without(0), GeneratorSet::single(1));
  EXPECT_EQ(st.members(), (std::vector<int>{0, 1}));
  EXPECT_EQ(GeneratorSet::full(3).bits(), 7u);
}
