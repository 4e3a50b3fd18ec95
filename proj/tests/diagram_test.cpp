// Copyright 2026 The Fourier Knots Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fourier_knots/diagram.hpp"

#include <gtest/gtest.h>

#include <map>

#include "test_util.hpp"

namespace fknot {
namespace {

using LP = LaurentPolynomial;

LP Poly(std::vector<long> c) { return LP::FromCoefficients(0, c); }

CrossingSet TheoremCrossings(const TorusParams& params) {
  return FindCrossingsAnalytic(GenTheoremKnot(params), params);
}

TEST(GaussCode, TrefoilStructure) {
  const CrossingSet set = TheoremCrossings(TorusParams(2, 3));
  const GaussCode code = BuildGaussCode(set);
  ASSERT_EQ(code.entries.size(), 14u);
  EXPECT_TRUE(code.IsRealizable());
  std::map<int, int> counts;
  for (const auto& e : code.entries) counts[e.id]++;
  EXPECT_EQ(counts.size(), 7u);
  for (const auto& [id, n] : counts) EXPECT_EQ(n, 2);

  // Brute-force traversal: walking t upward meets each crossing at its
  // two times, in order.
  std::vector<std::pair<double, int>> walk;
  for (std::size_t i = 0; i < set.crossings.size(); ++i) {
    walk.emplace_back(set.crossings[i].t1, static_cast<int>(i));
    walk.emplace_back(set.crossings[i].t2, static_cast<int>(i));
  }
  std::sort(walk.begin(), walk.end());
  for (std::size_t i = 0; i < walk.size(); ++i) {
    EXPECT_EQ(code.entries[i].id, walk[i].second);
  }

  for (const auto& c : set.crossings) {
    if (c.indices->kind == CrossingKind::TypeI) {
      EXPECT_EQ(SignValue(c.sign), -1);
    }
  }
}

TEST(GaussCode, EmptyAndIncomplete) {
  const CrossingSet empty{GenTheoremKnot(TorusParams(2, 3)), {}, {}, {}};
  EXPECT_TRUE(BuildGaussCode(empty).entries.empty());
  EXPECT_TRUE(PDFromGauss(BuildGaussCode(empty)).crossings.empty());

  CrossingSet dup = TheoremCrossings(TorusParams(2, 3));
  dup.crossings.push_back(dup.crossings.front());
  ExpectKnotError([&] { BuildGaussCode(dup); }, ErrorCode::IncompleteCrossingSet);
}

TEST(GaussCode, PropertyRealizableForAllTheoremKnots) {
  for (const auto& params : CoprimePairs(2, 13)) {
    const GaussCode code = BuildGaussCode(TheoremCrossings(params));
    EXPECT_TRUE(code.IsRealizable());
    EXPECT_EQ(static_cast<int>(code.crossing_count()), params.crossing_count());
  }
}

TEST(Writhe, TypeIContributions) {
  EXPECT_EQ(Writhe(CrossingSet{GenTheoremKnot(TorusParams(2, 3)), {}, {}, {}}), 0);
  for (const auto& params : {TorusParams(2, 3), TorusParams(3, 7)}) {
    const FourierKnot knot = GenTheoremKnot(params);
    const CrossingSet set = TheoremCrossings(params);
    int type1 = 0;
    int type2 = 0;
    for (const auto& c : set.crossings) {
      (c.indices->kind == CrossingKind::TypeI ? type1 : type2) += SignValue(c.sign);
    }
    EXPECT_EQ(type1, -params.type1_count());
    // Type II signs straight from the sign expression, without Classify.
    int expected2 = 0;
    for (const auto& pair : EnumerateType2(params)) {
      const double dz = knot.z().eval(pair.t1) - knot.z().eval(pair.t2);
      expected2 += PlanarCross(knot, pair.t1, pair.t2) * dz > 0 ? 1 : -1;
    }
    EXPECT_EQ(type2, expected2);
    EXPECT_EQ(Writhe(set), type1 + type2);
  }
}

TEST(AlexanderFromDiagram, StandardTables) {
  // Trefoil and figure-eight in the usual X[...] notation.
  const PDCode trefoil{{{1, 5, 2, 4}, {3, 1, 4, 6}, {5, 3, 6, 2}}};
  EXPECT_EQ(AlexanderFromDiagram(trefoil), Poly({1, -1, 1}));
  const PDCode figure8{{{4, 2, 5, 1}, {8, 6, 1, 5}, {6, 3, 7, 4}, {2, 7, 3, 8}}};
  EXPECT_EQ(AlexanderFromDiagram(figure8), Poly({1, -3, 1}));
  EXPECT_EQ(AlexanderFromDiagram(PDCode{}), LP::Monomial(1));
}

TEST(AlexanderFromDiagram, RejectsLinksAndMalformedCodes) {
  const PDCode hopf{{{4, 1, 3, 2}, {2, 3, 1, 4}}};
  ExpectKnotError([&] { AlexanderFromDiagram(hopf); }, ErrorCode::NotAKnot);
  const PDCode bad{{{1, 2, 3, 4}, {1, 2, 3, 5}}};
  ExpectKnotError([&] { AlexanderFromDiagram(bad); }, ErrorCode::SingularDiagram);
}

TEST(TorusAlexanderOracle, SmallCases) {
  EXPECT_EQ(TorusAlexanderOracle(TorusParams(2, 3)), Poly({1, -1, 1}));
  EXPECT_EQ(TorusAlexanderOracle(TorusParams(2, 5)), Poly({1, -1, 1, -1, 1}));
  EXPECT_EQ(abs(TorusAlexanderOracle(TorusParams(2, 5)).Evaluate(-1)), 5);
  for (const auto& params : CoprimePairs(2, 13)) {
    const int p = params.p(), q = params.q();
    const LP delta = TorusAlexanderOracle(params);
    auto tm1 = [](int e) { return LP::Monomial(1, e) - LP::Monomial(1); };
    EXPECT_EQ(delta * tm1(p) * tm1(q), tm1(p * q) * tm1(1));
    EXPECT_EQ(delta.high_exponent(), (p - 1) * (q - 1));
    EXPECT_EQ(delta.Evaluate(1), 1);
  }
}

TEST(BareissDeterminant, MatchesCofactorExpansion) {
  // 3×3 with polynomial entries, checked against the Leibniz formula.
  const LP one = LP::Monomial(1), t = LP::Monomial(1, 1);
  std::vector<std::vector<LP>> m = {
      {one - t, t, LP()}, {LP(), one - t, -one}, {t, -one, one - t}};
  const LP leibniz = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                     m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                     m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  EXPECT_EQ(BareissDeterminant(m), leibniz);
  // A zero leading pivot forces a row swap.
  std::vector<std::vector<LP>> swap = {{LP(), one}, {t, one}};
  EXPECT_EQ(BareissDeterminant(swap), -t);
  EXPECT_EQ(BareissDeterminant({}), one);
}

TEST(Identify, ThreeSeven) {
  const TorusParams params(3, 7);
  const FourierKnot knot = GenTheoremKnot(params);
  const DiagramSummary s = Identify(knot, TheoremCrossings(params), params);
  EXPECT_EQ(s.type1_count, 14);
  EXPECT_EQ(s.type2_count, 18);
  EXPECT_EQ(s.crossing_count, s.type1_count + s.type2_count);
  EXPECT_EQ(s.alexander, TorusAlexanderOracle(params));
}

TEST(Identify, MirrorFailsHandedness) {
  const TorusParams params(2, 3);
  const FourierKnot mirror = GenTheoremKnot(params).mirrored();
  const CrossingSet set = FindCrossingsAnalytic(mirror, params);
  const IdentificationReport report = CheckIdentification(mirror, set, params);
  EXPECT_EQ(report.summary.type1_count, 3);
  EXPECT_EQ(report.summary.type2_count, 4);
  ASSERT_NE(report.first_failure(), nullptr);
  EXPECT_EQ(report.first_failure()->name, kHandednessCondition);
  try {
    Identify(mirror, set, params);
    ADD_FAILURE() << "mirror identified";
  } catch (const KnotError& e) {
    EXPECT_EQ(e.code(), ErrorCode::IdentificationFailure);
    EXPECT_NE(std::string(e.what()).find(kHandednessCondition), std::string::npos);
  }
  // Alexander cannot see the mirror.
  EXPECT_EQ(report.summary.alexander, Poly({1, -1, 1}));
}

TEST(Identify, StandardFormNumeric) {
  const TorusParams params(2, 3);
  const FourierKnot knot = GenStandardKnot(params);
  const CrossingSet set = FindCrossingsNumeric(knot, 2048);
  const IdentificationReport report = CheckIdentification(knot, set, params);
  EXPECT_TRUE(report.passed());
  EXPECT_FALSE(report.conditions[0].applicable);
  EXPECT_EQ(report.summary.alexander, Poly({1, -1, 1}));
  EXPECT_EQ(report.summary.crossing_count, 3);
}

TEST(Identify, NumericCrossingsGetLabelled) {
  const TorusParams params(3, 4);
  const FourierKnot knot = GenTheoremKnot(params);
  EXPECT_NO_THROW(Identify(knot, FindCrossingsNumeric(knot, 2048), params));
}

TEST(Identify, PropertyAllSmallTorusKnots) {
  for (const auto& params : CoprimePairs(2, 21)) {
    if (params.q() * (params.p() - 1) > 20) continue;
    const FourierKnot knot = GenTheoremKnot(params);
    const DiagramSummary s = Identify(knot, TheoremCrossings(params), params);
    EXPECT_TRUE(s.alexander.IsSymmetricUpToUnits());
    EXPECT_EQ(abs(s.alexander.Evaluate(1)), 1);
    EXPECT_EQ(s.type1_count, params.type1_count());
  }
}

}  // namespace
}  // namespace fknot
