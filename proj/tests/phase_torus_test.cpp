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

#include "fourier_knots/phase_torus.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "fourier_knots/diagram.hpp"
#include "test_util.hpp"

namespace fknot {
namespace {

// z(t1) − z(t2) by plain cosine evaluation at the formula times.
double DirectZDiff(const TorusParams& params, double phi1, double phi2,
                   const CrossingIndices& idx) {
  const auto [t1, t2] = AnalyticTimes(params, idx);
  const int p = params.p(), n2 = params.q() - params.p();
  auto z = [&](double t) { return std::cos(p * t + phi1) + std::cos(n2 * t + phi2); };
  return z(t1) - z(t2);
}

TEST(ZDiffAtPhases, MatchesDirectEvaluation) {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> unit(0.0, kTwoPi);
  for (const auto& params : CoprimePairs(2, 9)) {
    for (int i = 0; i < 10; ++i) {
      const PhasePoint pt(unit(rng), unit(rng));
      for (const auto& idx : AllIndices(params)) {
        EXPECT_NEAR(ZDiffAtPhases(params, pt, idx),
                    DirectZDiff(params, pt.phi1, pt.phi2, idx), 1e-12);
      }
    }
  }
}

TEST(ZDiffAtPhases, TheoremPointNonDegenerate) {
  const TorusParams params(3, 7);
  for (const auto& idx : AllIndices(params)) {
    EXPECT_GE(std::abs(ZDiffAtPhases(params, TheoremPhases(params), idx)),
              kSingularTol);
  }
  // Swapping the strands negates the difference.
  const auto [t1, t2] = AnalyticTimes(params, {CrossingKind::TypeII, 2, 1});
  const FourierKnot knot = GenTheoremKnot(params);
  EXPECT_NEAR(ZDiff(knot, t1, t2), -ZDiff(knot, t2, t1), 1e-15);
}

TEST(ZDiffAtPhases, OddSimplifiedPointDegenerates) {
  const TorusParams params(3, 5);
  int degenerate = 0;
  for (const auto& idx : AllIndices(params)) {
    if (idx.kind == CrossingKind::TypeII &&
        std::abs(DirectZDiff(params, kPi / 2, kPi / 6, idx)) < 1e-9) {
      ++degenerate;
      EXPECT_LT(std::abs(ZDiffAtPhases(params, PhasePoint(kPi / 2, kPi / 6), idx)),
                1e-9);
    }
  }
  EXPECT_GE(degenerate, 1);
}

// Roots of φ2 ↦ zdiff for fixed φ1 by sign-change bracketing and bisection.
std::vector<double> Phi2Roots(const TorusParams& params, double phi1,
                              const CrossingIndices& idx) {
  std::vector<double> roots;
  const int n = 720;
  auto f = [&](double phi2) { return DirectZDiff(params, phi1, phi2, idx); };
  for (int i = 0; i < n; ++i) {
    double a = kTwoPi * i / n, b = kTwoPi * (i + 1) / n;
    double fa = f(a), fb = f(b);
    if (fa == 0.0) {
      roots.push_back(a);
      continue;
    }
    if ((fa < 0) == (fb < 0)) continue;
    for (int it = 0; it < 200 && b - a > 1e-15; ++it) {
      const double m = 0.5 * (a + b);
      if ((f(m) < 0) == (fa < 0)) {
        a = m;
        fa = f(m);
      } else {
        b = m;
      }
    }
    roots.push_back(0.5 * (a + b));
  }
  std::vector<double> unique;
  for (double r : roots) {
    const bool dup = std::any_of(unique.begin(), unique.end(), [&](double u) {
      return CircularDistance(r, u) < 1e-8;
    });
    if (!dup) unique.push_back(r);
  }
  return unique;
}

TEST(SingularLines, TypeILineMatchesRootOracle) {
  const TorusParams params(2, 3);
  const CrossingIndices idx{CrossingKind::TypeI, 1, 2};
  std::vector<SingularLine> mine;
  for (const auto& line : SingularLines(params)) {
    if (line.indices == idx) mine.push_back(line);
  }
  ASSERT_EQ(mine.size(), 2u);
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> unit(0.0, kTwoPi);
  for (int i = 0; i < 10; ++i) {
    const double phi1 = unit(rng);
    const auto roots = Phi2Roots(params, phi1, idx);
    ASSERT_EQ(roots.size(), 2u);
    for (const auto& line : mine) {
      EXPECT_EQ(line.slope, 0);
      EXPECT_LT(std::abs(ZDiffAtPhases(params, PhasePoint(phi1, line.intercept), idx)),
                1e-9);
      const bool hit = std::any_of(roots.begin(), roots.end(), [&](double r) {
        return CircularDistance(r, line.phi2_at(phi1)) < 1e-9;
      });
      EXPECT_TRUE(hit) << "intercept " << line.intercept;
    }
  }
}

TEST(SingularLines, SlopesAndCounts) {
  for (const auto& params : CoprimePairs(2, 11)) {
    const auto lines = SingularLines(params);
    EXPECT_EQ(static_cast<int>(lines.size()), 2 * params.crossing_count());
    std::map<CrossingIndices, int> per_crossing;
    for (const auto& line : lines) {
      per_crossing[line.indices]++;
      EXPECT_GE(line.intercept, 0.0);
      EXPECT_LT(line.intercept, kTwoPi);
      if (line.indices.kind == CrossingKind::TypeI) {
        EXPECT_EQ(line.kind, LineKind::Horizontal);
        EXPECT_EQ(line.slope, 0);
      } else {
        EXPECT_EQ(line.kind, LineKind::Diagonal);
        const int parity = (line.indices.k + line.m) % 2 == 0 ? 1 : -1;
        EXPECT_EQ(line.slope, parity);
      }
    }
    EXPECT_EQ(static_cast<int>(per_crossing.size()), params.crossing_count());
  }
}

TEST(SingularLines, CertificationPicksHalfPiReading) {
  for (const auto& params : CoprimePairs(2, 11)) {
    EXPECT_TRUE(CertifyLines(params).rejected.empty());
    const LineCertification alt = CertifyLines(params, Type1Reading::OverTwoPi);
    EXPECT_EQ(static_cast<int>(alt.rejected.size()), 2 * params.type1_count());
    for (const auto& line : alt.rejected) EXPECT_EQ(line.kind, LineKind::Horizontal);
    EXPECT_EQ(CertifiedType1Reading(params), Type1Reading::HalfPi);
  }
}

TEST(SignVector, TheoremPointTwoThree) {
  const TorusParams params(2, 3);
  const SignVector signs = SignVectorAt(params, TheoremPhases(params));
  EXPECT_EQ(signs.size(), 7u);
  const FourierKnot knot = GenTheoremKnot(params);
  for (const auto& [idx, s] : signs) {
    EXPECT_NE(s, 0);
    if (idx.kind != CrossingKind::TypeI) continue;
    const auto [t1, t2] = AnalyticTimes(params, idx);
    // Left-handed: the z-sign is opposite the planar cross-product sign.
    EXPECT_EQ(s * (PlanarCross(knot, t1, t2) > 0 ? 1 : -1), -1);
  }
  const auto keyed = KeyedSigns(signs);
  EXPECT_TRUE(keyed.count("I:1:2"));
  EXPECT_TRUE(keyed.count("II:2:2"));
}

TEST(SignVector, OddSimplifiedPointIsSingular) {
  const TorusParams params(3, 5);
  try {
    SignVectorAt(params, SimplifiedPhases(params));
    ADD_FAILURE() << "expected SingularPoint";
  } catch (const SingularPointError& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularPoint);
    int type2 = 0;
    for (const auto& idx : e.degenerate()) type2 += idx.kind == CrossingKind::TypeII;
    EXPECT_GE(type2, 2);
  }
  ExpectKnotError([&] { SameKnotByPhases(params, TheoremPhases(params),
                                         SimplifiedPhases(params)); },
                  ErrorCode::SingularPoint);
}

TEST(SignVector, PropertyPerturbationStability) {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> unit(0.0, kTwoPi);
  std::uniform_real_distribution<double> dir(-1.0, 1.0);
  for (const auto& params : CoprimePairs(2, 7)) {
    int tested = 0;
    while (tested < 20) {
      const PhasePoint pt(unit(rng), unit(rng));
      const double margin = MinAbsZDiff(params, pt);
      if (margin <= kSingularTol) continue;
      const SignVector base = SignVectorAt(params, pt);
      const double radius = margin / (2.0 * kZDiffLipschitz);
      for (int i = 0; i < 10; ++i) {
        double dx = dir(rng), dy = dir(rng);
        const double len = std::max(std::hypot(dx, dy), 1e-12);
        dx *= radius / len;
        dy *= radius / len;
        EXPECT_EQ(SignVectorAt(params, PhasePoint(pt.phi1 + dx, pt.phi2 + dy)), base);
      }
      if (margin > 1e-2) {
        EXPECT_EQ(SignVectorAt(params, PhasePoint(pt.phi1 + 1e-4, pt.phi2 - 1e-4)),
                  base);
      }
      ++tested;
    }
  }
}

TEST(SignVector, PropertyEqualVectorsGiveEqualGaussCodes) {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> unit(0.0, kTwoPi);
  for (const auto& params : CoprimePairs(2, 7)) {
    std::map<SignVector, GaussCode> seen;
    int tested = 0;
    while (tested < 20) {
      const PhasePoint pt(unit(rng), unit(rng));
      const double margin = MinAbsZDiff(params, pt);
      if (margin <= 1e-6) continue;
      ++tested;
      // A nearby point inside the stability ball shares the sign vector.
      const double step = margin / (4.0 * kZDiffLipschitz);
      for (const PhasePoint& q : {pt, PhasePoint(pt.phi1 + step, pt.phi2 - step)}) {
        const FourierKnot knot = GenPhaseKnot(params, q);
        const GaussCode code = BuildGaussCode(FindCrossingsAnalytic(knot, params));
        const auto [it, fresh] = seen.emplace(SignVectorAt(params, q), code);
        if (!fresh) EXPECT_EQ(it->second, code);
      }
    }
  }
}

TEST(SameKnotByPhases, EvenPSimplification) {
  const TorusParams params(2, 3);
  EXPECT_TRUE(SameKnotByPhases(params, PhasePoint(kPi / 2, kPi / 4 - kPi / 12),
                               PhasePoint(kPi / 2, kPi / 4)));
  EXPECT_TRUE(SameKnotByPhases(params, TheoremPhases(params), TheoremPhases(params)));
  for (const auto& params_even : CoprimePairs(2, 11)) {
    if (params_even.p() % 2 != 0) continue;
    EXPECT_TRUE(SameKnotByPhases(params_even, TheoremPhases(params_even),
                                 SimplifiedPhases(params_even)));
    const FourierKnot simple = GenTheoremKnot(params_even, true);
    EXPECT_NO_THROW(
        Identify(simple, FindCrossingsAnalytic(simple, params_even), params_even));
  }
}

TEST(PhaseMap, GridFloorAndPoints) {
  ExpectKnotError([] { RenderPhaseMap(TorusParams(2, 3), 63); }, ErrorCode::InvalidGrid);
  const PhaseMap even = RenderPhaseMap(TorusParams(2, 3), 256);
  EXPECT_GE(even.theorem_class, 0);
  EXPECT_EQ(even.theorem_class, even.simplified_class);
  EXPECT_FALSE(even.simplified_on_line);
  const PhaseMap odd = RenderPhaseMap(TorusParams(3, 5), 256);
  EXPECT_TRUE(odd.simplified_on_line);
  EXPECT_EQ(odd.simplified_class, -1);
}

TEST(PhaseMap, ParallelMatchesSerial) {
  for (const auto& params : {TorusParams(2, 5), TorusParams(3, 4)}) {
    const PhaseMap a = RenderPhaseMap(params, 96);
    const PhaseMap b = RenderPhaseMapSerial(params, 96);
    EXPECT_EQ(a.classes, b.classes);
    EXPECT_EQ(a.class_count, b.class_count);
    EXPECT_EQ(a.theorem_class, b.theorem_class);
  }
}

}  // namespace
}  // namespace fknot
