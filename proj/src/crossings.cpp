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

#include "fourier_knots/crossings.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fourier_knots/errors.hpp"

namespace fknot {

std::string CrossingIndices::key() const {
  return std::string(kind == CrossingKind::TypeI ? "I" : "II") + ":" +
         std::to_string(k) + ":" + std::to_string(j);
}

std::pair<int, int> Type1JRange(const TorusParams& params, int k) {
  const int p = params.p();
  const int q = params.q();
  // Numerators are positive for 0 < k < p, so integer division is floor.
  const int lo = 1 + (2 * k * q + 1) / (2 * p);
  const int hi = (4 * p * q - 2 * k * q + 1) / (2 * p);
  return {lo, hi};
}

std::pair<int, int> Type2JRange(const TorusParams& params, int k) {
  const int p = params.p();
  const int q = params.q();
  const int lo = 1 + (p * k) / q;
  const int hi = (2 * p * q - p * k) / q;
  return {lo, hi};
}

std::pair<double, double> AnalyticTimes(const TorusParams& params,
                                        const CrossingIndices& indices) {
  const double p = params.p();
  const double q = params.q();
  double mid = 0.0;
  double half = 0.0;
  if (indices.kind == CrossingKind::TypeI) {
    mid = indices.j * kPi / q - kPi / (2.0 * p * q);
    half = indices.k * kPi / p;
  } else {
    mid = indices.j * kPi / p;
    half = indices.k * kPi / q;
  }
  return {mid - half, mid + half};
}

namespace {

std::vector<AnalyticPair> Enumerate(const TorusParams& params,
                                    CrossingKind kind) {
  const bool first = kind == CrossingKind::TypeI;
  const int k_end = first ? params.p() : params.q();
  std::vector<AnalyticPair> out;
  out.reserve(first ? params.type1_count() : params.type2_count());
  for (int k = 1; k < k_end; ++k) {
    const auto [lo, hi] =
        first ? Type1JRange(params, k) : Type2JRange(params, k);
    for (int j = lo; j <= hi; ++j) {
      const CrossingIndices indices{kind, k, j};
      const auto [t1, t2] = AnalyticTimes(params, indices);
      out.push_back({indices, ReduceAngle(t1), ReduceAngle(t2)});
    }
  }
  return out;
}

}  // namespace

std::vector<AnalyticPair> EnumerateType1(const TorusParams& params) {
  return Enumerate(params, CrossingKind::TypeI);
}

std::vector<AnalyticPair> EnumerateType2(const TorusParams& params) {
  return Enumerate(params, CrossingKind::TypeII);
}

std::vector<CrossingIndices> AllIndices(const TorusParams& params) {
  std::vector<CrossingIndices> out;
  for (const auto& pair : EnumerateAll(params)) out.push_back(pair.indices);
  return out;
}

std::vector<AnalyticPair> EnumerateAll(const TorusParams& params) {
  auto out = EnumerateType1(params);
  auto second = EnumerateType2(params);
  out.insert(out.end(), second.begin(), second.end());
  return out;
}

double DirectionProduct(const FourierKnot& knot, double t1, double t2) {
  return knot.x().eval_derivative(t1) * knot.x().eval_derivative(t2);
}

double PlanarCross(const FourierKnot& knot, double t1, double t2) {
  return knot.x().eval_derivative(t1) * knot.y().eval_derivative(t2) -
         knot.x().eval_derivative(t2) * knot.y().eval_derivative(t1);
}

double ZDiff(const FourierKnot& knot, double t1, double t2) {
  const auto& terms = knot.z().terms();
  if (terms.size() != 2) {
    throw KnotError(ErrorCode::WrongKnotShape,
                    "z must have exactly two terms, has " +
                        std::to_string(terms.size()));
  }
  const double sum = (t1 + t2) / 2.0;
  const double diff = (t1 - t2) / 2.0;
  double out = 0.0;
  for (const auto& term : terms) {
    const double n = term.frequency();
    out -= 2.0 * term.amplitude() * std::sin(n * sum + term.phase()) *
           std::sin(n * diff);
  }
  return out;
}

Crossing Classify(const FourierKnot& knot, double t1, double t2,
                  std::optional<CrossingIndices> indices) {
  t1 = ReduceAngle(t1);
  t2 = ReduceAngle(t2);
  if (t2 < t1) std::swap(t1, t2);

  const Point3 a = knot.at(t1);
  const Point3 b = knot.at(t2);
  if (std::abs(a.x - b.x) >= kResidualTol ||
      std::abs(a.y - b.y) >= kResidualTol) {
    throw KnotError(ErrorCode::NotADoublePoint,
                    "projection residual too large at (" + std::to_string(t1) +
                        ", " + std::to_string(t2) + ")");
  }
  const double dz = a.z - b.z;
  const double cross = PlanarCross(knot, t1, t2);
  if (std::abs(dz) <= kSingularTol || std::abs(cross) <= kSingularTol) {
    throw KnotError(ErrorCode::SingularCrossing,
                    "degenerate crossing at (" + std::to_string(t1) + ", " +
                        std::to_string(t2) + "): dz = " + std::to_string(dz) +
                        ", cross = " + std::to_string(cross));
  }

  Crossing c;
  c.indices = indices;
  c.t1 = t1;
  c.t2 = t2;
  c.sign = cross * dz > 0.0 ? Handedness::RightHanded : Handedness::LeftHanded;
  c.over = dz > 0.0 ? OverStrand::AtT1 : OverStrand::AtT2;
  c.position = {(a.x + b.x) / 2.0, (a.y + b.y) / 2.0};
  return c;
}

namespace {

void SortCrossings(std::vector<Crossing>& crossings) {
  std::sort(crossings.begin(), crossings.end(),
            [](const Crossing& a, const Crossing& b) {
              return a.t1 != b.t1 ? a.t1 < b.t1 : a.t2 < b.t2;
            });
}

}  // namespace

CrossingSet FindCrossingsAnalytic(const FourierKnot& knot,
                                  const TorusParams& params) {
  if (knot.x().size() != 1 || knot.y().size() != 1 ||
      knot.x().terms()[0].frequency() != params.p() ||
      knot.y().terms()[0].frequency() != params.q()) {
    throw KnotError(ErrorCode::WrongKnotShape,
                    "analytic crossings need x = cos(pt), y = cos(qt + ...)");
  }
  CrossingSet set{knot, {}, CrossingMethod::Analytic, {}};
  for (const auto& pair : EnumerateAll(params)) {
    set.crossings.push_back(Classify(knot, pair.t1, pair.t2, pair.indices));
  }
  SortCrossings(set.crossings);
  return set;
}

int MinimumGrid(const FourierKnot& knot) {
  return 4 * knot.max_frequency() * static_cast<int>(knot.term_count());
}

bool SameTimePair(double a1, double a2, double b1, double b2, double tol) {
  const bool direct =
      CircularDistance(a1, b1) < tol && CircularDistance(a2, b2) < tol;
  const bool swapped =
      CircularDistance(a1, b2) < tol && CircularDistance(a2, b1) < tol;
  return direct || swapped;
}

int LabelFromAnalytic(CrossingSet& set, const TorusParams& params) {
  const auto pairs = EnumerateAll(params);
  int unmatched = 0;
  for (auto& c : set.crossings) {
    auto it = std::find_if(pairs.begin(), pairs.end(), [&](const auto& pair) {
      return SameTimePair(c.t1, c.t2, pair.t1, pair.t2, kDedupeTol);
    });
    if (it == pairs.end()) {
      c.indices.reset();
      ++unmatched;
    } else {
      c.indices = it->indices;
    }
  }
  return unmatched;
}

}  // namespace fknot
