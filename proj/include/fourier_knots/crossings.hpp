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

#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fourier_knots/fourier.hpp"

namespace fknot {

/// |x(t1) − x(t2)| and |y(t1) − y(t2)| bound for a projection double point.
inline constexpr double kResidualTol = 1e-9;
/// Below this, z-separation or the planar cross product counts as degenerate.
inline constexpr double kSingularTol = 1e-9;
/// Time pairs closer than this (radians, per coordinate) are the same crossing.
inline constexpr double kDedupeTol = 1e-6;

enum class CrossingKind { TypeI, TypeII };

struct CrossingIndices {
  CrossingKind kind = CrossingKind::TypeI;
  int k = 0;
  int j = 0;

  /// "I:k:j" or "II:k:j".
  std::string key() const;

  friend auto operator<=>(const CrossingIndices&,
                          const CrossingIndices&) = default;
};

/// A time pair from the closed-form families, in formula order: t1 carries
/// the −k term. Both times are reduced to [0, 2π) but not swapped.
struct AnalyticPair {
  CrossingIndices indices;
  double t1 = 0.0;
  double t2 = 0.0;
};

/// Inclusive j-range for Type I index k, computed with integer floors:
/// 1 + ⌊(2kq + 1) / 2p⌋ ≤ j ≤ ⌊(4pq − 2kq + 1) / 2p⌋.
std::pair<int, int> Type1JRange(const TorusParams& params, int k);
/// 1 + ⌊pk / q⌋ ≤ j ≤ ⌊(2pq − pk) / q⌋.
std::pair<int, int> Type2JRange(const TorusParams& params, int k);

/// (−kπ/p + jπ/q − π/(2pq), kπ/p + jπ/q − π/(2pq)) for 0 < k < p.
std::vector<AnalyticPair> EnumerateType1(const TorusParams& params);
/// (−kπ/q + jπ/p, kπ/q + jπ/p) for 0 < k < q.
std::vector<AnalyticPair> EnumerateType2(const TorusParams& params);
/// Unreduced formula times (t1, t2) for one index triple.
std::pair<double, double> AnalyticTimes(const TorusParams& params,
                                        const CrossingIndices& indices);
/// Every valid index triple, Type I first, in enumeration order.
std::vector<CrossingIndices> AllIndices(const TorusParams& params);

/// Type I followed by Type II.
std::vector<AnalyticPair> EnumerateAll(const TorusParams& params);

enum class Handedness { RightHanded = 1, LeftHanded = -1 };
enum class OverStrand { AtT1, AtT2 };

inline int SignValue(Handedness h) { return static_cast<int>(h); }

/// A resolved double point of the xy-projection, with 0 ≤ t1 < t2 < 2π.
struct Crossing {
  std::optional<CrossingIndices> indices;
  double t1 = 0.0;
  double t2 = 0.0;
  Handedness sign = Handedness::RightHanded;
  OverStrand over = OverStrand::AtT1;
  Point2 position;

  double over_time() const { return over == OverStrand::AtT1 ? t1 : t2; }
  double under_time() const { return over == OverStrand::AtT1 ? t2 : t1; }
};

enum class CrossingMethod { Analytic, Numeric };

enum class DiagnosticKind { NewtonDivergence, TangentialIntersection };

/// A numeric seed that did not refine to a crossing.
struct Diagnostic {
  DiagnosticKind kind;
  double seed_t1 = 0.0;
  double seed_t2 = 0.0;
  double residual = 0.0;
};

struct CrossingSet {
  FourierKnot knot;
  std::vector<Crossing> crossings;  // sorted by (t1, t2)
  CrossingMethod method = CrossingMethod::Analytic;
  std::vector<Diagnostic> diagnostics;
};

/// x'(t1)·x'(t2); positive iff both strands move the same left-right way.
double DirectionProduct(const FourierKnot& knot, double t1, double t2);

/// x'(t1)·y'(t2) − x'(t2)·y'(t1): the z-component of the planar velocity
/// cross product.
double PlanarCross(const FourierKnot& knot, double t1, double t2);

/// z(t1) − z(t2) through the product-of-sines expansion
///   Σ −2A sin(n(t1+t2)/2 + φ) sin(n(t1−t2)/2)
/// over the two z-terms. Throws WrongKnotShape unless z has two terms.
double ZDiff(const FourierKnot& knot, double t1, double t2);

/// Resolves over/under and handedness at a projection double point.
/// The sign is that of PlanarCross · (z(t1) − z(t2)); the returned times
/// are canonicalized to t1 < t2 (the product is symmetric under the swap).
Crossing Classify(const FourierKnot& knot, double t1, double t2,
                  std::optional<CrossingIndices> indices = std::nullopt);

/// All 2pq − p − q crossings of a knot whose x and y are cos(pt) and
/// cos(qt + π/(2p)); z may be anything non-degenerate.
CrossingSet FindCrossingsAnalytic(const FourierKnot& knot,
                                  const TorusParams& params);

/// Minimum admissible grid for FindCrossingsNumeric: 4 · max frequency ·
/// term count.
int MinimumGrid(const FourierKnot& knot);

/// Generic double-point search: segment intersection on a uniform t-grid,
/// damped Newton polish on (x(t1) − x(t2), y(t1) − y(t2)), deduplication,
/// classification. Parallel over the grid with OpenMP.
CrossingSet FindCrossingsNumeric(const FourierKnot& knot, int grid);

/// Single-threaded reference for FindCrossingsNumeric; same output.
CrossingSet FindCrossingsNumericSerial(const FourierKnot& knot, int grid);

/// Attaches analytic indices to numeric crossings by matching unordered time
/// pairs within kDedupeTol. Returns the number of crossings left unmatched.
int LabelFromAnalytic(CrossingSet& set, const TorusParams& params);

/// True when two time pairs coincide as unordered pairs, mod 2π.
bool SameTimePair(double a1, double a2, double b1, double b2, double tol);

}  // namespace fknot
