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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fourier_knots/crossings.hpp"
#include "fourier_knots/errors.hpp"
#include "fourier_knots/fourier.hpp"

namespace fknot {

/// z(t1) − z(t2) at the analytic times of one crossing, for the knot with
/// z(t) = cos(pt + φ1) + cos((q − p)t + φ2).
double ZDiffAtPhases(const TorusParams& params, const PhasePoint& point,
                     const CrossingIndices& indices);

enum class LineKind { Horizontal, Diagonal };

/// φ2 = slope · φ1 + intercept on the phase torus, where the owning
/// crossing's z-difference vanishes.
struct SingularLine {
  LineKind kind = LineKind::Horizontal;
  CrossingIndices indices;
  int m = 0;
  int slope = 0;  // 0 for Type I, ±1 for Type II
  double intercept = 0.0;  // in [0, 2π)

  double phi2_at(double phi1) const {
    return ReduceAngle(slope * phi1 + intercept);
  }
};

/// Readings of the constant in the Type I intercept jpπ/q + c + mπ.
enum class Type1Reading {
  HalfPi,     // c = (1/p − 1/q) · π/2
  OverTwoPi,  // c = (1/p − 1/q) / (2π)
};

std::string_view ToString(Type1Reading reading);

/// Number of points per line used for certification.
inline constexpr int kCertificationSamples = 10;

struct LineCertification {
  std::vector<SingularLine> certified;
  std::vector<SingularLine> rejected;
  double worst_residual = 0.0;  // max |zdiff| over certified samples
};

/// Every line from the closed-form families with m placing the intercept in
/// [0, 2π), split by whether the owning crossing's z-difference vanishes
/// (< kSingularTol) at kCertificationSamples points along it.
LineCertification CertifyLines(const TorusParams& params,
                               Type1Reading reading = Type1Reading::HalfPi);

/// Certified lines; throws CertificationFailure if any line is rejected.
std::vector<SingularLine> SingularLines(const TorusParams& params);

/// The reading under which every Type I line certifies, if exactly one does.
std::optional<Type1Reading> CertifiedType1Reading(const TorusParams& params);

/// Signs of z(t1) − z(t2) for every crossing: the over/under fingerprint of
/// a phase-torus region.
using SignVector = std::map<CrossingIndices, int>;

/// JSON-style key form: {"I:k:j": ±1, ...}.
std::map<std::string, int> KeyedSigns(const SignVector& signs);

class SingularPointError : public KnotError {
 public:
  SingularPointError(std::vector<CrossingIndices> degenerate,
                     const std::string& what)
      : KnotError(ErrorCode::SingularPoint, what),
        degenerate_(std::move(degenerate)) {}

  const std::vector<CrossingIndices>& degenerate() const { return degenerate_; }

 private:
  std::vector<CrossingIndices> degenerate_;
};

/// Crossing indices whose |zdiff| ≤ kSingularTol at this point.
std::vector<CrossingIndices> DegenerateCrossings(const TorusParams& params,
                                                 const PhasePoint& point);

/// Throws SingularPointError listing the degenerate crossings.
SignVector SignVectorAt(const TorusParams& params, const PhasePoint& point);

/// Equal sign vectors give identical over/under data, hence the same
/// diagram. Sufficient, not necessary, for the same knot type.
bool SameKnotByPhases(const TorusParams& params, const PhasePoint& a,
                      const PhasePoint& b);

/// min over crossings of |zdiff|.
double MinAbsZDiff(const TorusParams& params, const PhasePoint& point);

/// Bound on |∂zdiff/∂φ| in the Euclidean phase metric: each phase enters one
/// difference of two cosines, so each partial is at most 2.
inline constexpr double kZDiffLipschitz = 4.0;

inline constexpr int kMinPhaseGrid = 64;

/// Raster of the phase torus: pixel (row, col) samples
/// φ1 = 2π(col + ½)/grid, φ2 = 2π(row + ½)/grid.
struct PhaseMap {
  TorusParams params;
  int grid = 0;
  /// Row-major sign-vector class per pixel; ids are assigned in raster order.
  std::vector<int> classes;
  int class_count = 0;
  std::vector<SingularLine> lines;
  PhasePoint theorem_point;
  PhasePoint simplified_point;
  int theorem_class = -1;
  int simplified_class = -1;  // -1 when the simplified point is singular
  bool simplified_on_line = false;
};

/// Sign key with 0 for degenerate entries; used to compare pixels.
std::vector<std::int8_t> SignKey(const TorusParams& params,
                                 const std::vector<CrossingIndices>& indices,
                                 const PhasePoint& point);

/// Throws InvalidGrid for grid < 64. Rows are computed in parallel.
PhaseMap RenderPhaseMap(const TorusParams& params, int grid);
/// Single-threaded reference for RenderPhaseMap.
PhaseMap RenderPhaseMapSerial(const TorusParams& params, int grid);

/// Distance in φ2 (mod 2π) from the point to the line.
double DistanceToLine(const SingularLine& line, const PhasePoint& point);

}  // namespace fknot
