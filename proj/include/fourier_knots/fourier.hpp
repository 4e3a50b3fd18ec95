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

#include <array>
#include <numbers>
#include <vector>

namespace fknot {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Reduces an angle to [0, 2π).
double ReduceAngle(double theta);

/// Shortest distance between two angles on the circle.
double CircularDistance(double a, double b);

/// One cosine term A·cos(n·t + φ). The constructor folds negative
/// frequencies through cos(−θ) = cos(θ) and reduces φ to [0, 2π).
class FourierTerm {
 public:
  FourierTerm(double amplitude, int frequency, double phase);

  double amplitude() const { return amplitude_; }
  int frequency() const { return frequency_; }
  double phase() const { return phase_; }

  friend bool operator==(const FourierTerm&, const FourierTerm&) = default;

 private:
  double amplitude_;
  int frequency_;
  double phase_;
};

class FourierSeries {
 public:
  FourierSeries() = default;
  explicit FourierSeries(std::vector<FourierTerm> terms)
      : terms_(std::move(terms)) {}

  const std::vector<FourierTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  int max_frequency() const;

  /// Σ A·cos(n·t + φ).
  double eval(double t) const;
  /// Σ −A·n·sin(n·t + φ).
  double eval_derivative(double t) const;

  FourierSeries negated() const;

  friend bool operator==(const FourierSeries&, const FourierSeries&) = default;

 private:
  std::vector<FourierTerm> terms_;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// A closed curve whose coordinates are finite cosine sums. The
/// signature (i, j, k) is always the per-axis term count; axes are never
/// reordered.
class FourierKnot {
 public:
  FourierKnot(FourierSeries x, FourierSeries y, FourierSeries z)
      : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {}

  const FourierSeries& x() const { return x_; }
  const FourierSeries& y() const { return y_; }
  const FourierSeries& z() const { return z_; }

  std::array<std::size_t, 3> signature() const {
    return {x_.size(), y_.size(), z_.size()};
  }
  int max_frequency() const;
  std::size_t term_count() const { return x_.size() + y_.size() + z_.size(); }

  Point3 at(double t) const { return {x_.eval(t), y_.eval(t), z_.eval(t)}; }
  Point3 velocity(double t) const {
    return {x_.eval_derivative(t), y_.eval_derivative(t),
            z_.eval_derivative(t)};
  }

  /// Mirror image through the xy-plane.
  FourierKnot mirrored() const { return {x_, y_, z_.negated()}; }

  friend bool operator==(const FourierKnot&, const FourierKnot&) = default;

 private:
  FourierSeries x_;
  FourierSeries y_;
  FourierSeries z_;
};

/// Torus knot type T(p, q). Requires 2 ≤ p < q and gcd(p, q) = 1; p = 1
/// (the unknot) is rejected.
class TorusParams {
 public:
  TorusParams(int p, int q);

  int p() const { return p_; }
  int q() const { return q_; }

  int type1_count() const { return p_ * q_ - q_; }
  int type2_count() const { return p_ * q_ - p_; }
  int crossing_count() const { return type1_count() + type2_count(); }

  friend bool operator==(const TorusParams&, const TorusParams&) = default;
  friend auto operator<=>(const TorusParams&, const TorusParams&) = default;

 private:
  int p_;
  int q_;
};

/// Embedded torus swept by a circle of radius r centred at (R, 0, 0).
class StandardTorusGeometry {
 public:
  StandardTorusGeometry() : StandardTorusGeometry(2.0, 1.0) {}
  StandardTorusGeometry(double major_radius, double minor_radius);

  double major_radius() const { return major_; }
  double minor_radius() const { return minor_; }

 private:
  double major_;
  double minor_;
};

/// Phases (φ_{z,1}, φ_{z,2}) of the two z-terms of a Fourier-(1,1,2)
/// torus knot. Both are reduced to [0, 2π).
struct PhasePoint {
  PhasePoint(double phi1_in, double phi2_in)
      : phi1(ReduceAngle(phi1_in)), phi2(ReduceAngle(phi2_in)) {}

  double phi1;
  double phi2;
};

/// (π/2, π/(2p) − π/(4q)).
PhasePoint TheoremPhases(const TorusParams& params);
/// (π/2, π/(2p)).
PhasePoint SimplifiedPhases(const TorusParams& params);

/// x = cos(pt), y = cos(qt + π/(2p)),
/// z = cos(pt + φ1) + cos((q − p)t + φ2).
FourierKnot GenPhaseKnot(const TorusParams& params, const PhasePoint& phases);

/// The Fourier-(1,1,2) representative of T(p, q). With `simplified` the
/// second z-phase is π/(2p), which is only allowed for even p.
FourierKnot GenTheoremKnot(const TorusParams& params, bool simplified = false);

/// The textbook torus-knot curve rewritten as cosine sums:
///   x = R cos(pt) + (r/2) cos((p+q)t) + (r/2) cos((p−q)t)
///   y = same frequencies, each phase −π/2
///   z = r cos(qt − π/2)
FourierKnot GenStandardKnot(const TorusParams& params,
                            const StandardTorusGeometry& geom = {});

/// Direct evaluation of (R + r cos qt)(cos pt, sin pt), r sin qt.
Point3 StandardTorusPoint(const TorusParams& params,
                          const StandardTorusGeometry& geom, double t);

/// True when the knot has the frequency layout of GenPhaseKnot for these
/// parameters (x: p, y: q, z: p and q − p).
bool HasTheoremShape(const FourierKnot& knot, const TorusParams& params);

}  // namespace fknot
