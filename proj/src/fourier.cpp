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

#include "fourier_knots/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "fourier_knots/errors.hpp"

namespace fknot {

std::string_view ToString(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParams:
      return "InvalidParams";
    case ErrorCode::InvalidGeometry:
      return "InvalidGeometry";
    case ErrorCode::SimplifyRequiresEvenP:
      return "SimplifyRequiresEvenP";
    case ErrorCode::SingularCrossing:
      return "SingularCrossing";
    case ErrorCode::NotADoublePoint:
      return "NotADoublePoint";
    case ErrorCode::WrongKnotShape:
      return "WrongKnotShape";
    case ErrorCode::IncompleteCrossingSet:
      return "IncompleteCrossingSet";
    case ErrorCode::NotAKnot:
      return "NotAKnot";
    case ErrorCode::SingularDiagram:
      return "SingularDiagram";
    case ErrorCode::IdentificationFailure:
      return "IdentificationFailure";
    case ErrorCode::CertificationFailure:
      return "CertificationFailure";
    case ErrorCode::SingularPoint:
      return "SingularPoint";
    case ErrorCode::InvalidGrid:
      return "InvalidGrid";
  }
  return "Unknown";
}

double ReduceAngle(double theta) {
  double r = std::fmod(theta, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // fmod of a tiny negative value can round up to exactly 2π.
  if (r >= kTwoPi) r = 0.0;
  return r;
}

double CircularDistance(double a, double b) {
  double d = ReduceAngle(a - b);
  return std::min(d, kTwoPi - d);
}

FourierTerm::FourierTerm(double amplitude, int frequency, double phase)
    : amplitude_(amplitude), frequency_(frequency), phase_(phase) {
  if (frequency_ < 0) {
    frequency_ = -frequency_;
    phase_ = -phase_;
  }
  phase_ = ReduceAngle(phase_);
}

int FourierSeries::max_frequency() const {
  int m = 0;
  for (const auto& term : terms_) m = std::max(m, term.frequency());
  return m;
}

double FourierSeries::eval(double t) const {
  double sum = 0.0;
  for (const auto& term : terms_) {
    sum += term.amplitude() * std::cos(term.frequency() * t + term.phase());
  }
  return sum;
}

double FourierSeries::eval_derivative(double t) const {
  double sum = 0.0;
  for (const auto& term : terms_) {
    sum -= term.amplitude() * term.frequency() *
           std::sin(term.frequency() * t + term.phase());
  }
  return sum;
}

FourierSeries FourierSeries::negated() const {
  std::vector<FourierTerm> out;
  out.reserve(terms_.size());
  for (const auto& term : terms_) {
    out.emplace_back(-term.amplitude(), term.frequency(), term.phase());
  }
  return FourierSeries(std::move(out));
}

int FourierKnot::max_frequency() const {
  return std::max({x_.max_frequency(), y_.max_frequency(), z_.max_frequency()});
}

TorusParams::TorusParams(int p, int q) : p_(p), q_(q) {
  if (p <= 0 || q <= 0) {
    throw KnotError(ErrorCode::InvalidParams, "p and q must be positive");
  }
  if (p >= q) {
    throw KnotError(ErrorCode::InvalidParams, "p < q required");
  }
  if (p == 1) {
    throw KnotError(ErrorCode::InvalidParams,
                    "p >= 2 required (p = 1 gives the unknot)");
  }
  if (std::gcd(p, q) != 1) {
    throw KnotError(ErrorCode::InvalidParams,
                    "gcd(p, q) = 1 required, got gcd(" + std::to_string(p) +
                        ", " + std::to_string(q) +
                        ") = " + std::to_string(std::gcd(p, q)));
  }
}

StandardTorusGeometry::StandardTorusGeometry(double major_radius,
                                             double minor_radius)
    : major_(major_radius), minor_(minor_radius) {
  if (!(minor_radius > 0.0) || !(minor_radius < major_radius)) {
    throw KnotError(ErrorCode::InvalidGeometry, "0 < r < R required");
  }
}

PhasePoint TheoremPhases(const TorusParams& params) {
  return {kPi / 2.0, kPi / (2.0 * params.p()) - kPi / (4.0 * params.q())};
}

PhasePoint SimplifiedPhases(const TorusParams& params) {
  return {kPi / 2.0, kPi / (2.0 * params.p())};
}

FourierKnot GenPhaseKnot(const TorusParams& params, const PhasePoint& phases) {
  const int p = params.p();
  const int q = params.q();
  FourierSeries x({FourierTerm(1.0, p, 0.0)});
  FourierSeries y({FourierTerm(1.0, q, kPi / (2.0 * p))});
  FourierSeries z({FourierTerm(1.0, p, phases.phi1),
                   FourierTerm(1.0, q - p, phases.phi2)});
  return {std::move(x), std::move(y), std::move(z)};
}

FourierKnot GenTheoremKnot(const TorusParams& params, bool simplified) {
  if (!simplified) return GenPhaseKnot(params, TheoremPhases(params));
  if (params.p() % 2 != 0) {
    throw KnotError(ErrorCode::SimplifyRequiresEvenP,
                    "the pi/(2p) phase is only valid for even p, got p = " +
                        std::to_string(params.p()));
  }
  return GenPhaseKnot(params, SimplifiedPhases(params));
}

FourierKnot GenStandardKnot(const TorusParams& params,
                            const StandardTorusGeometry& geom) {
  const int p = params.p();
  const int q = params.q();
  const double big = geom.major_radius();
  const double half = geom.minor_radius() / 2.0;
  FourierSeries x({FourierTerm(big, p, 0.0), FourierTerm(half, p + q, 0.0),
                   FourierTerm(half, p - q, 0.0)});
  FourierSeries y({FourierTerm(big, p, -kPi / 2.0),
                   FourierTerm(half, p + q, -kPi / 2.0),
                   FourierTerm(half, p - q, -kPi / 2.0)});
  FourierSeries z({FourierTerm(geom.minor_radius(), q, -kPi / 2.0)});
  return {std::move(x), std::move(y), std::move(z)};
}

Point3 StandardTorusPoint(const TorusParams& params,
                          const StandardTorusGeometry& geom, double t) {
  const double big = geom.major_radius();
  const double small = geom.minor_radius();
  const double pt = params.p() * t;
  const double qt = params.q() * t;
  return {big * std::cos(pt) + small * std::cos(pt) * std::cos(qt),
          big * std::sin(pt) + small * std::sin(pt) * std::cos(qt),
          small * std::sin(qt)};
}

bool HasTheoremShape(const FourierKnot& knot, const TorusParams& params) {
  if (knot.signature() != std::array<std::size_t, 3>{1, 1, 2}) return false;
  return knot.x().terms()[0].frequency() == params.p() &&
         knot.y().terms()[0].frequency() == params.q() &&
         knot.z().terms()[0].frequency() == params.p() &&
         knot.z().terms()[1].frequency() == params.q() - params.p();
}

}  // namespace fknot
