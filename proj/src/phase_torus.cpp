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

#include <algorithm>
#include <cmath>

namespace fknot {

double ZDiffAtPhases(const TorusParams& params, const PhasePoint& point,
                     const CrossingIndices& indices) {
  const auto [t1, t2] = AnalyticTimes(params, indices);
  const double sum = (t1 + t2) / 2.0;
  const double diff = (t1 - t2) / 2.0;
  const double n1 = params.p();
  const double n2 = params.q() - params.p();
  return -2.0 * std::sin(n1 * sum + point.phi1) * std::sin(n1 * diff) -
         2.0 * std::sin(n2 * sum + point.phi2) * std::sin(n2 * diff);
}

std::string_view ToString(Type1Reading reading) {
  return reading == Type1Reading::HalfPi ? "(1/p - 1/q) * pi/2"
                                         : "(1/p - 1/q) / (2 pi)";
}

namespace {

// The two m with base + mπ in [0, 2π).
std::vector<std::pair<int, double>> InterceptsInDomain(double base) {
  double r = std::fmod(base, kPi);
  if (r < 0.0) r += kPi;
  if (r >= kPi) r = 0.0;
  const int m = static_cast<int>(std::lround((r - base) / kPi));
  return {{m, r}, {m + 1, r + kPi}};
}

std::vector<SingularLine> CandidateLines(const TorusParams& params,
                                         Type1Reading reading) {
  const double p = params.p();
  const double q = params.q();
  const double c = reading == Type1Reading::HalfPi
                       ? (1.0 / p - 1.0 / q) * kPi / 2.0
                       : (1.0 / p - 1.0 / q) / (2.0 * kPi);
  std::vector<SingularLine> out;
  for (const auto& idx : AllIndices(params)) {
    if (idx.kind == CrossingKind::TypeI) {
      for (const auto& [m, b] : InterceptsInDomain(idx.j * p * kPi / q + c)) {
        out.push_back({LineKind::Horizontal, idx, m, 0, b});
      }
    } else {
      for (const auto& [m, b] : InterceptsInDomain(-idx.j * q * kPi / p)) {
        const bool even_m = m % 2 == 0;
        const int slope = (idx.k % 2 == 0) == even_m ? 1 : -1;
        out.push_back({LineKind::Diagonal, idx, m, slope, b});
      }
    }
  }
  return out;
}

}  // namespace

LineCertification CertifyLines(const TorusParams& params, Type1Reading reading) {
  LineCertification cert;
  for (const auto& line : CandidateLines(params, reading)) {
    double worst = 0.0;
    for (int s = 0; s < kCertificationSamples; ++s) {
      const double phi1 = kTwoPi * (s + 0.37) / kCertificationSamples;
      const PhasePoint point(phi1, line.phi2_at(phi1));
      worst = std::max(worst,
                       std::abs(ZDiffAtPhases(params, point, line.indices)));
    }
    if (worst < kSingularTol) {
      cert.certified.push_back(line);
      cert.worst_residual = std::max(cert.worst_residual, worst);
    } else {
      cert.rejected.push_back(line);
    }
  }
  return cert;
}

std::vector<SingularLine> SingularLines(const TorusParams& params) {
  LineCertification cert = CertifyLines(params);
  if (!cert.rejected.empty()) {
    const auto& bad = cert.rejected.front();
    throw KnotError(ErrorCode::CertificationFailure,
                    std::to_string(cert.rejected.size()) +
                        " lines rejected, first " + bad.indices.key() +
                        " m=" + std::to_string(bad.m));
  }
  return std::move(cert.certified);
}

std::optional<Type1Reading> CertifiedType1Reading(const TorusParams& params) {
  std::optional<Type1Reading> found;
  for (Type1Reading reading : {Type1Reading::HalfPi, Type1Reading::OverTwoPi}) {
    const LineCertification cert = CertifyLines(params, reading);
    const bool all_type1 = std::none_of(
        cert.rejected.begin(), cert.rejected.end(), [](const SingularLine& l) {
          return l.kind == LineKind::Horizontal;
        });
    if (all_type1) {
      if (found) return std::nullopt;
      found = reading;
    }
  }
  return found;
}

std::map<std::string, int> KeyedSigns(const SignVector& signs) {
  std::map<std::string, int> out;
  for (const auto& [idx, s] : signs) out.emplace(idx.key(), s);
  return out;
}

std::vector<CrossingIndices> DegenerateCrossings(const TorusParams& params,
                                                 const PhasePoint& point) {
  std::vector<CrossingIndices> out;
  for (const auto& idx : AllIndices(params)) {
    if (std::abs(ZDiffAtPhases(params, point, idx)) <= kSingularTol) {
      out.push_back(idx);
    }
  }
  return out;
}

SignVector SignVectorAt(const TorusParams& params, const PhasePoint& point) {
  SignVector out;
  std::vector<CrossingIndices> degenerate;
  for (const auto& idx : AllIndices(params)) {
    const double dz = ZDiffAtPhases(params, point, idx);
    if (std::abs(dz) <= kSingularTol) {
      degenerate.push_back(idx);
    } else {
      out.emplace(idx, dz > 0.0 ? 1 : -1);
    }
  }
  if (!degenerate.empty()) {
    std::string names;
    for (const auto& idx : degenerate) {
      names += (names.empty() ? "" : ", ") + idx.key();
    }
    throw SingularPointError(std::move(degenerate),
                             "degenerate crossings at (" +
                                 std::to_string(point.phi1) + ", " +
                                 std::to_string(point.phi2) + "): " + names);
  }
  return out;
}

bool SameKnotByPhases(const TorusParams& params, const PhasePoint& a,
                      const PhasePoint& b) {
  return SignVectorAt(params, a) == SignVectorAt(params, b);
}

double MinAbsZDiff(const TorusParams& params, const PhasePoint& point) {
  double best = INFINITY;
  for (const auto& idx : AllIndices(params)) {
    best = std::min(best, std::abs(ZDiffAtPhases(params, point, idx)));
  }
  return best;
}

std::vector<std::int8_t> SignKey(const TorusParams& params,
                                 const std::vector<CrossingIndices>& indices,
                                 const PhasePoint& point) {
  std::vector<std::int8_t> key(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    const double dz = ZDiffAtPhases(params, point, indices[i]);
    key[i] = std::abs(dz) <= kSingularTol ? 0 : (dz > 0.0 ? 1 : -1);
  }
  return key;
}

double DistanceToLine(const SingularLine& line, const PhasePoint& point) {
  return CircularDistance(point.phi2, line.phi2_at(point.phi1));
}

namespace {

PhasePoint PixelCenter(int grid, int row, int col) {
  return {kTwoPi * (col + 0.5) / grid, kTwoPi * (row + 0.5) / grid};
}

void CheckPhaseGrid(int grid) {
  if (grid < kMinPhaseGrid) {
    throw KnotError(ErrorCode::InvalidGrid,
                    "phase grid must be >= " + std::to_string(kMinPhaseGrid) +
                        ", got " + std::to_string(grid));
  }
}

PhaseMap AssignClasses(const TorusParams& params, int grid,
                       const std::vector<CrossingIndices>& indices,
                       const std::vector<std::vector<std::int8_t>>& keys) {
  PhaseMap map{params, grid, std::vector<int>(keys.size()), 0,
               SingularLines(params), TheoremPhases(params),
               SimplifiedPhases(params)};
  std::map<std::vector<std::int8_t>, int> ids;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    auto [it, fresh] = ids.emplace(keys[i], static_cast<int>(ids.size()));
    map.classes[i] = it->second;
  }
  auto class_of = [&](const PhasePoint& point) {
    const auto key = SignKey(params, indices, point);
    if (std::find(key.begin(), key.end(), 0) != key.end()) return -1;
    auto [it, fresh] = ids.emplace(key, static_cast<int>(ids.size()));
    return it->second;
  };
  map.theorem_class = class_of(map.theorem_point);
  map.simplified_class = class_of(map.simplified_point);
  map.class_count = static_cast<int>(ids.size());
  map.simplified_on_line = std::any_of(
      map.lines.begin(), map.lines.end(), [&](const SingularLine& line) {
        return DistanceToLine(line, map.simplified_point) < kSingularTol;
      });
  return map;
}

}  // namespace

PhaseMap RenderPhaseMapSerial(const TorusParams& params, int grid) {
  CheckPhaseGrid(grid);
  const auto indices = AllIndices(params);
  std::vector<std::vector<std::int8_t>> keys(static_cast<std::size_t>(grid) *
                                             grid);
  for (int row = 0; row < grid; ++row) {
    for (int col = 0; col < grid; ++col) {
      keys[row * grid + col] =
          SignKey(params, indices, PixelCenter(grid, row, col));
    }
  }
  return AssignClasses(params, grid, indices, keys);
}

PhaseMap RenderPhaseMap(const TorusParams& params, int grid) {
  CheckPhaseGrid(grid);
  const auto indices = AllIndices(params);
  std::vector<std::vector<std::int8_t>> keys(static_cast<std::size_t>(grid) *
                                             grid);
#pragma omp parallel for schedule(static)
  for (int row = 0; row < grid; ++row) {
    for (int col = 0; col < grid; ++col) {
      keys[row * grid + col] =
          SignKey(params, indices, PixelCenter(grid, row, col));
    }
  }
  return AssignClasses(params, grid, indices, keys);
}

}  // namespace fknot
