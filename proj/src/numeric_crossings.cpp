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

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "fourier_knots/crossings.hpp"
#include "fourier_knots/errors.hpp"

namespace fknot {
namespace {

constexpr int kNewtonBudget = 50;
constexpr double kNewtonTol = 1e-12;
constexpr double kSegmentSlack = 1e-9;

struct Seed {
  double t1;
  double t2;
};

struct Refined {
  std::optional<Seed> root;
  std::optional<Diagnostic> failure;
};

struct Sampling {
  double step;
  std::vector<Point2> points;
};

Sampling SampleProjection(const FourierKnot& knot, int grid) {
  Sampling s{kTwoPi / grid, std::vector<Point2>(grid)};
  for (int i = 0; i < grid; ++i) {
    const double t = i * s.step;
    s.points[i] = {knot.x().eval(t), knot.y().eval(t)};
  }
  return s;
}

double Cross(double ax, double ay, double bx, double by) {
  return ax * by - ay * bx;
}

// Seeds from segment i against every later non-adjacent segment.
void ScanRow(const Sampling& s, int i, std::vector<Seed>& out) {
  const int n = static_cast<int>(s.points.size());
  const Point2 a0 = s.points[i];
  const Point2 a1 = s.points[(i + 1) % n];
  const double ax_lo = std::min(a0.x, a1.x), ax_hi = std::max(a0.x, a1.x);
  const double ay_lo = std::min(a0.y, a1.y), ay_hi = std::max(a0.y, a1.y);
  const double rx = a1.x - a0.x, ry = a1.y - a0.y;
  for (int j = i + 2; j < n; ++j) {
    if (i == 0 && j == n - 1) continue;
    const Point2 b0 = s.points[j];
    const Point2 b1 = s.points[(j + 1) % n];
    if (std::max(b0.x, b1.x) < ax_lo || std::min(b0.x, b1.x) > ax_hi ||
        std::max(b0.y, b1.y) < ay_lo || std::min(b0.y, b1.y) > ay_hi) {
      continue;
    }
    const double vx = b1.x - b0.x, vy = b1.y - b0.y;
    const double denom = Cross(rx, ry, vx, vy);
    if (denom == 0.0) continue;
    const double wx = b0.x - a0.x, wy = b0.y - a0.y;
    const double s_par = Cross(wx, wy, vx, vy) / denom;
    const double u_par = Cross(wx, wy, rx, ry) / denom;
    if (s_par < -kSegmentSlack || s_par > 1.0 + kSegmentSlack ||
        u_par < -kSegmentSlack || u_par > 1.0 + kSegmentSlack) {
      continue;
    }
    out.push_back({(i + s_par) * s.step, (j + u_par) * s.step});
  }
}

double ResidualNorm(const FourierKnot& knot, double t1, double t2) {
  const double fx = knot.x().eval(t1) - knot.x().eval(t2);
  const double fy = knot.y().eval(t1) - knot.y().eval(t2);
  return std::hypot(fx, fy);
}

// Damped Newton on F(t1, t2) = (x(t1) − x(t2), y(t1) − y(t2)).
Refined Refine(const FourierKnot& knot, Seed seed) {
  double t1 = seed.t1;
  double t2 = seed.t2;
  double res = ResidualNorm(knot, t1, t2);
  for (int iter = 0; iter < kNewtonBudget && res >= kNewtonTol; ++iter) {
    const double fx = knot.x().eval(t1) - knot.x().eval(t2);
    const double fy = knot.y().eval(t1) - knot.y().eval(t2);
    const double j11 = knot.x().eval_derivative(t1);
    const double j12 = -knot.x().eval_derivative(t2);
    const double j21 = knot.y().eval_derivative(t1);
    const double j22 = -knot.y().eval_derivative(t2);
    const double det = j11 * j22 - j12 * j21;
    const double scale = std::max({std::abs(j11), std::abs(j12),
                                   std::abs(j21), std::abs(j22), 1.0});
    if (std::abs(det) <= 1e-14 * scale * scale) {
      return {std::nullopt,
              Diagnostic{DiagnosticKind::TangentialIntersection, seed.t1,
                         seed.t2, res}};
    }
    const double d1 = -(j22 * fx - j12 * fy) / det;
    const double d2 = -(-j21 * fx + j11 * fy) / det;
    double lambda = 1.0;
    double next = ResidualNorm(knot, t1 + d1, t2 + d2);
    while (next >= res && lambda > 1e-10) {
      lambda /= 2.0;
      next = ResidualNorm(knot, t1 + lambda * d1, t2 + lambda * d2);
    }
    if (next >= res) break;
    t1 += lambda * d1;
    t2 += lambda * d2;
    res = next;
  }
  if (res >= kNewtonTol) {
    return {std::nullopt, Diagnostic{DiagnosticKind::NewtonDivergence, seed.t1,
                                     seed.t2, res}};
  }
  return {Seed{ReduceAngle(t1), ReduceAngle(t2)}, std::nullopt};
}

CrossingSet Assemble(const FourierKnot& knot,
                     const std::vector<Refined>& refined) {
  CrossingSet set{knot, {}, CrossingMethod::Numeric, {}};
  std::vector<Seed> roots;
  for (const auto& r : refined) {
    if (r.failure) {
      set.diagnostics.push_back(*r.failure);
      continue;
    }
    const Seed root = *r.root;
    if (CircularDistance(root.t1, root.t2) <= kDedupeTol) continue;
    const bool seen = std::any_of(roots.begin(), roots.end(), [&](Seed o) {
      return SameTimePair(root.t1, root.t2, o.t1, o.t2, kDedupeTol);
    });
    if (!seen) roots.push_back(root);
  }
  for (const Seed root : roots) {
    set.crossings.push_back(Classify(knot, root.t1, root.t2));
  }
  std::sort(set.crossings.begin(), set.crossings.end(),
            [](const Crossing& a, const Crossing& b) {
              return a.t1 != b.t1 ? a.t1 < b.t1 : a.t2 < b.t2;
            });
  return set;
}

void CheckGrid(const FourierKnot& knot, int grid) {
  if (grid < MinimumGrid(knot)) {
    throw KnotError(ErrorCode::InvalidGrid,
                    "grid " + std::to_string(grid) + " below minimum " +
                        std::to_string(MinimumGrid(knot)));
  }
}

}  // namespace

CrossingSet FindCrossingsNumericSerial(const FourierKnot& knot, int grid) {
  CheckGrid(knot, grid);
  const Sampling s = SampleProjection(knot, grid);
  std::vector<Seed> seeds;
  for (int i = 0; i < grid; ++i) ScanRow(s, i, seeds);
  std::vector<Refined> refined;
  refined.reserve(seeds.size());
  for (const Seed seed : seeds) refined.push_back(Refine(knot, seed));
  return Assemble(knot, refined);
}

CrossingSet FindCrossingsNumeric(const FourierKnot& knot, int grid) {
  CheckGrid(knot, grid);
  const Sampling s = SampleProjection(knot, grid);

  // Per-row buckets keep the seed order identical to the serial scan.
  std::vector<std::vector<Seed>> rows(grid);
#pragma omp parallel for schedule(dynamic, 16)
  for (int i = 0; i < grid; ++i) ScanRow(s, i, rows[i]);

  std::vector<Seed> seeds;
  for (const auto& row : rows) seeds.insert(seeds.end(), row.begin(), row.end());

  std::vector<Refined> refined(seeds.size());
  const auto count = static_cast<long>(seeds.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < count; ++i) refined[i] = Refine(knot, seeds[i]);

  return Assemble(knot, refined);
}

}  // namespace fknot
