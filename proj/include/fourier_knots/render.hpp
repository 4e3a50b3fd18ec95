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

#include <string>

#include "fourier_knots/crossings.hpp"
#include "fourier_knots/phase_torus.hpp"

namespace fknot {

struct DiagramStyle {
  int samples = 4096;       // minimum; raised to 64 × max frequency
  double gap = 0.05;        // under-strand gap length in curve units
  double size_px = 600.0;
};

/// SVG 1.1 drawing of the xy-projection. Each under-passage breaks the
/// strand, so a diagram with N > 0 crossings is drawn as exactly N
/// <polyline class="strand"> elements; an arrowhead marks t = 0.
std::string RenderDiagramSvg(const CrossingSet& set,
                             const DiagramStyle& style = {});

/// Phase torus as SVG: class-colored row runs, the certified singular
/// lines, and markers for the theorem and simplified points (class
/// "theorem-point" / "simplified-point") when `mark_points` is set.
std::string RenderPhaseMapSvg(const PhaseMap& map, bool mark_points = true);

/// Same content rasterized at one pixel per grid cell; writes a PNG file.
void WritePhaseMapPng(const PhaseMap& map, const std::string& path,
                      bool mark_points = true);

/// RGB color for a sign-vector class id.
std::array<unsigned char, 3> ClassColor(int class_id);

}  // namespace fknot
