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

#include "fourier_knots/render.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "fourier_knots/io.hpp"

namespace fknot {

std::array<unsigned char, 3> ClassColor(int class_id) {
  // Golden-angle hue walk over a fixed saturation/value.
  const double hue = std::fmod(class_id * 137.50776405, 360.0) / 60.0;
  const double s = 0.45;
  const double v = 0.95;
  const double c = v * s;
  const double x = c * (1.0 - std::abs(std::fmod(hue, 2.0) - 1.0));
  double r = 0, g = 0, b = 0;
  switch (static_cast<int>(hue)) {
    case 0: r = c; g = x; break;
    case 1: r = x; g = c; break;
    case 2: g = c; b = x; break;
    case 3: g = x; b = c; break;
    case 4: r = x; b = c; break;
    default: r = c; b = x; break;
  }
  const double m = v - c;
  auto to_byte = [m](double ch) {
    return static_cast<unsigned char>(std::lround((ch + m) * 255.0));
  };
  return {to_byte(r), to_byte(g), to_byte(b)};
}

namespace {

std::string Hex(const std::array<unsigned char, 3>& rgb) {
  char buf[8];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", rgb[0], rgb[1], rgb[2]);
  return buf;
}

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

}  // namespace

std::string RenderDiagramSvg(const CrossingSet& set, const DiagramStyle& style) {
  const FourierKnot& knot = set.knot;
  const int n = std::max(style.samples, 64 * std::max(1, knot.max_frequency()));
  const double dt = kTwoPi / n;

  std::vector<Point2> pts(n);
  double lo_x = INFINITY, hi_x = -INFINITY, lo_y = INFINITY, hi_y = -INFINITY;
  for (int i = 0; i < n; ++i) {
    const Point3 p = knot.at(i * dt);
    pts[i] = {p.x, p.y};
    lo_x = std::min(lo_x, p.x);
    hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_y = std::max(hi_y, p.y);
  }

  // Parameter half-widths of the gaps around each under-passage.
  struct Gap {
    double center;
    double half;
  };
  std::vector<Gap> gaps;
  for (const auto& c : set.crossings) {
    const double t = c.under_time();
    const Point3 v = knot.velocity(t);
    const double speed = std::max(std::hypot(v.x, v.y), 1e-9);
    gaps.push_back({t, std::max(style.gap / 2.0 / speed, 1.5 * dt)});
  }
  auto in_gap = [&](double t) {
    return std::any_of(gaps.begin(), gaps.end(), [&](const Gap& g) {
      return CircularDistance(t, g.center) < g.half;
    });
  };

  // Maximal runs of visible samples; a run touching t = 0 from both ends is
  // one strand.
  std::vector<std::vector<int>> runs;
  std::vector<int> current;
  for (int i = 0; i < n; ++i) {
    if (in_gap(i * dt)) {
      if (!current.empty()) runs.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(i);
    }
  }
  if (!current.empty()) runs.push_back(std::move(current));
  const bool closed = gaps.empty();
  if (!closed && runs.size() > 1 && runs.front().front() == 0 &&
      runs.back().back() == n - 1) {
    runs.back().insert(runs.back().end(), runs.front().begin(),
                       runs.front().end());
    runs.erase(runs.begin());
  }

  const double span = std::max(hi_x - lo_x, hi_y - lo_y);
  const double margin = 0.08 * span;
  const double scale = style.size_px / (span + 2.0 * margin);
  auto sx = [&](double x) { return (x - lo_x + margin) * scale; };
  auto sy = [&](double y) { return (hi_y - y + margin) * scale; };
  const double width = (hi_x - lo_x + 2.0 * margin) * scale;
  const double height = (hi_y - lo_y + 2.0 * margin) * scale;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << Num(width) << "\" height=\"" << Num(height) << "\" viewBox=\"0 0 "
      << Num(width) << ' ' << Num(height) << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<g fill=\"none\" stroke=\"black\" stroke-width=\"2\" "
         "stroke-linecap=\"round\" stroke-linejoin=\"round\">\n";
  for (const auto& run : runs) {
    svg << (closed ? "<polygon" : "<polyline") << " class=\"strand\" points=\"";
    for (std::size_t i = 0; i < run.size(); ++i) {
      if (i) svg << ' ';
      svg << Num(sx(pts[run[i]].x)) << ',' << Num(sy(pts[run[i]].y));
    }
    svg << "\"/>\n";
  }
  svg << "</g>\n";

  // Arrowhead at t = 0 along the projected velocity.
  const Point3 p0 = knot.at(0.0);
  const Point3 v0 = knot.velocity(0.0);
  const double vlen = std::max(std::hypot(v0.x, -v0.y), 1e-12);
  const double ux = v0.x / vlen;
  const double uy = -v0.y / vlen;  // screen y points down
  const double len = 14.0;
  const double ax = sx(p0.x), ay = sy(p0.y);
  svg << "<polygon class=\"arrow\" fill=\"black\" points=\"" << Num(ax + ux * len)
      << ',' << Num(ay + uy * len) << ' ' << Num(ax - uy * len * 0.5) << ','
      << Num(ay + ux * len * 0.5) << ' ' << Num(ax + uy * len * 0.5) << ','
      << Num(ay - ux * len * 0.5) << "\"/>\n";
  svg << "</svg>\n";
  return svg.str();
}

namespace {

// Pieces of a singular line within [0, 2π)², as (φ1, φ2) endpoint pairs.
std::vector<std::array<double, 4>> LinePieces(const SingularLine& line) {
  if (line.slope == 0) return {{0.0, line.intercept, kTwoPi, line.intercept}};
  const double b = line.intercept;
  if (line.slope > 0) {
    // φ2 = φ1 + b wraps at φ1 = 2π − b.
    return {{0.0, b, kTwoPi - b, kTwoPi}, {kTwoPi - b, 0.0, kTwoPi, b}};
  }
  // φ2 = b − φ1 wraps at φ1 = b.
  return {{0.0, b, b, 0.0}, {b, kTwoPi, kTwoPi, b}};
}

}  // namespace

std::string RenderPhaseMapSvg(const PhaseMap& map, bool mark_points) {
  const int g = map.grid;
  const double cell = 2.0;
  const double size = g * cell;
  auto px = [&](double phi1) { return phi1 / kTwoPi * size; };
  auto py = [&](double phi2) { return size - phi2 / kTwoPi * size; };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << Num(size) << "\" height=\"" << Num(size) << "\" viewBox=\"0 0 "
      << Num(size) << ' ' << Num(size) << "\">\n"
      << "<title>phase torus T(" << map.params.p() << "," << map.params.q()
      << "): " << map.class_count << " sign classes</title>\n"
      << "<g class=\"regions\" shape-rendering=\"crispEdges\">\n";
  for (int row = 0; row < g; ++row) {
    int start = 0;
    for (int col = 1; col <= g; ++col) {
      const int id = map.classes[row * g + start];
      if (col < g && map.classes[row * g + col] == id) continue;
      svg << "<rect x=\"" << Num(start * cell) << "\" y=\""
          << Num(size - (row + 1) * cell) << "\" width=\""
          << Num((col - start) * cell) << "\" height=\"" << Num(cell)
          << "\" fill=\"" << Hex(ClassColor(id)) << "\"/>\n";
      start = col;
    }
  }
  svg << "</g>\n<g class=\"singular-lines\" stroke=\"black\" "
         "stroke-width=\"1\">\n";
  for (const auto& line : map.lines) {
    for (const auto& piece : LinePieces(line)) {
      svg << "<line data-crossing=\"" << line.indices.key() << "\" data-m=\""
          << line.m << "\" x1=\"" << Num(px(piece[0])) << "\" y1=\""
          << Num(py(piece[1])) << "\" x2=\"" << Num(px(piece[2])) << "\" y2=\""
          << Num(py(piece[3])) << "\"/>\n";
    }
  }
  svg << "</g>\n";
  if (mark_points) {
    svg << "<circle class=\"theorem-point\" data-class=\"" << map.theorem_class
        << "\" cx=\"" << Num(px(map.theorem_point.phi1)) << "\" cy=\""
        << Num(py(map.theorem_point.phi2))
        << "\" r=\"5\" fill=\"white\" stroke=\"black\" stroke-width=\"2\"/>\n";
    svg << "<circle class=\"simplified-point\" data-class=\""
        << map.simplified_class << "\" data-on-line=\""
        << (map.simplified_on_line ? "true" : "false") << "\" cx=\""
        << Num(px(map.simplified_point.phi1)) << "\" cy=\""
        << Num(py(map.simplified_point.phi2))
        << "\" r=\"5\" fill=\"red\" stroke=\"black\" stroke-width=\"1\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

void WritePhaseMapPng(const PhaseMap& map, const std::string& path,
                      bool mark_points) {
  const int g = map.grid;
  std::vector<unsigned char> rgb(static_cast<std::size_t>(g) * g * 3);
  auto put = [&](int row, int col, std::array<unsigned char, 3> c) {
    row = ((row % g) + g) % g;
    col = ((col % g) + g) % g;
    // Image rows run top-down; φ2 grows upward.
    unsigned char* px = &rgb[(static_cast<std::size_t>(g - 1 - row) * g + col) * 3];
    px[0] = c[0];
    px[1] = c[1];
    px[2] = c[2];
  };
  for (int row = 0; row < g; ++row) {
    for (int col = 0; col < g; ++col) put(row, col, ClassColor(map.classes[row * g + col]));
  }
  auto cell = [g](double phi) {
    return static_cast<int>(std::floor(ReduceAngle(phi) / kTwoPi * g));
  };
  for (const auto& line : map.lines) {
    for (int col = 0; col < g; ++col) {
      const double phi1 = kTwoPi * (col + 0.5) / g;
      put(cell(line.phi2_at(phi1)), col, {0, 0, 0});
    }
  }
  if (mark_points) {
    for (const auto& [pt, color] :
         {std::pair{map.theorem_point, std::array<unsigned char, 3>{255, 255, 255}},
          std::pair{map.simplified_point, std::array<unsigned char, 3>{220, 0, 0}}}) {
      const int r0 = cell(pt.phi2), c0 = cell(pt.phi1);
      for (int dr = -1; dr <= 1; ++dr) {
        for (int dc = -1; dc <= 1; ++dc) put(r0 + dr, c0 + dc, color);
      }
    }
  }

  std::unique_ptr<FILE, int (*)(FILE*)> fp(std::fopen(path.c_str(), "wb"),
                                           &std::fclose);
  if (!fp) throw std::runtime_error("cannot open " + path);
  png_structp png =
      png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw std::runtime_error("libpng initialization failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw std::runtime_error("libpng write failed for " + path);
  }
  png_init_io(png, fp.get());
  png_set_IHDR(png, info, g, g, 8, PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (int row = 0; row < g; ++row) {
    png_write_row(png, &rgb[static_cast<std::size_t>(row) * g * 3]);
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

}  // namespace fknot
