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
#include <string>
#include <vector>

#include "fourier_knots/crossings.hpp"
#include "fourier_knots/laurent.hpp"

namespace fknot {

enum class Passage { Over, Under };

struct GaussEntry {
  int id = 0;  // index into CrossingSet::crossings
  Passage passage = Passage::Over;
  int sign = 1;

  friend bool operator==(const GaussEntry&, const GaussEntry&) = default;
};

/// Passages in traversal order starting from t = 0.
struct GaussCode {
  std::vector<GaussEntry> entries;

  std::size_t crossing_count() const { return entries.size() / 2; }
  /// Each id exactly twice, once Over and once Under, with equal signs.
  bool IsRealizable() const;
  /// e.g. "O1- U2- O3- ..." with 1-based ids.
  std::string ToString() const;

  friend bool operator==(const GaussCode&, const GaussCode&) = default;
};

/// X[a, b, c, d]: a is the incoming under edge, labels counterclockwise.
/// Edges are numbered 1..2N along the orientation, so a positive crossing
/// has b = d + 1 and a negative one d = b + 1 (mod 2N).
struct PDCode {
  std::vector<std::array<int, 4>> crossings;
};

/// Sorts the 2N passage times and emits them in order. Throws
/// IncompleteCrossingSet when two passages share a time.
GaussCode BuildGaussCode(const CrossingSet& set);

PDCode PDFromGauss(const GaussCode& code);

int Writhe(const CrossingSet& set);

/// Alexander polynomial of a one-component diagram from its Alexander
/// matrix (one linear relation per crossing, first minor), normalized.
/// Throws NotAKnot for links and SingularDiagram for malformed codes.
LaurentPolynomial AlexanderFromDiagram(const PDCode& pd);

/// (t^{pq} − 1)(t − 1) / ((t^p − 1)(t^q − 1)) by exact division.
LaurentPolynomial TorusAlexanderOracle(const TorusParams& params);

/// Fraction-free (Bareiss) determinant of a square polynomial matrix.
LaurentPolynomial BareissDeterminant(
    std::vector<std::vector<LaurentPolynomial>> matrix);

struct DiagramSummary {
  int crossing_count = 0;
  int writhe = 0;
  int type1_count = 0;  // strands moving the same left-right way
  int type2_count = 0;  // strands moving opposite ways
  LaurentPolynomial alexander;
};

struct ConditionResult {
  std::string name;
  bool applicable = true;
  bool passed = true;
  std::string detail;
};

struct IdentificationReport {
  DiagramSummary summary;
  std::vector<ConditionResult> conditions;

  bool passed() const;
  /// First applicable failed condition, or nullptr.
  const ConditionResult* first_failure() const;
};

/// Condition names, in evaluation order.
inline constexpr const char* kCountCondition = "crossing counts";
inline constexpr const char* kHandednessCondition = "Type I handedness";
inline constexpr const char* kOverDirectionCondition = "Type II over-direction";
inline constexpr const char* kAlexanderCondition = "Alexander polynomial";

/// Evaluates every identification condition. The count, handedness, and
/// over-direction checks apply only to knots of the Fourier-(1,1,2) torus
/// shape; the Alexander check always applies.
IdentificationReport CheckIdentification(const FourierKnot& knot,
                                         const CrossingSet& crossings,
                                         const TorusParams& params);

/// As CheckIdentification, but throws IdentificationFailure naming the first
/// violated condition.
DiagramSummary Identify(const FourierKnot& knot, const CrossingSet& crossings,
                        const TorusParams& params);

}  // namespace fknot
