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

#include <json.hpp>

#include "fourier_knots/crossings.hpp"
#include "fourier_knots/diagram.hpp"
#include "fourier_knots/fourier.hpp"
#include "fourier_knots/phase_torus.hpp"

namespace fknot {

// Insertion-ordered so documents keep the documented field order.
using Json = nlohmann::ordered_json;

enum class AngleUnit { Radians, Degrees };

/// Shortest decimal that parses back to the same double.
std::string FormatDouble(double v);

/// {"x": [[A, n, phi], ...], "y": [...], "z": [...]}.
Json KnotToJson(const FourierKnot& knot,
                          AngleUnit unit = AngleUnit::Radians);
/// Inverse of KnotToJson (radians); throws std::invalid_argument on
/// malformed input.
FourierKnot KnotFromJson(const Json& doc);

/// [{"kind": "I"|"II"|null, "k", "j", "t1", "t2", "sign", "over", "x", "y"}]
/// in the set's (t1, t2) order.
Json CrossingsToJson(const CrossingSet& set,
                               AngleUnit unit = AngleUnit::Radians);
/// Same columns as CrossingsToJson, with a header row.
std::string CrossingsToCsv(const CrossingSet& set,
                           AngleUnit unit = AngleUnit::Radians);

/// {"crossings", "writhe", "type1", "type2", "alexander": [[exp, coef], ...]}.
Json SummaryToJson(const DiagramSummary& summary);

/// {"I:k:j": ±1, ...}.
Json SignVectorToJson(const SignVector& signs);

/// Serializes with fixed key order and FormatDouble for every float, so
/// identical inputs give identical bytes.
std::string DumpJson(const Json& doc);

}  // namespace fknot
