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

#include "fourier_knots/io.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace fknot {

using json = Json;

std::string FormatDouble(double v) {
  if (!std::isfinite(v)) return "null";
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  std::string out(buf, end);
  // Keep floats visibly floating-point so readers do not narrow to int.
  if (out.find_first_of(".eE") == std::string::npos) out += ".0";
  return out;
}

namespace {

double Angle(double radians, AngleUnit unit) {
  return unit == AngleUnit::Degrees ? radians * 180.0 / kPi : radians;
}

json SeriesToJson(const FourierSeries& series, AngleUnit unit) {
  json arr = json::array();
  for (const auto& term : series.terms()) {
    arr.push_back({term.amplitude(), term.frequency(),
                   Angle(term.phase(), unit)});
  }
  return arr;
}

FourierSeries SeriesFromJson(const json& arr, const char* axis) {
  if (!arr.is_array()) {
    throw std::invalid_argument(std::string("axis ") + axis + " is not an array");
  }
  std::vector<FourierTerm> terms;
  for (const auto& t : arr) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number() ||
        !t[1].is_number_integer() || !t[2].is_number()) {
      throw std::invalid_argument(std::string("axis ") + axis +
                                  ": terms must be [amplitude, int, phase]");
    }
    terms.emplace_back(t[0].get<double>(), t[1].get<int>(), t[2].get<double>());
  }
  return FourierSeries(std::move(terms));
}

void Dump(const json& v, std::string& out) {
  switch (v.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += json(it.key()).dump();
        out += ':';
        Dump(it.value(), out);
      }
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        Dump(v[i], out);
      }
      out += ']';
      break;
    }
    case json::value_t::number_float:
      out += FormatDouble(v.get<double>());
      break;
    default:
      out += v.dump();
  }
}

const char* KindName(const std::optional<CrossingIndices>& idx) {
  if (!idx) return "";
  return idx->kind == CrossingKind::TypeI ? "I" : "II";
}

}  // namespace

json KnotToJson(const FourierKnot& knot, AngleUnit unit) {
  json doc = json::object();
  doc["x"] = SeriesToJson(knot.x(), unit);
  doc["y"] = SeriesToJson(knot.y(), unit);
  doc["z"] = SeriesToJson(knot.z(), unit);
  return doc;
}

FourierKnot KnotFromJson(const json& doc) {
  if (!doc.is_object() || !doc.contains("x") || !doc.contains("y") ||
      !doc.contains("z")) {
    throw std::invalid_argument("knot JSON needs x, y and z arrays");
  }
  return {SeriesFromJson(doc["x"], "x"), SeriesFromJson(doc["y"], "y"),
          SeriesFromJson(doc["z"], "z")};
}

json CrossingsToJson(const CrossingSet& set, AngleUnit unit) {
  json arr = json::array();
  for (const auto& c : set.crossings) {
    json rec = json::object();
    if (c.indices) {
      rec["kind"] = KindName(c.indices);
      rec["k"] = c.indices->k;
      rec["j"] = c.indices->j;
    } else {
      rec["kind"] = nullptr;
      rec["k"] = nullptr;
      rec["j"] = nullptr;
    }
    rec["t1"] = Angle(c.t1, unit);
    rec["t2"] = Angle(c.t2, unit);
    rec["sign"] = SignValue(c.sign);
    rec["over"] = c.over == OverStrand::AtT1 ? "t1" : "t2";
    rec["x"] = c.position.x;
    rec["y"] = c.position.y;
    arr.push_back(std::move(rec));
  }
  return arr;
}

std::string CrossingsToCsv(const CrossingSet& set, AngleUnit unit) {
  std::ostringstream out;
  out << "kind,k,j,t1,t2,sign,over,x,y\n";
  for (const auto& c : set.crossings) {
    out << KindName(c.indices) << ',';
    if (c.indices) {
      out << c.indices->k << ',' << c.indices->j << ',';
    } else {
      out << ",,";
    }
    out << FormatDouble(Angle(c.t1, unit)) << ','
        << FormatDouble(Angle(c.t2, unit)) << ',' << SignValue(c.sign) << ','
        << (c.over == OverStrand::AtT1 ? "t1" : "t2") << ','
        << FormatDouble(c.position.x) << ',' << FormatDouble(c.position.y)
        << '\n';
  }
  return out.str();
}

json SummaryToJson(const DiagramSummary& summary) {
  json alex = json::array();
  for (const auto& [e, c] : summary.alexander.terms()) {
    if (!c.fits_slong_p()) {
      throw std::overflow_error("Alexander coefficient exceeds 64 bits");
    }
    alex.push_back({e, c.get_si()});
  }
  json doc = json::object();
  doc["crossings"] = summary.crossing_count;
  doc["writhe"] = summary.writhe;
  doc["type1"] = summary.type1_count;
  doc["type2"] = summary.type2_count;
  doc["alexander"] = std::move(alex);
  return doc;
}

json SignVectorToJson(const SignVector& signs) {
  json doc = json::object();
  for (const auto& [key, s] : KeyedSigns(signs)) doc[key] = s;
  return doc;
}

std::string DumpJson(const json& doc) {
  std::string out;
  Dump(doc, out);
  return out;
}

}  // namespace fknot
