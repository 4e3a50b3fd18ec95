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

#include "fourier_knots/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "fourier_knots/errors.hpp"

namespace fknot {

bool GaussCode::IsRealizable() const {
  std::map<int, std::vector<const GaussEntry*>> seen;
  for (const auto& e : entries) seen[e.id].push_back(&e);
  for (const auto& [id, list] : seen) {
    if (list.size() != 2) return false;
    if (list[0]->passage == list[1]->passage) return false;
    if (list[0]->sign != list[1]->sign) return false;
  }
  return true;
}

std::string GaussCode::ToString() const {
  std::string out;
  for (const auto& e : entries) {
    if (!out.empty()) out += ' ';
    out += e.passage == Passage::Over ? 'O' : 'U';
    out += std::to_string(e.id + 1);
    out += e.sign > 0 ? '+' : '-';
  }
  return out;
}

GaussCode BuildGaussCode(const CrossingSet& set) {
  struct Event {
    double t;
    GaussEntry entry;
  };
  std::vector<Event> events;
  events.reserve(2 * set.crossings.size());
  for (std::size_t id = 0; id < set.crossings.size(); ++id) {
    const Crossing& c = set.crossings[id];
    const int sign = SignValue(c.sign);
    const bool t1_over = c.over == OverStrand::AtT1;
    events.push_back({c.t1, {static_cast<int>(id),
                             t1_over ? Passage::Over : Passage::Under, sign}});
    events.push_back({c.t2, {static_cast<int>(id),
                             t1_over ? Passage::Under : Passage::Over, sign}});
  }
  std::sort(events.begin(), events.end(),
            [](const Event& a, const Event& b) { return a.t < b.t; });
  for (std::size_t i = 0; i < events.size(); ++i) {
    const Event& a = events[i];
    const Event& b = events[(i + 1) % events.size()];
    if (events.size() > 1 && CircularDistance(a.t, b.t) < kDedupeTol) {
      throw KnotError(ErrorCode::IncompleteCrossingSet,
                      "passages of crossings " + std::to_string(a.entry.id) +
                          " and " + std::to_string(b.entry.id) +
                          " coincide at t = " + std::to_string(a.t));
    }
  }
  GaussCode code;
  code.entries.reserve(events.size());
  for (const auto& e : events) code.entries.push_back(e.entry);
  return code;
}

PDCode PDFromGauss(const GaussCode& code) {
  const int n = static_cast<int>(code.entries.size());
  PDCode pd;
  if (n == 0) return pd;
  // Edge e (1-based) leaves passage e − 1 and enters passage e (mod n).
  auto in_edge = [n](int i) { return i == 0 ? n : i; };
  auto out_edge = [](int i) { return i + 1; };

  std::map<int, std::pair<int, int>> where;  // id -> (over index, under index)
  for (int i = 0; i < n; ++i) {
    auto& slot = where[code.entries[i].id];
    (code.entries[i].passage == Passage::Over ? slot.first : slot.second) = i;
  }
  for (const auto& [id, idx] : where) {
    const auto [o, u] = idx;
    const int sign = code.entries[o].sign;
    if (sign > 0) {
      pd.crossings.push_back({in_edge(u), out_edge(o), out_edge(u), in_edge(o)});
    } else {
      pd.crossings.push_back({in_edge(u), in_edge(o), out_edge(u), out_edge(o)});
    }
  }
  return pd;
}

int Writhe(const CrossingSet& set) {
  return std::accumulate(
      set.crossings.begin(), set.crossings.end(), 0,
      [](int acc, const Crossing& c) { return acc + SignValue(c.sign); });
}

LaurentPolynomial BareissDeterminant(
    std::vector<std::vector<LaurentPolynomial>> m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPolynomial::Monomial(1);
  LaurentPolynomial prev = LaurentPolynomial::Monomial(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return {};
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPolynomial v = m[i][j] * m[k][k];
        if (!m[i][k].is_zero() && !m[k][j].is_zero()) v -= m[i][k] * m[k][j];
        m[i][j] = v.DivideExact(prev);
      }
      m[i][k] = {};
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

namespace {

int Find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

LaurentPolynomial AlexanderFromDiagram(const PDCode& pd) {
  const int n = static_cast<int>(pd.crossings.size());
  if (n == 0) return LaurentPolynomial::Monomial(1);
  const int edges = 2 * n;

  std::vector<int> multiplicity(edges + 1, 0);
  for (const auto& x : pd.crossings) {
    for (int label : x) {
      if (label < 1 || label > edges) {
        throw KnotError(ErrorCode::SingularDiagram,
                        "edge label " + std::to_string(label) + " out of range");
      }
      ++multiplicity[label];
    }
  }
  for (int e = 1; e <= edges; ++e) {
    if (multiplicity[e] != 2) {
      throw KnotError(ErrorCode::SingularDiagram,
                      "edge " + std::to_string(e) + " appears " +
                          std::to_string(multiplicity[e]) + " times");
    }
  }

  auto next = [edges](int e) { return e % edges + 1; };
  std::vector<int> successor(edges + 1, 0);
  std::vector<bool> positive(n);
  for (int c = 0; c < n; ++c) {
    const auto& [a, b, cc, d] = pd.crossings[c];
    successor[a] = cc;
    positive[c] = b == next(d);
    if (positive[c]) {
      successor[d] = b;
    } else {
      successor[b] = d;
    }
  }
  // One component means following successors visits every edge.
  int visited = 0;
  int edge = 1;
  do {
    ++visited;
    edge = successor[edge];
  } while (edge != 1 && edge != 0 && visited <= edges);
  if (edge != 1 || visited != edges) {
    throw KnotError(ErrorCode::NotAKnot,
                    "diagram traversal covers " + std::to_string(visited) +
                        " of " + std::to_string(edges) + " edges");
  }

  // Arcs: edges joined through over-passages.
  std::vector<int> parent(edges + 1);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& x : pd.crossings) parent[Find(parent, x[1])] = Find(parent, x[3]);
  std::map<int, int> arc_of_root;
  for (int e = 1; e <= edges; ++e) {
    arc_of_root.emplace(Find(parent, e), static_cast<int>(arc_of_root.size()));
  }
  const int arcs = static_cast<int>(arc_of_root.size());
  if (arcs != n) {
    throw KnotError(ErrorCode::SingularDiagram,
                    std::to_string(arcs) + " arcs for " + std::to_string(n) +
                        " crossings");
  }
  auto arc = [&](int label) { return arc_of_root.at(Find(parent, label)); };

  const LaurentPolynomial one = LaurentPolynomial::Monomial(1);
  const LaurentPolynomial t = LaurentPolynomial::Monomial(1, 1);
  std::vector<std::vector<LaurentPolynomial>> matrix(
      n, std::vector<LaurentPolynomial>(arcs));
  for (int c = 0; c < n; ++c) {
    const auto& [a, b, cc, d] = pd.crossings[c];
    auto& row = matrix[c];
    row[arc(b)] += one - t;
    if (positive[c]) {
      row[arc(a)] += t;
      row[arc(cc)] -= one;
    } else {
      row[arc(a)] -= one;
      row[arc(cc)] += t;
    }
  }

  // First minor: drop the last relation and the last generator.
  matrix.pop_back();
  for (auto& row : matrix) row.pop_back();
  LaurentPolynomial det = BareissDeterminant(std::move(matrix));
  if (det.is_zero()) {
    throw KnotError(ErrorCode::SingularDiagram, "Alexander minor vanishes");
  }
  return det.Normalized();
}

LaurentPolynomial TorusAlexanderOracle(const TorusParams& params) {
  auto t_pow_minus_one = [](int e) {
    return LaurentPolynomial::Monomial(1, e) - LaurentPolynomial::Monomial(1);
  };
  const LaurentPolynomial num =
      t_pow_minus_one(params.p() * params.q()) * t_pow_minus_one(1);
  const LaurentPolynomial den =
      t_pow_minus_one(params.p()) * t_pow_minus_one(params.q());
  return num.DivideExact(den).Normalized();
}

bool IdentificationReport::passed() const { return first_failure() == nullptr; }

const ConditionResult* IdentificationReport::first_failure() const {
  for (const auto& c : conditions) {
    if (c.applicable && !c.passed) return &c;
  }
  return nullptr;
}

IdentificationReport CheckIdentification(const FourierKnot& knot,
                                         const CrossingSet& crossings,
                                         const TorusParams& params) {
  IdentificationReport report;
  DiagramSummary& s = report.summary;
  s.crossing_count = static_cast<int>(crossings.crossings.size());
  s.writhe = Writhe(crossings);
  for (const auto& c : crossings.crossings) {
    (DirectionProduct(knot, c.t1, c.t2) > 0.0 ? s.type1_count : s.type2_count)++;
  }

  const bool theorem_shape = HasTheoremShape(knot, params);
  CrossingSet labeled = crossings;
  int unmatched = 0;
  if (theorem_shape &&
      std::any_of(labeled.crossings.begin(), labeled.crossings.end(),
                  [](const Crossing& c) { return !c.indices; })) {
    unmatched = LabelFromAnalytic(labeled, params);
  }

  ConditionResult counts{kCountCondition, theorem_shape, true, ""};
  ConditionResult handed{kHandednessCondition, theorem_shape, true, ""};
  ConditionResult over{kOverDirectionCondition, theorem_shape, true, ""};
  if (theorem_shape) {
    int type1 = 0;
    int type2 = 0;
    for (const auto& c : labeled.crossings) {
      if (!c.indices) continue;
      if (c.indices->kind == CrossingKind::TypeI) {
        ++type1;
        if (c.sign != Handedness::LeftHanded && handed.passed) {
          handed.passed = false;
          handed.detail = c.indices->key() + " is right-handed";
        }
      } else {
        ++type2;
        if (knot.x().eval_derivative(c.over_time()) <= 0.0 && over.passed) {
          over.passed = false;
          over.detail = c.indices->key() + " over-strand moves left";
        }
      }
    }
    counts.detail = "type I " + std::to_string(type1) + "/" +
                    std::to_string(params.type1_count()) + ", type II " +
                    std::to_string(type2) + "/" +
                    std::to_string(params.type2_count());
    if (unmatched > 0) {
      counts.detail += ", " + std::to_string(unmatched) + " unmatched";
    }
    counts.passed = unmatched == 0 && type1 == params.type1_count() &&
                    type2 == params.type2_count();
  }

  ConditionResult alex{kAlexanderCondition, true, true, ""};
  const LaurentPolynomial oracle = TorusAlexanderOracle(params);
  try {
    s.alexander = AlexanderFromDiagram(PDFromGauss(BuildGaussCode(crossings)));
    alex.passed = s.alexander == oracle;
    alex.detail = s.alexander.ToString();
    if (!alex.passed) alex.detail += " != " + oracle.ToString();
  } catch (const KnotError& e) {
    alex.passed = false;
    alex.detail = e.what();
  }

  report.conditions = {counts, handed, over, alex};
  return report;
}

DiagramSummary Identify(const FourierKnot& knot, const CrossingSet& crossings,
                        const TorusParams& params) {
  IdentificationReport report = CheckIdentification(knot, crossings, params);
  if (const ConditionResult* failure = report.first_failure()) {
    throw KnotError(ErrorCode::IdentificationFailure,
                    failure->name + ": " + failure->detail);
  }
  return report.summary;
}

}  // namespace fknot
