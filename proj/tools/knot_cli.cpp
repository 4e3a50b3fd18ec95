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

// knot: generate Fourier torus knots, analyse their crossings, and check
// the torus-knot identification over parameter ranges.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid arguments,
// 3 numeric/analytic disagreement.

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fourier_knots/crossings.hpp"
#include "fourier_knots/diagram.hpp"
#include "fourier_knots/errors.hpp"
#include "fourier_knots/fourier.hpp"
#include "fourier_knots/io.hpp"
#include "fourier_knots/phase_torus.hpp"
#include "fourier_knots/render.hpp"

namespace {

using namespace fknot;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadArgs = 2;
constexpr int kExitOracleMismatch = 3;

struct RunConfig {
  int p = 0;
  int q = 0;
  bool simplified = false;
  bool standard = false;
  double major = 2.0;
  double minor = 1.0;
  bool numeric = false;
  bool check = false;
  int grid = 2048;
  int phase_grid = 256;
  int pmax = 5;
  int qmax = 9;
  bool degrees = false;
  bool mark_points = false;
  std::string output;
  std::string format;
};

class ArgError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

void Emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty() || cfg.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + cfg.output);
  out << text;
  spdlog::info("wrote {}", cfg.output);
}

AngleUnit Unit(const RunConfig& cfg) {
  return cfg.degrees ? AngleUnit::Degrees : AngleUnit::Radians;
}

FourierKnot BuildKnot(const RunConfig& cfg, const TorusParams& params) {
  if (cfg.standard) {
    return GenStandardKnot(params, StandardTorusGeometry(cfg.major, cfg.minor));
  }
  return GenTheoremKnot(params, cfg.simplified);
}

CrossingSet BuildCrossings(const RunConfig& cfg, const TorusParams& params,
                           const FourierKnot& knot) {
  if (cfg.numeric || cfg.standard) {
    CrossingSet set = FindCrossingsNumeric(knot, cfg.grid);
    for (const auto& d : set.diagnostics) {
      spdlog::warn("{} from seed ({:.6f}, {:.6f}), residual {:.3g}",
                   d.kind == DiagnosticKind::NewtonDivergence
                       ? "Newton divergence"
                       : "tangential intersection",
                   d.seed_t1, d.seed_t2, d.residual);
    }
    if (HasTheoremShape(knot, params)) LabelFromAnalytic(set, params);
    return set;
  }
  return FindCrossingsAnalytic(knot, params);
}

int CmdGen(const RunConfig& cfg) {
  const TorusParams params(cfg.p, cfg.q);
  Emit(cfg, DumpJson(KnotToJson(BuildKnot(cfg, params), Unit(cfg))) + "\n");
  return kExitOk;
}

int CmdCrossings(const RunConfig& cfg) {
  const TorusParams params(cfg.p, cfg.q);
  const FourierKnot knot = BuildKnot(cfg, params);
  const CrossingSet set = BuildCrossings(cfg, params, knot);

  int status = kExitOk;
  if (cfg.check) {
    if (!HasTheoremShape(knot, params)) {
      throw ArgError("--check needs the Fourier-(1,1,2) form");
    }
    const CrossingSet analytic = FindCrossingsAnalytic(knot, params);
    const CrossingSet numeric = cfg.numeric ? set : FindCrossingsNumeric(knot, cfg.grid);
    CrossingSet labeled = numeric;
    const int unmatched = LabelFromAnalytic(labeled, params);
    if (numeric.crossings.size() != analytic.crossings.size() || unmatched != 0) {
      spdlog::error("numeric found {} crossings ({} unmatched), analytic {}",
                    numeric.crossings.size(), unmatched,
                    analytic.crossings.size());
      status = kExitOracleMismatch;
    } else {
      spdlog::info("numeric and analytic agree on {} crossings",
                   analytic.crossings.size());
    }
  }

  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  if (format == "json") {
    Emit(cfg, DumpJson(CrossingsToJson(set, Unit(cfg))) + "\n");
  } else if (format == "csv") {
    Emit(cfg, CrossingsToCsv(set, Unit(cfg)));
  } else if (format == "text") {
    std::ostringstream out;
    out << set.crossings.size() << " crossings, writhe " << Writhe(set) << "\n"
        << "Gauss code: " << BuildGaussCode(set).ToString() << "\n";
    Emit(cfg, out.str());
  } else {
    throw ArgError("unknown format '" + format + "' for crossings");
  }
  return status;
}

struct PairRow {
  TorusParams params;
  IdentificationReport report;
  std::string phase_check;  // "same region", "boundary", or failure text
  bool phase_ok = true;
  bool lines_ok = true;
  std::size_t line_count = 0;
  double seconds = 0.0;
};

PairRow VerifyPair(const TorusParams& params) {
  const auto start = std::chrono::steady_clock::now();
  PairRow row{params, {}, "", true, true, 0, 0.0};
  const FourierKnot knot = GenTheoremKnot(params);
  row.report = CheckIdentification(knot, FindCrossingsAnalytic(knot, params), params);

  const LineCertification cert = CertifyLines(params);
  row.lines_ok = cert.rejected.empty();
  row.line_count = cert.certified.size();

  if (params.p() % 2 == 0) {
    try {
      const FourierKnot simple = GenTheoremKnot(params, true);
      const CrossingSet simple_set = FindCrossingsAnalytic(simple, params);
      const bool same = SameKnotByPhases(params, TheoremPhases(params),
                                         SimplifiedPhases(params)) &&
                        BuildGaussCode(simple_set) ==
                            BuildGaussCode(FindCrossingsAnalytic(knot, params)) &&
                        CheckIdentification(simple, simple_set, params).passed();
      row.phase_ok = same;
      row.phase_check = same ? "same region" : "differs";
    } catch (const KnotError& e) {
      row.phase_ok = false;
      row.phase_check = e.what();
    }
  } else {
    int type2 = 0;
    for (const auto& idx : DegenerateCrossings(params, SimplifiedPhases(params))) {
      type2 += idx.kind == CrossingKind::TypeII;
    }
    row.phase_ok = type2 >= 2;
    row.phase_check = "boundary (" + std::to_string(type2) + " Type II)";
  }
  row.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return row;
}

// The Type I intercept reading that certifies for every pair, or "".
std::string CommonType1Reading(const std::vector<TorusParams>& pairs) {
  const auto first = CertifiedType1Reading(pairs.front());
  if (!first) return "";
  for (const auto& params : pairs) {
    if (CertifiedType1Reading(params) != first) return "";
  }
  return std::string(ToString(*first));
}

int CmdVerify(const RunConfig& cfg) {
  if (cfg.pmax < 2 || cfg.qmax <= cfg.pmax - 1 || cfg.qmax < 3) {
    throw ArgError("need pmax >= 2 and qmax > 2");
  }
  std::vector<TorusParams> pairs;
  for (int p = 2; p <= cfg.pmax; ++p) {
    for (int q = p + 1; q <= cfg.qmax; ++q) {
      if (std::gcd(p, q) == 1) pairs.emplace_back(p, q);
    }
  }
  if (pairs.empty()) throw ArgError("no coprime pairs in range");

  std::vector<std::optional<PairRow>> rows(pairs.size());
  const auto count = static_cast<long>(pairs.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) rows[i] = VerifyPair(pairs[i]);

  const std::string reading = CommonType1Reading(pairs);

  auto mark = [](const ConditionResult& c) {
    return !c.applicable ? "n/a" : (c.passed ? "pass" : "FAIL");
  };
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof(line), "%-8s %6s %6s %6s %6s %6s %6s  %-22s %9s\n",
                "pair", "counts", "typeI", "typeII", "alex", "lines", "phase",
                "phase detail", "time(s)");
  out << line;
  int failures = 0;
  std::vector<std::string> failed;
  for (const auto& row : rows) {
    const auto& c = row->report.conditions;
    const bool ok = row->report.passed() && row->phase_ok && row->lines_ok;
    if (!ok) {
      ++failures;
      std::string what;
      for (const auto& cond : c) {
        if (cond.applicable && !cond.passed) what += " " + cond.name + ";";
      }
      if (!row->lines_ok) what += " singular lines;";
      if (!row->phase_ok) what += " phase simplification;";
      failed.push_back("T(" + std::to_string(row->params.p()) + "," +
                       std::to_string(row->params.q()) + "):" + what);
    }
    const std::string name = "T(" + std::to_string(row->params.p()) + "," +
                             std::to_string(row->params.q()) + ")";
    std::snprintf(line, sizeof(line),
                  "%-8s %6s %6s %6s %6s %6s %6s  %-22s %9.4f\n", name.c_str(),
                  mark(c[0]), mark(c[1]), mark(c[2]), mark(c[3]),
                  row->lines_ok ? "pass" : "FAIL", row->phase_ok ? "pass" : "FAIL",
                  row->phase_check.c_str(), row->seconds);
    out << line;
  }
  out << "Type I intercept constant certified as: "
      << (reading.empty() ? "none/ambiguous" : reading) << "\n";
  out << pairs.size() - failures << "/" << pairs.size() << " pairs pass\n";
  for (const auto& f : failed) out << "failed " << f << "\n";
  Emit(cfg, out.str());
  return failures == 0 && !reading.empty() ? kExitOk : kExitVerifyFailed;
}

int CmdRender(const RunConfig& cfg) {
  const TorusParams params(cfg.p, cfg.q);
  const FourierKnot knot = BuildKnot(cfg, params);
  const CrossingSet set = BuildCrossings(cfg, params, knot);
  Emit(cfg, RenderDiagramSvg(set));
  spdlog::info("{} crossings, {} strand breaks", set.crossings.size(),
               set.crossings.size());
  return kExitOk;
}

int CmdPhaseMap(const RunConfig& cfg) {
  if (cfg.phase_grid < kMinPhaseGrid) {
    throw ArgError("grid must be >= " + std::to_string(kMinPhaseGrid));
  }
  if (cfg.p == 0 || cfg.q == 0) throw ArgError("-p and -q are required");
  const TorusParams params(cfg.p, cfg.q);
  const PhaseMap map = RenderPhaseMap(params, cfg.phase_grid);

  std::string format = cfg.format;
  if (format.empty()) {
    format = cfg.output.size() > 4 &&
                     cfg.output.compare(cfg.output.size() - 4, 4, ".png") == 0
                 ? "png"
                 : "svg";
  }
  if (format == "svg") {
    Emit(cfg, RenderPhaseMapSvg(map, cfg.mark_points));
  } else if (format == "png") {
    if (cfg.output.empty() || cfg.output == "-") {
      throw ArgError("png output needs -o <file>");
    }
    WritePhaseMapPng(map, cfg.output, cfg.mark_points);
  } else {
    throw ArgError("unknown format '" + format + "' for phase-map");
  }
  std::fprintf(stderr,
               "T(%d,%d): %d sign classes; theorem point class %d; simplified "
               "point class %d%s; simplified point on singular line: %s\n",
               params.p(), params.q(), map.class_count, map.theorem_class,
               map.simplified_class,
               map.simplified_class < 0 ? " (singular)" : "",
               map.simplified_on_line ? "yes" : "no");
  return kExitOk;
}

void ConfigureLogging() {
  auto logger = spdlog::stderr_color_mt("knot");
  spdlog::set_default_logger(logger);
  spdlog::set_pattern("[%l] %v");
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("KNOT_LOG")) {
    spdlog::set_level(spdlog::level::from_str(env));
  }
}

}  // namespace

int main(int argc, char** argv) {
  ConfigureLogging();
  CLI::App app{"Fourier-(1,1,2) torus knots: generation, crossings, "
               "identification, phase torus"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_pq = [&cfg](CLI::App* sub, bool required) {
    auto* p = sub->add_option("-p", cfg.p, "torus knot p (2 <= p < q)");
    auto* q = sub->add_option("-q", cfg.q, "torus knot q, coprime to p");
    if (required) {
      p->required();
      q->required();
    }
  };
  auto add_out = [&cfg](CLI::App* sub) {
    sub->add_option("-o,--output", cfg.output, "output file (default stdout)");
  };
  auto add_shape = [&cfg](CLI::App* sub) {
    sub->add_flag("--simplified", cfg.simplified,
                  "use phi_{z,2} = pi/(2p) (even p only)");
    sub->add_flag("--standard", cfg.standard,
                  "use the standard Fourier-(1,3,3) torus form");
    sub->add_option("--major", cfg.major, "standard form major radius R");
    sub->add_option("--minor", cfg.minor, "standard form tube radius r");
  };

  auto* gen = app.add_subcommand("gen", "emit a Fourier knot as JSON");
  add_pq(gen, true);
  add_shape(gen);
  add_out(gen);
  gen->add_flag("--degrees", cfg.degrees, "print phases in degrees");

  auto* crossings = app.add_subcommand("crossings", "list projection crossings");
  add_pq(crossings, true);
  add_shape(crossings);
  add_out(crossings);
  crossings->add_flag("--numeric", cfg.numeric, "use the numeric finder");
  crossings->add_option("--grid", cfg.grid, "numeric sampling grid");
  crossings->add_flag("--check", cfg.check,
                      "cross-check numeric against analytic (exit 3 on mismatch)");
  crossings->add_option("--format", cfg.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  crossings->add_flag("--degrees", cfg.degrees, "print times in degrees");

  auto* verify = app.add_subcommand("verify", "check T(p,q) over a range");
  verify->add_option("--pmax", cfg.pmax, "largest p");
  verify->add_option("--qmax", cfg.qmax, "largest q");
  add_out(verify);

  auto* render = app.add_subcommand("render", "SVG of the xy-projection");
  add_pq(render, true);
  add_shape(render);
  add_out(render);
  render->add_flag("--numeric", cfg.numeric, "use the numeric finder");
  render->add_option("--grid", cfg.grid, "numeric sampling grid");

  auto* phase = app.add_subcommand("phase-map", "render the phase torus");
  add_pq(phase, false);
  add_out(phase);
  phase->add_option("--grid", cfg.phase_grid, "raster size (>= 64)");
  phase->add_option("--format", cfg.format, "svg or png")
      ->check(CLI::IsMember({"svg", "png"}));
  phase->add_flag("--mark-theorem-points", cfg.mark_points,
                  "mark the theorem and simplified phase points");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadArgs;
  }

  try {
    if (*gen) return CmdGen(cfg);
    if (*crossings) return CmdCrossings(cfg);
    if (*verify) return CmdVerify(cfg);
    if (*render) return CmdRender(cfg);
    if (*phase) return CmdPhaseMap(cfg);
  } catch (const ArgError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadArgs;
  } catch (const KnotError& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::InvalidParams:
      case ErrorCode::InvalidGeometry:
      case ErrorCode::SimplifyRequiresEvenP:
      case ErrorCode::InvalidGrid:
        return kExitBadArgs;
      default:
        return kExitVerifyFailed;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return kExitBadArgs;
}
