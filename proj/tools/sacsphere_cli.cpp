// Copyright 2026 The sacsphere Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// sacsphere: generate and evaluate N-point spherical configurations.
//
//   sacsphere generate --base icosa --seq "1,1;(4,0)^2" --format obj --out mesh.obj
//   sacsphere metrics  --base icosa --seq "27,0"
//   sacsphere metrics  --in points.csv --format kv
//   sacsphere sweep    --base icosa --family "1,1;(l,0)" --l-max 57 --n-cap 100000 --out s.csv
//   sacsphere export   --in points.csv --format obj --out mesh.obj
//
// Exit codes: 0 success, 2 parse/parameter error, 3 geometry/solver error,
// 4 I/O error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sacsphere/errors.hpp"
#include "sacsphere/hull.hpp"
#include "sacsphere/io.hpp"
#include "sacsphere/meshgen.hpp"
#include "sacsphere/metrics.hpp"
#include "sacsphere/sequence.hpp"
#include "sacsphere/sweep.hpp"

namespace {

using namespace sacsphere;

enum ExitCode { kOk = 0, kParamError = 2, kGeometryError = 3, kIoError = 4 };

struct Options {
  std::string base = "icosa";
  std::string seq;
  std::string in;
  std::string format;
  std::string out;
  std::string label;
  std::string family;
  int l_min = 1;
  int l_max = 1;
  std::uint64_t n_cap = 1000000;
  int jobs = 1;
  bool with_metrics = false;
  bool append = false;
};

void emit(const Options& o, const std::string& contents) {
  if (o.out.empty()) {
    std::cout << contents;
  } else {
    io::write_text_file(o.out, contents);
  }
}

std::ostream& info_stream(const Options& o) { return o.out.empty() ? std::cerr : std::cout; }

SphericalConfig load_config(const Options& o) {
  if (!o.in.empty()) {
    if (!o.seq.empty()) throw ParameterError("use either --in or --seq, not both");
    SphericalConfig cfg;
    cfg.points = io::read_csv_file(o.in);
    cfg.base = "file";
    return cfg;
  }
  if (o.seq.empty()) throw ParameterError("one of --in or --seq is required");
  return generate(parse_base(o.base), parse_sequence(o.seq));
}

// Writes points (csv), mesh (obj) or metadata with points (json), and for
// csv/obj files a metadata sidecar next to the output.
void write_config(const Options& o, SphericalConfig& cfg, const std::optional<MetricsReport>& m) {
  const std::string format = o.format.empty() ? "csv" : o.format;
  std::ostringstream body;
  if (format == "csv") {
    io::write_csv(body, cfg.points);
  } else if (format == "obj") {
    if (!cfg.hull) cfg.hull = convex_hull_triangulation(cfg.points);
    io::write_obj(body, *cfg.hull);
  } else if (format == "json") {
    body << io::metadata_json(cfg, m, true);
  } else {
    throw ParameterError("unknown format '" + format + "' (expected csv, obj or json)");
  }
  emit(o, body.str());
  if (!o.out.empty() && format != "json") {
    io::write_text_file(o.out + ".json", io::metadata_json(cfg, m, false));
  }
}

int cmd_generate(const Options& o) {
  SphericalConfig cfg = generate(parse_base(o.base), parse_sequence(o.seq));
  std::optional<MetricsReport> m;
  if (o.with_metrics) m = compute_metrics(*cfg.hull);
  write_config(o, cfg, m);
  auto& info = info_stream(o);
  info << "N=" << cfg.points.size() << " base=" << cfg.base
       << " seq=" << describe_sequence(*cfg.sequence) << '\n';
  if (m) info << io::metrics_kv(*m);
  return kOk;
}

int cmd_metrics(const Options& o) {
  const SphericalConfig cfg = load_config(o);
  const MetricsReport m = compute_metrics(cfg);
  const std::string format = o.format.empty() ? "text" : o.format;
  std::string label = o.label;
  if (label.empty()) label = cfg.sequence ? cfg.base + " " + describe_sequence(*cfg.sequence) : o.in;
  std::string text;
  if (format == "text") {
    text = label + "\n" + io::metrics_text(m);
  } else if (format == "kv") {
    text = io::metrics_kv(m);
  } else if (format == "csv") {
    text = io::metrics_csv(m, label);
  } else if (format == "json") {
    text = io::metadata_json(cfg, m, false);
  } else {
    throw ParameterError("unknown metrics format '" + format + "' (expected text, kv, csv or json)");
  }
  emit(o, text);
  return kOk;
}

int cmd_sweep(const Options& o) {
  SweepSpec spec;
  spec.base = parse_base(o.base);
  spec.family = o.family;
  spec.l_min = o.l_min;
  spec.l_max = o.l_max;
  spec.n_cap = o.n_cap;
  const auto rows = run_sweep(spec, o.jobs);
  for (const auto& r : rows) {
    if (!r.error.empty()) std::cerr << "l=" << r.l << " (" << r.seq << "): " << r.error << '\n';
  }

  if (o.out.empty()) {
    write_sweep_csv(std::cout, rows, true);
    return kOk;
  }
  namespace fs = std::filesystem;
  bool header = true;
  if (o.append && fs::exists(o.out) && fs::file_size(o.out) > 0) {
    std::ifstream existing(o.out);
    std::string first;
    std::getline(existing, first);
    if (first != kSweepHeader) throw IoError(o.out + " is not a sweep CSV");
    header = false;
  }
  std::ofstream out(o.out, o.append ? std::ios::app : std::ios::trunc);
  if (!out) throw IoError("cannot write " + o.out);
  write_sweep_csv(out, rows, header);
  if (!out) throw IoError("write failed for " + o.out);
  std::cout << rows.size() << " rows written to " << o.out << '\n';
  return kOk;
}

int cmd_export(const Options& o) {
  if (o.in.empty()) throw ParameterError("export needs --in");
  SphericalConfig cfg;
  cfg.points = io::read_csv_file(o.in);
  cfg.base = "file";
  std::optional<MetricsReport> m;
  if (o.with_metrics) m = compute_metrics(cfg);
  write_config(o, cfg, m);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spherical point configurations from spherical area coordinates"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("generate", "Generate a configuration from a base and sequence");
  gen->add_option("--base", o.base, "Base polyhedron: tetra, octa or icosa")->capture_default_str();
  gen->add_option("--seq", o.seq, "Integer-pair sequence, e.g. \"1,1;(4,0)^2\"")->required();
  gen->add_option("--format", o.format, "Output format: csv, obj or json");
  gen->add_option("--out", o.out, "Output path (default: standard output)");
  gen->add_flag("--metrics", o.with_metrics, "Also compute quality metrics");

  auto* met = app.add_subcommand("metrics", "Separation, covering radius, mesh ratio, edge ratios");
  met->add_option("--base", o.base, "Base polyhedron for --seq")->capture_default_str();
  met->add_option("--seq", o.seq, "Integer-pair sequence to generate");
  met->add_option("--in", o.in, "CSV file of x,y,z points");
  met->add_option("--format", o.format, "Report format: text, kv, csv or json");
  met->add_option("--out", o.out, "Output path (default: standard output)");
  met->add_option("--label", o.label, "Label for the CSV record");

  auto* swp = app.add_subcommand("sweep", "Mesh ratios along a one-parameter sequence family");
  swp->add_option("--base", o.base, "Base polyhedron")->capture_default_str();
  swp->add_option("--family", o.family, "Family template in l, e.g. \"1,1;(4,0)^l\"")->required();
  swp->add_option("--l-min", o.l_min, "First l")->capture_default_str();
  swp->add_option("--l-max", o.l_max, "Last l")->capture_default_str();
  swp->add_option("--n-cap", o.n_cap, "Skip instances with N above this")->capture_default_str();
  swp->add_option("--jobs", o.jobs, "Instances run concurrently")->capture_default_str();
  swp->add_option("--out", o.out, "Output CSV (default: standard output)");
  swp->add_flag("--append", o.append, "Append rows to an existing sweep CSV");

  auto* exp = app.add_subcommand("export", "Convert a CSV point set to csv, obj or json");
  exp->add_option("--in", o.in, "CSV file of x,y,z points")->required();
  exp->add_option("--format", o.format, "Output format: csv, obj or json");
  exp->add_option("--out", o.out, "Output path (default: standard output)");
  exp->add_flag("--metrics", o.with_metrics, "Include metrics in the JSON metadata");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParamError;
  }

  try {
    if (gen->parsed()) return cmd_generate(o);
    if (met->parsed()) return cmd_metrics(o);
    if (swp->parsed()) return cmd_sweep(o);
    if (exp->parsed()) return cmd_export(o);
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParamError;
  } catch (const GeometryError& e) {
    std::cerr << "geometry error: " << e.what() << '\n';
    return kGeometryError;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency error: " << e.what() << '\n';
    return kGeometryError;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kIoError;
  }
  return kOk;
}
