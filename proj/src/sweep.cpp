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

#include "sacsphere/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <tuple>

#include "sacsphere/errors.hpp"
#include "sacsphere/metrics.hpp"

namespace sacsphere {

namespace {

struct Instance {
  int l;
  IntegerPairSequence seq;
  std::uint64_t n;
};

SweepRow run_instance(const SweepSpec& spec, const Instance& inst, Exec exec) {
  SweepRow row;
  row.family = spec.family;
  row.l = inst.l;
  row.seq = format_sequence(inst.seq);
  row.n = inst.n;
  const auto start = std::chrono::steady_clock::now();
  try {
    const SphericalConfig cfg = generate(spec.base, inst.seq, exec);
    row.separation = separation(*cfg.hull, exec);
    row.covering = covering(*cfg.hull, exec);
    row.mesh_ratio = row.covering / row.separation;
  } catch (const std::exception& e) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    row.separation = row.covering = row.mesh_ratio = nan;
    row.error = e.what();
  }
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return row;
}

std::string quoted(const std::string& s) { return '"' + s + '"'; }

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool in_quotes = false;
  for (char c : line) {
    if (c == '"') {
      in_quotes = !in_quotes;
    } else if (c == ',' && !in_quotes) {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec, int jobs) {
  if (spec.l_min < 1 || spec.l_max < spec.l_min) throw ParameterError("invalid l range");
  const SequenceFamily family = SequenceFamily::parse(spec.family);
  const std::size_t base_vertices = base_polyhedron(spec.base).vertices.size();

  std::vector<Instance> instances;
  for (int l = spec.l_min; l <= spec.l_max; ++l) {
    IntegerPairSequence seq = family.instantiate(l);
    std::uint64_t n = 0;
    try {
      n = expected_cardinality(base_vertices, seq);
    } catch (const ParameterError&) {
      continue;  // overflow: certainly above the cap
    }
    if (n > spec.n_cap) continue;
    instances.push_back({l, std::move(seq), n});
  }

  std::vector<SweepRow> rows(instances.size());
  const auto count = static_cast<std::int64_t>(instances.size());
  if (jobs > 1) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
    for (std::int64_t i = 0; i < count; ++i) rows[i] = run_instance(spec, instances[i], Exec::kSerial);
  } else {
    for (std::int64_t i = 0; i < count; ++i) {
      rows[i] = run_instance(spec, instances[i], Exec::kParallel);
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
    return std::tie(a.n, a.family, a.l) < std::tie(b.n, b.family, b.l);
  });
  return rows;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows, bool header) {
  if (header) os << kSweepHeader << '\n';
  for (const SweepRow& r : rows) {
    os << quoted(r.family) << ',' << r.l << ',' << quoted(r.seq) << ',' << r.n << ','
       << std::setprecision(17) << r.separation << ',' << r.covering << ',' << r.mesh_ratio << ','
       << std::setprecision(6) << r.seconds << '\n';
  }
}

std::vector<SweepRow> read_sweep_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw IoError("empty sweep CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kSweepHeader) throw IoError("unexpected sweep CSV header: " + line);
  std::vector<SweepRow> rows;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto f = split_csv(line);
    if (f.size() != 8) throw IoError("sweep CSV line " + std::to_string(lineno) + ": expected 8 fields");
    try {
      SweepRow r;
      r.family = f[0];
      r.l = std::stoi(f[1]);
      r.seq = f[2];
      r.n = std::stoull(f[3]);
      r.separation = std::stod(f[4]);
      r.covering = std::stod(f[5]);
      r.mesh_ratio = std::stod(f[6]);
      r.seconds = std::stod(f[7]);
      rows.push_back(std::move(r));
    } catch (const std::exception&) {
      throw IoError("sweep CSV line " + std::to_string(lineno) + ": malformed number");
    }
  }
  return rows;
}

}  // namespace sacsphere
