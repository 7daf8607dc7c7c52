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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sacsphere/meshgen.hpp"
#include "sacsphere/sequence.hpp"

namespace sacsphere {

/// A parameterised family of configurations, one per l in [l_min, l_max].
struct SweepSpec {
  BasePolyhedron base = BasePolyhedron::kIcosahedron;
  std::string family;  // SequenceFamily text, e.g. "1,1;(4,0)^l"
  int l_min = 1;
  int l_max = 1;
  std::uint64_t n_cap = 1000000;  // instances with N > n_cap are skipped
};

struct SweepRow {
  std::string family;
  int l = 0;
  std::string seq;
  std::uint64_t n = 0;
  double separation = 0.0;
  double covering = 0.0;
  double mesh_ratio = 0.0;
  double seconds = 0.0;
  std::string error;  // non-empty for failed instances (metrics are NaN)
};

/// Runs every instance with N <= n_cap, `jobs` at a time. Each instance is
/// generated with the serial kernels when jobs > 1. Failed instances yield an
/// error row; the rest continue. Rows are sorted by (N, family, l).
std::vector<SweepRow> run_sweep(const SweepSpec& spec, int jobs = 1);

inline constexpr const char* kSweepHeader = "family,l,seq,N,separation,covering,mesh_ratio,seconds";

/// Writes rows in the `family,l,seq,N,separation,covering,mesh_ratio,seconds`
/// column contract; the header is written when `header` is set.
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows, bool header = true);

/// Parses a sweep CSV produced by write_sweep_csv (header required).
std::vector<SweepRow> read_sweep_csv(std::istream& is);

}  // namespace sacsphere
