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

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "sacsphere/errors.hpp"
#include "sacsphere/metrics.hpp"
#include "sacsphere/sweep.hpp"

using namespace sacsphere;

TEST(Sweep, IcosahedralFamilyRows) {
  SweepSpec spec;
  spec.family = "l,0";
  spec.l_min = 1;
  spec.l_max = 31;
  const auto rows = run_sweep(spec);
  ASSERT_EQ(rows.size(), 31u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const int l = static_cast<int>(i) + 1;
    EXPECT_EQ(rows[i].l, l);
    EXPECT_EQ(rows[i].n, static_cast<std::uint64_t>(10 * l * l + 2));
    EXPECT_TRUE(rows[i].error.empty());
    if (rows[i].n >= 100) {
      EXPECT_GT(rows[i].mesh_ratio, 0.618);
    }
    EXPECT_EQ(rows[i].mesh_ratio, rows[i].covering / rows[i].separation);
  }
}

TEST(Sweep, RepetitionFamilyRespectsCap) {
  SweepSpec spec;
  spec.family = "1,1;(4,0)^l";
  spec.l_min = 1;
  spec.l_max = 5;
  spec.n_cap = 1000000;
  const auto rows = run_sweep(spec);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].n, 482u);
  EXPECT_EQ(rows[1].n, 7682u);
  EXPECT_EQ(rows[2].n, 122882u);
  EXPECT_EQ(rows[1].seq, "1,1;(4,0)^2");
}

TEST(Sweep, ConcurrentJobsMatchSequential) {
  SweepSpec spec;
  spec.family = "1,1;(l,0)";
  spec.l_max = 6;
  const auto a = run_sweep(spec, 1);
  const auto b = run_sweep(spec, 3);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].n, b[i].n);
    EXPECT_EQ(a[i].mesh_ratio, b[i].mesh_ratio);
  }
}

TEST(Sweep, InvalidInstancesBecomeErrorsOrParameterErrors) {
  SweepSpec spec;
  spec.family = "l,0";
  spec.l_min = 0;
  EXPECT_THROW(run_sweep(spec), ParameterError);
  spec.l_min = 3;
  spec.l_max = 2;
  EXPECT_THROW(run_sweep(spec), ParameterError);
}

TEST(Sweep, CsvRoundTrip) {
  SweepSpec spec;
  spec.family = "1,1;(l,0)";
  spec.l_max = 4;
  const auto rows = run_sweep(spec);
  std::stringstream ss;
  write_sweep_csv(ss, rows);
  EXPECT_EQ(ss.str().rfind(std::string(kSweepHeader) + "\n", 0), 0u);
  const auto back = read_sweep_csv(ss);
  ASSERT_EQ(back.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(back[i].family, rows[i].family);
    EXPECT_EQ(back[i].seq, rows[i].seq);
    EXPECT_EQ(back[i].n, rows[i].n);
    EXPECT_EQ(back[i].mesh_ratio, rows[i].mesh_ratio);
  }
  std::istringstream bad("a,b,c\n");
  EXPECT_THROW(read_sweep_csv(bad), IoError);
}
