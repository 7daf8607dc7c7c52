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

#include "sacsphere/errors.hpp"
#include "sacsphere/hull.hpp"
#include "sacsphere/meshgen.hpp"
#include "sacsphere/metrics.hpp"
#include "sacsphere/parallel.hpp"

using namespace sacsphere;

namespace {

class ParallelTest : public ::testing::Test {
 protected:
  void SetUp() override {
#ifdef SACSPHERE_HAVE_OPENMP
    saved_ = omp_get_max_threads();
    omp_set_num_threads(4);  // exercise the threaded path even on one core
#endif
  }
  void TearDown() override {
#ifdef SACSPHERE_HAVE_OPENMP
    omp_set_num_threads(saved_);
#endif
  }
  int saved_ = 1;
};

}  // namespace

TEST_F(ParallelTest, SubdivisionIsBitIdentical) {
  for (const char* s : {"9,4", "1,1;(4,0)^2", "2,1;3,1"}) {
    const auto seq = parse_sequence(s);
    const auto a = generate(BasePolyhedron::kIcosahedron, seq, Exec::kSerial);
    const auto b = generate(BasePolyhedron::kIcosahedron, seq, Exec::kParallel);
    ASSERT_EQ(a.points, b.points) << s;
    ASSERT_EQ(a.hull->faces, b.hull->faces) << s;
  }
}

TEST_F(ParallelTest, MetricsAreBitIdentical) {
  const auto cfg = generate(BasePolyhedron::kIcosahedron, parse_sequence("1,1;(15,2)"));
  const auto a = compute_metrics(cfg, Exec::kSerial);
  const auto b = compute_metrics(cfg, Exec::kParallel);
  EXPECT_EQ(a.separation, b.separation);
  EXPECT_EQ(a.covering, b.covering);
  EXPECT_EQ(a.mesh_ratio, b.mesh_ratio);
  EXPECT_EQ(a.edge_ratio_min, b.edge_ratio_min);
  EXPECT_EQ(a.edge_ratio_histogram, b.edge_ratio_histogram);
  EXPECT_EQ(edge_ratios(*cfg.hull, Exec::kSerial), edge_ratios(*cfg.hull, Exec::kParallel));
}

TEST_F(ParallelTest, FaceErrorsReportLowestFace) {
  // A repeated vertex makes every face through it degenerate.
  TriangulatedSphereMesh bad = base_polyhedron(BasePolyhedron::kOctahedron);
  bad.vertices[bad.faces[3][0]] = bad.vertices[bad.faces[3][1]];
  std::string serial_msg, parallel_msg;
  try {
    subdivide_mesh(bad, IntegerPair(3, 0), Exec::kSerial);
  } catch (const GeometryError& e) {
    serial_msg = e.what();
  }
  try {
    subdivide_mesh(bad, IntegerPair(3, 0), Exec::kParallel);
  } catch (const GeometryError& e) {
    parallel_msg = e.what();
  }
  EXPECT_FALSE(serial_msg.empty());
  EXPECT_EQ(serial_msg, parallel_msg);
  EXPECT_EQ(serial_msg.rfind("face ", 0), 0u);
}
