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

#include <cstddef>

#ifdef SACSPHERE_HAVE_OPENMP
#include <omp.h>
#endif

namespace sacsphere {

// Selects the serial reference kernels or their OpenMP counterparts. Both
// produce bit-identical results; the serial path is kept for testing.
enum class Exec { kSerial, kParallel };

inline int max_threads() noexcept {
#ifdef SACSPHERE_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace sacsphere
