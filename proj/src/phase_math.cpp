// Copyright 2026 The qaoa-sim Authors
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


#include "phase_math.hpp"

#include <cmath>

#if defined(__GNUC__) && !defined(__clang__) && defined(__x86_64__)
#define QAOA_PHASE_CLONES __attribute__((target_clones("arch=haswell", "default")))
#else
#define QAOA_PHASE_CLONES
#endif

namespace qaoa::detail {

QAOA_PHASE_CLONES void unitPhases(const double *angle, double *re, double *im, std::size_t count) noexcept {
#pragma omp simd
    for (std::size_t k = 0; k < count; ++k) {
        re[k] = std::cos(angle[k]);
        im[k] = std::sin(angle[k]);
    }
}

}  // namespace qaoa::detail
