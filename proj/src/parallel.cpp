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


#include "qaoa/parallel.hpp"

#include <omp.h>

#include <thread>

namespace qaoa {

void setNumThreads(int threads) {
    omp_set_num_threads(threads < 1 ? hardwareThreads() : threads);
}

int numThreads() { return omp_get_max_threads(); }

int hardwareThreads() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace detail {

double pairwiseSum(std::vector<double> &values) {
    if (values.empty()) {
        return 0.0;
    }
    std::size_t live = values.size();
    while (live > 1) {
        const std::size_t half = live / 2;
        for (std::size_t k = 0; k < half; ++k) {
            values[k] = values[2 * k] + values[2 * k + 1];
        }
        if (live % 2 == 1) {
            values[half] = values[live - 1];
            live = half + 1;
        } else {
            live = half;
        }
    }
    return values[0];
}

}  // namespace detail
}  // namespace qaoa
