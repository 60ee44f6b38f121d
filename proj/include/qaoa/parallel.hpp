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


#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace qaoa {

/// Sets the worker count used by every kernel. Values < 1 restore the hardware default.
void setNumThreads(int threads);
int numThreads();
int hardwareThreads();

namespace detail {

// Chunk size of the deterministic reduction. The partition depends only on the
// problem size, never on the thread count.
inline constexpr std::size_t kReductionChunk = std::size_t{1} << 12;

double pairwiseSum(std::vector<double> &values);

}  // namespace detail

/// Sums `term(k)` for k in [0, count) with a fixed-shape reduction tree, so the
/// result is bit-identical for any number of threads.
template <typename Term>
double deterministicSum(std::uint64_t count, Term &&term) {
    const std::uint64_t chunks = (count + detail::kReductionChunk - 1) / detail::kReductionChunk;
    std::vector<double> partial(static_cast<std::size_t>(chunks), 0.0);
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
        const std::uint64_t begin = static_cast<std::uint64_t>(c) * detail::kReductionChunk;
        const std::uint64_t end = std::min<std::uint64_t>(begin + detail::kReductionChunk, count);
        double acc = 0.0;
        for (std::uint64_t k = begin; k < end; ++k) {
            acc += term(k);
        }
        partial[static_cast<std::size_t>(c)] = acc;
    }
    return detail::pairwiseSum(partial);
}

}  // namespace qaoa
