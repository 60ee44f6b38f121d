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

#include <cstddef>

namespace qaoa::detail {

/// re[k] = cos(angle[k]), im[k] = sin(angle[k]) for k < count. Built as its own
/// translation unit so the loop can use the vector math library when present.
void unitPhases(const double *angle, double *re, double *im, std::size_t count) noexcept;

}  // namespace qaoa::detail
