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
#include <stdexcept>
#include <string>

namespace qaoa {

/// Base class for every error raised by the simulator.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed edge-list input. `line()` is 1-based; 0 when the error is not tied to a line.
class ParseError : public Error {
  public:
    ParseError(std::size_t line, const std::string &message)
        : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

/// Inconsistent configuration, e.g. the bitwise backend on a weighted graph.
class ConfigError : public Error {
  public:
    using Error::Error;
};

/// A size guard refused the request (state-vector memory or brute-force enumeration).
class GuardError : public Error {
  public:
    using Error::Error;
};

}  // namespace qaoa
