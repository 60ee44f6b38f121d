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

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "qaoa/graph.hpp"

namespace qaoa {

using Amplitude = std::complex<double>;

/// Default memory guard: 2^30 amplitudes (16 GiB at double precision).
inline constexpr int kDefaultMaxQubits = 30;

/// Counts amplitude writes performed by instrumented kernels.
struct WriteCounter {
    std::uint64_t writes = 0;
};

namespace detail {

// Amplitude store used by the instrumented kernels; counts only when Count is set.
template <bool Count>
inline void storeAmplitude(Amplitude *amps, std::uint64_t b, Amplitude value, std::uint64_t &writes) {
    amps[b] = value;
    if constexpr (Count) {
        ++writes;
    }
}

}  // namespace detail

/// Dense pure state over n qubits. Index bit i holds the value of qubit i.
class StateVector {
  public:
    StateVector() = default;

    int numQubits() const noexcept { return n_; }
    std::uint64_t size() const noexcept { return amps_.size(); }

    std::span<Amplitude> amplitudes() noexcept { return amps_; }
    std::span<const Amplitude> amplitudes() const noexcept { return amps_; }

    Amplitude &operator[](std::uint64_t b) { return amps_[b]; }
    const Amplitude &operator[](std::uint64_t b) const { return amps_[b]; }

    /// Takes ownership of explicit amplitudes; the length must be a power of two.
    static StateVector fromAmplitudes(std::vector<Amplitude> amps);

  private:
    friend StateVector allocateState(int n, int maxQubits);

    int n_ = 0;
    std::vector<Amplitude> amps_;
};

/// Zero-filled vector of 2^n amplitudes after checking the memory guard.
StateVector allocateState(int n, int maxQubits = kDefaultMaxQubits);

StateVector initZeroState(int n, int maxQubits = kDefaultMaxQubits);

void applyH(StateVector &s, int q);

/// RX(theta) = exp(-i theta X / 2).
void applyRX(StateVector &s, int q, double theta);

/// RZZ(theta) = exp(-i theta Z_q1 Z_q2 / 2): phase e^{-i theta/2} when the two
/// bits agree and e^{+i theta/2} when they differ.
void applyRZZ(StateVector &s, int q1, int q2, double theta, WriteCounter *counter = nullptr);

/// Componentwise max |a[b] - b[b]|. Global phase is not factored out.
double maxAbsDiff(const StateVector &a, const StateVector &b);

/// Sum of |amp|^2 with a thread-count-independent reduction order.
double normSquared(const StateVector &s);

/// Writes "index real imag" per line at round-trip precision.
void dumpState(std::ostream &out, const StateVector &s);

}  // namespace qaoa
