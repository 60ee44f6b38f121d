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


#include "qaoa/state_vector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include "qaoa/errors.hpp"
#include "qaoa/parallel.hpp"

namespace qaoa {

namespace {

void checkQubit(const StateVector &s, int q) {
    if (q < 0 || q >= s.numQubits()) {
        throw std::out_of_range("qubit " + std::to_string(q) + " outside [0, " + std::to_string(s.numQubits()) + ")");
    }
}

// Visits every (b, b | 2^q) pair with bit q of b clear. Workers split on the
// pair index, so no amplitude is touched by two workers.
template <typename PairOp>
void forEachPair(StateVector &s, int q, PairOp op) {
    Amplitude *amps = s.amplitudes().data();
    const std::uint64_t stride = std::uint64_t{1} << q;
    const std::uint64_t lowMask = stride - 1;
    const auto pairs = static_cast<std::int64_t>(s.size() / 2);
#pragma omp parallel for schedule(static)
    for (std::int64_t k = 0; k < pairs; ++k) {
        const auto uk = static_cast<std::uint64_t>(k);
        const std::uint64_t b0 = ((uk & ~lowMask) << 1) | (uk & lowMask);
        op(amps[b0], amps[b0 | stride]);
    }
}

template <bool Count>
std::uint64_t rzzSweep(StateVector &s, int q1, int q2, Amplitude same, Amplitude differ) {
    Amplitude *amps = s.amplitudes().data();
    const auto size = static_cast<std::int64_t>(s.size());
    std::uint64_t writes = 0;
#pragma omp parallel for schedule(static) reduction(+ : writes)
    for (std::int64_t k = 0; k < size; ++k) {
        const auto b = static_cast<std::uint64_t>(k);
        const Amplitude phase = (((b >> q1) ^ (b >> q2)) & 1U) ? differ : same;
        detail::storeAmplitude<Count>(amps, b, amps[b] * phase, writes);
    }
    return writes;
}

}  // namespace

StateVector StateVector::fromAmplitudes(std::vector<Amplitude> amps) {
    if (amps.empty() || !std::has_single_bit(amps.size())) {
        throw ConfigError("amplitude count " + std::to_string(amps.size()) + " is not a power of two");
    }
    StateVector s;
    s.n_ = std::countr_zero(amps.size());
    s.amps_ = std::move(amps);
    return s;
}

StateVector allocateState(int n, int maxQubits) {
    if (n < 1) {
        throw ConfigError("qubit count must be at least 1 (got " + std::to_string(n) + ")");
    }
    if (n > maxQubits || n >= 63) {
        const double bytes = std::ldexp(static_cast<double>(sizeof(Amplitude)), n);
        throw GuardError("refusing to allocate 2^" + std::to_string(n) + " amplitudes (" +
                         std::to_string(bytes / (1024.0 * 1024.0 * 1024.0)) + " GiB); the qubit guard is " +
                         std::to_string(maxQubits));
    }
    StateVector s;
    s.n_ = n;
    s.amps_.assign(std::uint64_t{1} << n, Amplitude{0.0, 0.0});
    return s;
}

StateVector initZeroState(int n, int maxQubits) {
    StateVector s = allocateState(n, maxQubits);
    s[0] = 1.0;
    return s;
}

void applyH(StateVector &s, int q) {
    checkQubit(s, q);
    const double r = 1.0 / std::sqrt(2.0);
    forEachPair(s, q, [r](Amplitude &a0, Amplitude &a1) {
        const Amplitude x = a0;
        const Amplitude y = a1;
        a0 = (x + y) * r;
        a1 = (x - y) * r;
    });
}

void applyRX(StateVector &s, int q, double theta) {
    checkQubit(s, q);
    const double c = std::cos(theta / 2.0);
    const Amplitude mis{0.0, -std::sin(theta / 2.0)};
    forEachPair(s, q, [c, mis](Amplitude &a0, Amplitude &a1) {
        const Amplitude x = a0;
        const Amplitude y = a1;
        a0 = c * x + mis * y;
        a1 = mis * x + c * y;
    });
}

void applyRZZ(StateVector &s, int q1, int q2, double theta, WriteCounter *counter) {
    checkQubit(s, q1);
    checkQubit(s, q2);
    if (q1 == q2) {
        throw std::invalid_argument("RZZ needs two distinct qubits (got " + std::to_string(q1) + " twice)");
    }
    const Amplitude same = std::polar(1.0, -theta / 2.0);
    const Amplitude differ = std::polar(1.0, theta / 2.0);
    if (counter != nullptr) {
        counter->writes += rzzSweep<true>(s, q1, q2, same, differ);
    } else {
        rzzSweep<false>(s, q1, q2, same, differ);
    }
}

double maxAbsDiff(const StateVector &a, const StateVector &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("state size mismatch: 2^" + std::to_string(a.numQubits()) + " vs 2^" +
                                    std::to_string(b.numQubits()));
    }
    double worst = 0.0;
    for (std::uint64_t k = 0; k < a.size(); ++k) {
        worst = std::max(worst, std::abs(a[k] - b[k]));
    }
    return worst;
}

double normSquared(const StateVector &s) {
    const auto amps = s.amplitudes();
    return deterministicSum(s.size(), [amps](std::uint64_t b) { return std::norm(amps[b]); });
}

void dumpState(std::ostream &out, const StateVector &s) {
    const auto old = out.precision(std::numeric_limits<double>::max_digits10);
    for (std::uint64_t b = 0; b < s.size(); ++b) {
        out << b << ' ' << s[b].real() << ' ' << s[b].imag() << '\n';
    }
    out.precision(old);
}

}  // namespace qaoa
