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

#include <cstdint>
#include <vector>

#include "qaoa/graph.hpp"
#include "qaoa/state_vector.hpp"

namespace qaoa {

/// Precomputed inputs of the single-pass cost layer.
///
/// Holds its own copy of the graph together with the flattened edge arrays
/// used by the weighted kernel and the row masks used by the bitwise kernel.
class CompressedCostPlan {
  public:
    explicit CompressedCostPlan(Graph g);

    const Graph &graph() const noexcept { return graph_; }
    int numQubits() const noexcept { return graph_.numNodes(); }
    int totEdge() const noexcept { return graph_.totEdge(); }
    bool isUnweighted() const noexcept { return graph_.isUnweighted(); }
    std::span<const Mask> rowMasks() const noexcept { return graph_.rowMasks(); }

    /// All bits below numQubits() set.
    Mask wordMask() const noexcept { return wordMask_; }

    std::span<const int> edgeFirst() const noexcept { return first_; }
    std::span<const int> edgeSecond() const noexcept { return second_; }
    std::span<const double> edgeWeight() const noexcept { return weight_; }

  private:
    Graph graph_;
    Mask wordMask_ = 0;
    std::vector<int> first_;
    std::vector<int> second_;
    std::vector<double> weight_;
};

/// Sum over edges of w * (-1)^(b_i xor b_j): cut edges subtract, uncut edges add.
double totalRotationWeighted(const CompressedCostPlan &plan, Bitstring b);

/// Broadcasts bit i of b to every position of a word: 0 -> all zeros, 1 -> all ones.
/// Computed as ~((b >> i) & 1) + 1 in unsigned arithmetic.
constexpr Mask broadcastBit(Bitstring b, int i) noexcept {
    return ~((b >> i) & Mask{1}) + Mask{1};
}

/// Cut edges contributed by one row: popcount(rowMask & (bI ^ b)), restricted to `wordMask`.
int rowCutCount(Mask rowMask, Mask bI, Bitstring b, Mask wordMask) noexcept;

/// Number of cut edges of b, one popcount per row. Unweighted graphs only.
int cutEdgeCountBitwise(const CompressedCostPlan &plan, Bitstring b);

/// totEdge - 2 * cutEdgeCountBitwise(b). Unweighted graphs only.
int totalRotationUnweighted(const CompressedCostPlan &plan, Bitstring b);

/// amps[b] *= exp(-(i/2) * gamma * totalRotationWeighted(b)) for every b.
void applyCostCompressed(StateVector &s, const CompressedCostPlan &plan, double gamma,
                         WriteCounter *counter = nullptr);

/// Same contract as applyCostCompressed; rotations come from the popcount
/// kernel and phases from a table indexed by the integer rotation.
void applyCostBitwise(StateVector &s, const CompressedCostPlan &plan, double gamma, WriteCounter *counter = nullptr);

enum class PopcountMode { Native, Table };

/// Strip-mined bitwise kernel: processes `batchWidth` (1, 2, 4 or 8) basis
/// indices per inner iteration. Produces bit-identical results to
/// applyCostBitwise for every width and popcount mode.
void applyCostBatched(StateVector &s, const CompressedCostPlan &plan, double gamma, int batchWidth,
                      PopcountMode mode = PopcountMode::Native, WriteCounter *counter = nullptr);

/// Popcount via an 8-bit lookup table, for targets without a native instruction.
int popcountTable(std::uint64_t x) noexcept;

/// e^{-(i/2) gamma t} for t = -totEdge .. totEdge, stored at index t + totEdge.
std::vector<Amplitude> rotationPhaseTable(int totEdge, double gamma);

/// The phase a single amplitude receives for total rotation t.
inline Amplitude rotationPhase(double gamma, double t) { return std::polar(1.0, -0.5 * gamma * t); }

}  // namespace qaoa
