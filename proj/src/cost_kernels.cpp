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


#include "qaoa/cost_kernels.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>

#include "phase_math.hpp"
#include "qaoa/errors.hpp"

namespace qaoa {

namespace {

constexpr std::array<std::uint8_t, 256> makePopcountTable() {
    std::array<std::uint8_t, 256> table{};
    for (int v = 0; v < 256; ++v) {
        table[static_cast<std::size_t>(v)] =
            static_cast<std::uint8_t>((v & 1) + table[static_cast<std::size_t>(v >> 1)]);
    }
    return table;
}

constexpr std::array<std::uint8_t, 256> kPopcount8 = makePopcountTable();

void requireUnweighted(const CompressedCostPlan &plan) {
    if (!plan.isUnweighted()) {
        throw ConfigError("the bitwise cost kernel requires an unweighted graph (every edge weight equal to 1)");
    }
}

void requireMatchingSize(const StateVector &s, const CompressedCostPlan &plan) {
    if (s.numQubits() != plan.numQubits()) {
        throw std::invalid_argument("state has " + std::to_string(s.numQubits()) + " qubits but the graph has " +
                                    std::to_string(plan.numQubits()) + " nodes");
    }
}

#if defined(__GNUC__) && !defined(__clang__) && defined(__x86_64__)
#define QAOA_KERNEL_CLONES __attribute__((target_clones("arch=haswell", "popcnt", "default")))
#else
#define QAOA_KERNEL_CLONES
#endif

// Amplitudes handed to one worker call. A power of two, so it divides every
// state size it is used with.
constexpr std::uint64_t kChunk = std::uint64_t{1} << 12;

// Lanes of the compressed kernel: the low kLaneBits index bits.
constexpr int kLaneBits = 4;

int popcountBytes(std::uint64_t x, int bytes) noexcept {
    int total = 0;
    for (int byte = 0; byte < bytes; ++byte) {
        total += kPopcount8[static_cast<std::size_t>((x >> (8 * byte)) & 0xFFU)];
    }
    return total;
}

template <PopcountMode Mode>
inline int popcountWith(std::uint64_t x, int bytes) noexcept {
    if constexpr (Mode == PopcountMode::Native) {
        return std::popcount(x);
    } else {
        return popcountBytes(x, bytes);
    }
}

inline int cutEdges(std::span<const Mask> rows, Bitstring b, Mask wordMask) noexcept {
    int cneg = 0;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
        cneg += std::popcount(rows[static_cast<std::size_t>(i)] & (broadcastBit(b, i) ^ b) & wordMask);
    }
    return cneg;
}

inline double weightedRotation(const int *first, const int *second, const double *weight, std::size_t edges,
                               Bitstring b) noexcept {
    double t = 0.0;
    for (std::size_t e = 0; e < edges; ++e) {
        const auto cut = static_cast<double>(((b >> first[e]) ^ (b >> second[e])) & 1U);
        t += weight[e] * (1.0 - 2.0 * cut);
    }
    return t;
}

// w when flip is 0, -w when flip is 1.
inline double signedWeight(double w, std::uint64_t flip) noexcept {
    return std::bit_cast<double>(std::bit_cast<std::uint64_t>(w) ^ (flip << 63));
}

// Runs body(begin, end) over [0, size) in kChunk pieces and sums its return values.
template <typename Body>
std::uint64_t forEachChunk(std::uint64_t size, Body &&body) {
    const std::uint64_t chunk = std::min(size, kChunk);
    const auto chunks = static_cast<std::int64_t>(size / chunk);
    std::uint64_t writes = 0;
#pragma omp parallel for schedule(static) reduction(+ : writes)
    for (std::int64_t c = 0; c < chunks; ++c) {
        const std::uint64_t begin = static_cast<std::uint64_t>(c) * chunk;
        writes += body(begin, begin + chunk);
    }
    return writes;
}

// Edges regrouped by how they sit relative to the lane bits. Within a strip of
// 2^laneBits consecutive indices the high bits are fixed, so high edges
// contribute one value per strip, cross edges one signed field per lane bit,
// and lane edges a per-lane constant.
struct LaneSplit {
    int laneBits = 0;
    std::vector<double> laneRotation;
    std::vector<int> highFirst;
    std::vector<int> highSecond;
    std::vector<double> highWeight;
    std::vector<int> crossLow;
    std::vector<int> crossHigh;
    std::vector<double> crossWeight;
};

LaneSplit splitEdges(const CompressedCostPlan &plan) {
    LaneSplit split;
    split.laneBits = std::min(plan.numQubits(), kLaneBits);
    const auto lanes = std::size_t{1} << split.laneBits;
    split.laneRotation.assign(lanes, 0.0);
    for (const Edge &e : plan.graph().edges()) {
        if (e.i >= split.laneBits) {
            split.highFirst.push_back(e.i);
            split.highSecond.push_back(e.j);
            split.highWeight.push_back(e.w);
        } else if (e.j >= split.laneBits) {
            split.crossLow.push_back(e.i);
            split.crossHigh.push_back(e.j);
            split.crossWeight.push_back(e.w);
        } else {
            for (std::size_t l = 0; l < lanes; ++l) {
                split.laneRotation[l] += signedWeight(e.w, ((l >> e.i) ^ (l >> e.j)) & 1U);
            }
        }
    }
    return split;
}

template <bool Count>
QAOA_KERNEL_CLONES std::uint64_t compressedChunk(Amplitude *amps, const LaneSplit &split, double gamma,
                                                 std::uint64_t begin, std::uint64_t end, double *angle, double *re,
                                                 double *im) {
    const int laneBits = split.laneBits;
    const std::uint64_t lanes = std::uint64_t{1} << laneBits;
    const std::size_t highEdges = split.highWeight.size();
    const std::size_t crossEdges = split.crossWeight.size();
    const double scale = -0.5 * gamma;
    std::array<double, std::size_t{1} << kLaneBits> strip{};

    for (std::uint64_t base = begin; base < end; base += lanes) {
        double high = 0.0;
        for (std::size_t e = 0; e < highEdges; ++e) {
            high += signedWeight(split.highWeight[e],
                                 ((base >> split.highFirst[e]) ^ (base >> split.highSecond[e])) & 1U);
        }
        std::array<double, kLaneBits> field{};
        for (std::size_t e = 0; e < crossEdges; ++e) {
            field[static_cast<std::size_t>(split.crossLow[e])] +=
                signedWeight(split.crossWeight[e], (base >> split.crossHigh[e]) & 1U);
        }
        // Lane l flips the sign of field[i] for every set bit i of l.
        strip[0] = high;
        for (int i = 0; i < laneBits; ++i) {
            strip[0] += field[static_cast<std::size_t>(i)];
        }
        for (int i = 0; i < laneBits; ++i) {
            const std::size_t half = std::size_t{1} << i;
            for (std::size_t m = 0; m < half; ++m) {
                strip[m | half] = strip[m] - 2.0 * field[static_cast<std::size_t>(i)];
            }
        }
        for (std::uint64_t l = 0; l < lanes; ++l) {
            angle[base - begin + l] = scale * (strip[l] + split.laneRotation[l]);
        }
    }

    detail::unitPhases(angle, re, im, end - begin);
    std::uint64_t writes = 0;
    for (std::uint64_t b = begin; b < end; ++b) {
        const Amplitude phase(re[b - begin], im[b - begin]);
        detail::storeAmplitude<Count>(amps, b, amps[b] * phase, writes);
    }
    return writes;
}

template <bool Count>
std::uint64_t compressedSweep(StateVector &s, const CompressedCostPlan &plan, double gamma) {
    Amplitude *amps = s.amplitudes().data();
    const LaneSplit split = splitEdges(plan);
    return forEachChunk(s.size(), [&](std::uint64_t begin, std::uint64_t end) {
        thread_local std::vector<double> scratch;
        const std::uint64_t len = end - begin;
        scratch.resize(3 * len);
        return compressedChunk<Count>(amps, split, gamma, begin, end, scratch.data(), scratch.data() + len,
                                      scratch.data() + 2 * len);
    });
}

// Strip-mined popcount kernel. Width lanes share every index bit at or above
// log2(Width), so rows i >= log2(Width) give the same count for the whole strip
// (row i only has bits j > i) and are evaluated once. Width 1 is the plain
// per-amplitude loop over all rows.
template <int Width, PopcountMode Mode, bool Count>
QAOA_KERNEL_CLONES std::uint64_t batchedChunk(Amplitude *amps, const Mask *rows, int nRows, Mask wordMask,
                                              int totEdge, const Amplitude *phases, int bytes, std::uint64_t begin,
                                              std::uint64_t end) {
    constexpr int kShared = std::countr_zero(static_cast<unsigned>(Width));
    const int laneRows = std::min(kShared, nRows);
    std::uint64_t writes = 0;
    for (std::uint64_t base = begin; base < end; base += Width) {
        int shared = 0;
        for (int i = laneRows; i < nRows; ++i) {
            shared += popcountWith<Mode>(rows[i] & (broadcastBit(base, i) ^ base) & wordMask, bytes);
        }
        std::array<int, Width> cneg;
        cneg.fill(shared);
        for (int i = 0; i < laneRows; ++i) {
            const Mask row = rows[i] & wordMask;
            for (int l = 0; l < Width; ++l) {
                const Bitstring b = base + static_cast<Bitstring>(l);
                cneg[static_cast<std::size_t>(l)] += popcountWith<Mode>(row & (broadcastBit(b, i) ^ b), bytes);
            }
        }
        for (int l = 0; l < Width; ++l) {
            const Bitstring b = base + static_cast<Bitstring>(l);
            // rotation = totEdge - 2 cneg, shifted by totEdge into table range
            const int slot = 2 * (totEdge - cneg[static_cast<std::size_t>(l)]);
            detail::storeAmplitude<Count>(amps, b, amps[b] * phases[slot], writes);
        }
    }
    return writes;
}

template <int Width, PopcountMode Mode, bool Count>
std::uint64_t batchedSweep(StateVector &s, const CompressedCostPlan &plan, const std::vector<Amplitude> &phases) {
    Amplitude *amps = s.amplitudes().data();
    const Mask *rows = plan.rowMasks().data();
    const int nRows = static_cast<int>(plan.rowMasks().size());
    const Mask wordMask = plan.wordMask();
    const int totEdge = plan.totEdge();
    const int bytes = (plan.numQubits() + 7) / 8;
    return forEachChunk(s.size(), [&](std::uint64_t begin, std::uint64_t end) {
        return batchedChunk<Width, Mode, Count>(amps, rows, nRows, wordMask, totEdge, phases.data(), bytes, begin,
                                                end);
    });
}

template <int Width, PopcountMode Mode>
std::uint64_t batchedDispatchCount(StateVector &s, const CompressedCostPlan &plan,
                                   const std::vector<Amplitude> &phases, bool count) {
    return count ? batchedSweep<Width, Mode, true>(s, plan, phases) : batchedSweep<Width, Mode, false>(s, plan, phases);
}

template <PopcountMode Mode>
std::uint64_t batchedDispatchWidth(StateVector &s, const CompressedCostPlan &plan,
                                   const std::vector<Amplitude> &phases, int width, bool count) {
    switch (width) {
        case 1:
            return batchedDispatchCount<1, Mode>(s, plan, phases, count);
        case 2:
            return batchedDispatchCount<2, Mode>(s, plan, phases, count);
        case 4:
            return batchedDispatchCount<4, Mode>(s, plan, phases, count);
        case 8:
            return batchedDispatchCount<8, Mode>(s, plan, phases, count);
        default:
            throw ConfigError("unsupported batch width " + std::to_string(width) + "; expected 1, 2, 4 or 8");
    }
}

}  // namespace

CompressedCostPlan::CompressedCostPlan(Graph g) : graph_(std::move(g)) {
    const int n = graph_.numNodes();
    wordMask_ = n >= kMaskBits ? ~Mask{0} : (Mask{1} << n) - 1;
    for (const Edge &e : graph_.edges()) {
        first_.push_back(e.i);
        second_.push_back(e.j);
        weight_.push_back(e.w);
    }
}

double totalRotationWeighted(const CompressedCostPlan &plan, Bitstring b) {
    return weightedRotation(plan.edgeFirst().data(), plan.edgeSecond().data(), plan.edgeWeight().data(),
                            plan.edgeWeight().size(), b);
}

int rowCutCount(Mask rowMask, Mask bI, Bitstring b, Mask wordMask) noexcept {
    return std::popcount(rowMask & (bI ^ b) & wordMask);
}

int cutEdgeCountBitwise(const CompressedCostPlan &plan, Bitstring b) {
    requireUnweighted(plan);
    return cutEdges(plan.rowMasks(), b, plan.wordMask());
}

int totalRotationUnweighted(const CompressedCostPlan &plan, Bitstring b) {
    return plan.totEdge() - 2 * cutEdgeCountBitwise(plan, b);
}

void applyCostCompressed(StateVector &s, const CompressedCostPlan &plan, double gamma, WriteCounter *counter) {
    requireMatchingSize(s, plan);
    if (counter != nullptr) {
        counter->writes += compressedSweep<true>(s, plan, gamma);
    } else {
        compressedSweep<false>(s, plan, gamma);
    }
}

void applyCostBitwise(StateVector &s, const CompressedCostPlan &plan, double gamma, WriteCounter *counter) {
    requireUnweighted(plan);
    requireMatchingSize(s, plan);
    const auto phases = rotationPhaseTable(plan.totEdge(), gamma);
    const std::uint64_t writes = batchedDispatchCount<1, PopcountMode::Native>(s, plan, phases, counter != nullptr);
    if (counter != nullptr) {
        counter->writes += writes;
    }
}

void applyCostBatched(StateVector &s, const CompressedCostPlan &plan, double gamma, int batchWidth,
                      PopcountMode mode, WriteCounter *counter) {
    if (batchWidth != 1 && batchWidth != 2 && batchWidth != 4 && batchWidth != 8) {
        throw ConfigError("unsupported batch width " + std::to_string(batchWidth) + "; expected 1, 2, 4 or 8");
    }
    requireUnweighted(plan);
    requireMatchingSize(s, plan);
    const auto phases = rotationPhaseTable(plan.totEdge(), gamma);
    const bool count = counter != nullptr;
    // A state shorter than one strip runs with the widest strip that fits.
    const int width = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(batchWidth), s.size()));
    const std::uint64_t writes = mode == PopcountMode::Native
                                     ? batchedDispatchWidth<PopcountMode::Native>(s, plan, phases, width, count)
                                     : batchedDispatchWidth<PopcountMode::Table>(s, plan, phases, width, count);
    if (count) {
        counter->writes += writes;
    }
}

int popcountTable(std::uint64_t x) noexcept { return popcountBytes(x, 8); }

std::vector<Amplitude> rotationPhaseTable(int totEdge, double gamma) {
    std::vector<Amplitude> table(static_cast<std::size_t>(2 * totEdge + 1));
    for (int t = -totEdge; t <= totEdge; ++t) {
        table[static_cast<std::size_t>(t + totEdge)] = rotationPhase(gamma, static_cast<double>(t));
    }
    return table;
}

}  // namespace qaoa
