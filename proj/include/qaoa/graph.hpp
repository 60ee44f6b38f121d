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
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qaoa {

/// Row connectivity mask: bit j of row i is set iff edge (i, j) with j > i exists.
using Mask = std::uint64_t;
inline constexpr int kMaskBits = 64;

/// Basis index / cut assignment. Bit i is the side of node i.
using Bitstring = std::uint64_t;

/// Largest node count accepted by the exhaustive max-cut oracle unless raised explicitly.
inline constexpr int kDefaultBruteForceGuard = 24;

struct Edge {
    int i = 0;
    int j = 0;
    double w = 1.0;

    friend bool operator==(const Edge &, const Edge &) = default;
};

/// Undirected max-cut instance stored as a strict upper triangle.
///
/// Edges are kept sorted row-major with i < j, one per unordered pair. Each
/// node also carries a row mask (the per-node connectivity word consumed by
/// the bitwise cost kernel). Instances are immutable once built.
class Graph {
  public:
    Graph() = default;

    /// Normalizes (swaps i > j, sorts) and validates. Throws ConfigError on
    /// self-loops, duplicates, out-of-range endpoints or n > kMaskBits.
    static Graph fromEdges(int n, std::vector<Edge> edges);

    int numNodes() const noexcept { return n_; }
    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const Mask> rowMasks() const noexcept { return rowMasks_; }
    int totEdge() const noexcept { return static_cast<int>(edges_.size()); }
    bool isUnweighted() const noexcept { return unweighted_; }
    double totalWeight() const noexcept { return totalWeight_; }

    friend bool operator==(const Graph &, const Graph &) = default;

  private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<Mask> rowMasks_;
    bool unweighted_ = true;
    double totalWeight_ = 0.0;
};

struct Cut {
    Bitstring assignment = 0;
    double value = 0.0;
};

Mask rowMaskOf(const Graph &g, int i);

/// Sum of the weights of edges whose endpoints fall on opposite sides.
double cutValue(const Graph &g, Bitstring assignment);

/// Exact maximum cut by enumerating all 2^n assignments. Ties resolve to the
/// smallest assignment. Refuses n > maxNodes with a GuardError.
Cut bruteForceMaxCut(const Graph &g, int maxNodes = kDefaultBruteForceGuard);

/// Reads "i j" or "i j w" lines. '#' starts a comment line; CRLF is accepted.
Graph parseEdgeList(std::istream &in);
Graph parseEdgeList(std::string_view text);
Graph readEdgeListFile(const std::string &path);

/// Inverse of parseEdgeList. Weights are written with round-trip precision;
/// unit weights are omitted.
std::string toEdgeList(const Graph &g);

/// Simple d-regular graph from the pairing (configuration) model with
/// rejection. Weighted graphs draw weights uniformly from (0, 1].
Graph randomRegularGraph(int n, int d, bool weighted, std::uint64_t seed);

Graph completeGraph(int n);
Graph cycleGraph(int n);

}  // namespace qaoa
