#pragma once

#include <cstdint>
#include <vector>

namespace plr {

/// Vertex-colored simple undirected graph.  Call finalize() after adding
/// edges; colors are normalized to a dense range preserving numeric order.
struct ColoredGraph {
  int n = 0;
  std::vector<int> color;               // size n, dense from 0 after finalize
  std::vector<std::vector<int>> adj;    // sorted, no duplicates after finalize

  ColoredGraph() = default;
  explicit ColoredGraph(int vertex_count, std::vector<int> colors = {});

  void add_edge(int u, int v);
  void finalize();

  bool adjacent(int u, int v) const {
    return (bits_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }

 private:
  std::vector<uint64_t> bits_;
  int words_ = 0;
};

/// Ordered list of disjoint nonempty cells covering all vertices.
using OrderedPartition = std::vector<std::vector<int>>;

/// Coarsest equitable partition refining p: within each cell, every vertex
/// has the same number of neighbors in every cell.  Split cells replace
/// their parent in place, fragments ordered by neighbor-count key ascending.
OrderedPartition equitable_refinement(const ColoredGraph& g, OrderedPartition p);

struct AutomorphismList {
  std::vector<std::vector<int>> perms;  // each a vertex image array
  bool complete = true;
  bool cap_hit = false;
};

/// Enumerates the full color-preserving automorphism group by
/// individualization-refinement backtracking; deterministic order.
AutomorphismList automorphisms(const ColoredGraph& g, long cap = 1'000'000);

struct OrbitResult {
  std::vector<std::vector<int>> cells;  // sorted by least element
  bool cap_hit = false;
};

/// Orbit partition of the automorphism group acting on the vertices.
OrbitResult orbits(const ColoredGraph& g, long cap = 1'000'000);

}  // namespace plr
