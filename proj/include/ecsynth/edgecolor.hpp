#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ecsynth/linmaps.hpp"

namespace ecsynth {

struct BipartiteGraph {
  std::size_t left_count = 0;
  std::size_t right_count = 0;
  /// (left, right) pairs; no duplicates.
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  /// Throws InvalidInput on out-of-range endpoints or duplicate edges.
  void validate() const;
  std::size_t max_degree() const;
};

struct EdgeColoring {
  /// Color of edges[k], in [0, num_colors).
  std::vector<std::size_t> color_of;
  std::size_t num_colors = 0;
};

/// Edge (i, j) for every M[j][i] = 1: left = source coefficient i, right = target coefficient j.
/// Edges are listed in row-major order of M.
BipartiteGraph graph_of_matrix(const BinMatrix& m);

/// Proper edge coloring with exactly max-degree colors (König). Edges are inserted in input
/// order; a conflict is resolved by swapping the two colors along an alternating path.
EdgeColoring color_edges(const BipartiteGraph& g);

/// True iff no two edges sharing an endpoint have the same color.
bool is_proper(const BipartiteGraph& g, const EdgeColoring& coloring);

}  // namespace ecsynth
