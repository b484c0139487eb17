// The flip graph on all monotone paths: two paths are adjacent when their
// vertex sets differ by exactly one vertex (both being valid paths).
#pragma once

#include <vector>

#include "signo/graph.hpp"
#include "signo/pathspace.hpp"

namespace signo {

bool flip_adjacent(const MonotonePath& p, const MonotonePath& q, int n);

struct FlipGraph {
  std::vector<MonotonePath> nodes;  // enumerate_paths order
  Graph g;
};
FlipGraph flip_graph(int n);

// BFS diameter; -1 when disconnected (n = 2: two isolated paths).
int flip_diameter(int n);

// Multi-source BFS from the coherent paths. DimOutOfRange for n < 3.
struct CoherentDistance {
  std::vector<int> dist;  // aligned with enumerate_paths order
  int max_dist = 0;
  MonotonePath attaining;  // first path (in enumeration order) at max_dist
};
CoherentDistance dist_to_coherent(int n);

}  // namespace signo
