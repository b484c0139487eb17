// Minimal undirected graph with the BFS helpers the lattice and flip modules need.
#pragma once

#include <vector>

namespace signo {

struct Graph {
  int nv = 0;
  std::vector<std::vector<int>> adj;
};

// Distances from the nearest source; -1 marks unreachable vertices.
std::vector<int> bfs_dist(const Graph& g, const std::vector<int>& sources);

bool connected(const Graph& g);

// Max pairwise distance via BFS from every vertex; -1 when disconnected.
int diameter(const Graph& g);

}  // namespace signo
