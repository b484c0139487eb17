#include "signo/graph.hpp"

#include <algorithm>
#include <queue>

namespace signo {

std::vector<int> bfs_dist(const Graph& g, const std::vector<int>& sources) {
  std::vector<int> dist(g.nv, -1);
  std::queue<int> q;
  for (int s : sources) {
    if (dist[s] != -1) continue;
    dist[s] = 0;
    q.push(s);
  }
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : g.adj[u])
      if (dist[v] == -1) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
  }
  return dist;
}

bool connected(const Graph& g) {
  if (g.nv == 0) return true;
  auto d = bfs_dist(g, {0});
  return std::find(d.begin(), d.end(), -1) == d.end();
}

int diameter(const Graph& g) {
  int best = 0;
  for (int s = 0; s < g.nv; ++s) {
    auto d = bfs_dist(g, {s});
    for (int x : d) {
      if (x == -1) return -1;
      best = std::max(best, x);
    }
  }
  return best;
}

}  // namespace signo
