#include "signo/flipdyn.hpp"

#include <algorithm>
#include <map>

#include "signo/coherence.hpp"
#include "signo/error.hpp"

namespace signo {

bool flip_adjacent(const MonotonePath& p, const MonotonePath& q, int n) {
  if (!is_valid_interior(p.interior, n) || !is_valid_interior(q.interior, n))
    fail(Errc::InvalidPath, "flip_adjacent needs valid paths");
  // interiors are sorted sets; count the symmetric difference
  std::vector<int> diff;
  std::set_symmetric_difference(p.interior.begin(), p.interior.end(), q.interior.begin(),
                                q.interior.end(), std::back_inserter(diff));
  return diff.size() == 1;
}

FlipGraph flip_graph(int n) {
  FlipGraph fg;
  fg.nodes = enumerate_paths(n);
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < static_cast<int>(fg.nodes.size()); ++i) index[fg.nodes[i].interior] = i;
  fg.g.nv = static_cast<int>(fg.nodes.size());
  fg.g.adj.resize(fg.g.nv);
  for (int i = 0; i < fg.g.nv; ++i) {
    const auto& interior = fg.nodes[i].interior;
    auto connect = [&](const std::vector<int>& other) {
      if (!is_valid_interior(other, n)) return;
      int j = index.at(other);
      if (j > i) {
        fg.g.adj[i].push_back(j);
        fg.g.adj[j].push_back(i);
      }
    };
    for (size_t r = 0; r < interior.size(); ++r) {
      std::vector<int> other = interior;
      other.erase(other.begin() + r);
      connect(other);
    }
    for (int v = -(n - 1); v <= n - 1; ++v) {
      if (v == 0 || std::binary_search(interior.begin(), interior.end(), v)) continue;
      std::vector<int> other = interior;
      other.insert(std::upper_bound(other.begin(), other.end(), v), v);
      connect(other);
    }
  }
  for (auto& nb : fg.g.adj) std::sort(nb.begin(), nb.end());
  return fg;
}

int flip_diameter(int n) { return diameter(flip_graph(n).g); }

CoherentDistance dist_to_coherent(int n) {
  if (n < 3) fail(Errc::DimOutOfRange, "distance to coherence needs n >= 3");
  auto fg = flip_graph(n);
  std::vector<int> sources;
  for (int i = 0; i < fg.g.nv; ++i)
    if (is_coherent_fast(fg.nodes[i])) sources.push_back(i);
  CoherentDistance out;
  out.dist = bfs_dist(fg.g, sources);
  int arg = 0;
  for (int i = 0; i < fg.g.nv; ++i)
    if (out.dist[i] > out.dist[arg]) arg = i;
  out.max_dist = out.dist[arg];
  out.attaining = fg.nodes[arg];
  return out;
}

}  // namespace signo
