#ifndef PLANARCOLOR_BLOCKS_HPP
#define PLANARCOLOR_BLOCKS_HPP

#include "planarcolor/planar_graph.hpp"

namespace planarcolor {

/// Biconnected decomposition.  Blocks are vertex sets (sorted); a bridge shows
/// up as a 2-vertex block.  Isolated vertices get singleton blocks.
struct BlockCut {
  std::vector<VertexSet> blocks;
  VertexSet cut_vertices;
  std::vector<std::pair<Vertex, Vertex>> bridges;  // (min, max) per edge, sorted
};

inline BlockCut compute_blocks(const PlanarGraph& g) {
  const int n = g.vertex_count();
  BlockCut res;
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<char> is_cut(n, 0);
  std::vector<std::pair<Vertex, Vertex>> estack;
  int timer = 0;

  // iterative DFS to keep long paths off the call stack
  struct Frame {
    Vertex v;
    size_t next_child = 0;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    if (g.degree(root) == 0) {
      disc[root] = timer++;
      res.blocks.push_back({root});
      continue;
    }
    std::vector<Frame> stack{{root}};
    disc[root] = low[root] = timer++;
    int root_children = 0;
    while (!stack.empty()) {
      Frame& fr = stack.back();
      Vertex v = fr.v;
      const auto& nb = g.sorted_neighbors(v);
      if (fr.next_child < nb.size()) {
        Vertex w = nb[fr.next_child++];
        if (w == parent[v]) continue;
        if (disc[w] < 0) {
          parent[w] = v;
          estack.emplace_back(v, w);
          disc[w] = low[w] = timer++;
          if (v == root) root_children++;
          stack.push_back({w});
        } else if (disc[w] < disc[v]) {
          estack.emplace_back(v, w);
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        stack.pop_back();
        if (stack.empty()) break;
        Vertex p = stack.back().v;
        low[p] = std::min(low[p], low[v]);
        if (low[v] >= disc[p]) {
          // pop a block ending with edge (p, v)
          std::vector<Vertex> verts;
          std::pair<Vertex, Vertex> e;
          do {
            e = estack.back();
            estack.pop_back();
            verts.push_back(e.first);
            verts.push_back(e.second);
          } while (!(e.first == p && e.second == v));
          VertexSet block = make_set(verts);
          if (block.size() == 2) res.bridges.emplace_back(block[0], block[1]);
          res.blocks.push_back(std::move(block));
          if (p != root || root_children > 1) is_cut[p] = 1;
        }
      }
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (is_cut[v]) res.cut_vertices.push_back(v);
  std::sort(res.bridges.begin(), res.bridges.end());
  std::sort(res.blocks.begin(), res.blocks.end());
  return res;
}

}  // namespace planarcolor

#endif  // PLANARCOLOR_BLOCKS_HPP
