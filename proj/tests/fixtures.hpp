#ifndef PLANARCOLOR_TESTS_FIXTURES_HPP
#define PLANARCOLOR_TESTS_FIXTURES_HPP

#include <map>

#include "planarcolor/planar_graph.hpp"

namespace fixtures {

using planarcolor::PlanarGraph;
using planarcolor::Vertex;

inline PlanarGraph triangle() {
  return planarcolor::build_graph(3, {{1, 2}, {2, 0}, {0, 1}});
}

inline PlanarGraph k4() {
  // 0,1,2 outer triangle, 3 in the middle
  return planarcolor::build_graph(4, {{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {1, 2, 0}});
}

inline PlanarGraph single_edge() { return planarcolor::build_graph(2, {{1}, {0}}); }

inline PlanarGraph cycle_graph(int n) {
  std::vector<std::vector<Vertex>> rot(n);
  for (Vertex v = 0; v < n; ++v) rot[v] = {(v + 1) % n, (v + n - 1) % n};
  return planarcolor::build_graph(n, std::move(rot));
}

inline PlanarGraph path_graph(int n) {
  std::vector<std::vector<Vertex>> rot(n);
  for (Vertex v = 0; v < n; ++v) {
    if (v + 1 < n) rot[v].push_back(v + 1);
    if (v > 0) rot[v].push_back(v - 1);
  }
  return planarcolor::build_graph(n, std::move(rot));
}

/// Apex over the consecutive path triple (start, start+1, start+2), drawn
/// above or below the path line.
struct Fan {
  int start;
  bool above = true;
};

/// Path 0..m with apex fans; apex ids follow the path ids in spec order.
inline PlanarGraph path_with_fans(int m, const std::vector<Fan>& fans,
                                  std::vector<Vertex>* apex_ids = nullptr) {
  int n = m + 1 + static_cast<int>(fans.size());
  std::vector<std::vector<Vertex>> rot(n);
  for (size_t f = 0; f < fans.size(); ++f) {
    Vertex a = m + 1 + static_cast<int>(f);
    int s = fans[f].start;
    if (fans[f].above)
      rot[a] = {s, s + 1, s + 2};
    else
      rot[a] = {s + 2, s + 1, s};
    if (apex_ids) apex_ids->push_back(a);
  }
  for (Vertex j = 0; j <= m; ++j) {
    std::vector<std::pair<int, Vertex>> above, below;  // (start, apex id)
    for (size_t f = 0; f < fans.size(); ++f) {
      int s = fans[f].start;
      if (j < s || j > s + 2) continue;
      Vertex a = m + 1 + static_cast<int>(f);
      (fans[f].above ? above : below).emplace_back(s, a);
    }
    std::sort(above.begin(), above.end(), std::greater<>());  // start desc
    std::sort(below.begin(), below.end());                    // start asc
    auto& r = rot[j];
    if (j + 1 <= m) r.push_back(j + 1);
    for (auto& [s, a] : above) r.push_back(a);
    if (j > 0) r.push_back(j - 1);
    for (auto& [s, a] : below) r.push_back(a);
  }
  return planarcolor::build_graph(n, std::move(rot));
}

/// Cycle 0..n-1 where the segment 0..m plays the role of a shortest path and
/// carries fans; the remaining arc is a long bypass so the fan triangles do
/// not separate the graph.  Fans `above` go inside the circle, `below`
/// outside.
inline PlanarGraph cycle_with_fans(int n, int m, const std::vector<Fan>& fans,
                                   std::vector<Vertex>* apex_ids = nullptr) {
  int total = n + static_cast<int>(fans.size());
  std::vector<std::vector<Vertex>> rot(total);
  for (size_t f = 0; f < fans.size(); ++f) {
    Vertex a = n + static_cast<int>(f);
    int s = fans[f].start;
    if (fans[f].above)
      rot[a] = {s, s + 1, s + 2};
    else
      rot[a] = {s + 2, s + 1, s};
    if (apex_ids) apex_ids->push_back(a);
  }
  for (Vertex j = 0; j < n; ++j) {
    std::vector<std::pair<int, Vertex>> above, below;
    for (size_t f = 0; f < fans.size(); ++f) {
      int s = fans[f].start;
      if (j < s || j > s + 2) continue;
      Vertex a = n + static_cast<int>(f);
      (fans[f].above ? above : below).emplace_back(s, a);
    }
    std::sort(above.begin(), above.end(), std::greater<>());
    std::sort(below.begin(), below.end());
    auto& r = rot[j];
    r.push_back((j + 1) % n);
    for (auto& [s, a] : above) r.push_back(a);
    r.push_back((j + n - 1) % n);
    for (auto& [s, a] : below) r.push_back(a);
  }
  return planarcolor::build_graph(total, std::move(rot));
}

/// Exhaustive shortest-path length by DFS over all simple paths.
inline int brute_shortest_len(const PlanarGraph& g, Vertex u, Vertex v) {
  int best = -1;
  std::vector<char> used(g.vertex_count(), 0);
  std::function<void(Vertex, int)> dfs = [&](Vertex x, int len) {
    if (x == v) {
      if (best < 0 || len < best) best = len;
      return;
    }
    used[x] = 1;
    for (Vertex w : g.sorted_neighbors(x))
      if (!used[w]) dfs(w, len + 1);
    used[x] = 0;
  };
  dfs(u, 0);
  return best;
}

}  // namespace fixtures

#endif
