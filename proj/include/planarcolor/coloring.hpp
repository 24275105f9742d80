#ifndef PLANARCOLOR_COLORING_HPP
#define PLANARCOLOR_COLORING_HPP

#include "planarcolor/planar_graph.hpp"

namespace planarcolor {

/// Per-vertex color lists; colors are small non-negative integers and every
/// list is kept sorted and duplicate-free.
using ColorList = std::vector<int>;
using ListAssignment = std::vector<ColorList>;

/// Partial vertex coloring; -1 marks an uncolored vertex.
using Coloring = std::vector<int>;

inline constexpr int kUncolored = -1;

inline Coloring empty_coloring(const PlanarGraph& g) {
  return Coloring(g.vertex_count(), kUncolored);
}

inline ColorList normalized_list(ColorList l) {
  std::sort(l.begin(), l.end());
  l.erase(std::unique(l.begin(), l.end()), l.end());
  return l;
}

inline void validate_lists(const PlanarGraph& g, const ListAssignment& L) {
  require(static_cast<int>(L.size()) == g.vertex_count(), Errc::bad_parameters,
          "list assignment size != n");
  for (const auto& l : L) {
    require(!l.empty(), Errc::bad_parameters, "empty color list");
    for (size_t i = 0; i < l.size(); ++i) {
      require(l[i] >= 0, Errc::bad_parameters, "negative color");
      require(i == 0 || l[i] > l[i - 1], Errc::bad_parameters, "list not sorted unique");
    }
  }
}

inline bool list_has(const ColorList& l, int c) {
  return std::binary_search(l.begin(), l.end(), c);
}

inline ColorList list_minus(const ColorList& l, const ColorList& sub) {
  ColorList out;
  std::set_difference(l.begin(), l.end(), sub.begin(), sub.end(), std::back_inserter(out));
  return out;
}

inline int max_color(const ListAssignment& L) {
  int m = -1;
  for (const auto& l : L)
    if (!l.empty()) m = std::max(m, l.back());
  return m;
}

/// True iff c is a total proper coloring drawing every color from its list.
/// Throws PartialColoring when some vertex is uncolored.
inline bool is_proper(const PlanarGraph& g, const Coloring& c, const ListAssignment& L) {
  validate_lists(g, L);
  require(static_cast<int>(c.size()) == g.vertex_count(), Errc::bad_parameters,
          "coloring size != n");
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    require(c[v] != kUncolored, Errc::partial_coloring,
            "vertex " + std::to_string(v) + " uncolored");
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!list_has(L[v], c[v])) return false;
    for (Vertex w : g.sorted_neighbors(v))
      if (w > v && c[v] == c[w]) return false;
  }
  return true;
}

/// Properness restricted to the colored vertices of `verts` (edges inside the
/// induced subgraph only); list membership checked as well.
inline bool is_proper_on(const PlanarGraph& g, const VertexSet& verts, const Coloring& c,
                         const ListAssignment& L) {
  for (Vertex v : verts) {
    if (c[v] == kUncolored) return false;
    if (!list_has(L[v], c[v])) return false;
    for (Vertex w : g.sorted_neighbors(v))
      if (w > v && set_contains(verts, w) && c[v] == c[w]) return false;
  }
  return true;
}

/// L_c(v, H) for every vertex outside H; H members get empty lists.
inline ListAssignment residual_lists(const PlanarGraph& g, const VertexSet& H, const Coloring& c,
                                     const ListAssignment& L) {
  validate_lists(g, L);
  require(is_proper_on(g, H, c, L), Errc::precondition_violated,
          "residual_lists: coloring not total+proper on G[H]");
  ListAssignment out(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (set_contains(H, v)) continue;
    ColorList used;
    for (Vertex w : g.sorted_neighbors(v))
      if (set_contains(H, w)) used.push_back(c[w]);
    out[v] = list_minus(L[v], normalized_list(std::move(used)));
  }
  return out;
}

/// True iff every vertex of N(H) keeps at least 3 residual colors.
inline bool is_nice(const PlanarGraph& g, const VertexSet& H, const Coloring& c,
                    const ListAssignment& L) {
  auto res = residual_lists(g, H, c, L);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (set_contains(H, v)) continue;
    bool touches = false;
    for (Vertex w : g.sorted_neighbors(v))
      if (set_contains(H, w)) {
        touches = true;
        break;
      }
    if (touches && res[v].size() < 3) return false;
  }
  return true;
}

}  // namespace planarcolor

#endif  // PLANARCOLOR_COLORING_HPP
