#ifndef PLANARCOLOR_ORACLE_HPP
#define PLANARCOLOR_ORACLE_HPP

#include <optional>

#include "planarcolor/coloring.hpp"

namespace planarcolor {

namespace detail {

inline bool oracle_rec(const PlanarGraph& g, const ListAssignment& L, Coloring& c) {
  // MRV: fewest feasible colors, smallest id on ties.
  Vertex pick = -1;
  int best = 1 << 30;
  ColorList best_cands;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (c[v] != kUncolored) continue;
    ColorList cands;
    for (int col : L[v]) {
      bool ok = true;
      for (Vertex w : g.sorted_neighbors(v))
        if (c[w] == col) {
          ok = false;
          break;
        }
      if (ok) cands.push_back(col);
    }
    if (static_cast<int>(cands.size()) < best) {
      best = static_cast<int>(cands.size());
      pick = v;
      best_cands = std::move(cands);
      if (best == 0) return false;
    }
  }
  if (pick < 0) return true;
  for (int col : best_cands) {
    c[pick] = col;
    if (oracle_rec(g, L, c)) return true;
    c[pick] = kUncolored;
  }
  return false;
}

}  // namespace detail

/// Exhaustive backtracking continuation of a partial coloring; deterministic.
inline std::optional<Coloring> oracle_color_partial(const PlanarGraph& g, const ListAssignment& L,
                                                    Coloring base) {
  validate_lists(g, L);
  require(static_cast<int>(base.size()) == g.vertex_count(), Errc::bad_parameters,
          "oracle: base size");
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (base[v] == kUncolored) continue;
    require(list_has(L[v], base[v]), Errc::bad_parameters, "oracle: base color outside list");
    for (Vertex w : g.sorted_neighbors(v))
      if (w > v && base[w] != kUncolored && base[w] == base[v]) return std::nullopt;
  }
  if (detail::oracle_rec(g, L, base)) return base;
  return std::nullopt;
}

/// Ground-truth solver: returns a proper L-coloring iff one exists.
inline std::optional<Coloring> oracle_color(const PlanarGraph& g, const ListAssignment& L) {
  return oracle_color_partial(g, L, empty_coloring(g));
}

}  // namespace planarcolor

#endif  // PLANARCOLOR_ORACLE_HPP
