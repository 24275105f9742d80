#ifndef PLANARCOLOR_THOMASSEN_HPP
#define PLANARCOLOR_THOMASSEN_HPP

#include "planarcolor/blocks.hpp"
#include "planarcolor/coloring.hpp"

namespace planarcolor {

namespace detail {

inline int locate_face(const PlanarGraph& g, const std::vector<Vertex>& walk) {
  for (size_t f = 0; f < g.all_faces().size(); ++f)
    if (cyclic_match(g.all_faces()[f].walk, walk)) return static_cast<int>(f);
  fail(Errc::precondition_violated, "walk is not a face of the graph");
}

/// Graph with every interior face triangulated by an auxiliary apex vertex
/// per big face.  Auxiliary vertices carry throwaway 5-lists and vanish from
/// the final coloring.
struct Triangulated {
  PlanarGraph graph;
  ListAssignment lists;
  int orig_n;
  std::vector<Vertex> outer_walk;
};

inline Triangulated apex_interior_faces(const PlanarGraph& g, int outer_face_idx,
                                        const ListAssignment& L) {
  const int n = g.vertex_count();
  std::vector<std::vector<Vertex>> rots(n);
  for (Vertex v = 0; v < n; ++v) rots[v] = g.rotation(v);
  ListAssignment lists = L;
  int next_id = n;
  for (size_t f = 0; f < g.all_faces().size(); ++f) {
    if (static_cast<int>(f) == outer_face_idx) continue;
    const auto& walk = g.all_faces()[f].walk;
    if (walk.size() == 3) continue;
    Vertex apex = next_id++;
    std::vector<Vertex> firsts;
    std::vector<char> seen(n, 0);
    for (size_t t = 0; t < walk.size(); ++t) {
      Vertex b = walk[t];
      if (seen[b]) continue;
      seen[b] = 1;
      firsts.push_back(b);
      Vertex a = walk[(t + walk.size() - 1) % walk.size()];
      auto& rb = rots[b];
      auto it = std::find(rb.begin(), rb.end(), a);
      rb.insert(it + 1, apex);
    }
    rots.push_back(std::vector<Vertex>(firsts.rbegin(), firsts.rend()));
    lists.push_back(ColorList{0, 1, 2, 3, 4});
  }
  Triangulated t;
  t.graph = PlanarGraph::build(next_id, std::move(rots));
  t.lists = std::move(lists);
  t.orig_n = n;
  t.outer_walk = g.all_faces()[outer_face_idx].walk;
  return t;
}

/// Recursive kernel of Thomassen's proof on one 2-connected piece whose
/// interior faces are all triangles.  `cycle` is the outer cycle; its two
/// endpoints cycle.front() and cycle.back() are adjacent and already colored.
class ThomassenSolver {
 public:
  ThomassenSolver(const PlanarGraph& g, ListAssignment& lists, Coloring& col)
      : g_(g), lists_(lists), col_(col) {}

  void solve(std::vector<Vertex> cycle, std::vector<char>& active) {
    const size_t p = cycle.size();
    if (p <= 2) return;

    // chord: first pair (i, j) in lexicographic order, j >= i+2, not the
    // closing edge.  Chords incident to cycle[0] (the "v" end) come first.
    for (size_t i = 0; i + 2 <= p - 1; ++i) {
      for (size_t j = i + 2; j <= p - 1; ++j) {
        if (i == 0 && j == p - 1) continue;
        if (!g_.adjacent(cycle[i], cycle[j])) continue;
        split_on_chord(cycle, active, i, j);
        return;
      }
    }

    // no chord: delete w = cycle[1], the outer vertex next to the "v" end.
    Vertex v = cycle[0], w = cycle[1], x = cycle[2];
    std::vector<Vertex> fan = interior_fan(w, v, x, active);
    ColorList eligible = list_minus(lists_[w], ColorList{col_[v]});
    require(eligible.size() >= 2, Errc::internal_error, "thomassen: short list at boundary");
    int r1 = eligible[0], r2 = eligible[1];
    for (Vertex a : fan) {
      lists_[a] = list_minus(lists_[a], ColorList{r1, r2});
      require(lists_[a].size() >= 3, Errc::internal_error, "thomassen: fan list underflow");
    }
    active[w] = 0;
    std::vector<Vertex> next_cycle;
    next_cycle.push_back(v);
    for (Vertex a : fan) next_cycle.push_back(a);
    next_cycle.insert(next_cycle.end(), cycle.begin() + 2, cycle.end());
    solve(std::move(next_cycle), active);
    col_[w] = (r1 != col_[x]) ? r1 : r2;
  }

  /// Entry point tolerating a precolored pair joined by a chord of the cycle.
  void solve_with_pair(const std::vector<Vertex>& cycle, std::vector<char>& active, Vertex u,
                       Vertex v) {
    size_t pu = index_of(cycle, u), pv = index_of(cycle, v);
    const size_t p = cycle.size();
    if ((pu + 1) % p == pv || (pv + 1) % p == pu) {
      solve(normalize(cycle, pu, pv), active);
    } else {
      // precolored pair joined by a chord: split on it immediately
      std::vector<Vertex> c = cycle;
      std::rotate(c.begin(), c.begin() + static_cast<long>(pv), c.end());
      size_t j = index_of(c, u);
      split_on_chord(c, active, 0, j, /*skip_wrap_guard=*/true);
    }
  }

 private:
  static size_t index_of(const std::vector<Vertex>& cycle, Vertex v) {
    auto it = std::find(cycle.begin(), cycle.end(), v);
    require(it != cycle.end(), Errc::internal_error, "vertex not on cycle");
    return static_cast<size_t>(it - cycle.begin());
  }

  static std::vector<Vertex> normalize(const std::vector<Vertex>& cycle, size_t pu, size_t pv) {
    const size_t p = cycle.size();
    std::vector<Vertex> out;
    out.reserve(p);
    if ((pv + 1) % p == pu) {
      for (size_t k = 0; k < p; ++k) out.push_back(cycle[(pv + p - k) % p]);
    } else {
      for (size_t k = 0; k < p; ++k) out.push_back(cycle[(pv + k) % p]);
    }
    return out;  // [v, ..., u]
  }

  void split_on_chord(const std::vector<Vertex>& cycle, std::vector<char>& active, size_t i,
                      size_t j, bool both_sides_precolored = false) {
    const size_t p = cycle.size();
    Vertex ci = cycle[i], cj = cycle[j];
    // B side: arc cycle[i..j]; A side: the rest (holds the closing edge).
    std::vector<char> blocked = active;
    blocked[ci] = 0;
    blocked[cj] = 0;
    std::vector<char> in_b(active.size(), 0);
    for (size_t k = i + 1; k < j; ++k) flood(cycle[k], blocked, in_b);
    in_b[ci] = 1;
    in_b[cj] = 1;

    std::vector<Vertex> cycle_a;
    for (size_t k = 0; k <= i; ++k) cycle_a.push_back(cycle[k]);
    for (size_t k = j; k < p; ++k) cycle_a.push_back(cycle[k]);
    std::vector<Vertex> cycle_b(cycle.begin() + static_cast<long>(i),
                                cycle.begin() + static_cast<long>(j) + 1);

    std::vector<char> active_a = active, active_b(active.size(), 0);
    for (size_t t = 0; t < active.size(); ++t) {
      if (in_b[t]) {
        active_b[t] = active[t];
        if (t != static_cast<size_t>(ci) && t != static_cast<size_t>(cj)) active_a[t] = 0;
      }
    }
    if (both_sides_precolored) {
      // both subcycles close on the precolored chord (ci, cj)
      solve(normalize_pair_front_back(cycle_a, ci, cj), active_a);
      solve(normalize_pair_front_back(cycle_b, ci, cj), active_b);
    } else {
      solve(cycle_a, active_a);
      require(col_[ci] != kUncolored && col_[cj] != kUncolored, Errc::internal_error,
              "chord endpoints uncolored after split");
      solve(cycle_b, active_b);
    }
    active = merge_inactive(active, active_a, active_b, in_b);
  }

  static std::vector<char> merge_inactive(const std::vector<char>& active,
                                          const std::vector<char>& a, const std::vector<char>& b,
                                          const std::vector<char>& in_b) {
    std::vector<char> out = active;
    for (size_t t = 0; t < out.size(); ++t) out[t] = in_b[t] ? b[t] : a[t];
    return out;
  }

  static std::vector<Vertex> normalize_pair_front_back(const std::vector<Vertex>& cyc, Vertex a,
                                                       Vertex b) {
    // rotate/orient so cyc starts at a and ends at b
    size_t pa = index_of(cyc, a), pb = index_of(cyc, b);
    const size_t p = cyc.size();
    std::vector<Vertex> out;
    out.reserve(p);
    if ((pa + 1) % p == pb) {
      for (size_t k = 0; k < p; ++k) out.push_back(cyc[(pa + p - k) % p]);
    } else if ((pb + 1) % p == pa) {
      for (size_t k = 0; k < p; ++k) out.push_back(cyc[(pa + k) % p]);
    } else {
      fail(Errc::internal_error, "pair not consecutive on subcycle");
    }
    return out;
  }

  void flood(Vertex s, const std::vector<char>& allowed, std::vector<char>& mark) const {
    if (!allowed[s] || mark[s]) return;
    std::vector<Vertex> stack{s};
    mark[s] = 1;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g_.sorted_neighbors(u))
        if (allowed[w] && !mark[w]) {
          mark[w] = 1;
          stack.push_back(w);
        }
    }
  }

  std::vector<Vertex> interior_fan(Vertex w, Vertex v, Vertex x, const std::vector<char>& active) {
    std::vector<Vertex> ring;
    for (Vertex z : g_.rotation(w))
      if (active[z]) ring.push_back(z);
    size_t pv = index_of(ring, v), px = index_of(ring, x);
    const size_t r = ring.size();
    std::vector<Vertex> fwd, bwd;
    for (size_t k = (pv + 1) % r; k != px; k = (k + 1) % r) fwd.push_back(ring[k]);
    for (size_t k = (pv + r - 1) % r; k != px; k = (k + r - 1) % r) bwd.push_back(ring[k]);
    if (fwd.empty()) return bwd;
    if (bwd.empty()) return fwd;
    fail(Errc::internal_error, "deleted vertex has neighbors on both sides of the boundary");
  }

  const PlanarGraph& g_;
  ListAssignment& lists_;
  Coloring& col_;
};

inline void thomassen_run_blocks(const PlanarGraph& g2, ListAssignment& lists, Coloring& col,
                                 const std::vector<Vertex>& outer_walk, Vertex u, Vertex v) {
  BlockCut bc = compute_blocks(g2);
  std::vector<std::vector<int>> blocks_of(g2.vertex_count());
  for (size_t b = 0; b < bc.blocks.size(); ++b)
    for (Vertex x : bc.blocks[b]) blocks_of[x].push_back(static_cast<int>(b));

  // directed edges of the outer walk, for identifying block boundaries
  std::set<std::pair<Vertex, Vertex>> outer_dir;
  for (size_t t = 0; t < outer_walk.size(); ++t)
    outer_dir.emplace(outer_walk[t], outer_walk[(t + 1) % outer_walk.size()]);

  int root = -1;
  for (size_t b = 0; b < bc.blocks.size(); ++b)
    if (set_contains(bc.blocks[b], u) && set_contains(bc.blocks[b], v)) {
      root = static_cast<int>(b);
      break;
    }
  require(root >= 0, Errc::internal_error, "no block contains the precolored edge");

  ThomassenSolver solver(g2, lists, col);
  std::vector<char> visited(bc.blocks.size(), 0);
  std::queue<std::pair<int, Vertex>> q;  // (block, entry vertex; -1 for root)
  q.emplace(root, -1);
  visited[root] = 1;
  while (!q.empty()) {
    auto [b, entry] = q.front();
    q.pop();
    const VertexSet& block = bc.blocks[b];
    if (block.size() == 1) {
      Vertex a = block[0];
      if (col[a] == kUncolored) col[a] = lists[a][0];
    } else if (block.size() == 2) {
      Vertex a = block[0], c = block[1];
      if (col[a] == kUncolored) std::swap(a, c);
      require(col[a] != kUncolored, Errc::internal_error, "bridge with no colored end");
      if (col[c] == kUncolored) {
        ColorList avail = list_minus(lists[c], ColorList{col[a]});
        require(!avail.empty(), Errc::internal_error, "bridge coloring stuck");
        col[c] = avail[0];
      }
    } else {
      SubgraphView view = induced_subgraph(g2, block);
      int face_idx = -1;
      for (size_t f = 0; f < view.graph.all_faces().size(); ++f) {
        const auto& wlk = view.graph.all_faces()[f].walk;
        bool on_outer = false;
        for (size_t t = 0; t < wlk.size() && !on_outer; ++t)
          on_outer = outer_dir.count({view.to_host[wlk[t]], view.to_host[wlk[(t + 1) % wlk.size()]]}) > 0;
        if (on_outer) {
          require(face_idx < 0, Errc::internal_error, "block with two outer faces");
          face_idx = static_cast<int>(f);
        }
      }
      require(face_idx >= 0, Errc::internal_error, "block without an outer face");
      std::vector<Vertex> cycle;
      for (Vertex x : view.graph.all_faces()[face_idx].walk) cycle.push_back(view.to_host[x]);
      require(make_set(cycle).size() == cycle.size(), Errc::internal_error,
              "block boundary not a simple cycle");

      Vertex pu, pv;
      if (entry < 0) {
        pu = std::min(u, v);
        pv = std::max(u, v);
      } else {
        pu = entry;
        Vertex best = -1;
        size_t pe = std::find(cycle.begin(), cycle.end(), entry) - cycle.begin();
        require(pe < cycle.size(), Errc::internal_error, "entry vertex off block boundary");
        Vertex n1 = cycle[(pe + 1) % cycle.size()];
        Vertex n2 = cycle[(pe + cycle.size() - 1) % cycle.size()];
        best = std::min(n1, n2);
        require(col[best] == kUncolored, Errc::internal_error, "block second seed already colored");
        ColorList avail = list_minus(lists[best], ColorList{col[entry]});
        require(!avail.empty(), Errc::internal_error, "block seed coloring stuck");
        col[best] = avail[0];
        pv = best;
      }
      std::vector<char> active(g2.vertex_count(), 0);
      for (Vertex x : block) active[x] = 1;
      solver.solve_with_pair(cycle, active, pu, pv);
    }
    for (Vertex x : block)
      for (int nb : blocks_of[x])
        if (!visited[nb]) {
          visited[nb] = 1;
          q.emplace(nb, x);
        }
  }
}

}  // namespace detail

/// Thomassen's 5-list-coloring recursion: `outer_walk` names the face acting
/// as the unbounded one; exactly two adjacent vertices on it carry distinct
/// singleton lists, the rest of the walk >= 3 colors, everything else >= 5.
inline Coloring thomassen_color(const PlanarGraph& g, const std::vector<Vertex>& outer_walk,
                                const ListAssignment& L) {
  validate_lists(g, L);
  require(g.component_count() == 1 && g.vertex_count() > 0, Errc::precondition_violated,
          "thomassen_color: graph must be connected and nonempty");
  int outer_idx = detail::locate_face(g, outer_walk);
  VertexSet on_outer = make_set(g.all_faces()[outer_idx].walk);

  std::vector<Vertex> singles;
  for (Vertex v : on_outer)
    if (L[v].size() == 1) singles.push_back(v);
  require(singles.size() == 2, Errc::precondition_violated,
          "thomassen_color: need exactly two singleton lists on the outer face, found " +
              std::to_string(singles.size()));
  Vertex u = singles[0], v = singles[1];
  require(g.adjacent(u, v), Errc::precondition_violated,
          "thomassen_color: precolored vertices are not adjacent");
  require(L[u][0] != L[v][0], Errc::precondition_violated,
          "thomassen_color: precolored pair shares its color");
  for (Vertex w : on_outer)
    if (w != u && w != v)
      require(L[w].size() >= 3, Errc::precondition_violated,
              "thomassen_color: outer vertex " + std::to_string(w) + " has fewer than 3 colors");
  for (Vertex w = 0; w < g.vertex_count(); ++w)
    if (!set_contains(on_outer, w))
      require(L[w].size() >= 5, Errc::precondition_violated,
              "thomassen_color: interior vertex " + std::to_string(w) +
                  " has fewer than 5 colors");

  if (g.vertex_count() == 2) return Coloring{L[0][0], L[1][0]};

  detail::Triangulated t = detail::apex_interior_faces(g, outer_idx, L);
  Coloring col(t.graph.vertex_count(), kUncolored);
  col[u] = L[u][0];
  col[v] = L[v][0];
  ListAssignment lists = t.lists;
  detail::thomassen_run_blocks(t.graph, lists, col, t.outer_walk, u, v);
  col.resize(g.vertex_count());
  require(is_proper(g, col, L), Errc::internal_error, "thomassen produced an improper coloring");
  return col;
}

/// Boundary-only variant: every outer vertex holds >= 3 colors; two adjacent
/// boundary vertices get seeded with distinct colors and the recursion runs.
inline Coloring thomassen_color_free_boundary(const PlanarGraph& g,
                                              const std::vector<Vertex>& outer_walk,
                                              const ListAssignment& L) {
  validate_lists(g, L);
  require(g.component_count() == 1 && g.vertex_count() > 0, Errc::precondition_violated,
          "thomassen_color_free_boundary: graph must be connected and nonempty");
  if (g.vertex_count() == 1) return Coloring{L[0][0]};
  int outer_idx = detail::locate_face(g, outer_walk);
  const auto& walk = g.all_faces()[outer_idx].walk;
  VertexSet on_outer = make_set(walk);
  for (Vertex w : on_outer)
    require(L[w].size() >= 3, Errc::precondition_violated,
            "free boundary: outer vertex " + std::to_string(w) + " has fewer than 3 colors");
  for (Vertex w = 0; w < g.vertex_count(); ++w)
    if (!set_contains(on_outer, w))
      require(L[w].size() >= 5, Errc::precondition_violated,
              "free boundary: interior vertex " + std::to_string(w) + " has fewer than 5 colors");

  Vertex b0 = on_outer.front();
  Vertex b1 = -1;
  for (size_t t = 0; t < walk.size(); ++t) {
    if (walk[t] != b0) continue;
    Vertex a = walk[(t + 1) % walk.size()];
    Vertex b = walk[(t + walk.size() - 1) % walk.size()];
    for (Vertex cand : {a, b})
      if (cand != b0 && (b1 < 0 || cand < b1)) b1 = cand;
  }
  require(b1 >= 0, Errc::internal_error, "no boundary neighbor");
  ListAssignment L2 = L;
  L2[b0] = {L[b0][0]};
  ColorList l1 = list_minus(L[b1], L2[b0]);
  L2[b1] = {l1[0]};
  Coloring col = thomassen_color(g, outer_walk, L2);
  require(is_proper(g, col, L), Errc::internal_error, "free boundary coloring left its lists");
  return col;
}

/// Proposition-1 composition: given a nicely colored subgraph H covering all
/// precolored vertices, finish the rest of the graph with Thomassen's theorem
/// on the residual lists, one component at a time.
inline Coloring extend_via_nice_subgraph(const PlanarGraph& g, const VertexSet& H,
                                         const Coloring& c_h, const ListAssignment& L) {
  require(!H.empty(), Errc::precondition_violated, "extend_via_nice_subgraph: H empty");
  require(is_proper_on(g, H, c_h, L), Errc::precondition_violated,
          "extend_via_nice_subgraph: H coloring not proper");
  require(is_nice(g, H, c_h, L), Errc::precondition_violated,
          "extend_via_nice_subgraph: coloring of H is not nice");
  ListAssignment lc = residual_lists(g, H, c_h, L);
  Coloring col = empty_coloring(g);
  for (Vertex h : H) col[h] = c_h[h];

  VertexSet rest;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!set_contains(H, v)) rest.push_back(v);
  if (rest.empty()) return col;

  std::vector<char> seen(g.vertex_count(), 0);
  for (Vertex s : rest) {
    if (seen[s] || set_contains(H, s)) continue;
    VertexSet comp;
    std::vector<Vertex> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (Vertex w : g.sorted_neighbors(x))
        if (!seen[w] && !set_contains(H, w)) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    comp = make_set(comp);
    SubgraphView view = induced_subgraph(g, comp);
    VertexSet needed;  // members of the component adjacent to H (sub ids)
    for (size_t i = 0; i < comp.size(); ++i)
      for (Vertex w : g.sorted_neighbors(comp[i]))
        if (set_contains(H, w)) {
          needed.push_back(static_cast<Vertex>(i));
          break;
        }
    int face_idx = -1;
    for (size_t f = 0; f < view.graph.all_faces().size() && face_idx < 0; ++f) {
      VertexSet on_face = make_set(view.graph.all_faces()[f].walk);
      if (set_minus(needed, on_face).empty()) face_idx = static_cast<int>(f);
    }
    require(face_idx >= 0, Errc::internal_error,
            "neighbors of H do not share a face of the remainder");
    ListAssignment sub_lists(comp.size());
    for (size_t i = 0; i < comp.size(); ++i) sub_lists[i] = lc[comp[i]];
    Coloring sub = thomassen_color_free_boundary(view.graph,
                                                 view.graph.all_faces()[face_idx].walk, sub_lists);
    for (size_t i = 0; i < comp.size(); ++i) col[comp[i]] = sub[i];
  }
  require(is_proper(g, col, L), Errc::internal_error, "nice-subgraph extension not proper");
  return col;
}

}  // namespace planarcolor

#endif  // PLANARCOLOR_THOMASSEN_HPP
