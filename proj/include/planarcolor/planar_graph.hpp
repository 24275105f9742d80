#ifndef PLANARCOLOR_PLANAR_GRAPH_HPP
#define PLANARCOLOR_PLANAR_GRAPH_HPP

#include <array>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <utility>

#include "planarcolor/core.hpp"

namespace planarcolor {

/// One face of the embedding: the closed walk of vertices traced by the
/// next-edge-in-rotation rule.  An isolated vertex gets a synthetic walk {v}.
struct Face {
  std::vector<Vertex> walk;
  bool is_outer = false;
};

namespace detail {

inline bool cyclic_match_dir(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  if (a.size() != b.size()) return false;
  const size_t n = a.size();
  for (size_t off = 0; off < n; ++off) {
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i) ok = a[i] == b[(i + off) % n];
    if (ok) return true;
  }
  return false;
}

inline bool cyclic_match(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  if (cyclic_match_dir(a, b)) return true;
  std::vector<Vertex> r(b.rbegin(), b.rend());
  return cyclic_match_dir(a, r);
}

}  // namespace detail

/// Plane graph given by a rotation system: the cyclic order of neighbors at
/// every vertex.  Faces, components and the Euler check are derived eagerly;
/// instances are immutable after build.
class PlanarGraph {
 public:
  PlanarGraph() = default;

  int vertex_count() const { return static_cast<int>(rot_.size()); }
  int edge_count() const { return m_; }
  int degree(Vertex v) const { return static_cast<int>(rot_[v].size()); }
  const std::vector<Vertex>& rotation(Vertex v) const { return rot_[v]; }
  const std::vector<Vertex>& sorted_neighbors(Vertex v) const { return nbr_[v]; }

  bool valid_vertex(Vertex v) const { return v >= 0 && v < vertex_count(); }

  bool adjacent(Vertex u, Vertex v) const {
    if (!valid_vertex(u) || !valid_vertex(v)) return false;
    return std::binary_search(nbr_[u].begin(), nbr_[u].end(), v);
  }

  const std::vector<Face>& all_faces() const { return faces_; }
  int component_of(Vertex v) const { return comp_[v]; }
  int component_count() const { return comp_count_; }

  /// Index into all_faces() of the designated outer face of v's component.
  int outer_face_index(Vertex v) const { return outer_face_[comp_[v]]; }

  /// Face on the left of directed edge (u, v) under the tracing rule.
  int face_of_directed_edge(Vertex u, Vertex v) const {
    int i = rot_pos(v, u);
    require(i >= 0, Errc::invalid_vertex, "no such edge");
    return face_at_[v][i];  // face containing directed edge (u, v): stored at (v, idx of u)
  }

  /// Position of neighbor `w` in rotation(v), or -1.
  int rot_pos(Vertex v, Vertex w) const {
    const auto& idx = rot_index_[v];
    auto it = std::lower_bound(idx.begin(), idx.end(), std::make_pair(w, -1));
    if (it != idx.end() && it->first == w) return it->second;
    return -1;
  }

  std::vector<int> bfs_distances(const VertexSet& sources) const {
    std::vector<int> dist(vertex_count(), -1);
    std::queue<Vertex> q;
    for (Vertex s : sources) {
      dist[s] = 0;
      q.push(s);
    }
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex w : nbr_[u])
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
    }
    return dist;
  }

  int dist(Vertex u, Vertex v) const {
    auto d = bfs_distances({u});
    return d[v];
  }

  static PlanarGraph build(int n, std::vector<std::vector<Vertex>> rotations,
                           const std::vector<Vertex>* outer_walk = nullptr);

  /// Returns a copy with the face matching `walk` designated as outer.
  PlanarGraph with_outer(const std::vector<Vertex>& walk) const {
    PlanarGraph g = *this;
    g.designate_outer(walk);
    return g;
  }

 private:
  void designate_outer(const std::vector<Vertex>& walk) {
    // prefer a direction-exact match; a cycle's two faces differ only in
    // orientation
    for (bool allow_reflection : {false, true}) {
      for (size_t f = 0; f < faces_.size(); ++f) {
        bool hit = allow_reflection ? detail::cyclic_match(faces_[f].walk, walk)
                                    : detail::cyclic_match_dir(faces_[f].walk, walk);
        if (!hit) continue;
        int c = comp_[faces_[f].walk.front()];
        faces_[outer_face_[c]].is_outer = false;
        outer_face_[c] = static_cast<int>(f);
        faces_[f].is_outer = true;
        return;
      }
    }
    fail(Errc::bad_parameters, "outer walk does not match any face");
  }

  void trace_faces();

  std::vector<std::vector<Vertex>> rot_;
  std::vector<std::vector<Vertex>> nbr_;                      // sorted
  std::vector<std::vector<std::pair<Vertex, int>>> rot_index_;  // (nbr, pos in rot_), sorted
  std::vector<std::vector<int>> face_at_;  // face_at_[v][i] = face of directed edge (rot_[v][i] -> v)
  std::vector<Face> faces_;
  std::vector<int> comp_;
  std::vector<int> outer_face_;  // per component
  int comp_count_ = 0;
  int m_ = 0;
};

inline void PlanarGraph::trace_faces() {
  const int n = vertex_count();
  faces_.clear();
  face_at_.assign(n, {});
  for (Vertex v = 0; v < n; ++v) face_at_[v].assign(rot_[v].size(), -1);

  // face_at_[v][i] marks the face of the directed edge (rot_[v][i] -> v).
  // Trace from the lexicographically smallest unused directed edge (u, w).
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex w : nbr_[u]) {
      int start_pos = rot_pos(w, u);
      if (face_at_[w][start_pos] >= 0) continue;
      int fid = static_cast<int>(faces_.size());
      Face f;
      Vertex a = u, b = w;
      do {
        f.walk.push_back(a);
        face_at_[b][rot_pos(b, a)] = fid;
        int i = rot_pos(b, a);
        Vertex c = rot_[b][(i + 1) % rot_[b].size()];
        a = b;
        b = c;
      } while (!(a == u && b == w));
      faces_.push_back(std::move(f));
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (rot_[v].empty()) {
      Face f;
      f.walk = {v};
      faces_.push_back(std::move(f));
    }
  }
}

inline PlanarGraph PlanarGraph::build(int n, std::vector<std::vector<Vertex>> rotations,
                                      const std::vector<Vertex>* outer_walk) {
  require(n >= 0, Errc::bad_parameters, "negative vertex count");
  require(static_cast<int>(rotations.size()) == n, Errc::bad_parameters,
          "rotation table size != n");
  PlanarGraph g;
  g.rot_ = std::move(rotations);
  g.nbr_.assign(n, {});
  g.rot_index_.assign(n, {});
  int dir_edges = 0;
  for (Vertex v = 0; v < n; ++v) {
    for (size_t i = 0; i < g.rot_[v].size(); ++i) {
      Vertex w = g.rot_[v][i];
      require(w >= 0 && w < n, Errc::invalid_vertex,
              "rotation of " + std::to_string(v) + " references " + std::to_string(w));
      require(w != v, Errc::bad_parameters, "self-loop at " + std::to_string(v));
      g.rot_index_[v].emplace_back(w, static_cast<int>(i));
    }
    std::sort(g.rot_index_[v].begin(), g.rot_index_[v].end());
    for (size_t i = 1; i < g.rot_index_[v].size(); ++i)
      require(g.rot_index_[v][i].first != g.rot_index_[v][i - 1].first, Errc::bad_parameters,
              "repeated neighbor in rotation of " + std::to_string(v));
    g.nbr_[v].reserve(g.rot_index_[v].size());
    for (auto& p : g.rot_index_[v]) g.nbr_[v].push_back(p.first);
    dir_edges += static_cast<int>(g.rot_[v].size());
  }
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.nbr_[v])
      require(std::binary_search(g.nbr_[w].begin(), g.nbr_[w].end(), v),
              Errc::asymmetric_adjacency,
              std::to_string(v) + " lists " + std::to_string(w) + " but not conversely");
  g.m_ = dir_edges / 2;

  // components
  g.comp_.assign(n, -1);
  g.comp_count_ = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (g.comp_[s] >= 0) continue;
    int c = g.comp_count_++;
    std::queue<Vertex> q;
    q.push(s);
    g.comp_[s] = c;
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex w : g.nbr_[u])
        if (g.comp_[w] < 0) {
          g.comp_[w] = c;
          q.push(w);
        }
    }
  }

  g.trace_faces();

  // Euler check per component: n_c - m_c + f_c == 2.  Summed over components
  // with the shared unbounded region counted once this is the spec's
  // n - m + f = 1 + c.
  {
    std::vector<int> nc(g.comp_count_, 0), mc2(g.comp_count_, 0), fc(g.comp_count_, 0);
    for (Vertex v = 0; v < n; ++v) {
      nc[g.comp_[v]]++;
      mc2[g.comp_[v]] += g.degree(v);
    }
    for (auto& f : g.faces_) fc[g.comp_[f.walk.front()]]++;
    for (int c = 0; c < g.comp_count_; ++c)
      require(nc[c] - mc2[c] / 2 + fc[c] == 2, Errc::euler_violation,
              "component " + std::to_string(c) + ": n=" + std::to_string(nc[c]) +
                  " m=" + std::to_string(mc2[c] / 2) + " f=" + std::to_string(fc[c]));
  }

  // default outer face per component: the face holding the smallest directed
  // edge (isolated vertices: their synthetic face).
  g.outer_face_.assign(g.comp_count_, -1);
  for (size_t f = 0; f < g.faces_.size(); ++f) {
    int c = g.comp_[g.faces_[f].walk.front()];
    if (g.outer_face_[c] < 0) {
      g.outer_face_[c] = static_cast<int>(f);
      g.faces_[f].is_outer = true;
    }
  }
  if (outer_walk != nullptr) g.designate_outer(*outer_walk);
  return g;
}

/// Induced subgraph with inherited rotations plus the id maps between the
/// subgraph (0..k-1) and its host graph.
struct SubgraphView {
  PlanarGraph graph;
  std::vector<Vertex> to_host;
  std::vector<int> from_host;  // host-sized, -1 when absent
};

inline SubgraphView induced_subgraph(const PlanarGraph& g, const VertexSet& keep) {
  SubgraphView view;
  view.from_host.assign(g.vertex_count(), -1);
  view.to_host = keep;
  for (size_t i = 0; i < keep.size(); ++i) {
    require(g.valid_vertex(keep[i]), Errc::invalid_vertex, "induced_subgraph: bad id");
    view.from_host[keep[i]] = static_cast<int>(i);
  }
  std::vector<std::vector<Vertex>> rots(keep.size());
  for (size_t i = 0; i < keep.size(); ++i)
    for (Vertex w : g.rotation(keep[i]))
      if (view.from_host[w] >= 0) rots[i].push_back(view.from_host[w]);
  view.graph = PlanarGraph::build(static_cast<int>(keep.size()), std::move(rots));
  return view;
}

// ---- spec operations ------------------------------------------------------

inline PlanarGraph build_graph(int n, std::vector<std::vector<Vertex>> rotations,
                               const std::vector<Vertex>* outer_walk = nullptr) {
  return PlanarGraph::build(n, std::move(rotations), outer_walk);
}

inline const std::vector<Face>& faces(const PlanarGraph& g) { return g.all_faces(); }

namespace detail {

/// Lemma 2 clauses (1)-(3) hold for any shortest path in a simple graph; they
/// are asserted on every path we hand out so embedding corruption surfaces
/// early.
inline void check_shortest_path_basic(const PlanarGraph& g, const std::vector<Vertex>& path) {
  const int len = static_cast<int>(path.size());
  std::vector<int> pos(g.vertex_count(), -1);
  for (int i = 0; i < len; ++i) pos[path[i]] = i;
  for (int i = 0; i < len; ++i)
    for (Vertex w : g.sorted_neighbors(path[i]))
      if (pos[w] >= 0)
        require(std::abs(pos[w] - i) == 1, Errc::internal_error,
                "shortest path has a chord: " + std::to_string(path[i]) + "-" + std::to_string(w));
  std::vector<int> hits(g.vertex_count(), 0);
  std::vector<int> lo(g.vertex_count(), 1 << 30), hi(g.vertex_count(), -1);
  for (int i = 0; i < len; ++i)
    for (Vertex w : g.sorted_neighbors(path[i])) {
      if (pos[w] >= 0) continue;
      hits[w]++;
      lo[w] = std::min(lo[w], i);
      hi[w] = std::max(hi[w], i);
    }
  for (Vertex w = 0; w < g.vertex_count(); ++w) {
    if (pos[w] >= 0 || hits[w] == 0) continue;
    require(hits[w] <= 3, Errc::internal_error, "d(w,S) > 3 for w=" + std::to_string(w));
    if (hits[w] == 3)
      require(hi[w] - lo[w] == 2, Errc::internal_error,
              "3-neighbor not on consecutive triple: w=" + std::to_string(w));
  }
}

}  // namespace detail

/// BFS shortest path; ties broken by smallest next vertex id.
inline std::vector<Vertex> shortest_path(const PlanarGraph& g, Vertex u, Vertex v) {
  require(g.valid_vertex(u) && g.valid_vertex(v), Errc::invalid_vertex, "shortest_path");
  if (u == v) return {u};
  auto dist_v = g.bfs_distances({v});
  require(dist_v[u] >= 0, Errc::disconnected,
          std::to_string(u) + " and " + std::to_string(v) + " are in different components");
  std::vector<Vertex> path{u};
  Vertex cur = u;
  while (cur != v) {
    Vertex next = -1;
    for (Vertex w : g.sorted_neighbors(cur))
      if (dist_v[w] == dist_v[cur] - 1) {
        next = w;
        break;
      }
    require(next >= 0, Errc::internal_error, "BFS reconstruction failed");
    path.push_back(next);
    cur = next;
  }
  detail::check_shortest_path_basic(g, path);
  return path;
}

/// Smallest pairwise distance within P.
inline int dist_of_set(const PlanarGraph& g, const VertexSet& P) {
  require(P.size() >= 2, Errc::too_few_vertices, "dist_of_set needs |P| >= 2");
  int best = -1;
  for (size_t i = 0; i < P.size(); ++i) {
    auto d = g.bfs_distances({P[i]});
    for (size_t j = i + 1; j < P.size(); ++j) {
      require(d[P[j]] >= 0, Errc::disconnected, "dist_of_set: P spans components");
      if (best < 0 || d[P[j]] < best) best = d[P[j]];
    }
  }
  return best;
}

struct SeparatingCycle {
  VertexSet cycle;    // sorted vertex set spanning a C3 or C4
  bool separates_p;   // two P-vertices in distinct components of G - X
};

namespace detail {

/// Components of g minus `removed`; returns component id per vertex (-1 for
/// removed) and the number of components.
inline std::pair<std::vector<int>, int> components_without(const PlanarGraph& g,
                                                           const VertexSet& removed) {
  std::vector<int> comp(g.vertex_count(), -1);
  for (Vertex v : removed) comp[v] = -2;
  int count = 0;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (comp[s] != -1) continue;
    int c = count++;
    std::queue<Vertex> q;
    q.push(s);
    comp[s] = c;
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex w : g.sorted_neighbors(u))
        if (comp[w] == -1) {
          comp[w] = c;
          q.push(w);
        }
    }
  }
  for (auto& c : comp)
    if (c == -2) c = -1;
  return {comp, count};
}

inline bool spans_c4(const PlanarGraph& g, Vertex a, Vertex b, Vertex c, Vertex d) {
  // a-b-c-d-a in some pairing of {a,b,c,d}
  auto cyc = [&](Vertex p, Vertex q, Vertex r, Vertex s) {
    return g.adjacent(p, q) && g.adjacent(q, r) && g.adjacent(r, s) && g.adjacent(s, p);
  };
  return cyc(a, b, c, d) || cyc(a, b, d, c) || cyc(a, c, b, d);
}

inline int induced_edge_count(const PlanarGraph& g, const VertexSet& xs) {
  int e = 0;
  for (size_t i = 0; i < xs.size(); ++i)
    for (size_t j = i + 1; j < xs.size(); ++j)
      if (g.adjacent(xs[i], xs[j])) ++e;
  return e;
}

}  // namespace detail

/// All 3- and 4-vertex sets spanning a cycle whose removal disconnects g,
/// classified by whether they split P.  Exhaustive; with chords permitted on
/// the C4s unless `strict_induced`.  Quartic worst case, fine at desk scale.
inline std::vector<SeparatingCycle> separating_short_cycles(const PlanarGraph& g,
                                                            const VertexSet& P,
                                                            bool strict_induced = false) {
  require(g.component_count() <= 1 || g.vertex_count() == 0, Errc::disconnected,
          "separating_short_cycles expects a connected graph");
  std::set<VertexSet> seen;
  std::vector<SeparatingCycle> out;
  auto consider = [&](VertexSet xs) {
    if (!seen.insert(xs).second) return;
    auto [comp, count] = detail::components_without(g, xs);
    if (count < 2) return;
    std::set<int> pcomps;
    for (Vertex p : P)
      if (comp[p] >= 0) pcomps.insert(comp[p]);
    out.push_back(SeparatingCycle{xs, pcomps.size() >= 2});
  };
  const int n = g.vertex_count();
  // triangles: edge + common neighbor
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b : g.sorted_neighbors(a)) {
      if (b < a) continue;
      for (Vertex c : g.sorted_neighbors(b)) {
        if (c <= b) continue;  // a < b < c and c adjacent to both
        if (g.adjacent(a, c)) consider({a, b, c});
      }
    }
  // 4-sets spanning a C4: diagonal pair + two common neighbors
  for (Vertex a = 0; a < n; ++a)
    for (Vertex c = a + 1; c < n; ++c) {
      VertexSet common = set_intersect(g.sorted_neighbors(a), g.sorted_neighbors(c));
      for (size_t i = 0; i < common.size(); ++i)
        for (size_t j = i + 1; j < common.size(); ++j) {
          VertexSet xs = make_set({a, c, common[i], common[j]});
          if (xs.size() != 4) continue;
          if (!detail::spans_c4(g, xs[0], xs[1], xs[2], xs[3])) continue;
          if (strict_induced && detail::induced_edge_count(g, xs) != 4) continue;
          consider(xs);
        }
    }
  std::sort(out.begin(), out.end(), [](const SeparatingCycle& x, const SeparatingCycle& y) {
    if (x.cycle.size() != y.cycle.size()) return x.cycle.size() < y.cycle.size();
    return x.cycle < y.cycle;
  });
  return out;
}

struct NeighborhoodSets {
  VertexSet n1;      // N(H): neighbors of H outside H
  VertexSet n3;      // members of N(H) with >= 3 neighbors in H
  SubgraphView q;    // induced on H union N3(H)
};

inline NeighborhoodSets neighborhood_sets(const PlanarGraph& g, const VertexSet& H) {
  require(!H.empty(), Errc::bad_parameters, "neighborhood_sets: H empty");
  std::vector<int> hits(g.vertex_count(), 0);
  for (Vertex h : H)
    for (Vertex w : g.sorted_neighbors(h))
      if (!set_contains(H, w)) hits[w]++;
  NeighborhoodSets res;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (hits[v] == 0) continue;
    res.n1.push_back(v);
    if (hits[v] >= 3) res.n3.push_back(v);
  }
  res.q = induced_subgraph(g, set_union(H, res.n3));
  return res;
}

}  // namespace planarcolor

#endif  // PLANARCOLOR_PLANAR_GRAPH_HPP
