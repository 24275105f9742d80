#ifndef PLANARCOLOR_PATH_MACHINERY_HPP
#define PLANARCOLOR_PATH_MACHINERY_HPP

#include "planarcolor/blocks.hpp"
#include "planarcolor/coloring.hpp"

namespace planarcolor {

struct PathOptions {
  /// enforce Lemma 2 clause (4) and Q(S)-S independence while building
  bool check_clause4 = true;
  /// scan the whole graph for separating C3/C4 before the nice-coloring
  /// lemmas run; callers that already certified the graph can switch it off
  bool check_separating_cycles = true;
};

/// A shortest path together with its 3-neighbor structure.
struct ShortestPathCtx {
  const PlanarGraph* graph = nullptr;
  std::vector<Vertex> path;
  std::vector<int> pos;      // graph-sized, -1 off the path
  std::vector<Vertex> apex;  // apex[i] sits over (path[i], path[i+1], path[i+2]); -1 if none
  VertexSet n3;
  bool clause4_checked = false;

  int length() const { return static_cast<int>(path.size()) - 1; }
  const PlanarGraph& g() const { return *graph; }
  Vertex at(int i) const { return path[static_cast<size_t>(i)]; }
};

inline ShortestPathCtx build_path_ctx_from_path(const PlanarGraph& g,
                                                const std::vector<Vertex>& path,
                                                const PathOptions& opts = {}) {
  require(!path.empty(), Errc::bad_parameters, "empty path");
  ShortestPathCtx ctx;
  ctx.graph = &g;
  ctx.path = path;
  ctx.pos.assign(g.vertex_count(), -1);
  for (size_t i = 0; i < path.size(); ++i) {
    require(g.valid_vertex(path[i]), Errc::invalid_vertex, "path references a bad id");
    require(ctx.pos[path[i]] < 0, Errc::bad_parameters, "path repeats a vertex");
    ctx.pos[path[i]] = static_cast<int>(i);
    if (i > 0)
      require(g.adjacent(path[i - 1], path[i]), Errc::bad_parameters, "path edge missing");
  }
  int d = g.dist(path.front(), path.back());
  require(d == ctx.length(), Errc::lemma2_violation,
          "given walk is not a shortest path: length " + std::to_string(ctx.length()) +
              " vs distance " + std::to_string(d));

  const int len = static_cast<int>(path.size());
  ctx.apex.assign(std::max(0, len - 2), -1);
  for (Vertex w = 0; w < g.vertex_count(); ++w) {
    if (ctx.pos[w] >= 0) continue;
    int hits = 0, lo = len, hi = -1;
    for (Vertex x : g.sorted_neighbors(w))
      if (ctx.pos[x] >= 0) {
        hits++;
        lo = std::min(lo, ctx.pos[x]);
        hi = std::max(hi, ctx.pos[x]);
      }
    if (hits == 0) continue;
    require(hits <= 3, Errc::lemma2_violation,
            "clause (1): vertex " + std::to_string(w) + " has " + std::to_string(hits) +
                " path neighbors");
    if (hits == 3) {
      require(hi - lo == 2, Errc::lemma2_violation,
              "clause (3): 3-neighbor " + std::to_string(w) + " not over a consecutive triple");
      ctx.n3.push_back(w);
      if (ctx.apex[lo] >= 0) {
        if (opts.check_clause4)
          fail(Errc::lemma2_violation, "clause (4): triple at " + std::to_string(lo) +
                                           " has two common neighbors " +
                                           std::to_string(ctx.apex[lo]) + " and " +
                                           std::to_string(w));
      } else {
        ctx.apex[lo] = w;
      }
    }
  }
  for (int i = 0; i < len; ++i)
    for (Vertex x : g.sorted_neighbors(path[i]))
      if (ctx.pos[x] >= 0)
        require(std::abs(ctx.pos[x] - i) == 1, Errc::lemma2_violation,
                "clause (2): path chord " + std::to_string(path[i]) + "-" + std::to_string(x));
  if (opts.check_clause4) {
    for (size_t i = 0; i < ctx.n3.size(); ++i)
      for (size_t j = i + 1; j < ctx.n3.size(); ++j)
        require(!g.adjacent(ctx.n3[i], ctx.n3[j]), Errc::lemma2_violation,
                "Q(S)-S is not independent: " + std::to_string(ctx.n3[i]) + "-" +
                    std::to_string(ctx.n3[j]));
    ctx.clause4_checked = true;
  }
  return ctx;
}

inline ShortestPathCtx build_path_ctx(const PlanarGraph& g, Vertex u, Vertex v,
                                      const PathOptions& opts = {}) {
  return build_path_ctx_from_path(g, shortest_path(g, u, v), opts);
}

/// Induced subgraph on the path plus its 3-neighbors.
inline SubgraphView q_subgraph(const ShortestPathCtx& ctx) {
  return induced_subgraph(ctx.g(), set_union(make_set(ctx.path), ctx.n3));
}

// ---- block structure -------------------------------------------------------

struct PathBlock {
  VertexSet vertices;
  int path_count = 0;
  int lo = -1, hi = -1;  // path index range of the block's path vertices
  bool nontrivial = false;
  bool remote = false;
};

struct BlockDecomposition {
  std::vector<PathBlock> blocks;  // ordered along the path
  std::vector<std::pair<Vertex, Vertex>> cut_edges;  // host ids, (min,max)
  VertexSet cut_vertices;
  std::vector<int> cut_edge_indices;  // path index k per cut edge (path[k], path[k+1])
};

inline BlockDecomposition decompose_blocks(const ShortestPathCtx& ctx) {
  SubgraphView q = q_subgraph(ctx);
  BlockCut bc = compute_blocks(q.graph);
  BlockDecomposition out;
  for (const auto& b : bc.blocks) {
    PathBlock pb;
    for (Vertex s : b) pb.vertices.push_back(q.to_host[s]);
    pb.vertices = make_set(pb.vertices);
    for (Vertex h : pb.vertices) {
      int p = ctx.pos[h];
      if (p < 0) continue;
      pb.path_count++;
      pb.lo = pb.lo < 0 ? p : std::min(pb.lo, p);
      pb.hi = std::max(pb.hi, p);
    }
    pb.nontrivial =
        !set_contains(pb.vertices, ctx.path.front()) && !set_contains(pb.vertices, ctx.path.back());
    out.blocks.push_back(std::move(pb));
  }
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const PathBlock& a, const PathBlock& b) { return a.lo < b.lo; });
  for (size_t i = 0; i < out.blocks.size(); ++i) {
    auto& b = out.blocks[i];
    if (!b.nontrivial) continue;
    int ones = 0;
    for (size_t j = 0; j < out.blocks.size(); ++j) {
      if (j == i || !out.blocks[j].nontrivial) continue;
      if (set_intersect(b.vertices, out.blocks[j].vertices).size() == 1) ones++;
    }
    b.remote = ones >= 2;
  }
  for (auto& e : bc.bridges) {
    Vertex a = q.to_host[e.first], b = q.to_host[e.second];
    out.cut_edges.emplace_back(std::min(a, b), std::max(a, b));
    require(ctx.pos[a] >= 0 && ctx.pos[b] >= 0, Errc::internal_error,
            "cut edge of Q(S) off the path");
    out.cut_edge_indices.push_back(std::min(ctx.pos[a], ctx.pos[b]));
  }
  std::sort(out.cut_edge_indices.begin(), out.cut_edge_indices.end());
  for (Vertex c : bc.cut_vertices) {
    out.cut_vertices.push_back(q.to_host[c]);
    require(ctx.pos[q.to_host[c]] >= 0, Errc::internal_error, "cut vertex of Q(S) off the path");
  }
  out.cut_vertices = make_set(out.cut_vertices);
  // block-cut tree of Q(S) must be a path: consecutive blocks share one vertex
  for (size_t i = 0; i + 1 < out.blocks.size(); ++i)
    require(set_intersect(out.blocks[i].vertices, out.blocks[i + 1].vertices).size() == 1,
            Errc::internal_error, "block-cut tree of Q(S) is not a path");
  return out;
}

// ---- tags -------------------------------------------------------------------

struct TagContext {
  Vertex center;
  Vertex tag_u, tag_v;
  int center_idx, tag_u_idx, tag_v_idx;
  int d;
};

inline TagContext center_and_tags(const ShortestPathCtx& ctx, int d) {
  require(d > 0 && d % 2 == 0, Errc::bad_parameters, "d must be positive and even");
  int m = ctx.length();
  require(m >= d, Errc::path_too_short,
          "path of length " + std::to_string(m) + " cannot carry " + std::to_string(d) +
              "-tags");
  int c1 = m / 2, c2 = (m + 1) / 2;
  int ci = c1;
  if (c2 != c1 && ctx.at(c2) < ctx.at(c1)) ci = c2;  // smaller vertex id on ties
  TagContext t;
  t.center_idx = ci;
  t.center = ctx.at(ci);
  t.d = d;
  t.tag_u_idx = ci - d / 2;
  t.tag_v_idx = ci + d / 2;
  require(t.tag_u_idx >= 0 && t.tag_v_idx <= m, Errc::path_too_short, "tags fall off the path");
  t.tag_u = ctx.at(t.tag_u_idx);
  t.tag_v = ctx.at(t.tag_v_idx);
  return t;
}

// ---- nice colorings ---------------------------------------------------------

namespace detail {

/// One step of the Lemma-3 sweep: choose a color for `cur` given the two
/// previously colored path vertices and the apex over their triple.
inline int sweep_pick(const ListAssignment& L, int prev2_col, int prev1_col, Vertex cur,
                      Vertex apex) {
  ColorList cands = list_minus(L[cur], ColorList{prev1_col});
  require(!cands.empty(), Errc::internal_error, "sweep: empty candidate list");
  if (apex < 0) return cands[0];
  const ColorList& lw = L[apex];
  if (!list_has(lw, prev2_col) || !list_has(lw, prev1_col)) return cands[0];
  if (list_has(cands, prev2_col)) return prev2_col;
  for (int c : cands)
    if (!list_has(lw, c)) return c;
  fail(Errc::internal_error, "sweep: no color can spare the apex");
}

/// Color path[from..to] left to right; path[from-1] (and path[from-2] when
/// present) must be colored.
inline void sweep_forward(const ShortestPathCtx& ctx, const ListAssignment& L, Coloring& col,
                          int from, int to) {
  for (int i = from; i <= to; ++i) {
    Vertex cur = ctx.at(i);
    if (i == 1) {
      ColorList cands = list_minus(L[cur], ColorList{col[ctx.at(0)]});
      require(!cands.empty(), Errc::internal_error, "sweep: stuck at second vertex");
      col[cur] = cands[0];
      continue;
    }
    Vertex apex = ctx.apex[i - 2];
    col[cur] = sweep_pick(L, col[ctx.at(i - 2)], col[ctx.at(i - 1)], cur, apex);
  }
}

/// Mirror image: color path[from..to] right to left; path[to+1] (and
/// path[to+2]) must be colored.
inline void sweep_backward(const ShortestPathCtx& ctx, const ListAssignment& L, Coloring& col,
                           int from, int to) {
  int m = ctx.length();
  for (int i = from; i >= to; --i) {
    Vertex cur = ctx.at(i);
    if (i == m - 1) {
      ColorList cands = list_minus(L[cur], ColorList{col[ctx.at(m)]});
      require(!cands.empty(), Errc::internal_error, "sweep: stuck next to the far endpoint");
      col[cur] = cands[0];
      continue;
    }
    Vertex apex = ctx.apex[i];
    col[cur] = sweep_pick(L, col[ctx.at(i + 2)], col[ctx.at(i + 1)], cur, apex);
  }
}

/// Lemma-4 solver over path[lo..hi]; both endpoint lists have 4 colors.
/// Results are memoized on (hi, right list): the recursion revisits each
/// right endpoint with at most a handful of list variants, which keeps the
/// double induction of the proof quadratic.
class Lemma4Solver {
 public:
  Lemma4Solver(const ShortestPathCtx& ctx, int lo) : ctx_(ctx), lo_(lo) {}

  /// Returns colors for path[lo..hi] as a dense vector indexed from lo.
  std::vector<int> solve(int hi, ListAssignment L) {
    auto key = std::make_pair(hi, L[ctx_.at(hi)]);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::vector<int> res = solve_uncached(hi, std::move(L));
    memo_[key] = res;
    return res;
  }

 private:
  std::vector<int> solve_uncached(int hi, ListAssignment L) {
    const auto& L_lo = L[ctx_.at(lo_)];
    std::vector<int> col(static_cast<size_t>(hi - lo_ + 1), kUncolored);
    auto at = [&](int i) -> int& { return col[static_cast<size_t>(i - lo_)]; };

    if (hi == lo_) {
      at(lo_) = L_lo[0];
      return col;
    }
    if (hi == lo_ + 1) {
      at(lo_) = L_lo[0];
      ColorList c = list_minus(L[ctx_.at(hi)], ColorList{at(lo_)});
      at(hi) = c[0];
      return col;
    }
    if (hi == lo_ + 2) {
      Vertex v0 = ctx_.at(lo_), v1 = ctx_.at(lo_ + 1), v2 = ctx_.at(hi);
      Vertex w = ctx_.apex[lo_];
      if (w < 0) {
        at(lo_) = L[v0][0];
        at(hi) = L[v2][0];
        at(lo_ + 1) = list_minus(L[v1], ColorList{at(lo_), at(hi)})[0];
        return col;
      }
      ColorList common = set_intersect(L[v0], L[v2]);
      if (!common.empty()) {
        at(lo_) = at(hi) = common[0];
        at(lo_ + 1) = list_minus(L[v1], ColorList{common[0]})[0];
        return col;
      }
      // disjoint endpoint lists: 8 colors beat |L(w)| = 5
      ColorList pool = list_minus(set_union(L[v0], L[v2]), L[w]);
      require(!pool.empty(), Errc::internal_error, "lemma4 base: union bound failed");
      int c0 = pool[0];
      if (list_has(L[v0], c0)) {
        at(lo_) = c0;
        at(hi) = L[v2][0];
      } else {
        at(hi) = c0;
        at(lo_) = L[v0][0];
      }
      at(lo_ + 1) = list_minus(L[v1], ColorList{at(lo_), at(hi)})[0];
      return col;
    }

    // |V| >= 4: color path[lo..hi-1] nicely with a trimmed 4-list at hi-1
    Vertex vh = ctx_.at(hi), v1 = ctx_.at(hi - 1), v2 = ctx_.at(hi - 2);
    {
      ListAssignment L1 = L;
      L1[v1] = ColorList(L[v1].begin(), L[v1].begin() + 4);
      std::vector<int> sub = solve(hi - 1, L1);
      std::copy(sub.begin(), sub.end(), col.begin());
    }
    Vertex w = ctx_.apex[hi - 2];
    if (w < 0) {
      at(hi) = list_minus(L[vh], ColorList{at(hi - 1)})[0];
      return col;
    }
    const ColorList &lw = L[w], &lv = L[vh];
    int cv1 = at(hi - 1), cv2 = at(hi - 2);
    if (!list_has(lw, cv1) || !list_has(lw, cv2)) {
      at(hi) = list_minus(lv, ColorList{cv1})[0];
      return col;
    }
    if (list_has(lv, cv2)) {
      at(hi) = cv2;
      return col;
    }
    ColorList escape = list_minus(lv, lw);
    if (!escape.empty()) {
      at(hi) = escape[0];  // not in L(w), hence != cv1
      return col;
    }
    // hard case: L(w) = L(v) + {a}, a = current color of v_{hi-2}
    ColorList extra = list_minus(lw, lv);
    require(extra.size() == 1 && extra[0] == cv2, Errc::internal_error,
            "lemma4: hard case shape mismatch");
    int a = extra[0];
    std::fill(col.begin(), col.end(), kUncolored);
    {
      ListAssignment L2 = L;
      L2[v2] = list_minus(L[v2], ColorList{a});
      require(L2[v2].size() >= 4, Errc::internal_error, "lemma4: interior list too small");
      std::vector<int> sub = solve(hi - 2, L2);
      std::copy(sub.begin(), sub.end(), col.begin());
    }
    int cprev = at(hi - 2);
    Vertex wp = ctx_.apex[hi - 3];  // over (hi-3, hi-2, hi-1)
    if (list_has(lv, cprev)) {
      at(hi - 1) = sweep_pick(L, at(hi - 3), cprev, v1, wp);
      at(hi) = cprev;
    } else {
      at(hi - 1) = sweep_pick(L, at(hi - 3), cprev, v1, wp);
      at(hi) = list_minus(lv, ColorList{at(hi - 1)})[0];
    }
    return col;
  }

  const ShortestPathCtx& ctx_;
  int lo_;
  std::map<std::pair<int, ColorList>, std::vector<int>> memo_;
};

inline void check_no_short_separators(const PlanarGraph& g) {
  auto cyc = separating_short_cycles(g, {});
  require(cyc.empty(), Errc::precondition_violated,
          "graph has a separating C3/C4: {" + join(cyc.front().cycle) + "}");
}

inline void check_lemma_lists(const ShortestPathCtx& ctx, const ListAssignment& L,
                              const VertexSet& exempt) {
  VertexSet scope = set_union(make_set(ctx.path), neighborhood_sets(ctx.g(), make_set(ctx.path)).n1);
  for (Vertex v : scope)
    if (!set_contains(exempt, v))
      require(L[v].size() == 5, Errc::precondition_violated,
              "vertex " + std::to_string(v) + " needs a 5-list on S or N(S)");
}

}  // namespace detail

/// Lemma 3: endpoints v0, v1 precolored, greedy sweep along the path.
inline Coloring nice_color_lemma3(const ShortestPathCtx& ctx, const ListAssignment& L,
                                  const PathOptions& opts = {}) {
  validate_lists(ctx.g(), L);
  require(ctx.clause4_checked, Errc::precondition_violated,
          "lemma 3 needs a clause-4-checked context");
  require(ctx.length() >= 1, Errc::precondition_violated, "lemma 3 needs at least one edge");
  Vertex v0 = ctx.at(0), v1 = ctx.at(1);
  require(L[v0].size() == 1 && L[v1].size() == 1, Errc::precondition_violated,
          "lemma 3: v0 and v1 must carry singleton lists");
  require(L[v0][0] != L[v1][0], Errc::precondition_violated,
          "lemma 3: v0 and v1 must be colored differently");
  detail::check_lemma_lists(ctx, L, {std::min(v0, v1), std::max(v0, v1)});
  if (opts.check_separating_cycles) detail::check_no_short_separators(ctx.g());

  Coloring col = empty_coloring(ctx.g());
  col[v0] = L[v0][0];
  col[v1] = L[v1][0];
  detail::sweep_forward(ctx, L, col, 2, ctx.length());
  require(is_nice(ctx.g(), make_set(ctx.path), col, L), Errc::internal_error,
          "lemma 3 produced a coloring that is not nice");
  return col;
}

/// Lemma 4: both endpoint lists have exactly 4 colors.
inline Coloring nice_color_lemma4(const ShortestPathCtx& ctx, const ListAssignment& L,
                                  const PathOptions& opts = {}) {
  validate_lists(ctx.g(), L);
  require(ctx.clause4_checked, Errc::precondition_violated,
          "lemma 4 needs a clause-4-checked context");
  Vertex u = ctx.at(0), v = ctx.at(ctx.length());
  require(L[u].size() == 4 && L[v].size() == 4, Errc::precondition_violated,
          "lemma 4: endpoint lists must have 4 colors");
  detail::check_lemma_lists(ctx, L, make_set({u, v}));
  if (opts.check_separating_cycles) detail::check_no_short_separators(ctx.g());

  detail::Lemma4Solver solver(ctx, 0);
  std::vector<int> dense = solver.solve(ctx.length(), L);
  Coloring col = empty_coloring(ctx.g());
  for (int i = 0; i <= ctx.length(); ++i) col[ctx.at(i)] = dense[static_cast<size_t>(i)];
  require(is_nice(ctx.g(), make_set(ctx.path), col, L), Errc::internal_error,
          "lemma 4 produced a coloring that is not nice");
  return col;
}

/// Lemma 5: singleton endpoint lists, Q(S) with at least two cut-edges.
inline Coloring nice_color_lemma5(const ShortestPathCtx& ctx, const ListAssignment& L,
                                  const PathOptions& opts = {}) {
  validate_lists(ctx.g(), L);
  require(ctx.clause4_checked, Errc::precondition_violated,
          "lemma 5 needs a clause-4-checked context");
  int m = ctx.length();
  Vertex u = ctx.at(0), v = ctx.at(m);
  require(L[u].size() == 1 && L[v].size() == 1, Errc::precondition_violated,
          "lemma 5: endpoints must carry singleton lists");
  detail::check_lemma_lists(ctx, L, make_set({u, v}));
  if (opts.check_separating_cycles) detail::check_no_short_separators(ctx.g());

  BlockDecomposition bd = decompose_blocks(ctx);
  require(bd.cut_edge_indices.size() >= 2, Errc::precondition_violated,
          "lemma 5: Q(S) has fewer than two cut-edges");
  int k = bd.cut_edge_indices.front();
  int l = bd.cut_edge_indices.back();

  Coloring col = empty_coloring(ctx.g());
  col[u] = L[u][0];
  if (k >= 1) detail::sweep_forward(ctx, L, col, 1, k);
  col[v] = L[v][0];
  if (l + 1 <= m - 1) detail::sweep_backward(ctx, L, col, m - 1, l + 1);

  if (k + 1 == l) {
    Vertex mid = ctx.at(l);
    ColorList c = list_minus(L[mid], ColorList{col[ctx.at(k)], col[ctx.at(l + 1)]});
    require(!c.empty(), Errc::internal_error, "lemma 5: middle vertex stuck");
    col[mid] = c[0];
  } else {
    ListAssignment L4 = L;
    L4[ctx.at(k + 1)] = list_minus(L[ctx.at(k + 1)], ColorList{col[ctx.at(k)]});
    L4[ctx.at(l)] = list_minus(L[ctx.at(l)], ColorList{col[ctx.at(l + 1)]});
    detail::Lemma4Solver solver(ctx, k + 1);
    std::vector<int> dense = solver.solve(l, L4);
    for (int i = k + 1; i <= l; ++i) col[ctx.at(i)] = dense[static_cast<size_t>(i - k - 1)];
  }
  require(is_nice(ctx.g(), make_set(ctx.path), col, L), Errc::internal_error,
          "lemma 5 produced a coloring that is not nice");
  return col;
}

}  // namespace planarcolor

#endif  // PLANARCOLOR_PATH_MACHINERY_HPP
