#ifndef PLANARCOLOR_BMS_HPP
#define PLANARCOLOR_BMS_HPP

#include "planarcolor/oracle.hpp"

namespace planarcolor {

/// Witness of one of the three forbidden configurations around a short
/// precolored facial cycle.
struct BmsConfiguration {
  enum class Kind { five_neighbor, edge_pair, triangle };
  Kind kind;
  std::vector<Vertex> vertices;  // u | u0,u1 | u0,u1,u2
  ColorList colors;              // the five colors | {alpha} | {alpha, beta}

  bool operator<(const BmsConfiguration& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (vertices != o.vertices) return vertices < o.vertices;
    return colors < o.colors;
  }
  bool operator==(const BmsConfiguration& o) const {
    return kind == o.kind && vertices == o.vertices && colors == o.colors;
  }
};

inline const char* bms_kind_name(BmsConfiguration::Kind k) {
  switch (k) {
    case BmsConfiguration::Kind::five_neighbor: return "five_neighbor";
    case BmsConfiguration::Kind::edge_pair: return "edge_pair";
    case BmsConfiguration::Kind::triangle: return "triangle";
  }
  return "?";
}

namespace detail {

inline void check_facial_cycle(const PlanarGraph& g, const std::vector<Vertex>& cycle,
                               size_t max_len) {
  require(cycle.size() >= 3 && cycle.size() <= max_len, Errc::precondition_violated,
          "facial cycle must have 3.." + std::to_string(max_len) + " vertices");
  require(make_set(cycle).size() == cycle.size(), Errc::precondition_violated,
          "cycle repeats a vertex");
  for (size_t i = 0; i < cycle.size(); ++i)
    require(g.adjacent(cycle[i], cycle[(i + 1) % cycle.size()]), Errc::precondition_violated,
            "given walk is not a cycle of the graph");
  for (const auto& f : g.all_faces())
    if (cyclic_match(f.walk, cycle)) return;
  fail(Errc::precondition_violated, "cycle is not facial");
}

inline void check_cycle_precoloring(const PlanarGraph& g, const std::vector<Vertex>& cycle,
                                    const ListAssignment& L) {
  for (Vertex v : cycle)
    require(L[v].size() == 1, Errc::precondition_violated,
            "cycle vertex " + std::to_string(v) + " lacks a singleton list");
  for (size_t i = 0; i < cycle.size(); ++i)
    for (size_t j = i + 1; j < cycle.size(); ++j)
      if (g.adjacent(cycle[i], cycle[j]))
        require(L[cycle[i]][0] != L[cycle[j]][0], Errc::precondition_violated,
                "cycle precoloring is not proper on G[C]");
}

}  // namespace detail

/// Scan for the three extendability-blocking configurations of a precolored
/// facial cycle of length <= 6.  An empty result certifies extendability.
inline std::vector<BmsConfiguration> bms_scan(const PlanarGraph& g,
                                              const std::vector<Vertex>& cycle,
                                              const ListAssignment& L) {
  validate_lists(g, L);
  detail::check_facial_cycle(g, cycle, 6);
  detail::check_cycle_precoloring(g, cycle, L);
  const size_t k = cycle.size();
  VertexSet cset = make_set(cycle);
  std::set<BmsConfiguration> found;

  // condition 1: u adjacent to five cycle vertices whose colors make up L(u)
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (set_contains(cset, u)) continue;
    std::vector<Vertex> cn;
    for (Vertex w : g.sorted_neighbors(u))
      if (set_contains(cset, w)) cn.push_back(w);
    if (cn.size() < 5) continue;
    std::vector<int> pick(cn.size(), 0);
    std::fill(pick.end() - 5, pick.end(), 1);
    do {
      ColorList cols;
      for (size_t i = 0; i < cn.size(); ++i)
        if (pick[i]) cols.push_back(L[cn[i]][0]);
      cols = normalized_list(std::move(cols));
      if (cols.size() == 5 && cols == L[u]) {
        found.insert({BmsConfiguration::Kind::five_neighbor, {u}, cols});
        break;
      }
    } while (std::next_permutation(pick.begin(), pick.end()));
  }

  if (k == 6) {
    auto labeled = [&](int r, int dir, int i) {
      return cycle[static_cast<size_t>(((r + dir * i) % 6 + 6) % 6)];
    };
    auto color_of = [&](Vertex v) { return L[v][0]; };

    // condition 2: edge u0u1, u_i adjacent to v_{3i+1..3i+4}, lists = those
    // four colors plus a shared alpha
    for (Vertex a = 0; a < g.vertex_count(); ++a) {
      if (set_contains(cset, a)) continue;
      for (Vertex b : g.sorted_neighbors(a)) {
        if (set_contains(cset, b)) continue;
        for (int r = 0; r < 6; ++r)
          for (int dir : {1, -1}) {
            int alpha = -1;
            bool ok = true;
            Vertex us[2] = {a, b};
            for (int i = 0; i < 2 && ok; ++i) {
              ColorList need;
              for (int t = 1; t <= 4; ++t) {
                Vertex vv = labeled(r, dir, 3 * i + t);
                if (!g.adjacent(us[i], vv)) {
                  ok = false;
                  break;
                }
                need.push_back(color_of(vv));
              }
              if (!ok) break;
              need = normalized_list(std::move(need));
              if (need.size() != 4 || L[us[i]].size() != 5) {
                ok = false;
                break;
              }
              ColorList extra = list_minus(L[us[i]], need);
              if (extra.size() != 1) {
                ok = false;
                break;
              }
              if (i == 0)
                alpha = extra[0];
              else if (extra[0] != alpha)
                ok = false;
            }
            if (ok)
              found.insert({BmsConfiguration::Kind::edge_pair,
                            {std::min(a, b), std::max(a, b)},
                            {alpha}});
          }
      }
    }

    // condition 3: triangle u0u1u2, u_i adjacent to v_{2i+1..2i+3}, lists =
    // those three colors plus shared alpha, beta
    for (Vertex a = 0; a < g.vertex_count(); ++a) {
      if (set_contains(cset, a)) continue;
      for (Vertex b : g.sorted_neighbors(a)) {
        if (b <= a || set_contains(cset, b)) continue;
        for (Vertex c : g.sorted_neighbors(b)) {
          if (c <= b || set_contains(cset, c) || !g.adjacent(a, c)) continue;
          std::array<Vertex, 3> tri{a, b, c};
          std::sort(tri.begin(), tri.end());
          std::array<int, 3> perm{0, 1, 2};
          do {
            for (int r = 0; r < 6; ++r)
              for (int dir : {1, -1}) {
                ColorList ab;
                bool ok = true;
                for (int i = 0; i < 3 && ok; ++i) {
                  Vertex ui = tri[static_cast<size_t>(perm[i])];
                  ColorList need;
                  for (int t = 1; t <= 3; ++t) {
                    Vertex vv = labeled(r, dir, 2 * i + t);
                    if (!g.adjacent(ui, vv)) {
                      ok = false;
                      break;
                    }
                    need.push_back(color_of(vv));
                  }
                  if (!ok) break;
                  need = normalized_list(std::move(need));
                  if (need.size() != 3 || L[ui].size() != 5) {
                    ok = false;
                    break;
                  }
                  ColorList extra = list_minus(L[ui], need);
                  if (extra.size() != 2) {
                    ok = false;
                    break;
                  }
                  if (i == 0)
                    ab = extra;
                  else if (extra != ab)
                    ok = false;
                }
                if (ok)
                  found.insert({BmsConfiguration::Kind::triangle,
                                {tri[0], tri[1], tri[2]},
                                ab});
              }
          } while (std::next_permutation(perm.begin(), perm.end()));
        }
      }
    }
  }
  return std::vector<BmsConfiguration>(found.begin(), found.end());
}

struct FacialOptions {
  int max_region = 25;  // cap on |V - C| before RegionTooLarge
};

/// Extend the precoloring of a short facial cycle to the whole graph.
/// Existence is guaranteed once bms_scan comes back empty; the search itself
/// is plain backtracking over V - C.
inline Coloring facial_extension(const PlanarGraph& g, const std::vector<Vertex>& cycle,
                                 const ListAssignment& L, const FacialOptions& opts = {}) {
  validate_lists(g, L);
  detail::check_facial_cycle(g, cycle, 6);
  detail::check_cycle_precoloring(g, cycle, L);
  VertexSet cset = make_set(cycle);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!set_contains(cset, v))
      require(L[v].size() == 5, Errc::precondition_violated,
              "facial_extension: vertex " + std::to_string(v) + " must hold 5 colors");
  auto cfgs = bms_scan(g, cycle, L);
  if (!cfgs.empty()) {
    std::string msg = "forbidden configuration present:";
    for (const auto& c : cfgs) msg += std::string(" ") + bms_kind_name(c.kind) + "(" + join(c.vertices) + ")";
    fail(Errc::precondition_violated, msg);
  }
  int region = g.vertex_count() - static_cast<int>(cset.size());
  require(region <= opts.max_region, Errc::region_too_large,
          "region of " + std::to_string(region) + " vertices exceeds cap of " +
              std::to_string(opts.max_region));
  Coloring base = empty_coloring(g);
  for (Vertex v : cycle) base[v] = L[v][0];
  auto res = oracle_color_partial(g, L, std::move(base));
  require(res.has_value(), Errc::internal_error,
          "facial extension search failed although the scan was clean");
  return *res;
}

}  // namespace planarcolor

#endif  // PLANARCOLOR_BMS_HPP
