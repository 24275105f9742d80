#include <catch2/catch_amalgamated.hpp>
#include <functional>

#include "fixtures.hpp"
#include "planarcolor/planar_graph.hpp"

using namespace planarcolor;

TEST_CASE("triangle builds with two faces") {
  auto g = fixtures::triangle();
  REQUIRE(g.vertex_count() == 3);
  REQUIRE(g.edge_count() == 3);
  REQUIRE(faces(g).size() == 2);  // 3 - 3 + 2 = 2
}

TEST_CASE("K4 has four triangular faces") {
  auto g = fixtures::k4();
  REQUIRE(faces(g).size() == 4);
  for (const auto& f : faces(g)) REQUIRE(f.walk.size() == 3);
}

TEST_CASE("missing back-edge is rejected") {
  REQUIRE_THROWS_MATCHES(build_graph(3, {{1, 2}, {2, 0}, {0}}), Error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::StartsWith("AsymmetricAdjacency")));
}

TEST_CASE("self-loops and repeated neighbors are rejected") {
  REQUIRE_THROWS_AS(build_graph(2, {{0, 1}, {0}}), Error);
  REQUIRE_THROWS_AS(build_graph(2, {{1, 1}, {0}}), Error);
}

TEST_CASE("a bad rotation order violates Euler") {
  // K4 with one rotation flipped cannot embed in the plane with 4 faces
  REQUIRE_THROWS_MATCHES(build_graph(4, {{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {2, 1, 0}}), Error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::StartsWith("EulerViolation")));
}

TEST_CASE("single edge has one face traversing it twice") {
  auto g = fixtures::single_edge();
  REQUIRE(faces(g).size() == 1);
  REQUIRE(faces(g)[0].walk.size() == 2);
}

TEST_CASE("4-cycle has two faces of length 4") {
  auto g = fixtures::cycle_graph(4);
  REQUIRE(faces(g).size() == 2);
  for (const auto& f : faces(g)) REQUIRE(f.walk.size() == 4);
}

TEST_CASE("face walk lengths sum to 2m") {
  for (auto g : {fixtures::triangle(), fixtures::k4(), fixtures::cycle_graph(7),
                 fixtures::path_with_fans(6, {{0, true}, {2, false}, {4, true}})}) {
    size_t total = 0;
    for (const auto& f : faces(g)) total += f.walk.size();
    REQUIRE(total == 2 * static_cast<size_t>(g.edge_count()));
  }
}

TEST_CASE("every directed edge lies on exactly one face") {
  auto g = fixtures::path_with_fans(5, {{1, true}, {3, false}});
  std::map<std::pair<Vertex, Vertex>, int> count;
  for (const auto& f : faces(g))
    for (size_t t = 0; t < f.walk.size(); ++t)
      count[{f.walk[t], f.walk[(t + 1) % f.walk.size()]}]++;
  REQUIRE(count.size() == 2 * static_cast<size_t>(g.edge_count()));
  for (auto& [e, c] : count) REQUIRE(c == 1);
}

TEST_CASE("multi-component graphs build; outer face per component") {
  auto g = build_graph(5, {{1}, {0}, {3, 4}, {2, 4}, {2, 3}});
  REQUIRE(g.component_count() == 2);
  int outers = 0;
  for (const auto& f : faces(g)) outers += f.is_outer ? 1 : 0;
  REQUIRE(outers == 2);
}

TEST_CASE("shortest_path basics") {
  auto g = fixtures::path_graph(6);
  REQUIRE(shortest_path(g, 2, 2) == std::vector<Vertex>{2});
  REQUIRE(shortest_path(g, 0, 5) == std::vector<Vertex>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("shortest_path on 6-cycle picks the smaller-id side") {
  auto g = fixtures::cycle_graph(6);
  auto p = shortest_path(g, 0, 3);
  REQUIRE(p.size() == 4);
  REQUIRE(fixtures::brute_shortest_len(g, 0, 3) == 3);
  REQUIRE(p == std::vector<Vertex>{0, 1, 2, 3});
}

TEST_CASE("shortest_path agrees with exhaustive search on small graphs") {
  auto g = fixtures::cycle_with_fans(10, 4, {{0, true}, {2, false}});
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
      auto p = shortest_path(g, u, v);
      REQUIRE(static_cast<int>(p.size()) - 1 == fixtures::brute_shortest_len(g, u, v));
    }
}

TEST_CASE("shortest_path across components throws Disconnected") {
  auto g = build_graph(4, {{1}, {0}, {3}, {2}});
  REQUIRE_THROWS_MATCHES(shortest_path(g, 0, 3), Error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::StartsWith("Disconnected")));
}

TEST_CASE("dist_of_set") {
  auto edge = fixtures::single_edge();
  REQUIRE(dist_of_set(edge, {0, 1}) == 1);
  REQUIRE_THROWS_AS(dist_of_set(edge, {0}), Error);

  auto c100 = fixtures::cycle_graph(100);
  REQUIRE(dist_of_set(c100, {1, 50, 98}) == 3);  // dist(v1, v98) through v0, v99

  // star subdivision: center 0, spokes 0-1-2, 0-3-4, 0-5-6; the mid-spoke
  // vertices are mutually at distance 2
  auto star = build_graph(7, {{1, 3, 5}, {0, 2}, {1}, {0, 4}, {3}, {0, 6}, {5}});
  REQUIRE(dist_of_set(star, {1, 3, 5}) == 2);
}

namespace {

// independent oracle: all 3/4-subsets spanning a cycle whose removal splits g
std::vector<SeparatingCycle> brute_separating(const PlanarGraph& g, const VertexSet& P) {
  std::vector<SeparatingCycle> out;
  const int n = g.vertex_count();
  auto try_set = [&](VertexSet xs) {
    bool cyc = false;
    if (xs.size() == 3)
      cyc = g.adjacent(xs[0], xs[1]) && g.adjacent(xs[1], xs[2]) && g.adjacent(xs[0], xs[2]);
    else
      cyc = detail::spans_c4(g, xs[0], xs[1], xs[2], xs[3]);
    if (!cyc) return;
    auto [comp, cnt] = detail::components_without(g, xs);
    if (cnt < 2) return;
    std::set<int> pc;
    for (Vertex p : P)
      if (comp[p] >= 0) pc.insert(comp[p]);
    out.push_back({xs, pc.size() >= 2});
  };
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c) {
        try_set({a, b, c});
        for (Vertex d = c + 1; d < n; ++d) try_set({a, b, c, d});
      }
  std::sort(out.begin(), out.end(), [](auto& x, auto& y) {
    if (x.cycle.size() != y.cycle.size()) return x.cycle.size() < y.cycle.size();
    return x.cycle < y.cycle;
  });
  return out;
}

bool same_cycles(const std::vector<SeparatingCycle>& a, const std::vector<SeparatingCycle>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].cycle != b[i].cycle || a[i].separates_p != b[i].separates_p) return false;
  return true;
}

}  // namespace

TEST_CASE("separating cycles: K4 nested in a larger triangulation") {
  // K4 with 3 inside triangle (0,1,2), plus vertex 4 outside adjacent to 0,1
  auto g = build_graph(5, {{1, 3, 2, 4}, {2, 3, 0, 4}, {0, 3, 1}, {1, 2, 0}, {1, 0}});
  auto cycles = separating_short_cycles(g, {});
  auto brute = brute_separating(g, {});
  REQUIRE(same_cycles(cycles, brute));
  bool found = false;
  for (auto& sc : cycles)
    if (sc.cycle == VertexSet{0, 1, 2}) found = true;
  REQUIRE(found);
}

TEST_CASE("separating cycles: bare 4-cycle has none") {
  auto g = fixtures::cycle_graph(4);
  REQUIRE(separating_short_cycles(g, {}).empty());
}

TEST_CASE("separating cycles: triangle around an interior vertex classified separates_G_only") {
  auto g = build_graph(5, {{1, 3, 2, 4}, {2, 3, 0, 4}, {0, 3, 1}, {1, 2, 0}, {1, 0}});
  auto cycles = separating_short_cycles(g, {0, 1, 2});
  bool seen = false;
  for (auto& sc : cycles)
    if (sc.cycle == VertexSet{0, 1, 2}) {
      seen = true;
      REQUIRE_FALSE(sc.separates_p);
    }
  REQUIRE(seen);
}

TEST_CASE("separating cycles classify P-separating cuts") {
  // two K4-like lobes joined on a triangle: 0,1,2 shared; 3 in lobe A; 4 in lobe B
  auto g = build_graph(5, {{1, 4, 2, 3}, {2, 4, 0, 3}, {0, 4, 1, 3}, {0, 2, 1}, {1, 2, 0}});
  auto cycles = separating_short_cycles(g, {3, 4});
  REQUIRE(same_cycles(cycles, brute_separating(g, {3, 4})));
  bool found = false;
  for (auto& sc : cycles)
    if (sc.cycle == VertexSet{0, 1, 2}) {
      found = true;
      REQUIRE(sc.separates_p);
    }
  REQUIRE(found);
}

TEST_CASE("strict induced mode drops chorded 4-sets") {
  // K4 + pendant paths so removal separates
  auto g = build_graph(6,
                       {{1, 3, 2, 4}, {2, 3, 0}, {0, 3, 1, 5}, {1, 2, 0}, {0}, {2}});
  auto loose = separating_short_cycles(g, {});
  auto strict = separating_short_cycles(g, {}, true);
  bool loose_has_k4 = false, strict_has_k4 = false;
  for (auto& sc : loose) loose_has_k4 |= sc.cycle == VertexSet{0, 1, 2, 3};
  for (auto& sc : strict) strict_has_k4 |= sc.cycle == VertexSet{0, 1, 2, 3};
  REQUIRE(loose_has_k4);
  REQUIRE_FALSE(strict_has_k4);
}

TEST_CASE("neighborhood_sets") {
  auto g = fixtures::k4();
  VertexSet all{0, 1, 2, 3};
  auto full = neighborhood_sets(g, all);
  REQUIRE(full.n1.empty());
  REQUIRE(full.n3.empty());
  REQUIRE(full.q.graph.vertex_count() == 4);

  // star K1,4: center 0
  auto star = build_graph(5, {{1, 2, 3, 4}, {0}, {0}, {0}, {0}});
  auto ns = neighborhood_sets(star, {0});
  REQUIRE(ns.n1 == VertexSet{1, 2, 3, 4});
  REQUIRE(ns.n3.empty());

  // path 0-1-2 with apex 3
  std::vector<Vertex> apexes;
  auto fan = fixtures::path_with_fans(2, {{0, true}}, &apexes);
  auto ns2 = neighborhood_sets(fan, {0, 1, 2});
  REQUIRE(ns2.n3 == VertexSet{apexes[0]});
  REQUIRE(ns2.q.graph.vertex_count() == 4);
  REQUIRE(ns2.q.graph.edge_count() == 5);
}

TEST_CASE("induced subgraphs keep a valid embedding") {
  auto g = fixtures::cycle_with_fans(12, 6, {{0, true}, {2, false}, {4, true}});
  // dropping the bypass arc leaves the decorated path; build() re-validates Euler
  VertexSet keep;
  for (Vertex v = 0; v <= 6; ++v) keep.push_back(v);
  for (Vertex v = 12; v < g.vertex_count(); ++v) keep.push_back(v);
  auto view = induced_subgraph(g, keep);
  REQUIRE(view.graph.vertex_count() == static_cast<int>(keep.size()));
}

TEST_CASE("outer face designation") {
  auto g = fixtures::cycle_graph(5);
  auto walk = faces(g)[1].walk;
  auto g2 = g.with_outer(walk);
  REQUIRE(faces(g2)[1].is_outer);
  REQUIRE_FALSE(faces(g2)[0].is_outer);
  REQUIRE_THROWS_AS(g.with_outer({0, 2, 4}), Error);
}
