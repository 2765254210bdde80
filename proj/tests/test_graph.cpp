#include <doctest.h>

#include <algorithm>
#include <set>

#include "edgeideal/enumerate.hpp"
#include "edgeideal/graph.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace edgeideal;
using fixture::parse;

namespace {

std::set<std::set<std::string>> named(const Graph& g, const std::vector<VertexMask>& sets) {
  std::set<std::set<std::string>> out;
  for (VertexMask s : sets) {
    auto v = g.names_of(s);
    out.emplace(v.begin(), v.end());
  }
  return out;
}

// Every bipartite graph on at most 8 vertices plus a few odd ones.
std::vector<Graph> small_graphs() {
  auto out = enumerate_bipartite_up_to(8);
  out.push_back(cycle_graph(5));
  out.push_back(cycle_graph(7));
  out.push_back(parse("a b\nb c\nc a\nc d\nd e\n"));
  out.push_back(parse("a b\na c\na d\nb c\nb d\nc d\n"));
  return out;
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("edge list parsing") {
  Graph g = parse("a b\nb c");
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 2);
  REQUIRE(g.is_bipartite());
  CHECK(g.names_of(g.bipartition()->left) == std::vector<std::string>{"a", "c"});
  CHECK(g.names_of(g.bipartition()->right) == std::vector<std::string>{"b"});

  CHECK_THROWS_AS(parse("a a"), ParseError);
  CHECK_FALSE(parse("a b\nb c\nc d\nd e\ne a\n").is_bipartite());

  std::vector<std::string> warnings;
  Graph d = parse_edge_list("a b\nb a\n# comment\n\na b\n", &warnings);
  CHECK(d.num_edges() == 1);
  CHECK(warnings.size() == 2);

  CHECK_THROWS_AS(parse("#bipartite V1: a b / V2: c\na b\n"), ParseError);
  CHECK_THROWS_AS(parse("a b c\n"), ParseError);
  Graph h = parse("#bipartite V1: b / V2: a c\na b\nb c\n");
  CHECK(h.names_of(h.bipartition()->left) == std::vector<std::string>{"b"});
}

TEST_CASE("json round trip") {
  for (const Graph& g : {fixture::c4(), cycle_graph(5), fixture::susp_p7()}) {
    const Graph back = graph_from_json(to_json(g));
    CHECK(back == g);
    CHECK(back.bipartition() == g.bipartition());
  }
  CHECK(to_json(cycle_graph(5))["bipartition"].is_null());
}

TEST_CASE("maximum matching") {
  CHECK(max_matching(fixture::c4()).size() == 2);
  CHECK(max_matching(fixture::k13()).size() == 1);
  const Graph s5 = fixture::susp_path(5);
  CHECK(s5.num_vertices() == 10);
  CHECK(max_matching(s5).size() == 5);
  CHECK(oracle::matching_number(s5) == 5);
  CHECK(max_matching(cycle_graph(5)).size() == 2);
}

TEST_CASE("minimum vertex cover") {
  const Graph star = fixture::k13();
  CHECK(star.names_of(min_vertex_cover(star)) == std::vector<std::string>{"c"});
  CHECK(vertex_cover_number(disjoint_edges(4)) == 4);
  CHECK(vertex_cover_number(cycle_graph(6)) == 3);
  // lexicographically least among the minimum covers
  const Graph c6 = cycle_graph(6);
  auto all = oracle::minimal_covers(oracle::edge_masks(c6), 6);
  std::erase_if(all, [](VertexMask m) { return popcount(m) != 3; });
  std::sort(all.begin(), all.end(), lex_less);
  CHECK(min_vertex_cover(c6) == all.front());
}

TEST_CASE("minimal vertex covers") {
  const Graph e = parse("a b");
  CHECK(named(e, enumerate_minimal_vertex_covers(e)) == std::set<std::set<std::string>>{{"a"}, {"b"}});
  const Graph p = parse("a b\nb c");
  CHECK(named(p, enumerate_minimal_vertex_covers(p)) == std::set<std::set<std::string>>{{"b"}, {"a", "c"}});
  const Graph c4 = fixture::c4();
  CHECK(named(c4, enumerate_minimal_vertex_covers(c4)) ==
        std::set<std::set<std::string>>{{"x1", "x2"}, {"y1", "y2"}});
  CHECK_THROWS_AS(enumerate_minimal_vertex_covers(path_graph(10), 8), CapExceeded);
}

TEST_CASE("induced subgraphs") {
  const Graph c4 = fixture::c4();
  CHECK(induced_subgraph(c4, VertexMask{0}).num_vertices() == 0);
  const Graph edge = induced_subgraph(c4, std::vector<std::string>{"x1", "y1"});
  CHECK(edge.num_vertices() == 2);
  CHECK(edge.num_edges() == 1);
  CHECK_THROWS(induced_subgraph(c4, std::vector<std::string>{"zz"}));
  const Graph s = fixture::susp_path(7);
  std::vector<std::string> stem;
  for (int i = 1; i <= 7; ++i) stem.push_back("v" + std::to_string(i));
  CHECK(induced_subgraph(s, stem) == path_graph(7));
}

TEST_CASE("induced matching number") {
  CHECK(induced_matching_number(disjoint_edges(4)) == 4);
  CHECK(induced_matching_number(fixture::path3()) == 1);
  CHECK(oracle::induced_matching_number(fixture::path3()) == 1);
  CHECK(induced_matching_number(fixture::susp_p7()) == 4);
}

TEST_CASE("suspension decomposition") {
  const auto core = suspension_decompose(fixture::susp_cycle(6));
  REQUIRE(core);
  CHECK(are_isomorphic(*core, cycle_graph(6)));
  CHECK_FALSE(suspension_decompose(fixture::c4()));
  const auto single = suspension_decompose(fixture::path3());
  REQUIRE(single);
  CHECK(single->num_vertices() == 2);
  CHECK(single->num_edges() == 1);
}

TEST_CASE("largest complete bipartite subgraph") {
  CHECK(largest_complete_bipartite(parse("a b")) == 2);
  CHECK(largest_complete_bipartite(fixture::k13()) == 4);
  CHECK(largest_complete_bipartite(cycle_graph(6)) == 3);
  CHECK_THROWS_AS(largest_complete_bipartite(cycle_graph(5)), InvalidInput);
}

TEST_CASE("exhaustive properties on small graphs") {
  for (const Graph& g : small_graphs()) {
    CAPTURE(to_json(g).dump());
    const std::size_t nu = max_matching(g).size();
    CHECK(nu == oracle::matching_number(g));
    CHECK(induced_matching_number(g) == oracle::induced_matching_number(g));
    CHECK(induced_matching_number(g) <= nu);
    const auto covers = enumerate_minimal_vertex_covers(g);
    auto brute = oracle::minimal_covers(oracle::edge_masks(g), g.num_vertices());
    std::sort(brute.begin(), brute.end(), lex_less);
    CHECK(covers == brute);
    std::size_t smallest = g.num_vertices();
    for (VertexMask m : brute) smallest = std::min(smallest, popcount(m));
    CHECK(vertex_cover_number(g) == smallest);
    if (g.is_bipartite()) {
      CHECK(nu == vertex_cover_number(g));  // Konig
      CHECK(largest_complete_bipartite(g) == oracle::largest_complete_bipartite(g));
    }
  }
}

TEST_CASE("suspension round trip") {
  std::vector<Graph> cores;
  for (std::size_t n = 1; n <= 6; ++n) cores.push_back(path_graph(n));
  for (std::size_t n = 3; n <= 6; ++n) cores.push_back(cycle_graph(n));
  for (const Graph& g : enumerate_bipartite_up_to(6)) cores.push_back(g);
  cores.push_back(parse("a b\nb c\nc a\nc d\n"));
  for (const Graph& h : cores) {
    CAPTURE(to_json(h).dump());
    const auto back = suspension_decompose(suspension(h));
    REQUIRE(back);
    CHECK(are_isomorphic(*back, h));
  }
}

}  // TEST_SUITE
