#include <doctest.h>

#include <algorithm>
#include <random>

#include "srgb/cab_bounds.hpp"
#include "srgb/graph.hpp"

using namespace srgb;

namespace {

// Exhaustive oracle: largest subset that is pairwise adjacent.
std::size_t brute_clique(const Graph& g) {
  std::size_t n = g.order(), best = 0;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    std::size_t size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size <= best) continue;
    bool ok = true;
    for (std::size_t u = 0; u < n && ok; ++u) {
      if (!(mask >> u & 1U)) continue;
      for (std::size_t v = u + 1; v < n && ok; ++v)
        if ((mask >> v & 1U) && !g.adjacent(u, v)) ok = false;
    }
    if (ok) best = size;
  }
  return best;
}

// Grows cliques vertex by vertex in increasing order; fine for p = 37.
std::size_t extend(const Graph& g, std::vector<std::size_t>& cur, std::size_t from) {
  std::size_t best = cur.size();
  for (std::size_t v = from; v < g.order(); ++v) {
    if (!std::all_of(cur.begin(), cur.end(), [&](std::size_t u) { return g.adjacent(u, v); }))
      continue;
    cur.push_back(v);
    best = std::max(best, extend(g, cur, v + 1));
    cur.pop_back();
  }
  return best;
}

bool is_clique(const Graph& g, const std::vector<std::size_t>& w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (!g.adjacent(w[i], w[j])) return false;
  return true;
}

Graph star(std::size_t leaves) {
  Graph g(leaves + 1);
  for (std::size_t i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

}  // namespace

TEST_CASE("graph basics") {
  Graph g(3);
  g.add_edge(0, 1);
  CHECK(g.adjacent(1, 0));
  CHECK(g.edge_count() == 1);
  CHECK_THROWS_AS(g.add_edge(1, 1), DomainError);
  CHECK_THROWS_AS(g.add_edge(0, 3), DomainError);
}

TEST_CASE("paley graphs are conference graphs") {
  for (std::int64_t p : {5, 13, 17, 29, 37, 41}) {
    INFO(p);
    auto srg = is_strongly_regular(paley(p));
    REQUIRE(srg);
    CHECK(*srg == SrgParams{p, (p - 1) / 2, (p - 5) / 4, (p - 1) / 4});
  }
  CHECK(paley(5) == cycle_graph(5));
  CHECK_THROWS_AS(paley(7), DomainError);
  CHECK_THROWS_AS(paley(9), DomainError);
  CHECK_THROWS_AS(paley(21), DomainError);
}

TEST_CASE("paley clique numbers") {
  CHECK(max_clique(paley(5)).size == 2);
  CHECK(max_clique(paley(13)).size == 3);
  CHECK(max_clique(paley(17)).size == 3);
  Graph p37 = paley(37);
  std::vector<std::size_t> cur;
  std::size_t oracle = extend(p37, cur, 0);
  CHECK(oracle == 4);
  CliqueResult res = max_clique(p37);
  CHECK(res.size == oracle);
  CHECK(is_clique(p37, res.witness));
  CHECK(max_clique(paley(41)).size == 5);
}

TEST_CASE("max clique matches exhaustive search on random graphs") {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<std::size_t> order(1, 14);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t n = order(rng);
    double density = unit(rng);
    Graph g(n);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (unit(rng) < density) g.add_edge(u, v);
    CliqueResult res = max_clique(g);
    CHECK(res.size == brute_clique(g));
    CHECK(res.witness.size() == res.size);
    CHECK(std::is_sorted(res.witness.begin(), res.witness.end()));
    CHECK(is_clique(g, res.witness));
  }
  CHECK(max_clique(Graph(0)).size == 0);
  CHECK(max_clique(petersen_graph()).size == 2);
  CHECK(max_clique(complete_graph(9)).size == 9);
}

TEST_CASE("max clique size guard") {
  CHECK_THROWS_AS(max_clique(Graph(kMaxCliqueOrder + 1)), std::length_error);
}

TEST_CASE("regularity checks") {
  CHECK(is_edge_regular(petersen_graph()) == EdgeRegularParams{10, 3, 0});
  CHECK(is_strongly_regular(petersen_graph()) == SrgParams{10, 3, 0, 1});
  Graph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  CHECK_FALSE(is_edge_regular(path));
  CHECK_FALSE(is_strongly_regular(complete_graph(5)));
}

TEST_CASE("line graphs") {
  CHECK(line_graph(complete_graph(3)) == complete_graph(3));
  CHECK(line_graph(star(3)) == complete_graph(3));
  Graph heawood = fano_incidence_graph();
  CHECK(heawood.order() == 14);
  CHECK(is_edge_regular(heawood) == EdgeRegularParams{14, 3, 0});
  Graph lh = line_graph(heawood);
  CHECK(lh.order() == 21);
  for (std::size_t u = 0; u < lh.order(); ++u) CHECK(lh.degree(u) == 4);
  CHECK_THROWS_AS(line_graph(Graph(4)), DomainError);
}

TEST_CASE("distance graphs") {
  Graph c6 = cycle_graph(6);
  Graph matching = distance_graph(c6, 3);
  CHECK(matching.edge_count() == 3);
  for (std::size_t u = 0; u < 3; ++u) CHECK(matching.adjacent(u, u + 3));
  CHECK(distance_graph(petersen_graph(), 1) == petersen_graph());
  CHECK(distance_graph(paley(13), 1) == paley(13));
  CHECK_THROWS_AS(distance_graph(c6, 0), DomainError);
}

TEST_CASE("the distance-3 fixture") {
  Graph d3 = heawood_line_distance3();
  CHECK(d3.order() == 21);
  CHECK(is_edge_regular(d3) == EdgeRegularParams{21, 8, 3});
  CHECK_FALSE(is_strongly_regular(d3));
  CHECK(max_clique(d3).size == 3);
  CHECK(cab({21, 8, 3}).bound == 4);
  CHECK(check_thm42(d3, {21, 8, 3}));
  CHECK_THROWS_AS(check_thm42(d3, {21, 8, 2}), DomainError);
}

TEST_CASE("clique-adjacency nonnegativity at attained clique sizes") {
  CHECK(check_thm42(paley(17), {17, 8, 3}));
  CHECK(check_thm42(paley(5), {5, 2, 0}));
  CHECK(check_thm42(petersen_graph(), {10, 3, 0}));
  for (std::int64_t p : {5, 13, 17, 29, 37, 41}) {
    Graph g = paley(p);
    EdgeRegularParams e{p, (p - 1) / 2, (p - 5) / 4};
    CHECK(cab(e).bound >= static_cast<std::int64_t>(max_clique(g).size));
    CHECK(check_thm42(g, e));
  }
}
