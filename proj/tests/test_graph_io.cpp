#include <doctest.h>

#include <random>
#include <sstream>

#include "srgb/graph_io.hpp"

using namespace srgb;

TEST_CASE("graph6 of known graphs") {
  CHECK(to_graph6(petersen_graph()) == "IheA@GUAo");
  CHECK(parse_graph6("IheA@GUAo") == petersen_graph());
  CHECK(parse_graph6(">>graph6<<IheA@GUAo") == petersen_graph());
  CHECK(to_graph6(complete_graph(4)) == "C~");
  CHECK(to_graph6(Graph(0)) == "?");
  CHECK_THROWS_AS(parse_graph6("I"), DomainError);     // truncated
  CHECK_THROWS_AS(parse_graph6("~??"), DomainError);   // n >= 63 unsupported
}

TEST_CASE("graph6 round trip") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> order(0, 62);
  std::bernoulli_distribution coin(0.4);
  for (int i = 0; i < 100; ++i) {
    Graph g(order(rng));
    for (std::size_t u = 0; u < g.order(); ++u)
      for (std::size_t v = u + 1; v < g.order(); ++v)
        if (coin(rng)) g.add_edge(u, v);
    CHECK(parse_graph6(to_graph6(g)) == g);
  }
}

TEST_CASE("edge list") {
  std::istringstream in("# pentagon\n5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
  Graph g = read_edge_list(in);
  CHECK(g == cycle_graph(5));
  std::ostringstream out;
  write_edge_list(out, g);
  std::istringstream back(out.str());
  CHECK(read_edge_list(back) == g);

  std::istringstream bad("3\n0 5\n");
  CHECK_THROWS_AS(read_edge_list(bad), DomainError);
  std::istringstream junk("3\n0 x\n");
  CHECK_THROWS_AS(read_edge_list(junk), DomainError);
}
