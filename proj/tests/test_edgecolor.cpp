#include <random>
#include <set>

#include "doctest.h"

#include "ecsynth/edgecolor.hpp"
#include "ecsynth/errors.hpp"

using namespace ecsynth;

namespace {

BipartiteGraph random_graph(std::mt19937_64& rng, std::size_t max_side, std::size_t max_edges) {
  BipartiteGraph g;
  g.left_count = 1 + rng() % max_side;
  g.right_count = 1 + rng() % max_side;
  const std::size_t want = rng() % (max_edges + 1);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t k = 0; k < want; ++k) {
    std::pair<std::size_t, std::size_t> e{rng() % g.left_count, rng() % g.right_count};
    if (seen.insert(e).second) g.edges.push_back(e);
  }
  return g;
}

}  // namespace

TEST_CASE("worked examples use max-degree colors") {
  const BinMatrix mul = matrix_of_const_mul(Field::parse("1+x+x^3").parse_element("1+x+x^2"));
  const BipartiteGraph g = graph_of_matrix(mul);
  CHECK(g.edges.size() == 6);
  const EdgeColoring c = color_edges(g);
  CHECK(c.num_colors == 3);
  CHECK(is_proper(g, c));

  const BipartiteGraph sq = graph_of_matrix(matrix_of_squaring(IrreduciblePoly::parse("1+x+x^7")));
  CHECK(sq.edges.size() == 10);
  CHECK(color_edges(sq).num_colors == 2);
}

TEST_CASE("random bipartite graphs") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    const BipartiteGraph g = random_graph(rng, 60, 1500);
    const EdgeColoring c = color_edges(g);
    REQUIRE(c.color_of.size() == g.edges.size());
    CHECK(c.num_colors == g.max_degree());
    CHECK(is_proper(g, c));
  }
}

TEST_CASE("regular and complete graphs") {
  for (std::size_t k : {1u, 2u, 7u, 16u}) {
    BipartiteGraph g{k, k, {}};
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) g.edges.emplace_back(i, j);
    const EdgeColoring c = color_edges(g);
    CHECK(c.num_colors == k);
    CHECK(is_proper(g, c));
  }
  const BipartiteGraph empty{3, 4, {}};
  CHECK(color_edges(empty).num_colors == 0);
}

TEST_CASE("invalid graphs are rejected") {
  CHECK_THROWS_AS(color_edges(BipartiteGraph{2, 2, {{0, 2}}}), InvalidInput);
  CHECK_THROWS_AS(color_edges(BipartiteGraph{2, 2, {{0, 1}, {0, 1}}}), InvalidInput);
  BipartiteGraph g{2, 2, {{0, 0}, {1, 0}}};
  EdgeColoring bad{{0, 0}, 1};
  CHECK_FALSE(is_proper(g, bad));
}
