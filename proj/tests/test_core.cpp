#include "doctest.h"
#include "ecd/core.hpp"
#include "oracles.hpp"

using namespace ecd;

TEST_CASE("composition parsing and accessors") {
  const auto c = Composition::parse("2,1");
  CHECK(c.parts() == std::vector<int>{2, 1});
  CHECK(c.q() == 3);
  CHECK(c.weight() == 3);
  CHECK(c.is_monotone());
  CHECK(c.to_string() == "[2,1]");
  CHECK(Composition::parse("[3,2,2]") == Composition({3, 2, 2}));
  CHECK_FALSE(Composition({1, 2}).is_monotone());
  CHECK_THROWS_AS(Composition({1, 2}).require_monotone(), InvalidArgument);
  CHECK_THROWS_AS(Composition(std::vector<int>{}), InvalidArgument);
  CHECK_THROWS_AS(Composition({2, -1}), InvalidArgument);
  CHECK_THROWS_AS(Composition::parse("2,x"), InvalidArgument);
}

TEST_CASE("codeword support, weight and composition") {
  const Codeword u(3, {0, 1, 2, 1, 0});
  CHECK(u.support() == std::vector<int>{1, 2, 3});
  CHECK(u.weight() == 3);
  CHECK(composition_of(u) == Composition({2, 1}));
  CHECK(composition_of(Codeword(3, {0, 0, 0})) == Composition({0, 0}));
  CHECK_THROWS_AS(Codeword(3, {0, 3}), InvalidArgument);
}

TEST_CASE("hamming distance is a metric on small spaces") {
  const auto words = oracle::all_words(3, 3);
  for (const auto& a : words) {
    const Codeword u(3, a);
    CHECK(hamming_distance(u, u) == 0);
    for (const auto& b : words) {
      const Codeword v(3, b);
      const int d = hamming_distance(u, v);
      CHECK(d == oracle::distance(a, b));
      CHECK(d == hamming_distance(v, u));
      CHECK((d == 0) == (a == b));
    }
  }
  // Triangle inequality over a subsample.
  for (std::size_t i = 0; i < words.size(); i += 5)
    for (std::size_t j = 0; j < words.size(); j += 3)
      for (std::size_t k = 0; k < words.size(); k += 4) {
        const Codeword x(3, words[i]), y(3, words[j]), z(3, words[k]);
        CHECK(hamming_distance(x, z) <= hamming_distance(x, y) + hamming_distance(y, z));
      }
}

TEST_CASE("distance rejects mismatched words") {
  CHECK_THROWS_AS((void)hamming_distance(Codeword(3, {0, 1}), Codeword(3, {0, 1, 2})), DimensionError);
  CHECK_THROWS_AS((void)hamming_distance(Codeword(3, {0, 1}), Codeword(4, {0, 1})), DimensionError);
}

TEST_CASE("code insertion and minimum distance") {
  Code code(3, 3);
  CHECK_FALSE(code.minimum_distance().has_value());
  code.insert(Codeword(3, {1, 2, 0}));
  code.insert(Codeword(3, {0, 1, 2}));
  CHECK(code.minimum_distance() == 3);
  code.insert(Codeword(3, {1, 1, 0}));
  CHECK(code.minimum_distance() == 1);
  CHECK_THROWS_AS(code.insert(Codeword(3, {1, 2, 0})), InvalidArgument);
  CHECK_THROWS_AS(code.insert(Codeword(3, {1, 2})), Error);
}

TEST_CASE("mcwc words") {
  const McwcWord u(1, {{1, 0, 0}, {0, 1, 0}});
  const McwcWord v(1, {{1, 0, 0}, {0, 0, 1}});
  CHECK(u.m() == 2);
  CHECK(u.n() == 3);
  CHECK(u.row_support(1) == std::vector<int>{1});
  CHECK(hamming_distance(u, v) == 2);
  CHECK_THROWS_AS(McwcWord(1, {{1, 2, 0}}), InvalidArgument);
  CHECK_THROWS_AS(McwcWord(1, {{1, 0, 0}, {1, 0}}), DimensionError);
}

TEST_CASE("colored digraph validation") {
  CHECK_THROWS_AS(ColoredDigraph(2, 1, {{0, 0, 0}}), InvalidArgument);
  CHECK_THROWS_AS(ColoredDigraph(2, 1, {{0, 2, 0}}), InvalidArgument);
  CHECK_THROWS_AS(ColoredDigraph(2, 1, {{0, 1, 1}}), InvalidArgument);
  CHECK_THROWS_AS(ColoredDigraph(2, 1, {{0, 1, 0}, {0, 1, 0}}), InvalidArgument);
  const ColoredDigraph g(3, 2, {{2, 1, 1}, {0, 1, 0}});
  CHECK(g.edges().front() == Edge{0, 1, 0});
  CHECK(g.has_edge({2, 1, 1}));
  CHECK_FALSE(g.has_edge({1, 2, 1}));
}

TEST_CASE("degree vectors sum to the edge vector") {
  for (int n = 2; n <= 5; ++n) {
    for (int r = 1; r <= 3; ++r) {
      const auto k = complete_digraph(n, r);
      CHECK(k.edge_count() == static_cast<std::size_t>(r * n * (n - 1)));
      std::vector<long long> in(r, 0), out(r, 0);
      for (int v = 0; v < n; ++v) {
        const auto dv = degree_vector(k, v);
        for (int c = 0; c < r; ++c) {
          CHECK(dv.in(c) == n - 1);
          CHECK(dv.out(c) == n - 1);
          in[c] += dv.in(c);
          out[c] += dv.out(c);
        }
      }
      const auto ev = edge_vector(k);
      CHECK(ev.entries == in);
      CHECK(ev.entries == out);
    }
  }
}
