#include <algorithm>
#include <map>

#include "doctest.h"
#include "ecd/families.hpp"
#include "oracles.hpp"

using namespace ecd;

namespace {
std::vector<std::string> labels(const DigraphFamily& f) {
  std::vector<std::string> out;
  for (const auto& m : f.members) out.push_back(m.label);
  return out;
}
}  // namespace

TEST_CASE("G([2,1]) has the main graph and one single edge of color 2") {
  const auto f = family_G(Composition({2, 1}));
  CHECK(f.color_count == 2);
  CHECK(labels(f) == std::vector<std::string>{"G[2,1]", "G_2"});
  const auto& g = f.member("G[2,1]").graph;
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 6);
  CHECK(edge_vector(g).entries == std::vector<long long>{4, 2});
  CHECK(f.member("G_2").is_single_edge());
  CHECK_NOTHROW(f.validate());
}

TEST_CASE("G of an all-equal composition has no single edges") {
  const auto f = family_G(Composition({2, 2}));
  CHECK(f.members.size() == 1);
}

TEST_CASE("G* single-edge colors") {
  // [3,2]: only (2,2) remains.
  CHECK(labels(family_Gstar(Composition({3, 2}))) == std::vector<std::string>{"G*[3,2]", "G*_(2,2)"});
  // [2,2]: the diagonal colors remain.
  CHECK(labels(family_Gstar(Composition({2, 2}))) ==
        std::vector<std::string>{"G*[2,2]", "G*_(1,1)", "G*_(2,2)"});
  // [3,1]: r = 1, everything but (1,1).
  CHECK(family_Gstar(Composition({3, 1})).members.size() == 4);
}

TEST_CASE("collapsing G* colors (i,j) -> i yields G") {
  for (int w = 2; w <= 5; ++w) {
    for (const auto& c : oracle::monotone_compositions(w, 3)) {
      const Composition comp(c);
      const int s = comp.symbol_count();
      const auto gs = build_Gstar(comp);
      std::vector<Edge> collapsed;
      for (const auto& e : gs.edges()) collapsed.push_back({e.from, e.to, e.color / s});
      CHECK(ColoredDigraph(gs.vertex_count(), s, collapsed) == build_G(comp));
    }
  }
}

TEST_CASE("main graphs match closed-form degree and edge vectors") {
  for (int w = 2; w <= 6; ++w) {
    for (const auto& c : oracle::monotone_compositions(w, 4)) {
      const Composition comp(c);
      const auto layout = class_layout(comp);
      const auto g = build_G(comp);
      const auto gs = build_Gstar(comp);
      CHECK(edge_vector(g).entries == oracle::g_main_edges(c));
      CHECK(edge_vector(gs).entries == oracle::gstar_main_edges(c));
      for (std::size_t i = 0; i < layout.size(); ++i) {
        CHECK(layout[i].size() == static_cast<std::size_t>(c[i]));
        for (int v : layout[i]) {
          CHECK(degree_vector(g, v).entries == oracle::g_main_degree(c, static_cast<int>(i)));
          CHECK(degree_vector(gs, v).entries == oracle::gstar_main_degree(c, static_cast<int>(i)));
        }
      }
    }
  }
}

TEST_CASE("composition set W") {
  const auto W = composition_set_W(3, 2);
  std::vector<std::string> s;
  for (const auto& c : W) s.push_back(c.to_string());
  CHECK(s == std::vector<std::string>{"[2,0]", "[1,1]", "[0,2]"});
  CHECK(composition_set_W(4, 3).size() == 10);
}

TEST_CASE("CWC families share one color set and validate") {
  for (int q = 2; q <= 4; ++q) {
    for (int w = 2; w <= 3; ++w) {
      const auto g = family_G_cwc(q, w);
      const auto gs = family_Gstar_cwc(q, w);
      CHECK(g.color_count == q - 1);
      CHECK(gs.color_count == (q - 1) * (q - 1));
      CHECK_NOTHROW(g.validate());
      CHECK_NOTHROW(gs.validate());
      CHECK(g.main_labels().size() == composition_set_W(q, w).size());
    }
  }
}

TEST_CASE("H*(m,w) is G*([w]^m) plus diagonal single edges") {
  const auto h = family_Hstar(2, 2);
  CHECK(h.color_count == 4);
  CHECK(h.main_labels() == std::vector<std::string>{"H*(2,2)"});
  CHECK(h.member("H*(2,2)").graph == build_Gstar(Composition({2, 2})));
  std::map<int, int> single_colors;
  for (const auto& m : h.members)
    if (m.is_single_edge()) ++single_colors[m.graph.edges().front().color];
  CHECK(single_colors == std::map<int, int>{{pair_color(0, 0, 2), 1}, {pair_color(1, 1, 2), 1}});
}

TEST_CASE("validation rejects malformed families") {
  auto f = family_G(Composition({2, 1}));
  auto dup = f;
  dup.members.push_back(dup.members.back());
  CHECK_THROWS_AS(dup.validate(), InvalidArgument);

  auto bad_classes = f;
  bad_classes.members.front().classes = {{0, 1}, {1}};
  CHECK_THROWS_AS(bad_classes.validate(), InvalidArgument);

  CHECK_THROWS_AS((void)build_single_edge(3, 2), InvalidArgument);
  CHECK_THROWS_AS((void)f.member("nope"), InvalidArgument);
}
