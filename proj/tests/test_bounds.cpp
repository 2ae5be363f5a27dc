#include "doctest.h"
#include "ecd/bounds.hpp"
#include "oracles.hpp"

using namespace ecd;
using namespace ecd::bounds;

TEST_CASE("frozen bound values") {
  CHECK(bound_ccc_2w2(3, 5, Composition({2, 1})) == 5);
  CHECK(johnson_step_ccc(3, 5, 4, Composition({2, 1}), 2) == 5);
  CHECK(base_full_distance(7, 3) == 2);
  CHECK(bound_ccc_2w3(3, 7, Composition({3, 2})) == 7);
  CHECK(bound_ccc_2w3(3, 5, Composition({2, 2})) == 5);
  CHECK(bound_ccc_2w3(3, 5, Composition({2, 1})) == 10);
  CHECK(bound_cwc_2w2(2, 7, 3) == 7);
  CHECK(bound_cwc_2w3(2, 7, 3) == 7);
  CHECK(bound_mcwc(2, 5, 2) == 5);
  CHECK(bound_mcwc(2, 5, 1) == 25);
}

TEST_CASE("bounds dominate brute-force maxima on tiny instances") {
  struct Case {
    std::vector<int> comp;
    int n;
  };
  for (const Case& c : std::vector<Case>{{{2, 1}, 4}, {{2, 1}, 5}, {{1, 1}, 4}, {{2, 2}, 5}, {{3}, 5}}) {
    const Composition comp(c.comp);
    const int w = comp.weight();
    const auto words = oracle::words_with_composition(c.n, c.comp);
    const auto best2 = oracle::max_code(words, 2 * w - 2).size();
    CHECK(bound_ccc_2w2(comp.q(), c.n, comp) >= static_cast<std::int64_t>(best2));
    if (w >= 3) {
      const auto best3 = oracle::max_code(words, 2 * w - 3).size();
      CHECK(bound_ccc_2w3(comp.q(), c.n, comp) >= static_cast<std::int64_t>(best3));
    }
    CHECK(base_full_distance(c.n, w) >= static_cast<std::int64_t>(oracle::max_code(words, 2 * w).size()));
  }
  for (int n = 3; n <= 5; ++n) {
    const auto words = oracle::words_with_weight(3, n, 2);
    CHECK(bound_cwc_2w2(3, n, 2) >= static_cast<std::int64_t>(oracle::max_code(words, 2).size()));
    CHECK(bound_cwc_2w3(3, n, 2) >= static_cast<std::int64_t>(oracle::max_code(words, 1).size()));
  }
}

TEST_CASE("d = 2w-3 bound for [2,1] at n=5 against the exhaustive maximum") {
  const auto words = oracle::words_with_composition(5, {2, 1});
  const auto best = oracle::max_code(words, 3).size();
  CHECK(best == 10);
  CHECK(bound_ccc_2w3(3, 5, Composition({2, 1})) == static_cast<std::int64_t>(best));
}

TEST_CASE("bounds are monotone in n") {
  for (const auto& comp : {Composition({2, 1}), Composition({3, 2}), Composition({2, 2, 1})}) {
    for (int n = comp.weight(); n < 40; ++n) {
      CHECK(bound_ccc_2w2(comp.q(), n, comp) <= bound_ccc_2w2(comp.q(), n + 1, comp));
      CHECK(bound_ccc_2w3(comp.q(), n, comp) <= bound_ccc_2w3(comp.q(), n + 1, comp));
    }
  }
  for (int n = 3; n < 40; ++n) {
    CHECK(bound_cwc_2w2(4, n, 3) <= bound_cwc_2w2(4, n + 1, 3));
    CHECK(bound_cwc_2w3(4, n, 3) <= bound_cwc_2w3(4, n + 1, 3));
    CHECK(bound_mcwc(3, n, 2) <= bound_mcwc(3, n + 1, 2));
  }
}

TEST_CASE("evaluate picks the rule by distance") {
  BoundQuery q;
  q.kind = CodeKind::Ccc;
  q.q = 3;
  q.n = 5;
  q.composition = Composition({2, 1});
  q.d = 4;
  CHECK(evaluate(q).value == 5);
  CHECK(evaluate(q).rule == "ccc-2w-2");
  q.d = 3;
  CHECK(evaluate(q).rule == "ccc-2w-3");
  q.d = 6;
  CHECK(evaluate(q).rule == "full-distance");
  CHECK(evaluate(q).value == 1);
  q.d = 2;
  CHECK_THROWS_AS((void)evaluate(q), InvalidArgument);

  BoundQuery m;
  m.kind = CodeKind::Mcwc;
  m.m = 2;
  m.n = 5;
  m.w = 1;
  m.d = 2;
  CHECK(evaluate(m).value == 25);
  m.d = 3;
  CHECK_THROWS_AS((void)evaluate(m), InvalidArgument);
}
