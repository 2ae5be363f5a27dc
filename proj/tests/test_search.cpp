#include <set>

#include "doctest.h"
#include "ecd/exact_cover.hpp"
#include "ecd/search.hpp"

using namespace ecd;

namespace {

// Fixed decomposition of K_5 over the colors of G([2,1]), 0-based.
Decomposition fixed_decomposition() {
  Decomposition dec;
  dec.n = 5;
  dec.superpure = true;
  dec.family = family_G(Composition({2, 1}));
  const std::vector<std::pair<std::vector<int>, int>> mains = {
      {{1, 3}, 2}, {{2, 4}, 1}, {{0, 2}, 3}, {{0, 1}, 4}, {{3, 4}, 0}};
  for (const auto& [s1, s2] : mains) {
    Block b;
    b.member = "G[2,1]";
    b.shape = Block::Shape::Classes;
    b.classes = {s1, {s2}};
    dec.blocks.push_back(b);
  }
  const std::vector<std::pair<int, int>> singles = {{0, 1}, {1, 0}, {2, 0}, {3, 1}, {4, 2},
                                                    {0, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 3}};
  for (const auto& p : singles) {
    Block b;
    b.member = "G_2";
    b.shape = Block::Shape::Pair;
    b.pair = p;
    dec.blocks.push_back(b);
  }
  return dec;
}

}  // namespace

TEST_CASE("exact cover on a textbook instance") {
  // Seven items, six options, exactly one cover: options 0, 3 and 4.
  ExactCover ec(7, 0);
  const std::vector<std::vector<std::size_t>> opts = {{2, 4}, {0, 3, 6}, {1, 2, 5}, {0, 3, 5}, {1, 6}, {3, 4, 6}};
  for (const auto& o : opts) ec.add_option(o);
  std::vector<std::vector<std::size_t>> found;
  ExactCover::Stats stats;
  const auto outcome = ec.search(
      [&](const std::vector<std::size_t>& s) {
        auto sorted = s;
        std::sort(sorted.begin(), sorted.end());
        found.push_back(sorted);
        return true;
      },
      {}, stats);
  CHECK(outcome == ExactCover::Outcome::Complete);
  REQUIRE(found.size() == 1);
  CHECK(found[0] == std::vector<std::size_t>{0, 3, 4});
}

TEST_CASE("secondary items are covered at most once") {
  ExactCover ec(2, 1);
  ec.add_option(std::vector<std::size_t>{0, 2});
  ec.add_option(std::vector<std::size_t>{1, 2});
  ec.add_option(std::vector<std::size_t>{1});
  int count = 0;
  ExactCover::Stats stats;
  (void)ec.search([&](const std::vector<std::size_t>&) { return ++count, true; }, {}, stats);
  CHECK(count == 1);
}

TEST_CASE("block enumeration counts") {
  const auto fam = family_G(Composition({2, 1}));
  const auto blocks = enumerate_blocks(fam, 5);
  // C(5,2)*3 main copies plus 20 ordered pairs.
  CHECK(blocks.size() == 30 + 20);
  CHECK_THROWS_AS((void)enumerate_blocks(fam, 2), InvalidArgument);
}

TEST_CASE("the fixed decomposition verifies and corrupting it is caught") {
  auto dec = fixed_decomposition();
  auto rep = verify_decomposition(dec);
  CHECK(rep.valid);
  CHECK(rep.superpure_ok);
  CHECK(rep.blocks_per_member["G[2,1]"] == 5);
  CHECK(rep.edges_per_color == std::vector<long long>{20, 20});

  auto missing = dec;
  missing.blocks.pop_back();
  rep = verify_decomposition(missing);
  CHECK_FALSE(rep.valid);
  CHECK(rep.first_violation.find("uncovered") != std::string::npos);

  auto twice = dec;
  twice.blocks.push_back(twice.blocks.back());
  rep = verify_decomposition(twice);
  CHECK_FALSE(rep.valid);
  CHECK(rep.first_violation.find("twice") != std::string::npos);
}

TEST_CASE("superpure search for G([2,1])") {
  const auto fam = family_G(Composition({2, 1}));
  SolveOptions so;
  so.superpure = true;
  auto res = solve(fam, 5, so);
  REQUIRE(res.status == SolveStatus::Sat);
  CHECK(verify_decomposition(res.solutions.front()).valid);

  res = solve(fam, 4, so);
  CHECK(res.status == SolveStatus::Unsat);

  so.mode = SearchMode::Count;
  res = solve(fam, 5, so);
  CHECK(res.status == SolveStatus::Sat);
  CHECK(res.solution_count >= 1);
  CHECK(res.solutions.empty());
}

TEST_CASE("every enumerated solution verifies and solutions are distinct") {
  const auto fam = family_G(Composition({2, 1}));
  SolveOptions so;
  so.superpure = true;
  so.mode = SearchMode::All;
  const auto res = solve(fam, 5, so);
  std::set<std::vector<Block>> seen;
  for (const auto& d : res.solutions) {
    CHECK(verify_decomposition(d).valid);
    seen.insert(d.blocks);
  }
  CHECK(seen.size() == res.solutions.size());
  CHECK(res.solution_count == res.solutions.size());
}

TEST_CASE("seeded search is reproducible") {
  const auto fam = family_G(Composition({2, 1}));
  SolveOptions so;
  so.superpure = true;
  so.seed = 12345;
  const auto a = solve(fam, 5, so);
  const auto b = solve(fam, 5, so);
  REQUIRE(a.status == SolveStatus::Sat);
  CHECK(a.solutions.front().blocks == b.solutions.front().blocks);
  CHECK(a.nodes == b.nodes);
}

TEST_CASE("multi-threaded search agrees on the solution count") {
  const auto fam = family_G(Composition({2, 1}));
  SolveOptions so;
  so.superpure = true;
  so.mode = SearchMode::Count;
  const auto one = solve(fam, 5, so);
  so.threads = 3;
  const auto three = solve(fam, 5, so);
  CHECK(one.solution_count == three.solution_count);
}

TEST_CASE("time limit yields TIMEOUT") {
  const auto fam = family_Gstar(Composition({2, 1}));
  SolveOptions so;
  so.superpure = true;
  so.mode = SearchMode::Count;
  so.time_limit = std::chrono::milliseconds(0);
  const auto res = solve(fam, 9, so);
  CHECK(res.status == SolveStatus::Timeout);
}

TEST_CASE("search mode parsing") {
  CHECK(search_mode_from_string("all") == SearchMode::All);
  CHECK_THROWS_AS((void)search_mode_from_string("some"), InvalidArgument);
}
