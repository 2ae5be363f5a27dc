#pragma once

// Search for (superpure) G-decompositions of the complete edge-colored
// digraph K_n^(r) as an exact cover problem: the r*n*(n-1) colored edges are
// the primary items and every embedded copy of a family member is an option.
// Superpurity is enforced with one secondary item per vertex triple, so two
// blocks on three or more vertices can never share three vertices.

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ecd/families.hpp"

namespace ecd {

/// One embedded copy of a family member inside [0, n).
struct Block {
  enum class Shape { Classes, Pair, Map };

  std::string member;
  Shape shape = Shape::Classes;
  ClassLayout classes;          // Classes: S_1..S_c, each sorted
  std::pair<int, int> pair{};   // Pair: (y, z) for the edge y -> z
  std::vector<int> image;       // Map: image of member vertex v at index v

  [[nodiscard]] std::vector<int> vertices() const;  // sorted

  friend bool operator==(const Block&, const Block&) = default;
  friend auto operator<=>(const Block&, const Block&) = default;
};

struct Decomposition {
  int n = 0;
  DigraphFamily family;
  bool superpure = false;
  std::vector<Block> blocks;
};

/// All embeddings of every member, each automorphism class of a member
/// counted once: class members choose unordered subsets per class, single
/// edges ordered pairs, other members injective maps deduplicated by image.
[[nodiscard]] std::vector<Block> enumerate_blocks(const DigraphFamily& family, int n);

enum class SearchMode { First, All, Count };
[[nodiscard]] SearchMode search_mode_from_string(const std::string& text);

struct SolveOptions {
  bool superpure = false;
  SearchMode mode = SearchMode::First;
  /// 0 keeps the canonical option order; any other value shuffles it deterministically.
  std::uint64_t seed = 0;
  std::optional<std::chrono::milliseconds> time_limit;
  unsigned threads = 1;
  /// Cap for SearchMode::All; 0 means unlimited.
  std::size_t max_solutions = 0;
};

enum class SolveStatus { Sat, Unsat, Timeout };
[[nodiscard]] std::string to_string(SolveStatus status);

struct SolveResult {
  SolveStatus status = SolveStatus::Unsat;
  std::vector<Decomposition> solutions;  // First: one; All: every one found
  std::uint64_t solution_count = 0;
  std::uint64_t nodes = 0;
  std::size_t max_depth = 0;  // deepest partial cover reached
  std::size_t block_count = 0;
};

[[nodiscard]] SolveResult solve(const DigraphFamily& family, int n, const SolveOptions& options = {});

struct DecompositionReport {
  bool valid = false;
  bool exact_cover = false;
  bool superpure_checked = false;
  bool superpure_ok = true;
  std::string first_violation;
  std::map<std::string, int> blocks_per_member;
  std::vector<long long> edges_per_color;
};

/// Re-expands every block on its own and checks the exact cover property, and
/// when the decomposition is flagged superpure, the pairwise intersection bound.
[[nodiscard]] DecompositionReport verify_decomposition(const Decomposition& dec);

}  // namespace ecd
