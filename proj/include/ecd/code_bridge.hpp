#pragma once

// Turning decompositions into codes, and checking codes against the pair
// conditions that characterize distance 2w-2 and 2w-3, their declared
// parameters, and the matching Johnson-type bound.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ecd/bounds.hpp"
#include "ecd/core.hpp"
#include "ecd/search.hpp"

namespace ecd {

enum class ConstructionKind { Ccc2w2, Ccc2w3, Cwc2w2, Cwc2w3, Mcwc };

[[nodiscard]] std::string to_string(ConstructionKind kind);
[[nodiscard]] ConstructionKind construction_kind_from_string(const std::string& text);
[[nodiscard]] FamilyKind required_family(ConstructionKind kind);
[[nodiscard]] bool requires_superpure(ConstructionKind kind);

using AnyCode = std::variant<Code, McwcCode>;

/// One codeword per main block; single-edge blocks contribute nothing.
[[nodiscard]] AnyCode decomposition_to_code(const Decomposition& dec, ConstructionKind kind);

/// Number of main blocks every decomposition of K_n for this kind must contain.
[[nodiscard]] std::int64_t expected_code_size(ConstructionKind kind, const DigraphFamily& family, int n);

struct ConditionReport {
  bool first_ok = true;   // C1 or C3
  bool second_ok = true;  // C2 or C4
  bool vacuous = false;   // the implied distance bound is <= 1
  std::vector<std::string> violations;
  [[nodiscard]] bool ok() const noexcept { return first_ok && second_ok; }
};

/// C1: per color i, the pairs (x, y) with u_x = i, y in supp(u) \ {x} are
/// distinct over the whole code. C2: supports meet in at most two positions.
[[nodiscard]] ConditionReport check_C1_C2(const Code& code);

/// C3: per ordered color pair (i, j), the pairs (x, y) with u_x = i, u_y = j,
/// x != y are distinct over the whole code. C4 is C2.
[[nodiscard]] ConditionReport check_C3_C4(const Code& code);

struct CodeExpectation {
  int d = 1;
  std::optional<Composition> composition;
  std::optional<int> weight;
};

struct McwcExpectation {
  int m = 1;
  int n = 1;
  int w = 1;
  int d = 1;
};

enum class Verdict { Optimal, BelowBound, ExceedsBound, NoBound };
[[nodiscard]] std::string to_string(Verdict v);

struct CodeReport {
  bool valid = true;  // all structural and distance checks passed
  std::size_t size = 0;
  std::optional<int> minimum_distance;
  std::optional<bounds::BoundResult> bound;
  Verdict verdict = Verdict::NoBound;
  std::int64_t gap = 0;  // bound - size when a bound applies
  std::vector<std::string> messages;
};

[[nodiscard]] CodeReport verify_code(const Code& code, const CodeExpectation& expected);
[[nodiscard]] CodeReport verify_code(const McwcCode& code, const McwcExpectation& expected);

}  // namespace ecd
