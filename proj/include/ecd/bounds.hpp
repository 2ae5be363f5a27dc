#pragma once

// Johnson-type upper bounds on the size of constant-composition,
// constant-weight and multiply constant-weight codes.
//
// Every nested floor is evaluated inside-out and floor((a/b) * c) is computed
// as (a * c) / b in integer arithmetic, with c the already-floored inner term.

#include <cstdint>
#include <optional>
#include <string>

#include "ecd/core.hpp"

namespace ecd::bounds {

/// floor(n * inner / w_1): one puncturing step for A_q(n, d, w̄) given a value
/// (or bound) `inner` for A_q(n-1, d, [w_1 - 1, w_2, ...]).
[[nodiscard]] std::int64_t johnson_step_ccc(int q, int n, int d, const Composition& comp, std::int64_t inner);

/// A_q(n, 2w, ·) = floor(n / w).
[[nodiscard]] std::int64_t base_full_distance(int n, int w);

[[nodiscard]] std::int64_t bound_ccc_2w2(int q, int n, const Composition& comp);
/// For a one-part composition w_2 is taken as 0.
[[nodiscard]] std::int64_t bound_ccc_2w3(int q, int n, const Composition& comp);
[[nodiscard]] std::int64_t bound_cwc_2w2(int q, int n, int w);
[[nodiscard]] std::int64_t bound_cwc_2w3(int q, int n, int w);
[[nodiscard]] std::int64_t bound_mcwc(int m, int n, int w);

enum class CodeKind { Ccc, Cwc, Mcwc };

struct BoundQuery {
  CodeKind kind = CodeKind::Ccc;
  int q = 2;
  int n = 1;
  int d = 1;
  std::optional<Composition> composition;  // Ccc
  int w = 0;                                // Cwc, Mcwc
  int m = 1;                                // Mcwc
};

struct BoundResult {
  std::int64_t value = 0;
  std::string rule;     // "ccc-2w-2", "ccc-2w-3", "cwc-2w-2", "cwc-2w-3", "mcwc-2mw-2", "full-distance"
  std::string formula;   // instantiated arithmetic, e.g. "floor(5*floor(4/2)/2)"
};

/// Picks the closed form matching (kind, d). Throws InvalidArgument when no
/// closed form covers the requested distance.
[[nodiscard]] BoundResult evaluate(const BoundQuery& query);

}  // namespace ecd::bounds
