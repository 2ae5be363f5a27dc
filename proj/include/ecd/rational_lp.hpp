#pragma once

// Exact two-phase simplex over arbitrary-precision rationals.

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace ecd::lp {

using Rational = boost::multiprecision::cpp_rational;

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status = Status::Infeasible;
  Rational objective = 0;
  std::vector<Rational> x;
};

/// maximize c.x subject to A x = b, x >= 0. Rows with negative b are negated.
/// Bland's rule throughout, so the method terminates on degenerate problems.
[[nodiscard]] Solution maximize(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
                                const std::vector<Rational>& c);

}  // namespace ecd::lp
