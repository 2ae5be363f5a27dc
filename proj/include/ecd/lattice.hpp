#pragma once

// Decomposition invariants of a digraph family.
//
// alpha / beta are gcds of the constants t for which t*(1,...,1) is a
// nonnegative integral combination of the degree / edge vectors. They are
// computed generically: an exact integer echelon form yields the least lattice
// constant t0, then a bounded nonnegative feasibility search looks for
// achievable multiples k*t0. Once the achieved multipliers have gcd 1 the
// answer is t0; otherwise the entry is reported unresolved.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ecd/families.hpp"
#include "ecd/rational_lp.hpp"

namespace ecd::lattice {

using BigInt = boost::multiprecision::cpp_int;
using Rational = lp::Rational;
using IntVector = std::vector<long long>;

/// Least positive t with t*(1,...,1) in the integer span of `vectors`
/// (coefficients of any sign), or nullopt when no positive multiple is.
struct LatticeConstant {
  BigInt value;
  std::vector<BigInt> coefficients;  // sum_j c_j v_j = value * (1,...,1)
};
[[nodiscard]] std::optional<LatticeConstant> lattice_constant(const std::vector<IntVector>& vectors, std::size_t dim);

/// Integer (sign-unrestricted) coefficients expressing `target`, or nullopt.
[[nodiscard]] std::optional<std::vector<BigInt>> integral_membership(const std::vector<IntVector>& vectors,
                                                                     const IntVector& target);

enum class Feasibility { Found, Infeasible, Unknown };

/// Bounded search for x >= 0 integral with sum_j x_j v_j = target. Gives up
/// with Unknown after `node_limit` branch nodes.
[[nodiscard]] Feasibility nonnegative_combination(const std::vector<IntVector>& vectors, const IntVector& target,
                                                  std::vector<long long>& coefficients,
                                                  std::uint64_t node_limit = 2'000'000);

struct ConeOptions {
  /// Largest multiplier k tried for k*t0; 0 selects 2 * |vectors| * max entry.
  long long k_max = 0;
  std::uint64_t node_limit = 2'000'000;
};

struct ConeWitness {
  long long multiple = 0;                 // the constant t = k * t0
  std::vector<long long> coefficients;    // nonnegative, one per generator
};

struct InvariantEntry {
  bool resolved = false;
  long long value = 0;  // gcd of achieved constants; 0 when nothing was achieved
  std::optional<long long> lattice_constant;
  std::vector<ConeWitness> witnesses;
  std::string note;
};

[[nodiscard]] InvariantEntry cone_gcd(const std::vector<IntVector>& vectors, std::size_t dim,
                                      const ConeOptions& options = {});

/// Generators (deduplicated, zero vectors dropped) with a human-readable origin each.
struct Generators {
  std::vector<IntVector> vectors;
  std::vector<std::string> labels;
  std::size_t dim = 0;
};
[[nodiscard]] Generators degree_generators(const DigraphFamily& family);
[[nodiscard]] Generators edge_generators(const DigraphFamily& family);

[[nodiscard]] InvariantEntry alpha(const DigraphFamily& family, const ConeOptions& options = {});
[[nodiscard]] InvariantEntry beta(const DigraphFamily& family, const ConeOptions& options = {});

struct Admissibility {
  bool admissible = false;
  std::vector<Rational> lambda;  // per member, in family order; empty unless admissible
};

/// (1,...,1) as a strictly positive rational combination of the edge vectors,
/// decided by maximizing the smallest coefficient.
[[nodiscard]] Admissibility admissible(const DigraphFamily& family);

struct Congruences {
  bool beta_ok = false;   // n(n-1) = 0 mod beta
  bool alpha_ok = false;  // n-1 = 0 mod alpha
};
[[nodiscard]] Congruences theorem_congruences(long long alpha_value, long long beta_value, long long n);
/// Throws Error when either invariant is unresolved.
[[nodiscard]] Congruences theorem_congruences(const DigraphFamily& family, long long n,
                                              const ConeOptions& options = {});

/// n(n-1)*(1,...,1) over the edge vectors, and (n-1)*(1,...,1) over the degree vectors.
struct LatticeConditions {
  std::optional<std::vector<BigInt>> edge_witness;
  std::optional<std::vector<BigInt>> degree_witness;
};
[[nodiscard]] LatticeConditions lattice_conditions(const DigraphFamily& family, long long n);

}  // namespace ecd::lattice
