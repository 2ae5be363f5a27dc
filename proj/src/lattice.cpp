#include "ecd/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace ecd::lattice {
namespace {

using Matrix = std::vector<std::vector<BigInt>>;

// Row echelon form by unimodular row operations. `transform` starts as the
// identity and ends with rows[i] == sum_j transform[i][j] * original[j].
void integer_echelon(Matrix& rows, Matrix& transform) {
  const std::size_t m = rows.size();
  const std::size_t k = m ? rows.front().size() : 0;
  transform.assign(m, std::vector<BigInt>(m, 0));
  for (std::size_t i = 0; i < m; ++i) transform[i][i] = 1;

  auto axpy = [](std::vector<BigInt>& dst, const std::vector<BigInt>& src, const BigInt& f) {
    for (std::size_t j = 0; j < dst.size(); ++j) {
      if (src[j] != 0) dst[j] -= f * src[j];
    }
  };

  std::size_t pivot = 0;
  for (std::size_t col = 0; col < k && pivot < m; ++col) {
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t r = pivot; r < m; ++r) {
        if (rows[r][col] == 0) continue;
        if (!best || abs(rows[r][col]) < abs(rows[*best][col])) best = r;
      }
      if (!best) break;
      std::swap(rows[pivot], rows[*best]);
      std::swap(transform[pivot], transform[*best]);
      bool clean = true;
      for (std::size_t r = pivot + 1; r < m; ++r) {
        if (rows[r][col] == 0) continue;
        const BigInt f = rows[r][col] / rows[pivot][col];
        axpy(rows[r], rows[pivot], f);
        axpy(transform[r], transform[pivot], f);
        if (rows[r][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (rows[pivot][col] != 0) ++pivot;
  }
}

void check_dims(const std::vector<IntVector>& vectors, std::size_t dim) {
  for (const auto& v : vectors) {
    if (v.size() != dim) throw DimensionError("generator has dimension " + std::to_string(v.size()) +
                                              ", expected " + std::to_string(dim));
  }
}

// Solves sum_j c_j v_j = s * target for the least positive s; returns (s, c).
std::optional<std::pair<BigInt, std::vector<BigInt>>> least_multiple(const std::vector<IntVector>& vectors,
                                                                     const IntVector& target) {
  const std::size_t dim = target.size();
  Matrix rows;
  for (const auto& v : vectors) {
    std::vector<BigInt> row(dim + 1, 0);
    for (std::size_t i = 0; i < dim; ++i) row[i] = v[i];
    rows.push_back(std::move(row));
  }
  std::vector<BigInt> tail(dim + 1, 0);
  for (std::size_t i = 0; i < dim; ++i) tail[i] = -target[i];
  tail[dim] = 1;
  rows.push_back(std::move(tail));

  Matrix transform;
  integer_echelon(rows, transform);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    bool head_zero = std::all_of(rows[r].begin(), rows[r].begin() + static_cast<std::ptrdiff_t>(dim),
                                 [](const BigInt& x) { return x == 0; });
    if (!head_zero || rows[r][dim] == 0) continue;
    BigInt s = rows[r][dim];
    std::vector<BigInt> coeffs(transform[r].begin(), transform[r].begin() + static_cast<std::ptrdiff_t>(vectors.size()));
    if (s < 0) {
      s = -s;
      for (auto& c : coeffs) c = -c;
    }
    return std::make_pair(s, std::move(coeffs));
  }
  return std::nullopt;
}

struct SearchState {
  const std::vector<IntVector>* vectors;
  std::size_t dim;
  std::uint64_t nodes = 0;
  std::uint64_t node_limit;
  bool gave_up = false;
};

long long cap_for(const IntVector& v, const IntVector& residual) {
  long long cap = -1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    long long c = residual[i] / v[i];
    if (cap < 0 || c < cap) cap = c;
  }
  return cap < 0 ? 0 : cap;
}

bool dfs(SearchState& st, IntVector residual, std::vector<char> assigned, std::vector<long long>& x) {
  if (++st.nodes > st.node_limit) {
    st.gave_up = true;
    return false;
  }
  const auto& vs = *st.vectors;
  auto assign = [&](std::size_t j, long long val) {
    assigned[j] = 1;
    x[j] = val;
    if (val == 0) return;
    for (std::size_t i = 0; i < st.dim; ++i) residual[i] -= val * vs[j][i];
  };

  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < st.dim; ++i) {
      if (residual[i] < 0) return false;
      std::size_t count = 0, last = 0;
      for (std::size_t j = 0; j < vs.size(); ++j) {
        if (!assigned[j] && vs[j][i] > 0) {
          ++count;
          last = j;
        }
      }
      if (residual[i] == 0) {
        for (std::size_t j = 0; j < vs.size(); ++j) {
          if (!assigned[j] && vs[j][i] > 0) {
            assign(j, 0);
            changed = true;
          }
        }
      } else if (count == 0) {
        return false;
      } else if (count == 1) {
        if (residual[i] % vs[last][i] != 0) return false;
        const long long val = residual[i] / vs[last][i];
        if (val > cap_for(vs[last], residual)) return false;
        assign(last, val);
        changed = true;
      }
    }
  }

  // most constrained coordinate
  std::optional<std::size_t> coord;
  std::size_t best_count = 0;
  for (std::size_t i = 0; i < st.dim; ++i) {
    if (residual[i] == 0) continue;
    std::size_t count = 0;
    for (std::size_t j = 0; j < vs.size(); ++j) count += (!assigned[j] && vs[j][i] > 0);
    if (!coord || count < best_count) {
      coord = i;
      best_count = count;
    }
  }
  if (!coord) {
    for (std::size_t j = 0; j < vs.size(); ++j) {
      if (!assigned[j]) x[j] = 0;
    }
    return true;
  }

  // branch on the covering vector with the widest support
  std::optional<std::size_t> pick;
  std::size_t pick_support = 0;
  for (std::size_t j = 0; j < vs.size(); ++j) {
    if (assigned[j] || vs[j][*coord] == 0) continue;
    auto support = static_cast<std::size_t>(std::count_if(vs[j].begin(), vs[j].end(), [](long long e) { return e > 0; }));
    if (!pick || support > pick_support) {
      pick = j;
      pick_support = support;
    }
  }
  const long long cap = cap_for(vs[*pick], residual);
  for (long long val = cap; val >= 0; --val) {
    IntVector r2 = residual;
    for (std::size_t i = 0; i < st.dim; ++i) r2[i] -= val * vs[*pick][i];
    std::vector<char> a2 = assigned;
    a2[*pick] = 1;
    x[*pick] = val;
    if (dfs(st, std::move(r2), std::move(a2), x)) return true;
    if (st.gave_up) return false;
  }
  return false;
}

long long to_ll(const BigInt& v) { return v.convert_to<long long>(); }

Generators dedupe(std::vector<IntVector> vecs, std::vector<std::string> labels, std::size_t dim) {
  Generators g;
  g.dim = dim;
  std::set<IntVector> seen;
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    if (std::all_of(vecs[i].begin(), vecs[i].end(), [](long long e) { return e == 0; })) continue;
    if (!seen.insert(vecs[i]).second) continue;
    g.vectors.push_back(std::move(vecs[i]));
    g.labels.push_back(std::move(labels[i]));
  }
  return g;
}

}  // namespace

std::optional<LatticeConstant> lattice_constant(const std::vector<IntVector>& vectors, std::size_t dim) {
  check_dims(vectors, dim);
  auto res = least_multiple(vectors, IntVector(dim, 1));
  if (!res) return std::nullopt;
  return LatticeConstant{std::move(res->first), std::move(res->second)};
}

std::optional<std::vector<BigInt>> integral_membership(const std::vector<IntVector>& vectors,
                                                       const IntVector& target) {
  check_dims(vectors, target.size());
  auto res = least_multiple(vectors, target);
  if (!res || res->first != 1) return std::nullopt;
  return std::move(res->second);
}

Feasibility nonnegative_combination(const std::vector<IntVector>& vectors, const IntVector& target,
                                    std::vector<long long>& coefficients, std::uint64_t node_limit) {
  check_dims(vectors, target.size());
  for (const auto& v : vectors) {
    for (long long e : v) {
      if (e < 0) throw InvalidArgument("nonnegative_combination: generators must be nonnegative");
    }
  }
  coefficients.assign(vectors.size(), 0);
  if (std::any_of(target.begin(), target.end(), [](long long e) { return e < 0; })) return Feasibility::Infeasible;
  SearchState st{&vectors, target.size(), 0, node_limit};
  std::vector<char> assigned(vectors.size(), 0);
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    if (std::all_of(vectors[j].begin(), vectors[j].end(), [](long long e) { return e == 0; })) assigned[j] = 1;
  }
  if (dfs(st, target, assigned, coefficients)) return Feasibility::Found;
  coefficients.assign(vectors.size(), 0);
  return st.gave_up ? Feasibility::Unknown : Feasibility::Infeasible;
}

InvariantEntry cone_gcd(const std::vector<IntVector>& vectors, std::size_t dim, const ConeOptions& options) {
  if (vectors.empty()) throw InvalidArgument("cone_gcd: empty generator list");
  check_dims(vectors, dim);
  InvariantEntry entry;
  auto t0 = lattice_constant(vectors, dim);
  if (!t0) {
    entry.note = "no positive multiple of (1,...,1) lies in the integer lattice";
    return entry;
  }
  if (t0->value > BigInt(1) << 40) {
    entry.note = "lattice constant too large for the bounded search";
    return entry;
  }
  const long long base = to_ll(t0->value);
  entry.lattice_constant = base;

  long long k_max = options.k_max;
  if (k_max <= 0) {
    long long max_entry = 1;
    for (const auto& v : vectors) {
      for (long long e : v) max_entry = std::max(max_entry, e);
    }
    k_max = 2 * static_cast<long long>(vectors.size()) * max_entry;
  }

  long long g = 0;
  bool any_unknown = false;
  for (long long k = 1; k <= k_max; ++k) {
    std::vector<long long> coeffs;
    const auto res = nonnegative_combination(vectors, IntVector(dim, k * base), coeffs, options.node_limit);
    if (res == Feasibility::Unknown) any_unknown = true;
    if (res != Feasibility::Found) continue;
    entry.witnesses.push_back({k * base, std::move(coeffs)});
    g = std::gcd(g, k);
    if (g == 1) break;
  }
  entry.value = g * base;
  entry.resolved = g == 1;
  if (!entry.resolved) {
    std::ostringstream os;
    os << "no two coprime multipliers of t0=" << base << " achieved with k <= " << k_max;
    if (any_unknown) os << " (node limit hit)";
    entry.note = os.str();
  }
  return entry;
}

Generators degree_generators(const DigraphFamily& family) {
  std::vector<IntVector> vecs;
  std::vector<std::string> labels;
  for (const auto& m : family.members) {
    for (int v = 0; v < m.graph.vertex_count(); ++v) {
      vecs.push_back(degree_vector(m.graph, v).entries);
      labels.push_back(m.label + "@" + std::to_string(v + 1));
    }
  }
  return dedupe(std::move(vecs), std::move(labels), 2 * static_cast<std::size_t>(family.color_count));
}

Generators edge_generators(const DigraphFamily& family) {
  std::vector<IntVector> vecs;
  std::vector<std::string> labels;
  for (const auto& m : family.members) {
    vecs.push_back(edge_vector(m.graph).entries);
    labels.push_back(m.label);
  }
  return dedupe(std::move(vecs), std::move(labels), static_cast<std::size_t>(family.color_count));
}

InvariantEntry alpha(const DigraphFamily& family, const ConeOptions& options) {
  const auto gens = degree_generators(family);
  if (gens.vectors.empty()) throw InvalidArgument("family " + family.name + " has no edges");
  return cone_gcd(gens.vectors, gens.dim, options);
}

InvariantEntry beta(const DigraphFamily& family, const ConeOptions& options) {
  const auto gens = edge_generators(family);
  if (gens.vectors.empty()) throw InvalidArgument("family " + family.name + " has no edges");
  return cone_gcd(gens.vectors, gens.dim, options);
}

Admissibility admissible(const DigraphFamily& family) {
  // variables: lambda'_G (one per member), eps, slack;  lambda_G = lambda'_G + eps
  const std::size_t p = family.members.size();
  const std::size_t r = static_cast<std::size_t>(family.color_count);
  std::vector<IntVector> mu;
  for (const auto& m : family.members) mu.push_back(edge_vector(m.graph).entries);

  std::vector<std::vector<Rational>> A(r + 1, std::vector<Rational>(p + 2, 0));
  std::vector<Rational> b(r + 1, 1);
  for (std::size_t c = 0; c < r; ++c) {
    Rational total = 0;
    for (std::size_t g = 0; g < p; ++g) {
      A[c][g] = mu[g][c];
      total += mu[g][c];
    }
    A[c][p] = total;
  }
  A[r][p] = 1;
  A[r][p + 1] = 1;
  std::vector<Rational> obj(p + 2, 0);
  obj[p] = 1;

  const auto sol = lp::maximize(A, b, obj);
  Admissibility out;
  if (sol.status != lp::Status::Optimal || sol.objective <= 0) return out;
  out.admissible = true;
  for (std::size_t g = 0; g < p; ++g) out.lambda.push_back(sol.x[g] + sol.x[p]);
  return out;
}

Congruences theorem_congruences(long long alpha_value, long long beta_value, long long n) {
  if (alpha_value <= 0 || beta_value <= 0) throw InvalidArgument("alpha and beta must be positive");
  return Congruences{(n * (n - 1)) % beta_value == 0, (n - 1) % alpha_value == 0};
}

Congruences theorem_congruences(const DigraphFamily& family, long long n, const ConeOptions& options) {
  const auto a = alpha(family, options);
  const auto b = beta(family, options);
  if (!a.resolved || !b.resolved) throw Error("alpha/beta unresolved for " + family.name);
  return theorem_congruences(a.value, b.value, n);
}

LatticeConditions lattice_conditions(const DigraphFamily& family, long long n) {
  const auto eg = edge_generators(family);
  const auto dg = degree_generators(family);
  LatticeConditions out;
  out.edge_witness = integral_membership(eg.vectors, IntVector(eg.dim, n * (n - 1)));
  out.degree_witness = integral_membership(dg.vectors, IntVector(dg.dim, n - 1));
  return out;
}

}  // namespace ecd::lattice
