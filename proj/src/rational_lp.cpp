#include "ecd/rational_lp.hpp"

#include <optional>
#include <stdexcept>

namespace ecd::lp {
namespace {

// Dense tableau: rows_ x (cols_ + 1), last column is the right-hand side.
class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> t, std::vector<std::size_t> basis)
      : t_(std::move(t)), basis_(std::move(basis)) {}

  // Runs primal simplex maximizing `obj` restricted to columns < allowed_cols.
  // Returns false if unbounded.
  bool run(const std::vector<Rational>& obj, std::size_t allowed_cols) {
    const std::size_t rows = t_.size();
    for (;;) {
      // reduced costs: obj_j - sum_i obj_{basis_i} * t_ij
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < allowed_cols; ++j) {
        Rational rc = obj[j];
        for (std::size_t i = 0; i < rows; ++i) {
          if (t_[i][j] != 0) rc -= obj[basis_[i]] * t_[i][j];
        }
        if (rc > 0) {
          entering = j;
          break;
        }
      }
      if (!entering) return true;
      const std::size_t e = *entering;
      std::optional<std::size_t> leaving;
      Rational best;
      for (std::size_t i = 0; i < rows; ++i) {
        if (t_[i][e] <= 0) continue;
        Rational ratio = t_[i].back() / t_[i][e];
        if (!leaving || ratio < best || (ratio == best && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best = ratio;
        }
      }
      if (!leaving) return false;
      pivot(*leaving, e);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rational p = t_[row][col];
    for (auto& v : t_[row]) v /= p;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (i == row || t_[i][col] == 0) continue;
      const Rational f = t_[i][col];
      for (std::size_t j = 0; j < t_[i].size(); ++j) {
        if (t_[row][j] != 0) t_[i][j] -= f * t_[row][j];
      }
    }
    basis_[row] = col;
  }

  [[nodiscard]] Rational value(std::size_t col) const {
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (basis_[i] == col) return t_[i].back();
    }
    return 0;
  }

  [[nodiscard]] const std::vector<std::size_t>& basis() const { return basis_; }
  [[nodiscard]] const std::vector<std::vector<Rational>>& rows() const { return t_; }

  void drop_column(std::size_t col) {
    for (auto& r : t_) r.erase(r.begin() + static_cast<std::ptrdiff_t>(col));
  }
  void drop_row(std::size_t row) {
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(row));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(row));
  }

 private:
  std::vector<std::vector<Rational>> t_;
  std::vector<std::size_t> basis_;
};

}  // namespace

Solution maximize(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
                  const std::vector<Rational>& c) {
  const std::size_t m = A.size();
  const std::size_t n = c.size();
  if (b.size() != m) throw std::invalid_argument("lp: rhs size mismatch");
  for (const auto& row : A) {
    if (row.size() != n) throw std::invalid_argument("lp: row size mismatch");
  }

  // Phase 1: artificial variable per row.
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(n + m + 1, 0));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? Rational(-A[i][j]) : A[i][j];
    t[i][n + i] = 1;
    t[i][n + m] = flip ? Rational(-b[i]) : b[i];
    basis[i] = n + i;
  }
  Tableau tab(std::move(t), std::move(basis));
  std::vector<Rational> phase1(n + m, 0);
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = -1;
  tab.run(phase1, n + m);

  Rational infeas = 0;
  for (std::size_t i = 0; i < m; ++i) infeas += tab.value(n + i);
  Solution sol;
  if (infeas != 0) {
    sol.status = Status::Infeasible;
    return sol;
  }

  // Drive remaining artificials out of the basis; rows that cannot be are redundant.
  for (std::size_t i = 0; i < tab.basis().size();) {
    if (tab.basis()[i] < n) {
      ++i;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < n; ++j) {
      if (tab.rows()[i][j] != 0) {
        col = j;
        break;
      }
    }
    if (col) {
      tab.pivot(i, *col);
      ++i;
    } else {
      tab.drop_row(i);
    }
  }
  for (std::size_t k = 0; k < m; ++k) tab.drop_column(n);  // artificial columns

  std::vector<Rational> obj = c;
  if (!tab.run(obj, n)) {
    sol.status = Status::Unbounded;
    return sol;
  }
  sol.status = Status::Optimal;
  sol.x.assign(n, 0);
  for (std::size_t j = 0; j < n; ++j) sol.x[j] = tab.value(j);
  for (std::size_t j = 0; j < n; ++j) sol.objective += c[j] * sol.x[j];
  return sol;
}

}  // namespace ecd::lp
