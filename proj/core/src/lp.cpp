#include "hyperkernel/lp.hpp"

#include "hyperkernel/error.hpp"

#include <cstddef>

namespace hyperkernel::lp {

namespace {

// Dense maximisation tableau. Columns of the starting basis must form an
// identity in the constraint rows.
class tableau {
 public:
  tableau(matrix rows, std::vector<rational> rhs, std::vector<rational> cost, std::vector<std::size_t> basis)
      : rows_(std::move(rows)), rhs_(std::move(rhs)), cost_(std::move(cost)), basis_(std::move(basis)) {
    const std::size_t cols = cost_.size();
    reduced_.assign(cols, rational(0));
    value_ = 0;
    for (std::size_t j = 0; j < cols; ++j) {
      rational z = 0;
      for (std::size_t i = 0; i < rows_.size(); ++i) z += cost_[basis_[i]] * rows_[i][j];
      reduced_[j] = z - cost_[j];
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) value_ += cost_[basis_[i]] * rhs_[i];
  }

  // Bland's rule; false when unbounded.
  bool solve() {
    for (;;) {
      std::size_t enter = reduced_.size();
      for (std::size_t j = 0; j < reduced_.size(); ++j) {
        if (reduced_[j].sign() < 0) {
          enter = j;
          break;
        }
      }
      if (enter == reduced_.size()) return true;

      std::size_t leave = rows_.size();
      rational best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][enter].sign() <= 0) continue;
        rational ratio = rhs_[i] / rows_[i][enter];
        if (leave == rows_.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == rows_.size()) return false;
      pivot(leave, enter);
    }
  }

  const rational& value() const { return value_; }
  const std::vector<rational>& reduced() const { return reduced_; }

  std::vector<rational> basic_solution(std::size_t cols) const {
    std::vector<rational> x(cols, rational(0));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] < cols) x[basis_[i]] = rhs_[i];
    }
    return x;
  }

 private:
  void pivot(std::size_t r, std::size_t c) {
    const rational p = rows_[r][c];
    for (auto& a : rows_[r]) a /= p;
    rhs_[r] /= p;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || rows_[i][c].sign() == 0) continue;
      const rational f = rows_[i][c];
      for (std::size_t j = 0; j < rows_[i].size(); ++j) rows_[i][j] -= f * rows_[r][j];
      rhs_[i] -= f * rhs_[r];
    }
    if (reduced_[c].sign() != 0) {
      const rational f = reduced_[c];
      for (std::size_t j = 0; j < reduced_.size(); ++j) reduced_[j] -= f * rows_[r][j];
      value_ -= f * rhs_[r];
    }
    basis_[r] = c;
  }

  matrix rows_;
  std::vector<rational> rhs_;
  std::vector<rational> cost_;
  std::vector<std::size_t> basis_;
  std::vector<rational> reduced_;
  rational value_;
};

void check_shape(const matrix& a, const std::vector<rational>& b, std::size_t cols) {
  if (a.size() != b.size()) throw error(errc::invalid_argument, "row count mismatch");
  for (const auto& row : a) {
    if (row.size() != cols) throw error(errc::invalid_argument, "ragged constraint matrix");
  }
  for (const auto& rhs : b) {
    if (rhs.sign() < 0) throw error(errc::invalid_argument, "negative right-hand side");
  }
}

}  // namespace

std::optional<packing_solution> maximize_packing(const matrix& a, const std::vector<rational>& b,
                                                 const std::vector<rational>& c) {
  const std::size_t rows = a.size();
  const std::size_t cols = c.size();
  check_shape(a, b, cols);

  matrix t(rows, std::vector<rational>(cols + rows, rational(0)));
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) t[i][j] = a[i][j];
    t[i][cols + i] = 1;
    basis[i] = cols + i;
  }
  std::vector<rational> cost(cols + rows, rational(0));
  for (std::size_t j = 0; j < cols; ++j) cost[j] = c[j];

  tableau tab(std::move(t), b, std::move(cost), std::move(basis));
  if (!tab.solve()) return std::nullopt;

  packing_solution s;
  s.value = tab.value();
  s.primal = tab.basic_solution(cols);
  s.dual.assign(rows, rational(0));
  for (std::size_t i = 0; i < rows; ++i) s.dual[i] = tab.reduced()[cols + i];
  return s;
}

std::optional<std::vector<rational>> find_nonnegative_solution(const matrix& a, const std::vector<rational>& b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  check_shape(a, b, cols);

  // Phase one: maximise -(sum of artificials).
  matrix t(rows, std::vector<rational>(cols + rows, rational(0)));
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) t[i][j] = a[i][j];
    t[i][cols + i] = 1;
    basis[i] = cols + i;
  }
  std::vector<rational> cost(cols + rows, rational(0));
  for (std::size_t i = 0; i < rows; ++i) cost[cols + i] = -1;

  tableau tab(std::move(t), b, std::move(cost), std::move(basis));
  tab.solve();  // bounded above by zero
  if (tab.value().sign() != 0) return std::nullopt;
  return tab.basic_solution(cols);
}

}  // namespace hyperkernel::lp
