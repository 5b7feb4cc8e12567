#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>
#include <stdexcept>
#include <vector>

#include <Eigen/SparseCore>

#include "schur/integer.hpp"
#include "schur/smith.hpp"

namespace schur {

template <typename Scalar>
using SparseMatrix = Eigen::SparseMatrix<Scalar, Eigen::ColMajor>;

/// Rank and non-unit elementary divisors of an integer matrix.
struct DivisorSummary {
  Eigen::Index rank = 0;
  /// Elementary divisors greater than 1, ascending along the divisibility chain.
  std::vector<Integer> nonunit;
};

namespace detail {

struct ArithmeticOverflow : std::overflow_error {
  ArithmeticOverflow() : std::overflow_error("int64 overflow in sparse elimination") {}
};

// a - q * b, exact or throwing on overflow.
inline long long sub_mul(long long a, long long q, long long b) {
  long long p, r;
  if (__builtin_mul_overflow(q, b, &p) || __builtin_sub_overflow(a, p, &r))
    throw ArithmeticOverflow();
  return r;
}
inline Integer sub_mul(const Integer& a, const Integer& q, const Integer& b) { return a - q * b; }

inline Integer to_integer(long long v) { return from_int64(v); }
inline const Integer& to_integer(const Integer& v) { return v; }

/// Column-by-column elimination with unit (+-1) pivots.
///
/// Each incoming column is reduced against the pivot columns in creation order; pivot k is zero
/// on the rows of pivots 0..k-1, so one pass leaves the column zero on every pivot row. A reduced
/// column holding a unit becomes a new pivot; otherwise it is kept as a residual. Pivot columns
/// contribute unit elementary divisors, and the remaining divisors are those of the residual
/// columns restricted to non-pivot rows.
template <typename Scalar>
class UnitPivotEliminator {
 public:
  explicit UnitPivotEliminator(Eigen::Index rows)
      : rows_(rows), pivot_of_row_(static_cast<std::size_t>(rows), -1),
        acc_(static_cast<std::size_t>(rows), Scalar(0)),
        queued_(static_cast<std::size_t>(rows), false) {}

  using Column = std::vector<std::pair<Eigen::Index, Scalar>>;

  // Returns true when the column became a pivot.
  bool add(const Column& column, std::vector<Column>& residuals) {
    Column reduced = reduce(column);
    if (reduced.empty()) return false;
    for (const auto& [row, value] : reduced) {
      if (value == 1 || value == -1) {
        pivot_of_row_[static_cast<std::size_t>(row)] = static_cast<long>(pivots_.size());
        pivots_.push_back({row, value, std::move(reduced)});
        return true;
      }
    }
    residuals.push_back(std::move(reduced));
    return false;
  }

  Eigen::Index pivot_count() const { return static_cast<Eigen::Index>(pivots_.size()); }
  bool is_pivot_row(Eigen::Index r) const { return pivot_of_row_[static_cast<std::size_t>(r)] >= 0; }

 private:
  struct Pivot {
    Eigen::Index row;
    Scalar unit;
    Column column;
  };

  Column reduce(const Column& column) {
    std::vector<Eigen::Index> touched;
    std::priority_queue<long, std::vector<long>, std::greater<>> pending;
    auto note = [&](Eigen::Index row) {
      auto r = static_cast<std::size_t>(row);
      if (pivot_of_row_[r] >= 0 && !queued_[r]) {
        queued_[r] = true;
        pending.push(pivot_of_row_[r]);
      }
    };
    for (const auto& [row, value] : column) {
      if (is_zero(value)) continue;
      auto r = static_cast<std::size_t>(row);
      if (is_zero(acc_[r])) touched.push_back(row);
      acc_[r] = sub_mul(acc_[r], Scalar(-1), value);
      note(row);
    }
    while (!pending.empty()) {
      const Pivot& p = pivots_[static_cast<std::size_t>(pending.top())];
      pending.pop();
      auto pr = static_cast<std::size_t>(p.row);
      queued_[pr] = false;
      if (is_zero(acc_[pr])) continue;
      const Scalar q = sub_mul(Scalar(0), acc_[pr], Scalar(-p.unit));
      for (const auto& [row, value] : p.column) {
        auto r = static_cast<std::size_t>(row);
        if (is_zero(acc_[r])) touched.push_back(row);
        acc_[r] = sub_mul(acc_[r], q, value);
        if (row != p.row) note(row);
      }
    }
    Column out;
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (Eigen::Index row : touched) {
      auto r = static_cast<std::size_t>(row);
      if (!is_zero(acc_[r])) out.emplace_back(row, acc_[r]);
      acc_[r] = Scalar(0);
    }
    return out;
  }

  Eigen::Index rows_;
  std::vector<long> pivot_of_row_;
  std::vector<Pivot> pivots_;
  std::vector<Scalar> acc_;
  std::vector<bool> queued_;
};

template <typename Scalar>
DivisorSummary eliminate(const SparseMatrix<Scalar>& m) {
  using Column = typename UnitPivotEliminator<Scalar>::Column;
  UnitPivotEliminator<Scalar> elim(m.rows());
  std::vector<Column> residuals;
  Column column;
  for (Eigen::Index j = 0; j < m.outerSize(); ++j) {
    column.clear();
    for (typename SparseMatrix<Scalar>::InnerIterator it(m, j); it; ++it)
      column.emplace_back(it.row(), it.value());
    elim.add(column, residuals);
  }
  // Later pivots may touch earlier residuals; repeat until a pass creates no pivot.
  for (;;) {
    std::vector<Column> next;
    bool grew = false;
    for (const auto& r : residuals) grew = elim.add(r, next) || grew;
    residuals = std::move(next);
    if (!grew) break;
  }

  std::vector<Eigen::Index> free_rows;
  std::vector<Eigen::Index> slot(static_cast<std::size_t>(m.rows()), -1);
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    if (!elim.is_pivot_row(r)) {
      slot[static_cast<std::size_t>(r)] = static_cast<Eigen::Index>(free_rows.size());
      free_rows.push_back(r);
    }
  IntMatrix rest = zero_matrix(static_cast<Eigen::Index>(free_rows.size()),
                               static_cast<Eigen::Index>(residuals.size()));
  for (std::size_t j = 0; j < residuals.size(); ++j)
    for (const auto& [row, value] : residuals[j])
      rest(slot[static_cast<std::size_t>(row)], static_cast<Eigen::Index>(j)) = to_integer(value);

  DivisorSummary out;
  out.rank = elim.pivot_count();
  for (auto& d : elementary_divisors(rest)) {
    ++out.rank;
    if (d != 1) out.nonunit.push_back(std::move(d));
  }
  return out;
}

}  // namespace detail

/// Rank and elementary divisors of a sparse integer matrix.
///
/// Unit pivots are eliminated sparsely, then the remaining block goes through the dense Smith
/// reduction. With 64-bit input the elimination runs in checked int64 arithmetic and restarts in
/// arbitrary precision if an entry would overflow.
inline DivisorSummary sparse_elementary_divisors(const SparseMatrix<long long>& m) {
  try {
    return detail::eliminate(m);
  } catch (const detail::ArithmeticOverflow&) {
    std::vector<Eigen::Triplet<Integer>> entries;
    for (Eigen::Index j = 0; j < m.outerSize(); ++j)
      for (SparseMatrix<long long>::InnerIterator it(m, j); it; ++it)
        entries.emplace_back(it.row(), it.col(), detail::to_integer(it.value()));
    SparseMatrix<Integer> wide(m.rows(), m.cols());
    wide.setFromTriplets(entries.begin(), entries.end());
    return detail::eliminate(wide);
  }
}

inline DivisorSummary sparse_elementary_divisors(const SparseMatrix<Integer>& m) {
  return detail::eliminate(m);
}

}  // namespace schur
