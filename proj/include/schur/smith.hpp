#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "schur/abelian.hpp"
#include "schur/integer.hpp"

namespace schur {

/// Smith normal form D = U * M * V with U, V unimodular and d_1 | d_2 | ... on the diagonal.
template <typename Scalar>
struct SnfResult {
  Matrix<Scalar> U;
  Matrix<Scalar> D;
  Matrix<Scalar> V;
};

namespace detail {

/// In-place Smith reduction with optional tracking of the row transform U, the column
/// transform V, and V^{-1}.
template <typename Scalar>
class SmithReducer {
 public:
  SmithReducer(Matrix<Scalar> m, bool track_u, bool track_v, bool track_v_inv)
      : d_(std::move(m)), track_u_(track_u), track_v_(track_v), track_v_inv_(track_v_inv) {
    if (track_u_) u_ = Matrix<Scalar>::Identity(d_.rows(), d_.rows());
    if (track_v_) v_ = Matrix<Scalar>::Identity(d_.cols(), d_.cols());
    if (track_v_inv_) v_inv_ = Matrix<Scalar>::Identity(d_.cols(), d_.cols());
  }

  void run() {
    const Eigen::Index rows = d_.rows();
    const Eigen::Index cols = d_.cols();
    rank_ = 0;
    for (Eigen::Index t = 0; t < std::min(rows, cols); ++t) {
      Eigen::Index pi = -1, pj = -1;
      if (!min_entry(t, rows, t, cols, pi, pj)) break;
      move_to_pivot(t, pi, pj);
      for (;;) {
        clear_cross(t);
        Eigen::Index bad_i = -1;
        for (Eigen::Index j = t + 1; j < cols && bad_i < 0; ++j)
          for (Eigen::Index i = t + 1; i < rows; ++i)
            if (!is_zero(d_(i, j) % d_(t, t))) {
              bad_i = i;
              break;
            }
        if (bad_i < 0) break;
        add_row(t, bad_i, Scalar(1));
      }
      if (d_(t, t) < 0) negate_row(t);
      ++rank_;
    }
  }

  Eigen::Index rank() const { return rank_; }
  const Matrix<Scalar>& d() const { return d_; }
  Matrix<Scalar>& u() { return u_; }
  Matrix<Scalar>& v() { return v_; }
  Matrix<Scalar>& v_inv() { return v_inv_; }
  Matrix<Scalar>& d() { return d_; }

 private:
  // Smallest nonzero |entry| in rows [r0, r1) and columns [c0, c1).
  bool min_entry(Eigen::Index r0, Eigen::Index r1, Eigen::Index c0, Eigen::Index c1,
                 Eigen::Index& pi, Eigen::Index& pj) const {
    bool found = false;
    Scalar best{};
    for (Eigen::Index j = c0; j < c1; ++j)
      for (Eigen::Index i = r0; i < r1; ++i) {
        if (is_zero(d_(i, j))) continue;
        Scalar a = abs(d_(i, j));
        if (!found || a < best) {
          best = a;
          pi = i;
          pj = j;
          found = true;
          if (best == 1) return true;
        }
      }
    return found;
  }

  void move_to_pivot(Eigen::Index t, Eigen::Index i, Eigen::Index j) {
    if (i != t) swap_rows(t, i);
    if (j != t) swap_cols(t, j);
  }

  // Zero out row t and column t apart from the pivot, moving smaller remainders into the pivot.
  void clear_cross(Eigen::Index t) {
    const Eigen::Index rows = d_.rows();
    const Eigen::Index cols = d_.cols();
    for (;;) {
      bool dirty = false;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (is_zero(d_(i, t))) continue;
        Scalar q = d_(i, t) / d_(t, t);
        add_row(i, t, Scalar(-q));
        if (!is_zero(d_(i, t))) dirty = true;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (is_zero(d_(t, j))) continue;
        Scalar q = d_(t, j) / d_(t, t);
        add_col(j, t, Scalar(-q));
        if (!is_zero(d_(t, j))) dirty = true;
      }
      if (!dirty) return;
      // Remainders are strictly smaller than the pivot; promote the smallest one.
      Eigen::Index pi = t, pj = t;
      Scalar best = abs(d_(t, t));
      for (Eigen::Index i = t + 1; i < rows; ++i)
        if (!is_zero(d_(i, t)) && abs(d_(i, t)) < best) {
          best = abs(d_(i, t));
          pi = i;
          pj = t;
        }
      for (Eigen::Index j = t + 1; j < cols; ++j)
        if (!is_zero(d_(t, j)) && abs(d_(t, j)) < best) {
          best = abs(d_(t, j));
          pi = t;
          pj = j;
        }
      move_to_pivot(t, pi, pj);
    }
  }

  // row(i) += q * row(k)
  void add_row(Eigen::Index i, Eigen::Index k, const Scalar& q) {
    for (Eigen::Index j = 0; j < d_.cols(); ++j)
      if (!is_zero(d_(k, j))) d_(i, j) += q * d_(k, j);
    if (track_u_)
      for (Eigen::Index j = 0; j < u_.cols(); ++j)
        if (!is_zero(u_(k, j))) u_(i, j) += q * u_(k, j);
  }

  // col(j) += q * col(k)
  void add_col(Eigen::Index j, Eigen::Index k, const Scalar& q) {
    for (Eigen::Index i = 0; i < d_.rows(); ++i)
      if (!is_zero(d_(i, k))) d_(i, j) += q * d_(i, k);
    if (track_v_)
      for (Eigen::Index i = 0; i < v_.rows(); ++i)
        if (!is_zero(v_(i, k))) v_(i, j) += q * v_(i, k);
    if (track_v_inv_)
      for (Eigen::Index c = 0; c < v_inv_.cols(); ++c)
        if (!is_zero(v_inv_(j, c))) v_inv_(k, c) -= q * v_inv_(j, c);
  }

  void swap_rows(Eigen::Index a, Eigen::Index b) {
    d_.row(a).swap(d_.row(b));
    if (track_u_) u_.row(a).swap(u_.row(b));
  }

  void swap_cols(Eigen::Index a, Eigen::Index b) {
    d_.col(a).swap(d_.col(b));
    if (track_v_) v_.col(a).swap(v_.col(b));
    if (track_v_inv_) v_inv_.row(a).swap(v_inv_.row(b));
  }

  void negate_row(Eigen::Index t) {
    d_.row(t) = -d_.row(t);
    if (track_u_) u_.row(t) = -u_.row(t);
  }

  Matrix<Scalar> d_, u_, v_, v_inv_;
  bool track_u_, track_v_, track_v_inv_;
  Eigen::Index rank_ = 0;
};

}  // namespace detail

/// Smith normal form with unimodular transforms. The pivot at each step is a nonzero entry of
/// minimal absolute value; the output is deterministic for a given input.
template <typename Derived>
SnfResult<typename Derived::Scalar> snf(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  detail::SmithReducer<Scalar> r(m.eval(), true, true, false);
  r.run();
  return {std::move(r.u()), std::move(r.d()), std::move(r.v())};
}

/// Nonzero diagonal entries of the Smith form (units included), without computing transforms.
template <typename Derived>
std::vector<typename Derived::Scalar> elementary_divisors(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  detail::SmithReducer<Scalar> r(m.eval(), false, false, false);
  r.run();
  std::vector<Scalar> out;
  for (Eigen::Index t = 0; t < r.rank(); ++t) out.push_back(r.d()(t, t));
  return out;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  return static_cast<Eigen::Index>(elementary_divisors(m).size());
}

/// Z^rows modulo the column span of m.
FgAbelianGroup cokernel_group(const IntMatrix& m);

/// ker(d_out) / im(d_in) for one chain degree. Throws InvalidArgument on a dimension mismatch and
/// InvalidComplex when d_out * d_in != 0.
FgAbelianGroup homology(const IntMatrix& d_out, const IntMatrix& d_in);

/// L / N where the columns of `lattice` generate L and the columns of `sub` generate N <= L, all
/// in the same ambient Z^n. Throws InvalidArgument when N is not contained in L.
FgAbelianGroup lattice_quotient(const IntMatrix& lattice, const IntMatrix& sub);

/// Columns spanning the integer kernel {x : m x = 0}.
IntMatrix kernel_basis(const IntMatrix& m);

}  // namespace schur
