#include "schur/bar_oracle.hpp"

#include <vector>

#include "schur/errors.hpp"
#include "schur/smith.hpp"

namespace schur {

namespace {

class CellIndex {
 public:
  explicit CellIndex(const FiniteGroup& g) : identity_(g.identity()), m_(static_cast<long>(g.order()) - 1) {}

  long size() const { return m_; }
  bool degenerate(std::int32_t x) const { return x == identity_; }
  long pos(std::int32_t x) const { return x < identity_ ? x : x - 1; }
  long cell(std::int32_t a) const { return pos(a); }
  long cell(std::int32_t a, std::int32_t b) const { return pos(a) * m_ + pos(b); }
  long cell(std::int32_t a, std::int32_t b, std::int32_t c) const { return cell(a, b) * m_ + pos(c); }

 private:
  std::int32_t identity_;
  long m_;
};

}  // namespace

SparseMatrix<long long> bar_boundary2(const FiniteGroup& g) {
  const CellIndex idx(g);
  const auto n = static_cast<std::int32_t>(g.order());
  std::vector<Eigen::Triplet<long long>> entries;
  for (std::int32_t a = 0; a < n; ++a) {
    if (idx.degenerate(a)) continue;
    for (std::int32_t b = 0; b < n; ++b) {
      if (idx.degenerate(b)) continue;
      const long col = idx.cell(a, b);
      const std::int32_t ab = g.multiply(a, b);
      entries.emplace_back(idx.cell(b), col, 1);
      if (!idx.degenerate(ab)) entries.emplace_back(idx.cell(ab), col, -1);
      entries.emplace_back(idx.cell(a), col, 1);
    }
  }
  SparseMatrix<long long> d(idx.size(), idx.size() * idx.size());
  d.setFromTriplets(entries.begin(), entries.end());
  d.prune(0LL);
  return d;
}

SparseMatrix<long long> bar_boundary3(const FiniteGroup& g) {
  const CellIndex idx(g);
  const auto n = static_cast<std::int32_t>(g.order());
  std::vector<Eigen::Triplet<long long>> entries;
  entries.reserve(static_cast<std::size_t>(4 * idx.size() * idx.size() * idx.size()));
  for (std::int32_t a = 0; a < n; ++a) {
    if (idx.degenerate(a)) continue;
    for (std::int32_t b = 0; b < n; ++b) {
      if (idx.degenerate(b)) continue;
      const std::int32_t ab = g.multiply(a, b);
      for (std::int32_t c = 0; c < n; ++c) {
        if (idx.degenerate(c)) continue;
        const long col = idx.cell(a, b, c);
        const std::int32_t bc = g.multiply(b, c);
        entries.emplace_back(idx.cell(b, c), col, 1);
        if (!idx.degenerate(ab)) entries.emplace_back(idx.cell(ab, c), col, -1);
        if (!idx.degenerate(bc)) entries.emplace_back(idx.cell(a, bc), col, 1);
        entries.emplace_back(idx.cell(a, b), col, -1);
      }
    }
  }
  SparseMatrix<long long> d(idx.size() * idx.size(), idx.size() * idx.size() * idx.size());
  d.setFromTriplets(entries.begin(), entries.end());
  d.prune(0LL);
  return d;
}

IntMatrix to_dense(const SparseMatrix<long long>& m) {
  IntMatrix out = zero_matrix(m.rows(), m.cols());
  for (Eigen::Index j = 0; j < m.outerSize(); ++j)
    for (SparseMatrix<long long>::InnerIterator it(m, j); it; ++it)
      out(it.row(), it.col()) = from_int64(it.value());
  return out;
}

FgAbelianGroup bar_h1(const FiniteGroup& g) {
  // d_1 = 0 in the bar complex with trivial coefficients.
  return cokernel_group(to_dense(bar_boundary2(g)));
}

FgAbelianGroup bar_h2(const FiniteGroup& g, std::size_t cap) {
  if (g.order() > cap)
    throw CapacityError("bar oracle: group order " + std::to_string(g.order()) +
                        " exceeds the cap of " + std::to_string(cap));
  const SparseMatrix<long long> d2 = bar_boundary2(g);
  const SparseMatrix<long long> d3 = bar_boundary3(g);
  const SparseMatrix<long long> composite = (d2 * d3).pruned(0LL);
  if (composite.nonZeros() != 0) throw InvalidComplex("bar oracle: d2 * d3 != 0");

  // ker d_2 is a direct summand of C_2, so H_2 = Z^(c_2 - rank d_2 - rank d_3) plus the
  // non-unit elementary divisors of d_3.
  const DivisorSummary s2 = sparse_elementary_divisors(d2);
  const DivisorSummary s3 = sparse_elementary_divisors(d3);
  const auto free_rank = static_cast<std::size_t>(d2.cols() - s2.rank - s3.rank);
  return normalize(free_rank, s3.nonunit);
}

}  // namespace schur
