#include "schur/smith.hpp"

#include "schur/errors.hpp"

namespace schur {

FgAbelianGroup cokernel_group(const IntMatrix& m) {
  const auto divisors = elementary_divisors(m);
  const auto rank = static_cast<Eigen::Index>(divisors.size());
  return normalize(static_cast<std::size_t>(m.rows() - rank), divisors);
}

IntMatrix kernel_basis(const IntMatrix& m) {
  detail::SmithReducer<Integer> r(m, false, true, false);
  r.run();
  return r.v().rightCols(m.cols() - r.rank());
}

FgAbelianGroup homology(const IntMatrix& d_out, const IntMatrix& d_in) {
  if (d_out.cols() != d_in.rows())
    throw InvalidArgument("homology: d_out has " + std::to_string(d_out.cols()) +
                          " columns but d_in has " + std::to_string(d_in.rows()) + " rows");
  if (d_out.rows() > 0 && d_in.cols() > 0) {
    const IntMatrix composite = d_out * d_in;
    for (Eigen::Index j = 0; j < composite.cols(); ++j)
      for (Eigen::Index i = 0; i < composite.rows(); ++i)
        if (!is_zero(composite(i, j))) throw InvalidComplex("homology: d_out * d_in is not zero");
  }

  // Kernel basis = trailing columns of V in U d_out V = D; coordinates of im(d_in) in that basis
  // are the trailing rows of V^{-1} d_in.
  detail::SmithReducer<Integer> r(d_out, false, false, true);
  r.run();
  const Eigen::Index n = d_out.cols();
  const Eigen::Index nullity = n - r.rank();
  const IntMatrix coords = r.v_inv() * d_in;
  for (Eigen::Index j = 0; j < coords.cols(); ++j)
    for (Eigen::Index i = 0; i < r.rank(); ++i)
      if (!is_zero(coords(i, j))) throw InvalidComplex("homology: boundary leaves the kernel");
  return cokernel_group(coords.bottomRows(nullity));
}

FgAbelianGroup lattice_quotient(const IntMatrix& lattice, const IntMatrix& sub) {
  if (lattice.rows() != sub.rows())
    throw InvalidArgument("lattice_quotient: ambient dimensions differ");
  // U L V = D; a basis of L is the first r columns of U^{-1} D, so coordinates of N in it are
  // diag(d)^{-1} (U N) restricted to the first r rows.
  detail::SmithReducer<Integer> r(lattice, true, false, false);
  r.run();
  const Eigen::Index rk = r.rank();
  IntMatrix transformed = r.u() * sub;
  for (Eigen::Index j = 0; j < transformed.cols(); ++j) {
    for (Eigen::Index i = 0; i < transformed.rows(); ++i) {
      if (i >= rk) {
        if (!is_zero(transformed(i, j)))
          throw InvalidArgument("lattice_quotient: sublattice not contained in lattice");
        continue;
      }
      const Integer& d = r.d()(i, i);
      if (!is_zero(transformed(i, j) % d))
        throw InvalidArgument("lattice_quotient: sublattice not contained in lattice");
      transformed(i, j) /= d;
    }
  }
  return cokernel_group(transformed.topRows(rk));
}

}  // namespace schur
