#pragma once

#include <cstddef>

#include "schur/abelian.hpp"
#include "schur/finite_group.hpp"
#include "schur/integer.hpp"
#include "schur/sparse_smith.hpp"

namespace schur {

// Normalized bar complex of a finite group G with trivial Z coefficients. Cells are tuples of
// non-identity elements; with n = |G| the non-identity elements are indexed 0..n-2 in increasing
// element order, so C_1 has rank n-1, C_2 rank (n-1)^2 and C_3 rank (n-1)^3. The cell
// [g|h] has index pos(g) * (n-1) + pos(h), and [g|h|k] has index (pos(g) * (n-1) + pos(h)) *
// (n-1) + pos(k).

/// d_2[g|h] = [h] - [gh] + [g], with [e] = 0.
SparseMatrix<long long> bar_boundary2(const FiniteGroup& g);

/// d_3[g|h|k] = [h|k] - [gh|k] + [g|hk] - [g|h], with cells containing e set to 0.
SparseMatrix<long long> bar_boundary3(const FiniteGroup& g);

/// H_1(G; Z) = coker d_2, which is the abelianization of G.
FgAbelianGroup bar_h1(const FiniteGroup& g);

/// H_2(G; Z) = ker d_2 / im d_3, the Schur multiplier. Throws CapacityError when |G| > cap and
/// InvalidComplex if d_2 d_3 != 0.
FgAbelianGroup bar_h2(const FiniteGroup& g, std::size_t cap = kDefaultOrderCap);

/// Dense exact copy of a sparse matrix.
IntMatrix to_dense(const SparseMatrix<long long>& m);

}  // namespace schur
