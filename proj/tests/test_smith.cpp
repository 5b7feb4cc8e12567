#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "oracles.hpp"
#include "schur/errors.hpp"
#include "schur/smith.hpp"

using namespace schur;
using schur::testing::Zfree;
using schur::testing::Zmod;

namespace {

bool is_zero_matrix(const IntMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

void check_snf_contract(const IntMatrix& m) {
  const auto r = snf(m);
  CHECK(r.U * m * r.V == r.D);
  CHECK(abs(schur::testing::determinant(r.U)) == 1);
  CHECK(abs(schur::testing::determinant(r.V)) == 1);
  const Eigen::Index k = std::min(m.rows(), m.cols());
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < r.D.rows(); ++i)
    for (Eigen::Index j = 0; j < r.D.cols(); ++j)
      if (i != j) CHECK(is_zero(r.D(i, j)));
  for (Eigen::Index i = 0; i < k; ++i) {
    CHECK(r.D(i, i) >= 0);
    if (!is_zero(r.D(i, i))) ++rank;
    if (i + 1 < k && !is_zero(r.D(i, i))) CHECK(r.D(i + 1, i + 1) % r.D(i, i) == 0);
    if (is_zero(r.D(i, i)) && i + 1 < k) CHECK(is_zero(r.D(i + 1, i + 1)));
  }
  Integer prod = 1;
  for (Eigen::Index i = 0; i < rank; ++i) {
    prod *= r.D(i, i);
    CHECK(prod == schur::testing::gcd_of_minors(m, i + 1));
  }
  if (rank < k) CHECK(schur::testing::gcd_of_minors(m, rank + 1) == 0);
}

}  // namespace

TEST_CASE("snf examples") {
  const auto id = snf(make_matrix({{1, 0}, {0, 1}}));
  CHECK(id.D == make_matrix({{1, 0}, {0, 1}}));

  const auto z = snf(zero_matrix(3, 2));
  CHECK(z.D == zero_matrix(3, 2));
  CHECK(z.U.rows() == 3);
  CHECK(z.V.rows() == 2);

  const IntMatrix m = make_matrix({{2, 0}, {0, 3}});
  CHECK(schur::testing::gcd_of_minors(m, 1) == 1);
  CHECK(schur::testing::gcd_of_minors(m, 2) == 6);
  CHECK(snf(m).D == make_matrix({{1, 0}, {0, 6}}));
  check_snf_contract(m);
}

TEST_CASE("snf handles empty matrices") {
  for (auto [r, c] : {std::pair{0, 0}, std::pair{0, 3}, std::pair{2, 0}}) {
    const auto res = snf(zero_matrix(r, c));
    CHECK(res.D.rows() == r);
    CHECK(res.D.cols() == c);
  }
}

TEST_CASE("snf contract on random matrices") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> dim(1, 5);
  for (int trial = 0; trial < 120; ++trial) {
    const IntMatrix m = schur::testing::random_matrix(rng, dim(rng), dim(rng), -9, 9);
    check_snf_contract(m);
  }
  // Low-rank and divisibility-heavy inputs.
  for (int trial = 0; trial < 40; ++trial) {
    const IntMatrix a = schur::testing::random_matrix(rng, 4, 2, -3, 3);
    const IntMatrix b = schur::testing::random_matrix(rng, 2, 5, -3, 3);
    check_snf_contract(IntMatrix(a * b * Integer(6)));
  }
}

TEST_CASE("snf is deterministic") {
  std::mt19937 rng(3);
  const IntMatrix m = schur::testing::random_matrix(rng, 5, 4, -9, 9);
  const auto a = snf(m), b = snf(m);
  CHECK(a.U == b.U);
  CHECK(a.V == b.V);
  CHECK(a.D == b.D);
}

TEST_CASE("snf works over 64-bit scalars") {
  Matrix<long long> m(2, 2);
  m << 2, 0, 0, 3;
  const auto r = snf(m);
  CHECK(r.D(0, 0) == 1);
  CHECK(r.D(1, 1) == 6);
  CHECK((r.U * m * r.V - r.D).isZero());
}

TEST_CASE("rank is invariant under row and column permutations") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const IntMatrix m = schur::testing::random_matrix(rng, 4, 5, -2, 2);
    std::vector<Eigen::Index> rows(4), cols(5);
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    std::shuffle(rows.begin(), rows.end(), rng);
    std::shuffle(cols.begin(), cols.end(), rng);
    IntMatrix p(4, 5);
    for (Eigen::Index i = 0; i < 4; ++i)
      for (Eigen::Index j = 0; j < 5; ++j) p(i, j) = m(rows[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)]);
    CHECK(rank(p) == rank(m));
  }
}

TEST_CASE("cokernel_group") {
  CHECK(cokernel_group(make_matrix({{5}})) == Zmod(5));
  CHECK(cokernel_group(zero_matrix(2, 0)) == Zfree(2));
  CHECK(cokernel_group(make_matrix({{2, 0}, {0, 3}})) == normalize(0, {2, 3}));
  CHECK(cokernel_group(make_matrix({{2, 0, 0}, {0, 2, 0}})) == normalize(0, {2, 2}));
}

TEST_CASE("homology") {
  CHECK(homology(zero_matrix(1, 1), zero_matrix(1, 1)) == Zfree(1));
  CHECK(homology(zero_matrix(1, 1), make_matrix({{2}})) == Zmod(2));
  CHECK(homology(make_matrix({{0, 0}}), make_matrix({{2, 0}, {0, 3}})) ==
        cokernel_group(make_matrix({{2, 0}, {0, 3}})));
  for (Eigen::Index n = 0; n < 5; ++n)
    CHECK(homology(zero_matrix(0, n), zero_matrix(n, 0)) == Zfree(static_cast<std::size_t>(n)));

  CHECK_THROWS_AS(homology(zero_matrix(1, 2), zero_matrix(3, 1)), InvalidArgument);
  CHECK_THROWS_AS(homology(make_matrix({{1}}), make_matrix({{1}})), InvalidComplex);
}

TEST_CASE("homology agrees with the rank and elementary divisor formula") {
  // d_out is built to vanish on the column span of a random d_in; the kernel-basis route must
  // give Z^(n - rank d_out - rank d_in) plus the torsion of coker d_in.
  std::mt19937 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const IntMatrix d_in = schur::testing::random_matrix(rng, 4, 3, -3, 3);
    const IntMatrix left = kernel_basis(d_in.transpose().eval());
    IntMatrix d_out = schur::testing::random_matrix(rng, 2, left.cols(), -2, 2) * left.transpose();
    REQUIRE(is_zero_matrix(d_out * d_in));
    const auto got = homology(d_out, d_in);
    const auto divs = elementary_divisors(d_in);
    std::vector<Integer> torsion;
    for (const auto& d : divs)
      if (d != 1) torsion.push_back(d);
    const auto expected_rank = static_cast<std::size_t>(4 - rank(d_out) - rank(d_in));
    CHECK(got == normalize(expected_rank, torsion));
  }
}

TEST_CASE("kernel_basis spans the kernel") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const IntMatrix m = schur::testing::random_matrix(rng, 2, 4, -4, 4);
    const IntMatrix k = kernel_basis(m);
    CHECK(is_zero_matrix(m * k));
    CHECK(k.cols() == 4 - rank(m));
    // Saturated: the kernel lattice is a direct summand, so its cokernel in Z^4 is free.
    CHECK(cokernel_group(k).is_free());
  }
}

TEST_CASE("lattice_quotient") {
  // 2Z / 6Z = Z/3.
  CHECK(lattice_quotient(make_matrix({{2}}), make_matrix({{6}})) == Zmod(3));
  // Z^2 / <(2, 0), (0, 0)> = Z + Z/2.
  CHECK(lattice_quotient(make_matrix({{1, 0}, {0, 1}}), make_matrix({{2, 0}, {0, 0}})) ==
        normalize(1, {2}));
  CHECK_THROWS_AS(lattice_quotient(make_matrix({{2}}), make_matrix({{3}})), InvalidArgument);
}
