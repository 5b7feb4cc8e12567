#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <Eigen/Core>
#include <gmpxx.h>

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpz_class;
  using Nested = mpz_class;
  using Literal = mpz_class;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace schur {

/// Arbitrary-precision integer used for every exact computation.
using Integer = mpz_class;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Dense exact integer matrix (boundary maps, exponent matrices, homomorphisms).
using IntMatrix = Matrix<Integer>;

inline Integer abs(const Integer& x) { return ::abs(x); }
inline long long abs(long long x) { return x < 0 ? -x : x; }

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool is_zero(long long x) { return x == 0; }

/// Value as a signed 64-bit integer when it fits.
inline std::optional<long long> to_int64(const Integer& x) {
  if (!x.fits_slong_p()) return std::nullopt;
  return x.get_si();
}

inline Integer from_int64(long long v) {
  Integer out;
  mpz_set_si(out.get_mpz_t(), static_cast<long>(v));
  return out;
}

inline std::string to_string(const Integer& x) { return x.get_str(); }

/// Builds an IntMatrix from a nested initializer list of small integers.
inline IntMatrix make_matrix(std::initializer_list<std::initializer_list<long long>> rows) {
  const Eigen::Index r = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index c = r == 0 ? 0 : static_cast<Eigen::Index>(rows.begin()->size());
  IntMatrix m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long long v : row) m(i, j++) = Integer(static_cast<long>(v));
    ++i;
  }
  return m;
}

inline IntMatrix zero_matrix(Eigen::Index rows, Eigen::Index cols) {
  return IntMatrix::Constant(rows, cols, Integer(0));
}

/// [a | b]; both operands must have the same number of rows.
template <typename Scalar>
Matrix<Scalar> hstack(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  Matrix<Scalar> out(a.rows(), a.cols() + b.cols());
  out.leftCols(a.cols()) = a;
  out.rightCols(b.cols()) = b;
  return out;
}

/// [a ; b]; both operands must have the same number of columns.
template <typename Scalar>
Matrix<Scalar> vstack(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  Matrix<Scalar> out(a.rows() + b.rows(), a.cols());
  out.topRows(a.rows()) = a;
  out.bottomRows(b.rows()) = b;
  return out;
}

}  // namespace schur
