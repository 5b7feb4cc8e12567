#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "schur/integer.hpp"

namespace schur {

/// A finitely generated abelian group Z^r + Z/d_1 + ... + Z/d_k in invariant-factor form.
///
/// Every invariant factor is at least 2 and d_1 | d_2 | ... | d_k. Instances are only produced
/// in canonical form, so two groups are isomorphic exactly when they compare equal.
class FgAbelianGroup {
 public:
  /// The trivial group.
  FgAbelianGroup() = default;

  static FgAbelianGroup free(std::size_t rank);
  /// Z/n for n >= 1 (Z/1 is trivial).
  static FgAbelianGroup cyclic(const Integer& order);

  std::size_t free_rank() const noexcept { return free_rank_; }
  const std::vector<Integer>& invariant_factors() const noexcept { return factors_; }

  bool is_trivial() const noexcept { return free_rank_ == 0 && factors_.empty(); }
  bool is_free() const noexcept { return factors_.empty(); }
  bool is_finite() const noexcept { return free_rank_ == 0; }

  /// Order of a finite group. Throws InvalidArgument when the free rank is positive.
  Integer order() const;

  friend bool operator==(const FgAbelianGroup&, const FgAbelianGroup&) = default;

 private:
  friend FgAbelianGroup normalize(std::size_t, std::span<const Integer>);

  FgAbelianGroup(std::size_t rank, std::vector<Integer> factors)
      : free_rank_(rank), factors_(std::move(factors)) {}

  std::size_t free_rank_ = 0;
  std::vector<Integer> factors_;
};

/// Canonical form of Z^free_rank + sum_i Z/orders[i]. Orders of 1 vanish; orders <= 0 throw
/// InvalidArgument.
FgAbelianGroup normalize(std::size_t free_rank, std::span<const Integer> cyclic_orders);
FgAbelianGroup normalize(std::size_t free_rank, std::initializer_list<long> cyclic_orders);

FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b);
FgAbelianGroup tensor(const FgAbelianGroup& a, const FgAbelianGroup& b);
FgAbelianGroup tor(const FgAbelianGroup& a, const FgAbelianGroup& b);

/// Torsion subgroup.
FgAbelianGroup torsion(const FgAbelianGroup& a);

/// Minimal number of generators d(A).
std::size_t min_generators(const FgAbelianGroup& a);

/// Cyclic orders of the canonical summands: free summands (order 0) first, then the
/// invariant factors in ascending order.
std::vector<Integer> canonical_summands(const FgAbelianGroup& a);

/// "0", or summands such as "Z^2 + Z/2 + Z/6" joined by " + ".
std::string to_string(const FgAbelianGroup& a);

inline std::ostream& operator<<(std::ostream& os, const FgAbelianGroup& a) {
  return os << to_string(a);
}

}  // namespace schur
