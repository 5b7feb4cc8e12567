#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace schur {

/// Default bound on the order of groups handed to the bar-resolution oracle.
inline constexpr std::size_t kDefaultOrderCap = 24;

using GroupTable = Eigen::Matrix<std::int32_t, Eigen::Dynamic, Eigen::Dynamic>;

/// A finite group given by its multiplication table; row g, column h holds g * h.
///
/// Construction validates that the table is a Latin square with a two-sided identity and that
/// the product is associative.
class FiniteGroup {
 public:
  explicit FiniteGroup(GroupTable table);

  std::size_t order() const noexcept { return static_cast<std::size_t>(table_.rows()); }
  std::int32_t identity() const noexcept { return identity_; }
  std::int32_t multiply(std::int32_t a, std::int32_t b) const { return table_(a, b); }
  std::int32_t inverse(std::int32_t a) const { return inverse_[static_cast<std::size_t>(a)]; }
  const GroupTable& table() const noexcept { return table_; }

  bool is_abelian() const;

 private:
  GroupTable table_;
  std::int32_t identity_ = 0;
  std::vector<std::int32_t> inverse_;
};

/// A permutation of {0, ..., n-1} by images.
using Permutation = std::vector<std::int32_t>;

/// Parses cycle notation with 1-based points, e.g. "(1 2)(3 4 5)". `degree` pads the result; 0
/// means the largest point mentioned.
Permutation parse_permutation(std::string_view cycles, std::size_t degree = 0);

/// Every constructor throws CapacityError when the order would exceed `cap`.
FiniteGroup cyclic_group(std::size_t n, std::size_t cap = kDefaultOrderCap);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                           std::size_t cap = kDefaultOrderCap);
/// Symmetries of the regular n-gon, order 2n.
FiniteGroup dihedral_group(std::size_t n, std::size_t cap = kDefaultOrderCap);
FiniteGroup quaternion_group();
FiniteGroup symmetric3_group();
FiniteGroup alternating4_group();
/// Closure of the generating permutations under composition, (p q)(x) = p(q(x)).
FiniteGroup from_permutations(const std::vector<Permutation>& generators,
                              std::size_t cap = kDefaultOrderCap);
/// Table text: the order n on the first line, then n rows of n 0-based indices.
FiniteGroup parse_table(std::string_view text, std::size_t cap = kDefaultOrderCap);
FiniteGroup load_table(const std::string& path, std::size_t cap = kDefaultOrderCap);
std::string format_table(const FiniteGroup& g);

/// The same group with element i renamed to relabel[i].
FiniteGroup relabel(const FiniteGroup& g, const std::vector<std::int32_t>& relabel);

}  // namespace schur
