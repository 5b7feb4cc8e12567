#include "schur/abelian.hpp"

#include <algorithm>

#include "schur/errors.hpp"

namespace schur {

FgAbelianGroup FgAbelianGroup::free(std::size_t rank) { return normalize(rank, {}); }

FgAbelianGroup FgAbelianGroup::cyclic(const Integer& order) {
  const Integer orders[] = {order};
  return normalize(0, orders);
}

Integer FgAbelianGroup::order() const {
  if (free_rank_ != 0) throw InvalidArgument("order of an infinite abelian group");
  Integer n = 1;
  for (const auto& d : factors_) n *= d;
  return n;
}

FgAbelianGroup normalize(std::size_t free_rank, std::span<const Integer> cyclic_orders) {
  std::vector<Integer> diag;
  diag.reserve(cyclic_orders.size());
  for (const auto& n : cyclic_orders) {
    if (sgn(n) <= 0) throw InvalidArgument("cyclic order must be positive, got " + to_string(n));
    if (n != 1) diag.push_back(n);
  }

  // Smith reduction of a diagonal matrix: the 2x2 step diag(a, b) -> diag(gcd, lcm) applied to
  // every pair leaves each entry dividing all later ones.
  for (std::size_t i = 0; i < diag.size(); ++i) {
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      if (diag[j] % diag[i] == 0) continue;
      Integer g = gcd(diag[i], diag[j]);
      Integer l = lcm(diag[i], diag[j]);
      diag[i] = std::move(g);
      diag[j] = std::move(l);
    }
  }
  std::erase_if(diag, [](const Integer& d) { return d == 1; });
  return FgAbelianGroup(free_rank, std::move(diag));
}

FgAbelianGroup normalize(std::size_t free_rank, std::initializer_list<long> cyclic_orders) {
  std::vector<Integer> orders;
  for (long n : cyclic_orders) orders.emplace_back(n);
  return normalize(free_rank, orders);
}

FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  std::vector<Integer> orders = a.invariant_factors();
  orders.insert(orders.end(), b.invariant_factors().begin(), b.invariant_factors().end());
  return normalize(a.free_rank() + b.free_rank(), orders);
}

FgAbelianGroup tensor(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  // Z (x) Z = Z, Z (x) Z/n = Z/n, Z/m (x) Z/n = Z/gcd(m, n), bilinear over the summands.
  std::vector<Integer> orders;
  for (std::size_t i = 0; i < a.free_rank(); ++i)
    orders.insert(orders.end(), b.invariant_factors().begin(), b.invariant_factors().end());
  for (std::size_t i = 0; i < b.free_rank(); ++i)
    orders.insert(orders.end(), a.invariant_factors().begin(), a.invariant_factors().end());
  for (const auto& m : a.invariant_factors())
    for (const auto& n : b.invariant_factors()) orders.push_back(gcd(m, n));
  return normalize(a.free_rank() * b.free_rank(), orders);
}

FgAbelianGroup tor(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  std::vector<Integer> orders;
  for (const auto& m : a.invariant_factors())
    for (const auto& n : b.invariant_factors()) orders.push_back(gcd(m, n));
  return normalize(0, orders);
}

FgAbelianGroup torsion(const FgAbelianGroup& a) { return normalize(0, a.invariant_factors()); }

std::size_t min_generators(const FgAbelianGroup& a) {
  return a.free_rank() + a.invariant_factors().size();
}

std::vector<Integer> canonical_summands(const FgAbelianGroup& a) {
  std::vector<Integer> out(a.free_rank(), Integer(0));
  out.insert(out.end(), a.invariant_factors().begin(), a.invariant_factors().end());
  return out;
}

std::string to_string(const FgAbelianGroup& a) {
  if (a.is_trivial()) return "0";
  std::string out;
  auto append = [&out](const std::string& part) {
    if (!out.empty()) out += " + ";
    out += part;
  };
  if (a.free_rank() == 1) append("Z");
  if (a.free_rank() > 1) append("Z^" + std::to_string(a.free_rank()));
  for (const auto& d : a.invariant_factors()) append("Z/" + to_string(d));
  return out;
}

}  // namespace schur
