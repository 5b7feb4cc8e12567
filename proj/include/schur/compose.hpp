#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "schur/abelian.hpp"
#include "schur/finite_group.hpp"
#include "schur/integer.hpp"

namespace schur {

/// Immutable expression tree of group constructors. Copies share structure.
class GroupExpr {
 public:
  struct Node;

  struct CyclicFinite {
    Integer order;
  };
  struct CyclicInfinite {};
  struct AbelianLeaf {
    FgAbelianGroup group;
  };
  struct FreeProduct;
  struct DirectProduct;
  struct FiniteLeaf {
    std::string name;
    std::shared_ptr<const FiniteGroup> group;
  };

  static GroupExpr cyclic(const Integer& order);
  static GroupExpr infinite_cyclic();
  static GroupExpr abelian(FgAbelianGroup group);
  static GroupExpr free_product(GroupExpr left, GroupExpr right);
  static GroupExpr direct_product(GroupExpr left, GroupExpr right);
  static GroupExpr finite(std::string name, FiniteGroup group);

  const Node& node() const { return *node_; }

 private:
  explicit GroupExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct GroupExpr::FreeProduct {
  GroupExpr left, right;
};
struct GroupExpr::DirectProduct {
  GroupExpr left, right;
};

struct GroupExpr::Node {
  std::variant<CyclicFinite, CyclicInfinite, AbelianLeaf, FreeProduct, DirectProduct, FiniteLeaf>
      value;
};

/// Parses `Z`, `Z/n`, `1`, `D4` (any `D<n>`), `Q8`, `S3`, `A4`, `table:<file>`, with `x` for the
/// direct product binding tighter than `*` for the free product; both are left-associative.
/// Finite leaves are built with the given order cap. Throws ParseError, CapacityError.
GroupExpr parse_expr(std::string_view text, std::size_t cap = kDefaultOrderCap);

std::string to_string(const GroupExpr& e);

/// Abelianization: products of any kind become direct sums; finite leaves use the bar oracle.
FgAbelianGroup abelianize_expr(const GroupExpr& e);

enum class Rule { Cyclic, FreeProduct, DirectProduct, AbelianClosedForm, BarOracle };

std::string rule_name(Rule r);

struct TraceStep {
  Rule rule;
  /// Rendering of the subexpression the rule was applied to.
  std::string subject;
  FgAbelianGroup result;
  std::string detail;
};

using DerivationTrace = std::vector<TraceStep>;

struct MultiplierResult {
  FgAbelianGroup multiplier;
  DerivationTrace trace;
};

struct ComposeOptions {
  std::size_t oracle_cap = kDefaultOrderCap;
};

/// Schur multiplier by structural recursion:
///   M(cyclic) = 0,
///   M(A * B) = M(A) + M(B),
///   M(A x B) = M(A) + M(B) + (A_ab (x) B_ab),
/// abelian leaves as iterated direct products of their canonical cyclic summands, and finite
/// leaves through the bar oracle (CapacityError above the cap). The trace lists rule firings in
/// evaluation order.
MultiplierResult schur_multiplier(const GroupExpr& e, const ComposeOptions& options = {});

/// Multiplication table of an expression denoting a finite group: finite cyclics, finite abelian
/// leaves and finite leaves joined by `x`. Throws InvalidArgument for free products or infinite
/// factors and CapacityError above the cap.
FiniteGroup finite_group_of(const GroupExpr& e, std::size_t cap = kDefaultOrderCap);

}  // namespace schur
