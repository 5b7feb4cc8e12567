#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schur/abelian.hpp"
#include "schur/compose.hpp"
#include "schur/integer.hpp"

namespace schur {

/// A direct sum A_1 + ... + A_k of canonical groups with a fixed generator order: summand by
/// summand, free generators first, then invariant-factor generators ascending.
class GeneratedGroup {
 public:
  GeneratedGroup() = default;
  GeneratedGroup(const FgAbelianGroup& group);  // NOLINT(google-explicit-constructor)
  explicit GeneratedGroup(const std::vector<FgAbelianGroup>& summands);

  /// Order of each generator, 0 for free generators.
  const std::vector<Integer>& orders() const noexcept { return orders_; }
  Eigen::Index generator_count() const noexcept { return static_cast<Eigen::Index>(orders_.size()); }
  FgAbelianGroup canonical() const;
  /// Relation lattice: one column d_j e_j per torsion generator j.
  IntMatrix relations() const;

  friend bool operator==(const GeneratedGroup&, const GeneratedGroup&) = default;

 private:
  std::vector<Integer> orders_;
};

/// Homomorphism given on generators: column j is the image of source generator j.
struct AbGroupMap {
  GeneratedGroup source;
  GeneratedGroup target;
  IntMatrix matrix;
};

/// Whether every torsion generator of order d has d * image in the target's relation lattice.
/// Throws InvalidArgument if the matrix shape does not match the generator counts.
bool check_map(const AbGroupMap& f);

/// ker f, from {x : F x in relations(target)} modulo relations(source). Throws IllDefinedMap.
FgAbelianGroup kernel_of_map(const AbGroupMap& f);

/// target / im f. Throws IllDefinedMap.
FgAbelianGroup cokernel_of_map(const AbGroupMap& f);

/// Low-degree Mayer-Vietoris data for G = G1 *_H G2:
///   M(H) --alpha--> M(G1) + M(G2) --> M(G) --> H_ab --beta--> G1_ab + G2_ab.
struct AmalgamProblem {
  FgAbelianGroup m_h, m_g1, m_g2;
  FgAbelianGroup h_ab, g1_ab, g2_ab;
  /// Matrix of M(H) -> M(G1) + M(G2). When absent it is taken to be zero if M(H) is trivial,
  /// and treated as unknown otherwise.
  std::optional<IntMatrix> alpha;
  /// Matrix of H_ab -> G1_ab + G2_ab.
  IntMatrix beta;
};

struct AmalgamSolution {
  /// coker(alpha), the image of M(G1) + M(G2) in M(G).
  FgAbelianGroup sub;
  /// ker(beta), the image of M(G) in H_ab.
  FgAbelianGroup quot;
  /// False when alpha was unknown: `sub` is then M(G1) + M(G2), of which the true image is a
  /// quotient.
  bool sub_exact = true;
  bool determined = false;
  std::optional<FgAbelianGroup> value;
  std::vector<std::string> notes;
};

/// Solves 0 -> coker(alpha) -> M(G) -> ker(beta) -> 0 as far as it determines M(G): when
/// ker(beta) is free the sequence splits, and when coker(alpha) is trivial M(G) = ker(beta).
/// Throws IllDefinedMap for ill-defined maps or inconsistent shapes.
AmalgamSolution solve(const AmalgamProblem& p);

AbGroupMap alpha_map(const AmalgamProblem& p);
AbGroupMap beta_map(const AmalgamProblem& p);

/// Problem for H, G1, G2 given as expressions. `h_into_g1` and `h_into_g2` give the images of
/// the canonical generators of H_ab in the canonical generators of G1_ab and G2_ab; alpha is
/// left unset.
AmalgamProblem make_amalgam_problem(const GroupExpr& h, const GroupExpr& g1, const GroupExpr& g2,
                                    const IntMatrix& h_into_g1, const IntMatrix& h_into_g2,
                                    const ComposeOptions& options = {});

}  // namespace schur
