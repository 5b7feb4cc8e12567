#include "schur/amalgam.hpp"

#include "schur/errors.hpp"
#include "schur/smith.hpp"

namespace schur {

GeneratedGroup::GeneratedGroup(const FgAbelianGroup& group) : orders_(canonical_summands(group)) {}

GeneratedGroup::GeneratedGroup(const std::vector<FgAbelianGroup>& summands) {
  for (const auto& s : summands) {
    auto o = canonical_summands(s);
    orders_.insert(orders_.end(), o.begin(), o.end());
  }
}

FgAbelianGroup GeneratedGroup::canonical() const {
  std::size_t rank = 0;
  std::vector<Integer> torsion;
  for (const auto& o : orders_) {
    if (sgn(o) == 0)
      ++rank;
    else
      torsion.push_back(o);
  }
  return normalize(rank, torsion);
}

IntMatrix GeneratedGroup::relations() const {
  Eigen::Index torsion = 0;
  for (const auto& o : orders_) torsion += sgn(o) != 0;
  IntMatrix r = zero_matrix(generator_count(), torsion);
  Eigen::Index c = 0;
  for (Eigen::Index i = 0; i < generator_count(); ++i)
    if (sgn(orders_[static_cast<std::size_t>(i)]) != 0) r(i, c++) = orders_[static_cast<std::size_t>(i)];
  return r;
}

bool check_map(const AbGroupMap& f) {
  if (f.matrix.rows() != f.target.generator_count() || f.matrix.cols() != f.source.generator_count())
    throw InvalidArgument("map matrix is " + std::to_string(f.matrix.rows()) + "x" +
                          std::to_string(f.matrix.cols()) + ", expected " +
                          std::to_string(f.target.generator_count()) + "x" +
                          std::to_string(f.source.generator_count()));
  for (Eigen::Index j = 0; j < f.matrix.cols(); ++j) {
    const Integer& d = f.source.orders()[static_cast<std::size_t>(j)];
    if (sgn(d) == 0) continue;
    for (Eigen::Index i = 0; i < f.matrix.rows(); ++i) {
      const Integer scaled = d * f.matrix(i, j);
      const Integer& o = f.target.orders()[static_cast<std::size_t>(i)];
      if (sgn(o) == 0 ? !is_zero(scaled) : !is_zero(scaled % o)) return false;
    }
  }
  return true;
}

namespace {

void require_well_defined(const AbGroupMap& f, const char* what) {
  if (!check_map(f)) throw IllDefinedMap(std::string(what) + ": map is not well defined");
}

}  // namespace

FgAbelianGroup kernel_of_map(const AbGroupMap& f) {
  require_well_defined(f, "kernel_of_map");
  const Eigen::Index s = f.source.generator_count();
  const IntMatrix rel_t = f.target.relations();
  const IntMatrix combined = hstack<Integer>(f.matrix, -rel_t);
  const IntMatrix solutions = kernel_basis(combined).topRows(s);
  return lattice_quotient(solutions, f.source.relations());
}

FgAbelianGroup cokernel_of_map(const AbGroupMap& f) {
  require_well_defined(f, "cokernel_of_map");
  const IntMatrix rel_t = f.target.relations();
  return cokernel_group(hstack<Integer>(f.matrix, rel_t));
}

AbGroupMap alpha_map(const AmalgamProblem& p) {
  AbGroupMap f{GeneratedGroup(p.m_h), GeneratedGroup({p.m_g1, p.m_g2}), {}};
  f.matrix = p.alpha ? *p.alpha : zero_matrix(f.target.generator_count(), f.source.generator_count());
  return f;
}

AbGroupMap beta_map(const AmalgamProblem& p) {
  return {GeneratedGroup(p.h_ab), GeneratedGroup({p.g1_ab, p.g2_ab}), p.beta};
}

AmalgamSolution solve(const AmalgamProblem& p) {
  auto checked = [](const AbGroupMap& f, const char* name) {
    if (f.matrix.rows() != f.target.generator_count() || f.matrix.cols() != f.source.generator_count())
      throw IllDefinedMap(std::string(name) + " matrix is " + std::to_string(f.matrix.rows()) + "x" +
                          std::to_string(f.matrix.cols()) + ", expected " +
                          std::to_string(f.target.generator_count()) + "x" +
                          std::to_string(f.source.generator_count()));
    if (!check_map(f)) throw IllDefinedMap(std::string(name) + " is not a well-defined homomorphism");
    return f;
  };

  AmalgamSolution s;
  const AbGroupMap beta = checked(beta_map(p), "beta");
  s.quot = kernel_of_map(beta);
  const FgAbelianGroup factors = direct_sum(p.m_g1, p.m_g2);

  s.notes.push_back("exactness gives 0 -> coker(alpha) -> M(G) -> ker(beta) -> 0");
  if (p.alpha || p.m_h.is_trivial()) {
    s.sub = cokernel_of_map(checked(alpha_map(p), "alpha"));
  } else {
    s.sub = factors;
    s.sub_exact = false;
    s.notes.push_back("M(H) = " + to_string(p.m_h) +
                      " but alpha is unknown; sub is M(G1) + M(G2), of which the true image is a "
                      "quotient");
  }
  if (p.m_h.is_trivial())
    s.notes.push_back("M(H) is trivial, so M(G1) + M(G2) = " + to_string(factors) +
                      " embeds in M(G)");
  if (p.m_h.is_trivial() && p.h_ab.is_trivial())
    s.notes.push_back("H is perfect with trivial multiplier, so M(G) = M(G1) + M(G2)");

  if (s.sub_exact && (s.quot.is_free() || s.sub.is_trivial())) {
    s.determined = true;
    s.value = direct_sum(s.sub, s.quot);
    s.notes.push_back(s.quot.is_free() ? "ker(beta) is free, so the sequence splits"
                                       : "coker(alpha) is trivial, so M(G) = ker(beta)");
  } else {
    s.notes.push_back("extension not determined: M(G) is an extension of " + to_string(s.quot) +
                      " by " + to_string(s.sub) + " with at most " +
                      std::to_string(min_generators(s.sub) + min_generators(s.quot)) +
                      " generators");
  }
  return s;
}

AmalgamProblem make_amalgam_problem(const GroupExpr& h, const GroupExpr& g1, const GroupExpr& g2,
                                    const IntMatrix& h_into_g1, const IntMatrix& h_into_g2,
                                    const ComposeOptions& options) {
  AmalgamProblem p;
  p.m_h = schur_multiplier(h, options).multiplier;
  p.m_g1 = schur_multiplier(g1, options).multiplier;
  p.m_g2 = schur_multiplier(g2, options).multiplier;
  p.h_ab = abelianize_expr(h);
  p.g1_ab = abelianize_expr(g1);
  p.g2_ab = abelianize_expr(g2);
  if (h_into_g1.cols() != h_into_g2.cols())
    throw IllDefinedMap("inclusion matrices disagree on the number of generators of H_ab");
  p.beta = vstack<Integer>(h_into_g1, h_into_g2);
  return p;
}

}  // namespace schur
