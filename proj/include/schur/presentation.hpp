#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "schur/abelian.hpp"
#include "schur/integer.hpp"

namespace schur {

/// One syllable x_i^e of a free-group word, e != 0.
struct Letter {
  std::size_t generator;
  long long exponent;
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Free reduction: merges adjacent syllables on the same generator and drops zero exponents.
Word reduce(const Word& w);
Word inverse(const Word& w);

/// A finite presentation <generators | relators>.
///
/// `aspherical` is an assertion made by the caller that the presentation 2-complex has trivial
/// second homotopy group; it is never inferred. Under that assertion the second homology of the
/// complex is the Schur multiplier; otherwise it only bounds it from above.
struct Presentation {
  std::vector<std::string> generator_names;
  std::vector<Word> relators;
  bool aspherical = false;

  std::size_t generator_count() const { return generator_names.size(); }
};

/// Parses `<a, b | a^2, b^3, (a b)^2, [a, b]>`.
///
/// names are identifiers [A-Za-z][A-Za-z0-9_]*; a relator is a sequence of terms separated by
/// whitespace, where a term is an atom optionally followed by ^n (n may be negative) and an atom
/// is a generator, a parenthesised word, or a commutator [u, v] = u v u^-1 v^-1. Relators are
/// stored freely reduced. Throws ParseError.
Presentation parse_presentation(std::string_view text, bool aspherical = false);

std::string to_string(const Presentation& p);
std::string to_string(const Word& w, const std::vector<std::string>& names);

/// Abelianized boundary of the presentation complex: entry (i, j) is the exponent sum of
/// generator i in relator j.
IntMatrix exponent_matrix(const Presentation& p);

/// H_1 of the presentation complex, i.e. the abelianization of the group.
FgAbelianGroup abelianization(const Presentation& p);

struct MultiplierBounds {
  /// H_2 of the presentation complex (free abelian, the kernel of the boundary map).
  FgAbelianGroup h2_complex;
  /// Number of relators, which bounds d(M(G)).
  std::size_t relator_bound = 0;
  /// Rank of h2_complex; M(G) is a quotient of h2_complex, so d(M(G)) <= rank_bound.
  std::size_t rank_bound = 0;
  /// True when the presentation is flagged aspherical, in which case h2_complex = M(G).
  bool exact = false;
};

MultiplierBounds multiplier_bounds(const Presentation& p);

/// Standard presentations of small groups.
namespace presentations {
/// <a | a^n>
Presentation cyclic(long n);
/// <x1..xn | [xi, xj] for i < j>, flagged aspherical (the n-torus).
Presentation free_abelian(std::size_t n);
/// <r, s | r^n, s^2, (s r)^2>, the symmetry group of the regular n-gon.
Presentation dihedral(long n);
/// <i, j | i^2 j^-2, j^-1 i j i>
Presentation quaternion8();
/// <a, b | a^3, b^2, (a b)^2>
Presentation symmetric3();
/// <a, b | a^m, b^n, [a, b]>
Presentation cyclic_product(long m, long n);
}  // namespace presentations

}  // namespace schur
