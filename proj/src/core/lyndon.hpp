#pragma once

#include <string>
#include <utility>
#include <vector>

#include "core/ints.hpp"
#include "core/series.hpp"
#include "core/word.hpp"

namespace ian {

// A basis element of the free Lie ring is a Lyndon word over {1..rank};
// its bracketing is recovered canonically through the standard
// factorization, so the index sequence alone identifies the tree.
using Foliage = std::vector<int>;

// All Lyndon words of the exact length over {1..rank}, lex ordered (Duval).
std::vector<Foliage> lyndon_words(int rank, int length);

// Rank of the degree-c component: (1/c) sum_{d|c} mobius(d) n^{c/d}.
Int witt_rank(int rank, int degree);

// Cached, lex-ordered basis of the degree component. The reference stays
// valid for the process lifetime.
const std::vector<Foliage>& lyndon_basis(int rank, int degree);

// Split point of the standard factorization: the start of the lex-least
// proper suffix. Requires length >= 2.
size_t standard_split(const Foliage& w);

// "[x1,[x1,x2]]" style rendering of the canonical bracketing.
std::string lyndon_tree_str(const Foliage& w);

// Group-commutator realization of the canonical bracketing.
Word lyndon_tree_word(int rank, const Foliage& w);

// Integer coordinate vector over lyndon_basis(rank, degree).
class LieElement {
 public:
  LieElement() = default;
  LieElement(int rank, int degree);  // zero
  LieElement(int rank, int degree, std::vector<Int> coords);

  static LieElement basis_element(int rank, const Foliage& w);

  int rank() const { return rank_; }
  int degree() const { return degree_; }
  const std::vector<Int>& coords() const { return coords_; }
  const Int& coord(size_t i) const { return coords_[i]; }

  bool is_zero() const;

  LieElement operator+(const LieElement& rhs) const;
  LieElement operator-(const LieElement& rhs) const;
  LieElement operator-() const;
  LieElement scaled(const Int& k) const;
  friend bool operator==(const LieElement&, const LieElement&) = default;

  std::string str() const;

 private:
  int rank_ = 0;
  int degree_ = 0;
  std::vector<Int> coords_;
};

// Bilinear bracket, collected into the Lyndon basis by Jacobi rewriting.
// Memoized per basis pair.
LieElement bracket(const LieElement& a, const LieElement& b);

// Associative expansion of the canonical bracketing, [u,v] -> uv - vu.
Series lie_to_series(const LieElement& v, int truncation);

// Dynkin-Specht-Wever projection of a homogeneous associative component:
// left-normed bracketing theta applied monomial-by-monomial; the input is a
// Lie element iff theta fixes it up to the factor `degree`, in which case
// theta(h)/degree is returned. Rejects anything else.
LieElement dsw_project(const Series& h, int degree);

// Depth c of the word together with its image in the degree-c component.
std::pair<int, LieElement> leading_lie_part(const Word& w, int truncation);

// A word whose leading part is exactly v: product of realized basis trees
// raised to their coordinates.
Word lift_lie_to_word(const LieElement& v);

// Rank of the kernel of v -> ([x_i, v])_i on the degree-d component, over
// the integers (modulus 0) or mod a prime.
long center_kernel_rank(int rank, int degree, int modulus);

}  // namespace ian
