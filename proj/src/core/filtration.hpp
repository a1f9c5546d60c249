#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/intmat.hpp"
#include "core/lyndon.hpp"
#include "core/word.hpp"

namespace ian {

// Generator suffixes w_i = x_i^-1 psi(x_i).
std::vector<Word> suffixes(const Automorphism& psi);

// Largest certified c with psi in G_c: every suffix in gamma_{c+1}. The
// markers cover the two ways the number can be out of reach: some suffix
// is outside gamma_2 entirely (NotIA), or every nontrivial suffix sits
// below the horizon of the truncation (AtLeast, ">= D").
struct AutDepthReport {
  enum class Kind { NotIA, Exact, AtLeast };
  Kind kind = Kind::Exact;
  int depth = 0;  // valid when Exact; 1 <= depth < truncation
  int truncation = 0;

  bool at_least(int c) const { return kind == Kind::AtLeast || (kind == Kind::Exact && depth >= c); }
  std::string str() const;
  friend bool operator==(const AutDepthReport&, const AutDepthReport&) = default;
};

AutDepthReport aut_depth(const Automorphism& psi, int truncation);

// Row i = coordinates in the degree-(c+1) graded piece of the leading part
// of suffix w_i; the whole matrix is the level-c image of psi.
struct JohnsonImage {
  int rank = 0;
  int level = 0;
  IntMatrix matrix;  // rank rows, witt_rank(rank, level+1) cols

  std::vector<Int> flatten() const;  // row-major
  friend bool operator==(const JohnsonImage&, const JohnsonImage&) = default;
};

JohnsonImage johnson(const Automorphism& psi, int level, int truncation);

// The degree-c component mapped into Hom coordinates: column for basis tree
// t is the flattened level-c image of conjugation by the realized tree,
// i.e. y -> ([x] -> [x, y]). Cached per (rank, level).
const IntMatrix& ad_matrix(int rank, int level, int truncation);

// Integer witness y with the level-c image of ad(lift(y)) equal to that of
// psi, or nullopt when the image lies outside the conjugation lattice.
std::optional<LieElement> is_inner_mod_next(const Automorphism& psi, int level, int truncation);

// Class of psi modulo inner automorphisms: strip inner factors level by
// level until a nonzero residue appears or the budget runs out.
struct OuterClass {
  bool inner_up_to_budget = false;
  int level = 0;  // valid when !inner_up_to_budget
  Automorphism representative;
  JohnsonImage image;        // at `level`
  std::vector<Int> residue;  // canonical form of the image modulo the ad lattice
  int truncation = 0;
};

OuterClass outer_depth(const Automorphism& psi, int truncation);

// Minimum depth over a finite generating list; outer mode uses outer
// levels and ignores generators that normalize away.
struct SubgroupDepth {
  bool at_least = false;  // every nontrivial generator is deeper than the budget
  int level = 0;
  int truncation = 0;
};

SubgroupDepth subgroup_depth(const std::vector<Automorphism>& gens, int truncation, bool outer);

// Surjection onto the integers defined on the generated subgroup:
// g -> f(level-c image of g) / divisor. In outer mode f annihilates the
// conjugation lattice, so the value only depends on the outer class.
struct ZFunctional {
  int rank = 0;
  int level = 0;
  int truncation = 0;
  bool outer = false;
  std::vector<Int> functional;  // row on flattened level-c images
  Int divisor = 1;
  std::vector<Int> generator_evaluations;  // gcd 1

  Int evaluate(const Automorphism& g) const;
};

ZFunctional map_to_Z(const std::vector<Automorphism>& gens, int truncation, bool outer);

}  // namespace ian
