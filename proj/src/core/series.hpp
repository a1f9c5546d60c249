#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/ints.hpp"
#include "core/word.hpp"

namespace ian {

// Sequence of variable indices in 1..rank; the empty monomial is the
// constant term. Degree = length.
using Monomial = std::vector<int>;

// (degree, lexicographic) order, also the serialization order.
struct MonoLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Truncated noncommutative power series over Z in X1..Xn: terms of degree
// above the truncation are discarded on entry, zero coefficients are never
// stored.
class Series {
 public:
  Series() = default;
  Series(int rank, int truncation);

  static Series one(int rank, int truncation);
  static Series variable(int rank, int truncation, int index);

  int rank() const { return rank_; }
  int truncation() const { return truncation_; }
  const std::map<Monomial, Int, MonoLess>& terms() const { return terms_; }

  Int coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const Int& c);

  Series operator+(const Series& rhs) const;
  Series operator-(const Series& rhs) const;
  Series operator-() const;
  friend bool operator==(const Series&, const Series&) = default;

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  // Lowest degree with a nonzero term; nullopt for the zero series.
  std::optional<int> lowest_degree() const;
  Series homogeneous_part(int degree) const;

  std::string str() const;

 private:
  int rank_ = 0;
  int truncation_ = 0;
  std::map<Monomial, Int, MonoLess> terms_;
};

Series series_mul(const Series& a, const Series& b);

// Two-sided inverse at the shared truncation; requires constant term 1.
Series series_inverse(const Series& a);

// Multiplicative extension of x_i -> 1 + X_i.
Series magnus_expand(const Word& w, int truncation);

// Depth of w in the lower central series, certified up to the truncation:
// numeric when the lowest degree of mu(w) - 1 is <= truncation, otherwise
// the marker ">= truncation + 1" (depth empty).
struct DepthReport {
  std::optional<int> depth;
  int truncation = 0;

  std::string str() const;
  friend bool operator==(const DepthReport&, const DepthReport&) = default;
};

DepthReport gamma_depth(const Word& w, int truncation);

}  // namespace ian
