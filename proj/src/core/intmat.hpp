#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "core/ints.hpp"

namespace ian {

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Int& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const Int& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  void swap_rows(size_t i, size_t j);
  void swap_cols(size_t i, size_t j);

  std::string str() const;

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

std::vector<Int> mat_vec(const IntMatrix& m, const std::vector<Int>& v);

// U * A * V = D with U, V unimodular, diagonal nonnegative and each entry
// dividing the next. The inverses are tracked through the same elementary
// operations rather than recomputed.
struct SNFResult {
  IntMatrix d;
  IntMatrix u, v;
  IntMatrix u_inv, v_inv;

  size_t rank() const;
};

SNFResult snf(const IntMatrix& a);

// Exact determinant (Bareiss fraction-free elimination); square input.
Int determinant(const IntMatrix& a);

// Integer coefficients c with gens * c = v, or nullopt when v lies outside
// the column lattice. The solution is re-multiplied before release. The
// second form reuses a precomputed decomposition of gens.
std::optional<std::vector<Int>> lattice_member(const std::vector<Int>& v, const IntMatrix& gens);
std::optional<std::vector<Int>> lattice_member(const std::vector<Int>& v, const IntMatrix& gens,
                                               const SNFResult& s);

// Column basis of {x : k*x in the column lattice for some k >= 1}.
IntMatrix saturation(const IntMatrix& gens);

// Row basis of all integer functionals vanishing on every generator column;
// ambient_rank must equal the column height.
IntMatrix annihilating_functionals(const IntMatrix& gens, size_t ambient_rank);

}  // namespace ian
