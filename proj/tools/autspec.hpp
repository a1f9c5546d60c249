#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "ian.h"

namespace autspec {

// Failure reported by the shared library, carrying its status code.
struct ApiError : std::runtime_error {
  ApiError(int code, std::string msg) : std::runtime_error(std::move(msg)), code(code) {}
  int code;
};

// Structural problem in a spec, with a 1-based source position.
struct SyntaxError : std::runtime_error {
  SyntaxError(int line, int column, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(column) +
                           ": " + msg),
        line(line),
        column(column) {}
  int line;
  int column;
};

inline void check(int status) {
  if (status != IAN_OK) throw ApiError(status, ian_last_error());
}

template <auto F>
struct FnDeleter {
  template <typename T>
  void operator()(T* p) const {
    F(p);
  }
};

using word_ptr = std::unique_ptr<ian_word, FnDeleter<&ian_word_free>>;
using aut_ptr = std::unique_ptr<ian_aut, FnDeleter<&ian_aut_free>>;
using series_ptr = std::unique_ptr<ian_series, FnDeleter<&ian_series_free>>;
using mat_ptr = std::unique_ptr<ian_mat, FnDeleter<&ian_mat_free>>;
using outer_ptr = std::unique_ptr<ian_outer, FnDeleter<&ian_outer_free>>;
using zfun_ptr = std::unique_ptr<ian_zfun, FnDeleter<&ian_zfun_free>>;

// Takes ownership of a string returned by the library.
std::string take_string(char* s);

/* One automorphism. Two forms:
 *
 *   conj(1,2) ad([x1,x2]) mul_r(2,3)^-1 swap(1,2) inv(1) id
 *     product of built-ins, applied left to right, optional ^<int> powers
 *
 *   x1 -> x2^-1 x1 x2 ; x2 -> x2 !inv x1 -> x2 x1 x2^-1 ; x2 -> x2
 *     free-form generator rules; the !inv block is mandatory and is
 *     validated, generators without a rule stay fixed
 */
aut_ptr parse_spec(int rank, const std::string& text);

// `|`-separated list of specs; positions in errors refer to the whole text.
std::vector<aut_ptr> parse_specs(int rank, const std::string& text);

// Free-form rendering (with the !inv block) that parse_spec accepts.
std::string print_spec(const ian_aut* a);

}  // namespace autspec
