#include "ian.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "core/error.hpp"
#include "core/filtration.hpp"
#include "core/intmat.hpp"
#include "core/lyndon.hpp"
#include "core/series.hpp"
#include "core/verify.hpp"
#include "core/word.hpp"

struct ian_word {
  ian::Word v;
};
struct ian_aut {
  ian::Automorphism v;
};
struct ian_series {
  ian::Series v;
};
struct ian_mat {
  ian::IntMatrix v;
};
struct ian_outer {
  ian::OuterClass v;
};
struct ian_zfun {
  ian::ZFunctional v;
};

namespace {

using ian::Errc;
using ian::Error;
using ian::fail;
using ian::Int;

std::string& tl_error() {
  thread_local std::string s;
  return s;
}

int code_of(Errc c) {
  switch (c) {
    case Errc::invalid_argument: return IAN_ERR_INVALID_ARGUMENT;
    case Errc::rank_mismatch: return IAN_ERR_RANK_MISMATCH;
    case Errc::index_range: return IAN_ERR_INDEX_RANGE;
    case Errc::not_inverse: return IAN_ERR_NOT_INVERSE;
    case Errc::parse: return IAN_ERR_PARSE;
    case Errc::non_unit: return IAN_ERR_NON_UNIT;
    case Errc::not_lie: return IAN_ERR_NOT_LIE;
    case Errc::identity_word: return IAN_ERR_IDENTITY_WORD;
    case Errc::truncation_too_small: return IAN_ERR_TRUNCATION_TOO_SMALL;
    case Errc::zero_element: return IAN_ERR_ZERO_ELEMENT;
    case Errc::depth_too_low: return IAN_ERR_DEPTH_TOO_LOW;
    case Errc::not_ia: return IAN_ERR_NOT_IA;
    case Errc::trivial_subgroup: return IAN_ERR_TRIVIAL_SUBGROUP;
    case Errc::all_inner_up_to_budget: return IAN_ERR_ALL_INNER_UP_TO_BUDGET;
    case Errc::dimension_mismatch: return IAN_ERR_DIMENSION_MISMATCH;
    case Errc::internal: return IAN_ERR_INTERNAL;
  }
  return IAN_ERR_INTERNAL;
}

template <typename F>
int guard(F&& body) noexcept {
  try {
    body();
    tl_error().clear();
    return IAN_OK;
  } catch (const Error& e) {
    tl_error() = e.what();
    return code_of(e.code());
  } catch (const std::exception& e) {
    tl_error() = e.what();
    return IAN_ERR_INTERNAL;
  } catch (...) {
    tl_error() = "unknown failure";
    return IAN_ERR_INTERNAL;
  }
}

template <typename Handle>
const auto& deref(const Handle* h) {
  if (!h) fail(Errc::invalid_argument, "null handle");
  return h->v;
}

template <typename T>
T* checked(T* out) {
  if (!out) fail(Errc::invalid_argument, "null out-pointer");
  return out;
}

// The value is computed before anything is allocated, so a throw from
// either side leaks nothing.
template <typename Handle, typename Value>
void put(Handle** out, Value&& v) {
  checked(out);
  *out = new Handle{std::forward<Value>(v)};
}

void put_str(char** out, const std::string& s) {
  checked(out);
  char* buf = static_cast<char*>(std::malloc(s.size() + 1));
  if (!buf) throw std::bad_alloc();
  std::memcpy(buf, s.c_str(), s.size() + 1);
  *out = buf;
}

nlohmann::json decimal_array(const std::vector<Int>& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Int& e : v) arr.push_back(e.str());
  return arr;
}

const ian::OuterClass& outer_with_level(const ian_outer* o) {
  const ian::OuterClass& c = deref(o);
  if (c.inner_up_to_budget) {
    fail(Errc::invalid_argument, "class is inner up to the budget, no level to report");
  }
  return c;
}

std::vector<ian::Automorphism> collect(const ian_aut* const* gens, long count) {
  if (!gens) fail(Errc::invalid_argument, "null generator array");
  if (count < 0) fail(Errc::invalid_argument, "negative generator count");
  std::vector<ian::Automorphism> out;
  out.reserve(static_cast<size_t>(count));
  for (long i = 0; i < count; ++i) out.push_back(deref(gens[i]));
  return out;
}

}  // namespace

extern "C" {

const char* ian_errc_name(int code) {
  if (code == IAN_OK) return "ok";
  if (code >= 1 && code <= IAN_ERR_INTERNAL) {
    return ian::errc_name(static_cast<Errc>(code - 1));
  }
  return "unknown";
}

const char* ian_last_error(void) { return tl_error().c_str(); }

void ian_string_free(char* s) { std::free(s); }

void ian_word_free(ian_word* w) { delete w; }
void ian_aut_free(ian_aut* a) { delete a; }
void ian_series_free(ian_series* s) { delete s; }
void ian_mat_free(ian_mat* m) { delete m; }
void ian_outer_free(ian_outer* o) { delete o; }
void ian_zfun_free(ian_zfun* f) { delete f; }

int ian_word_parse(int rank, const char* text, ian_word** out) {
  return guard([&] {
    if (!text) fail(Errc::invalid_argument, "null text");
    put(out, ian::parse_word(rank, text));
  });
}

int ian_word_identity(int rank, ian_word** out) {
  return guard([&] { put(out, ian::Word::identity(rank)); });
}

int ian_word_generator(int rank, int index, int sign, ian_word** out) {
  return guard([&] {
    if (sign != 1 && sign != -1) fail(Errc::invalid_argument, "sign must be +1 or -1");
    put(out, ian::Word::generator(rank, index, sign));
  });
}

int ian_word_mul(const ian_word* a, const ian_word* b, ian_word** out) {
  return guard([&] { put(out, deref(a) * deref(b)); });
}

int ian_word_inverse(const ian_word* w, ian_word** out) {
  return guard([&] { put(out, deref(w).inverse()); });
}

int ian_word_pow(const ian_word* w, long e, ian_word** out) {
  return guard([&] { put(out, deref(w).pow(e)); });
}

int ian_word_commutator(const ian_word* a, const ian_word* b, ian_word** out) {
  return guard([&] { put(out, ian::Word::commutator(deref(a), deref(b))); });
}

int ian_word_rank(const ian_word* w, int* out) {
  return guard([&] { *checked(out) = deref(w).rank(); });
}

int ian_word_length(const ian_word* w, int* out) {
  return guard([&] { *checked(out) = deref(w).length(); });
}

int ian_word_equal(const ian_word* a, const ian_word* b, int* out) {
  return guard([&] { *checked(out) = deref(a) == deref(b) ? 1 : 0; });
}

int ian_word_str(const ian_word* w, char** out) {
  return guard([&] { put_str(out, deref(w).str()); });
}

int ian_aut_identity(int rank, ian_aut** out) {
  return guard([&] { put(out, ian::Automorphism::identity(rank)); });
}

int ian_aut_ad(const ian_word* y, ian_aut** out) {
  return guard([&] { put(out, ian::Automorphism::ad(deref(y))); });
}

int ian_aut_conj(int rank, int i, int j, ian_aut** out) {
  return guard([&] { put(out, ian::aut_conj(rank, i, j)); });
}

int ian_aut_mul_right(int rank, int i, int j, ian_aut** out) {
  return guard([&] { put(out, ian::aut_mul_right(rank, i, j)); });
}

int ian_aut_swap(int rank, int i, int j, ian_aut** out) {
  return guard([&] { put(out, ian::aut_swap(rank, i, j)); });
}

int ian_aut_inv_gen(int rank, int i, ian_aut** out) {
  return guard([&] { put(out, ian::aut_inv_gen(rank, i)); });
}

int ian_aut_mul_comm(int rank, int i, int j, int k, ian_aut** out) {
  return guard([&] { put(out, ian::aut_mul_comm(rank, i, j, k)); });
}

int ian_aut_build(int rank, const ian_word* const* fwd, const ian_word* const* bwd,
                  ian_aut** out) {
  return guard([&] {
    if (rank < 1) fail(Errc::invalid_argument, "rank must be at least 1");
    if (!fwd || !bwd) fail(Errc::invalid_argument, "null image array");
    std::vector<ian::Word> f, b;
    for (int i = 0; i < rank; ++i) {
      f.push_back(deref(fwd[i]));
      b.push_back(deref(bwd[i]));
    }
    put(out, ian::Automorphism(ian::Endomorphism(rank, std::move(f)),
                               ian::Endomorphism(rank, std::move(b))));
  });
}

int ian_aut_apply(const ian_aut* a, const ian_word* w, ian_word** out) {
  return guard([&] { put(out, deref(a).apply(deref(w))); });
}

int ian_aut_compose(const ian_aut* first, const ian_aut* second, ian_aut** out) {
  return guard([&] { put(out, deref(first).then(deref(second))); });
}

int ian_aut_inverse(const ian_aut* a, ian_aut** out) {
  return guard([&] { put(out, deref(a).inverse()); });
}

int ian_aut_pow(const ian_aut* a, long e, ian_aut** out) {
  return guard([&] { put(out, deref(a).pow(e)); });
}

int ian_aut_rank(const ian_aut* a, int* out) {
  return guard([&] { *checked(out) = deref(a).rank(); });
}

int ian_aut_is_identity(const ian_aut* a, int* out) {
  return guard([&] { *checked(out) = deref(a).is_identity() ? 1 : 0; });
}

int ian_aut_equal(const ian_aut* a, const ian_aut* b, int* out) {
  return guard([&] { *checked(out) = deref(a) == deref(b) ? 1 : 0; });
}

int ian_aut_image(const ian_aut* a, int index, ian_word** out) {
  return guard([&] { put(out, deref(a).forward().image(index)); });
}

int ian_aut_backward_image(const ian_aut* a, int index, ian_word** out) {
  return guard([&] { put(out, deref(a).backward().image(index)); });
}

int ian_magnus_expand(const ian_word* w, int truncation, ian_series** out) {
  return guard([&] { put(out, ian::magnus_expand(deref(w), truncation)); });
}

int ian_series_str(const ian_series* s, char** out) {
  return guard([&] { put_str(out, deref(s).str()); });
}

int ian_series_json(const ian_series* s, char** out) {
  return guard([&] {
    const ian::Series& ser = deref(s);
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [mono, coeff] : ser.terms()) {
      nlohmann::json indices = nlohmann::json::array();
      for (int i : mono) indices.push_back(std::to_string(i));
      terms.push_back({{"coeff", coeff.str()}, {"monomial", indices}});
    }
    nlohmann::json j{{"truncation", std::to_string(ser.truncation())}, {"terms", terms}};
    put_str(out, j.dump());
  });
}

int ian_gamma_depth(const ian_word* w, int truncation, int* depth_or_minus1, char** text) {
  return guard([&] {
    ian::DepthReport d = ian::gamma_depth(deref(w), truncation);
    if (depth_or_minus1) *depth_or_minus1 = d.depth ? *d.depth : -1;
    if (text) put_str(text, d.str());
  });
}

int ian_witt_rank(int rank, int degree, char** out_decimal) {
  return guard([&] { put_str(out_decimal, ian::witt_rank(rank, degree).str()); });
}

int ian_lyndon_basis_size(int rank, int degree, long* out) {
  return guard([&] {
    *checked(out) = static_cast<long>(ian::lyndon_basis(rank, degree).size());
  });
}

int ian_lyndon_basis_entry(int rank, int degree, long i, char** word_out, char** tree_out) {
  return guard([&] {
    const auto& basis = ian::lyndon_basis(rank, degree);
    if (i < 0 || static_cast<size_t>(i) >= basis.size()) {
      fail(Errc::index_range, "basis index out of range");
    }
    const auto& w = basis[static_cast<size_t>(i)];
    if (word_out) {
      std::string text;
      for (int k : w) {
        if (!text.empty()) text += ' ';
        text += 'x' + std::to_string(k);
      }
      put_str(word_out, text);
    }
    if (tree_out) put_str(tree_out, ian::lyndon_tree_str(w));
  });
}

int ian_center_check(int rank, int degree, int modulus, long* kernel_rank) {
  return guard([&] { *checked(kernel_rank) = ian::center_kernel_rank(rank, degree, modulus); });
}

int ian_mat_rows(const ian_mat* m, long* out) {
  return guard([&] { *checked(out) = static_cast<long>(deref(m).rows()); });
}

int ian_mat_cols(const ian_mat* m, long* out) {
  return guard([&] { *checked(out) = static_cast<long>(deref(m).cols()); });
}

int ian_mat_entry_str(const ian_mat* m, long i, long j, char** out) {
  return guard([&] {
    const ian::IntMatrix& a = deref(m);
    if (i < 0 || j < 0 || static_cast<size_t>(i) >= a.rows() ||
        static_cast<size_t>(j) >= a.cols()) {
      fail(Errc::index_range, "matrix index out of range");
    }
    put_str(out, a.at(static_cast<size_t>(i), static_cast<size_t>(j)).str());
  });
}

int ian_mat_str(const ian_mat* m, char** out) {
  return guard([&] { put_str(out, deref(m).str()); });
}

int ian_mat_json(const ian_mat* m, char** out) {
  return guard([&] {
    const ian::IntMatrix& a = deref(m);
    nlohmann::json rows = nlohmann::json::array();
    for (size_t i = 0; i < a.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (size_t j = 0; j < a.cols(); ++j) row.push_back(a.at(i, j).str());
      rows.push_back(std::move(row));
    }
    put_str(out, rows.dump());
  });
}

int ian_mat_snf_rank(const ian_mat* m, long* out) {
  return guard([&] { *checked(out) = static_cast<long>(ian::snf(deref(m)).rank()); });
}

int ian_mat_snf_diagonal_json(const ian_mat* m, char** out) {
  return guard([&] {
    const ian::IntMatrix& a = deref(m);
    ian::SNFResult s = ian::snf(a);
    std::vector<Int> diag;
    for (size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) diag.push_back(s.d.at(i, i));
    put_str(out, decimal_array(diag).dump());
  });
}

int ian_aut_depth(const ian_aut* a, int truncation, int* kind, int* depth, char** text) {
  return guard([&] {
    ian::AutDepthReport r = ian::aut_depth(deref(a), truncation);
    if (kind) {
      switch (r.kind) {
        case ian::AutDepthReport::Kind::NotIA: *kind = IAN_DEPTH_NOT_IA; break;
        case ian::AutDepthReport::Kind::Exact: *kind = IAN_DEPTH_EXACT; break;
        case ian::AutDepthReport::Kind::AtLeast: *kind = IAN_DEPTH_AT_LEAST; break;
      }
    }
    if (depth) *depth = r.depth;
    if (text) put_str(text, r.str());
  });
}

int ian_johnson(const ian_aut* a, int level, int truncation, ian_mat** out) {
  return guard([&] { put(out, ian::johnson(deref(a), level, truncation).matrix); });
}

int ian_ad_matrix(int rank, int level, int truncation, ian_mat** out) {
  return guard([&] { put(out, ian::ad_matrix(rank, level, truncation)); });
}

int ian_outer_depth(const ian_aut* a, int truncation, ian_outer** out) {
  return guard([&] { put(out, ian::outer_depth(deref(a), truncation)); });
}

int ian_outer_is_bounded(const ian_outer* o, int* inner_up_to_budget) {
  return guard([&] { *checked(inner_up_to_budget) = deref(o).inner_up_to_budget ? 1 : 0; });
}

int ian_outer_level(const ian_outer* o, int* out) {
  return guard([&] { *checked(out) = outer_with_level(o).level; });
}

int ian_outer_image(const ian_outer* o, ian_mat** out) {
  return guard([&] { put(out, outer_with_level(o).image.matrix); });
}

int ian_outer_residue_json(const ian_outer* o, char** out) {
  return guard([&] { put_str(out, decimal_array(outer_with_level(o).residue).dump()); });
}

int ian_outer_representative(const ian_outer* o, ian_aut** out) {
  return guard([&] { put(out, outer_with_level(o).representative); });
}

int ian_subgroup_depth(const ian_aut* const* gens, long count, int truncation, int outer,
                       int* at_least, int* level) {
  return guard([&] {
    ian::SubgroupDepth d = ian::subgroup_depth(collect(gens, count), truncation, outer != 0);
    if (at_least) *at_least = d.at_least ? 1 : 0;
    if (level) *level = d.level;
  });
}

int ian_map_to_z(const ian_aut* const* gens, long count, int truncation, int outer,
                 ian_zfun** out) {
  return guard([&] {
    put(out, ian::map_to_Z(collect(gens, count), truncation, outer != 0));
  });
}

int ian_zfun_level(const ian_zfun* f, int* out) {
  return guard([&] { *checked(out) = deref(f).level; });
}

int ian_zfun_is_outer(const ian_zfun* f, int* out) {
  return guard([&] { *checked(out) = deref(f).outer ? 1 : 0; });
}

int ian_zfun_divisor_str(const ian_zfun* f, char** out) {
  return guard([&] { put_str(out, deref(f).divisor.str()); });
}

int ian_zfun_functional_json(const ian_zfun* f, char** out) {
  return guard([&] { put_str(out, decimal_array(deref(f).functional).dump()); });
}

int ian_zfun_generator_evaluations_json(const ian_zfun* f, char** out) {
  return guard([&] { put_str(out, decimal_array(deref(f).generator_evaluations).dump()); });
}

int ian_zfun_evaluate(const ian_zfun* f, const ian_aut* g, char** out_decimal) {
  return guard([&] { put_str(out_decimal, deref(f).evaluate(deref(g)).str()); });
}

int ian_verify_run(int rank, int truncation, long cases, unsigned long long seed, int* all_passed,
                   char** table_text, char** json) {
  return guard([&] {
    ian::VerifyReport r = ian::run_verification(rank, truncation, cases, seed);
    if (all_passed) *all_passed = r.all_passed() ? 1 : 0;
    if (table_text) put_str(table_text, r.table());
    if (json) put_str(json, r.to_json());
  });
}

}  // extern "C"
