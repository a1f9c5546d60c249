#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>
#include <string>

#include <json.hpp>

#include "ian.h"

namespace {

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

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out = s;
  ian_string_free(s);
  return out;
}

word_ptr W(int rank, const char* text) {
  ian_word* p = nullptr;
  REQUIRE(ian_word_parse(rank, text, &p) == IAN_OK);
  return word_ptr(p);
}

std::string word_text(const ian_word* w) {
  char* s = nullptr;
  REQUIRE(ian_word_str(w, &s) == IAN_OK);
  return take(s);
}

aut_ptr AD(int rank, const char* text) {
  ian_aut* a = nullptr;
  REQUIRE(ian_aut_ad(W(rank, text).get(), &a) == IAN_OK);
  return aut_ptr(a);
}

}  // namespace

TEST_CASE("status codes and messages") {
  CHECK(std::string(ian_errc_name(IAN_OK)) == "ok");
  CHECK(std::string(ian_errc_name(IAN_ERR_PARSE)) == "parse");
  CHECK(std::string(ian_errc_name(IAN_ERR_NOT_INVERSE)) == "not-inverse");
  CHECK(std::string(ian_errc_name(IAN_ERR_INTERNAL)) == "internal");
  CHECK(std::string(ian_errc_name(99)) == "unknown");

  ian_word* w = nullptr;
  CHECK(ian_word_parse(2, "x3", &w) == IAN_ERR_INDEX_RANGE);
  CHECK(std::string(ian_last_error()) != "");
  CHECK(ian_word_parse(2, "x1", &w) == IAN_OK);
  CHECK(std::string(ian_last_error()) == "");
  ian_word_free(w);

  CHECK(ian_word_str(nullptr, nullptr) == IAN_ERR_INVALID_ARGUMENT);
  CHECK(std::string(ian_last_error()).find("null") != std::string::npos);
}

TEST_CASE("word arithmetic through the C layer") {
  word_ptr a = W(2, "x1 x2^-1");
  CHECK(word_text(a.get()) == "x1 x2^-1");

  int rank = 0, length = 0;
  CHECK(ian_word_rank(a.get(), &rank) == IAN_OK);
  CHECK(ian_word_length(a.get(), &length) == IAN_OK);
  CHECK(rank == 2);
  CHECK(length == 2);

  ian_word* prod = nullptr;
  REQUIRE(ian_word_mul(a.get(), W(2, "x2 x1").get(), &prod) == IAN_OK);
  word_ptr p(prod);
  CHECK(word_text(p.get()) == "x1 x1");

  ian_word* inv = nullptr;
  REQUIRE(ian_word_inverse(p.get(), &inv) == IAN_OK);
  word_ptr q(inv);
  CHECK(word_text(q.get()) == "x1^-1 x1^-1");

  ian_word* pw = nullptr;
  REQUIRE(ian_word_pow(W(2, "x1").get(), -3, &pw) == IAN_OK);
  word_ptr cube(pw);
  int eq = 0;
  CHECK(ian_word_equal(cube.get(), W(2, "x1^-3").get(), &eq) == IAN_OK);
  CHECK(eq == 1);

  ian_word* comm = nullptr;
  REQUIRE(ian_word_commutator(W(2, "x1").get(), W(2, "x2").get(), &comm) == IAN_OK);
  word_ptr c(comm);
  CHECK(word_text(c.get()) == "x1^-1 x2^-1 x1 x2");

  ian_word* gen = nullptr;
  REQUIRE(ian_word_generator(2, 2, -1, &gen) == IAN_OK);
  word_ptr g(gen);
  CHECK(word_text(g.get()) == "x2^-1");
  CHECK(ian_word_generator(2, 2, 0, &gen) == IAN_ERR_INVALID_ARGUMENT);

  ian_word* id = nullptr;
  REQUIRE(ian_word_identity(2, &id) == IAN_OK);
  word_ptr e(id);
  CHECK(word_text(e.get()) == "1");

  ian_word* bad = nullptr;
  CHECK(ian_word_mul(a.get(), W(3, "x1").get(), &bad) == IAN_ERR_RANK_MISMATCH);
}

TEST_CASE("automorphism construction and validation") {
  aut_ptr ad2 = AD(2, "x2");
  ian_aut* conj = nullptr;
  REQUIRE(ian_aut_conj(2, 1, 2, &conj) == IAN_OK);
  aut_ptr k(conj);
  int eq = 0;
  CHECK(ian_aut_equal(ad2.get(), k.get(), &eq) == IAN_OK);
  CHECK(eq == 1);

  ian_word* img = nullptr;
  REQUIRE(ian_aut_image(k.get(), 1, &img) == IAN_OK);
  CHECK(word_text(word_ptr(img).get()) == "x2^-1 x1 x2");
  REQUIRE(ian_aut_backward_image(k.get(), 1, &img) == IAN_OK);
  CHECK(word_text(word_ptr(img).get()) == "x2 x1 x2^-1");

  word_ptr f1 = W(2, "x1 x1");
  word_ptr f2 = W(2, "x2");
  const ian_word* fwd[2] = {f1.get(), f2.get()};
  ian_aut* built = nullptr;
  CHECK(ian_aut_build(2, fwd, fwd, &built) == IAN_ERR_NOT_INVERSE);

  word_ptr b1 = W(2, "x2^-1 x1 x2");
  word_ptr b2 = W(2, "x2");
  word_ptr g1 = W(2, "x2 x1 x2^-1");
  const ian_word* fwd2[2] = {b1.get(), b2.get()};
  const ian_word* bwd2[2] = {g1.get(), b2.get()};
  REQUIRE(ian_aut_build(2, fwd2, bwd2, &built) == IAN_OK);
  aut_ptr h(built);
  CHECK(ian_aut_equal(h.get(), k.get(), &eq) == IAN_OK);
  CHECK(eq == 1);

  ian_aut* comp = nullptr;
  REQUIRE(ian_aut_compose(k.get(), k.get(), &comp) == IAN_OK);
  aut_ptr k2(comp);
  ian_aut* pow = nullptr;
  REQUIRE(ian_aut_pow(k.get(), 2, &pow) == IAN_OK);
  aut_ptr k2b(pow);
  CHECK(ian_aut_equal(k2.get(), k2b.get(), &eq) == IAN_OK);
  CHECK(eq == 1);

  ian_aut* inv = nullptr;
  REQUIRE(ian_aut_inverse(k.get(), &inv) == IAN_OK);
  ian_aut* round = nullptr;
  REQUIRE(ian_aut_compose(k.get(), inv, &round) == IAN_OK);
  int ident = 0;
  CHECK(ian_aut_is_identity(round, &ident) == IAN_OK);
  CHECK(ident == 1);
  ian_aut_free(inv);
  ian_aut_free(round);

  ian_word* moved = nullptr;
  REQUIRE(ian_aut_apply(k.get(), W(2, "x1 x2").get(), &moved) == IAN_OK);
  CHECK(word_text(word_ptr(moved).get()) == "x2^-1 x1 x2 x2");

  int r = 0;
  CHECK(ian_aut_rank(k.get(), &r) == IAN_OK);
  CHECK(r == 2);
}

TEST_CASE("magnus expansion and depth") {
  series_ptr s;
  {
    ian_series* raw = nullptr;
    REQUIRE(ian_magnus_expand(W(2, "[x1,x2]").get(), 3, &raw) == IAN_OK);
    s.reset(raw);
  }
  char* text = nullptr;
  REQUIRE(ian_series_str(s.get(), &text) == IAN_OK);
  std::string rendered = take(text);
  CHECK(rendered.find("X1.X2") != std::string::npos);

  char* js = nullptr;
  REQUIRE(ian_series_json(s.get(), &js) == IAN_OK);
  auto parsed = nlohmann::json::parse(take(js));
  CHECK(parsed["truncation"] == "3");
  bool found = false;
  for (const auto& term : parsed["terms"]) {
    if (term["monomial"] == nlohmann::json::array({"1", "2"})) {
      CHECK(term["coeff"] == "1");
      found = true;
    }
  }
  CHECK(found);

  int depth = 0;
  char* dt = nullptr;
  REQUIRE(ian_gamma_depth(W(2, "[[x1,x2],x2]").get(), 4, &depth, &dt) == IAN_OK);
  CHECK(depth == 3);
  CHECK(take(dt) == "3");

  REQUIRE(ian_gamma_depth(W(2, "1").get(), 6, &depth, &dt) == IAN_OK);
  CHECK(depth == -1);
  CHECK(take(dt) == ">= 7");

  CHECK(ian_magnus_expand(W(2, "x1").get(), 0, nullptr) == IAN_ERR_INVALID_ARGUMENT);
}

TEST_CASE("lyndon basis views") {
  char* witt = nullptr;
  REQUIRE(ian_witt_rank(2, 5, &witt) == IAN_OK);
  CHECK(take(witt) == "6");

  long size = 0;
  REQUIRE(ian_lyndon_basis_size(2, 3, &size) == IAN_OK);
  CHECK(size == 2);

  char* word = nullptr;
  char* tree = nullptr;
  REQUIRE(ian_lyndon_basis_entry(2, 3, 0, &word, &tree) == IAN_OK);
  CHECK(take(word) == "x1 x1 x2");
  CHECK(take(tree) == "[x1,[x1,x2]]");
  REQUIRE(ian_lyndon_basis_entry(2, 3, 1, &word, &tree) == IAN_OK);
  CHECK(take(word) == "x1 x2 x2");
  CHECK(take(tree) == "[[x1,x2],x2]");
  CHECK(ian_lyndon_basis_entry(2, 3, 2, &word, &tree) == IAN_ERR_INDEX_RANGE);

  long kernel = -1;
  REQUIRE(ian_center_check(2, 3, 0, &kernel) == IAN_OK);
  CHECK(kernel == 0);
  REQUIRE(ian_center_check(3, 2, 5, &kernel) == IAN_OK);
  CHECK(kernel == 0);
}

TEST_CASE("matrices, level images, smith data") {
  mat_ptr ad;
  {
    ian_mat* raw = nullptr;
    REQUIRE(ian_ad_matrix(2, 1, 3, &raw) == IAN_OK);
    ad.reset(raw);
  }
  long rows = 0, cols = 0;
  CHECK(ian_mat_rows(ad.get(), &rows) == IAN_OK);
  CHECK(ian_mat_cols(ad.get(), &cols) == IAN_OK);
  CHECK(rows == 2);
  CHECK(cols == 2);

  char* e = nullptr;
  REQUIRE(ian_mat_entry_str(ad.get(), 0, 1, &e) == IAN_OK);
  CHECK(take(e) == "1");
  REQUIRE(ian_mat_entry_str(ad.get(), 1, 0, &e) == IAN_OK);
  CHECK(take(e) == "-1");
  CHECK(ian_mat_entry_str(ad.get(), 2, 0, &e) == IAN_ERR_INDEX_RANGE);

  char* js = nullptr;
  REQUIRE(ian_mat_json(ad.get(), &js) == IAN_OK);
  auto parsed = nlohmann::json::parse(take(js));
  CHECK(parsed == nlohmann::json::parse(R"([["0","1"],["-1","0"]])"));

  long snf_rank = 0;
  REQUIRE(ian_mat_snf_rank(ad.get(), &snf_rank) == IAN_OK);
  CHECK(snf_rank == 2);
  REQUIRE(ian_mat_snf_diagonal_json(ad.get(), &js) == IAN_OK);
  CHECK(nlohmann::json::parse(take(js)) == nlohmann::json::parse(R"(["1","1"])"));

  ian_mat* tau = nullptr;
  REQUIRE(ian_johnson(AD(2, "x1").get(), 1, 3, &tau) == IAN_OK);
  mat_ptr t(tau);
  REQUIRE(ian_mat_json(t.get(), &js) == IAN_OK);
  CHECK(nlohmann::json::parse(take(js)) == nlohmann::json::parse(R"([["0"],["-1"]])"));

  CHECK(ian_johnson(AD(2, "x1").get(), 1, 2, &tau) == IAN_ERR_TRUNCATION_TOO_SMALL);
}

TEST_CASE("filtration depth reports") {
  int kind = -1, depth = -1;
  char* text = nullptr;
  REQUIRE(ian_aut_depth(AD(2, "x1").get(), 4, &kind, &depth, &text) == IAN_OK);
  CHECK(kind == IAN_DEPTH_EXACT);
  CHECK(depth == 1);
  CHECK(take(text) == "1");

  ian_aut* sw = nullptr;
  REQUIRE(ian_aut_swap(2, 1, 2, &sw) == IAN_OK);
  aut_ptr swp(sw);
  REQUIRE(ian_aut_depth(swp.get(), 4, &kind, nullptr, nullptr) == IAN_OK);
  CHECK(kind == IAN_DEPTH_NOT_IA);

  ian_aut* id = nullptr;
  REQUIRE(ian_aut_identity(2, &id) == IAN_OK);
  aut_ptr idp(id);
  REQUIRE(ian_aut_depth(idp.get(), 4, &kind, nullptr, &text) == IAN_OK);
  CHECK(kind == IAN_DEPTH_AT_LEAST);
  CHECK(take(text) == ">= 4");
}

TEST_CASE("outer classes over the C layer") {
  ian_aut* k13 = nullptr;
  REQUIRE(ian_aut_conj(3, 1, 3, &k13) == IAN_OK);
  aut_ptr k(k13);

  ian_outer* cls = nullptr;
  REQUIRE(ian_outer_depth(k.get(), 3, &cls) == IAN_OK);
  outer_ptr o(cls);
  int bounded = -1, level = -1;
  CHECK(ian_outer_is_bounded(o.get(), &bounded) == IAN_OK);
  CHECK(bounded == 0);
  CHECK(ian_outer_level(o.get(), &level) == IAN_OK);
  CHECK(level == 1);

  char* js = nullptr;
  REQUIRE(ian_outer_residue_json(o.get(), &js) == IAN_OK);
  auto residue = nlohmann::json::parse(take(js));
  bool nonzero = false;
  for (const auto& v : residue) nonzero = nonzero || v != "0";
  CHECK(nonzero);

  ian_mat* img = nullptr;
  REQUIRE(ian_outer_image(o.get(), &img) == IAN_OK);
  long rows = 0;
  CHECK(ian_mat_rows(img, &rows) == IAN_OK);
  CHECK(rows == 3);
  ian_mat_free(img);

  ian_aut* rep = nullptr;
  REQUIRE(ian_outer_representative(o.get(), &rep) == IAN_OK);
  int eq = 0;
  CHECK(ian_aut_equal(rep, k.get(), &eq) == IAN_OK);
  CHECK(eq == 1);
  ian_aut_free(rep);

  ian_outer* inner = nullptr;
  REQUIRE(ian_outer_depth(AD(3, "x1").get(), 3, &inner) == IAN_OK);
  outer_ptr in(inner);
  CHECK(ian_outer_is_bounded(in.get(), &bounded) == IAN_OK);
  CHECK(bounded == 1);
  CHECK(ian_outer_level(in.get(), &level) == IAN_ERR_INVALID_ARGUMENT);

  const ian_aut* gens[1] = {k.get()};
  int at_least = -1;
  REQUIRE(ian_subgroup_depth(gens, 1, 4, 0, &at_least, &level) == IAN_OK);
  CHECK(at_least == 0);
  CHECK(level == 1);
}

TEST_CASE("integer functionals over the C layer") {
  aut_ptr gen = AD(2, "[x1,x2]");
  const ian_aut* gens[1] = {gen.get()};
  ian_zfun* f = nullptr;
  REQUIRE(ian_map_to_z(gens, 1, 4, 0, &f) == IAN_OK);
  zfun_ptr fp(f);

  int level = 0, outer = -1;
  CHECK(ian_zfun_level(fp.get(), &level) == IAN_OK);
  CHECK(level == 2);
  CHECK(ian_zfun_is_outer(fp.get(), &outer) == IAN_OK);
  CHECK(outer == 0);

  char* s = nullptr;
  REQUIRE(ian_zfun_divisor_str(fp.get(), &s) == IAN_OK);
  CHECK(take(s) == "1");
  REQUIRE(ian_zfun_generator_evaluations_json(fp.get(), &s) == IAN_OK);
  auto evals = nlohmann::json::parse(take(s));
  REQUIRE(evals.size() == 1);
  std::string e = evals[0];
  CHECK((e == "1" || e == "-1"));

  ian_aut* cube = nullptr;
  REQUIRE(ian_aut_pow(gen.get(), 3, &cube) == IAN_OK);
  aut_ptr cp(cube);
  REQUIRE(ian_zfun_evaluate(fp.get(), cp.get(), &s) == IAN_OK);
  std::string val = take(s);
  CHECK((val == (e == "1" ? "3" : "-3")));

  REQUIRE(ian_zfun_functional_json(fp.get(), &s) == IAN_OK);
  auto functional = nlohmann::json::parse(take(s));
  CHECK(functional.size() == 4);  // 2 generators x witt(2,3) = 2

  CHECK(ian_zfun_evaluate(fp.get(), AD(3, "x1").get(), &s) == IAN_ERR_RANK_MISMATCH);
  CHECK(ian_map_to_z(gens, 0, 4, 0, &f) == IAN_ERR_INVALID_ARGUMENT);

  ian_aut* k13 = nullptr;
  REQUIRE(ian_aut_conj(3, 1, 3, &k13) == IAN_OK);
  aut_ptr k(k13);
  const ian_aut* outer_gens[1] = {k.get()};
  REQUIRE(ian_map_to_z(outer_gens, 1, 3, 1, &f) == IAN_OK);
  zfun_ptr fo(f);
  CHECK(ian_zfun_is_outer(fo.get(), &outer) == IAN_OK);
  CHECK(outer == 1);
  CHECK(ian_zfun_level(fo.get(), &level) == IAN_OK);
  CHECK(level == 1);
}

TEST_CASE("verification harness binding") {
  int all_passed = 0;
  char* table = nullptr;
  char* js = nullptr;
  REQUIRE(ian_verify_run(2, 4, 15, 9, &all_passed, &table, &js) == IAN_OK);
  CHECK(all_passed == 1);
  std::string rendered = take(table);
  CHECK(rendered.find("all suites passed") != std::string::npos);
  CHECK(rendered.find("words/group-laws") != std::string::npos);

  std::string first = take(js);
  auto parsed = nlohmann::json::parse(first);
  CHECK(parsed["all_passed"] == true);
  CHECK(parsed["cases"] == "15");
  CHECK(parsed["seed"] == "9");
  CHECK(parsed["suites"].is_array());

  REQUIRE(ian_verify_run(2, 4, 15, 9, nullptr, nullptr, &js) == IAN_OK);
  CHECK(take(js) == first);

  CHECK(ian_verify_run(1, 4, 15, 9, nullptr, nullptr, nullptr) == IAN_ERR_INVALID_ARGUMENT);
  CHECK(ian_verify_run(2, 2, 15, 9, nullptr, nullptr, nullptr) == IAN_ERR_INVALID_ARGUMENT);
}
