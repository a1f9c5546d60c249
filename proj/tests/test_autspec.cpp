#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "autspec.hpp"
#include "ian.h"

using autspec::ApiError;
using autspec::aut_ptr;
using autspec::parse_spec;
using autspec::parse_specs;
using autspec::print_spec;
using autspec::SyntaxError;
using autspec::word_ptr;

namespace {

bool equal(const ian_aut* a, const ian_aut* b) {
  int eq = 0;
  REQUIRE(ian_aut_equal(a, b, &eq) == IAN_OK);
  return eq == 1;
}

std::string image_text(const ian_aut* a, int i) {
  ian_word* w = nullptr;
  REQUIRE(ian_aut_image(a, i, &w) == IAN_OK);
  word_ptr wp(w);
  char* s = nullptr;
  REQUIRE(ian_word_str(wp.get(), &s) == IAN_OK);
  return autspec::take_string(s);
}

aut_ptr builtin_conj(int rank, int i, int j) {
  ian_aut* a = nullptr;
  REQUIRE(ian_aut_conj(rank, i, j, &a) == IAN_OK);
  return aut_ptr(a);
}

SyntaxError capture_syntax(int rank, const std::string& text) {
  try {
    parse_spec(rank, text);
  } catch (const SyntaxError& e) {
    return e;
  }
  FAIL("expected a syntax error for: ", text);
  return SyntaxError(0, 0, "");
}

}  // namespace

TEST_CASE("built-in products") {
  aut_ptr k = parse_spec(2, "conj(1,2)");
  CHECK(equal(k.get(), builtin_conj(2, 1, 2).get()));

  aut_ptr ad = parse_spec(2, "ad(x2)");
  CHECK(equal(ad.get(), k.get()));

  aut_ptr chain = parse_spec(2, "mul_r(1,2) inv(2)");
  CHECK(image_text(chain.get(), 1) == "x1 x2^-1");
  CHECK(image_text(chain.get(), 2) == "x2^-1");

  aut_ptr sw = parse_spec(3, "swap(1,3)");
  CHECK(image_text(sw.get(), 1) == "x3");
  CHECK(image_text(sw.get(), 3) == "x1");

  aut_ptr ident = parse_spec(2, "id");
  int is_id = 0;
  CHECK(ian_aut_is_identity(ident.get(), &is_id) == IAN_OK);
  CHECK(is_id == 1);

  aut_ptr undone = parse_spec(2, "conj(1,2) conj(1,2)^-1");
  CHECK(ian_aut_is_identity(undone.get(), &is_id) == IAN_OK);
  CHECK(is_id == 1);

  aut_ptr cube = parse_spec(2, "conj(1,2)^3");
  ian_aut* cube2 = nullptr;
  REQUIRE(ian_aut_pow(k.get(), 3, &cube2) == IAN_OK);
  aut_ptr c2(cube2);
  CHECK(equal(cube.get(), c2.get()));

  aut_ptr zero = parse_spec(2, "conj(1,2)^0");
  CHECK(ian_aut_is_identity(zero.get(), &is_id) == IAN_OK);
  CHECK(is_id == 1);

  aut_ptr comm = parse_spec(2, "ad([x1,x2] x1^2)");
  CHECK(image_text(comm.get(), 1) != "x1");
}

TEST_CASE("free-form rules") {
  aut_ptr full = parse_spec(2, "x1 -> x2^-1 x1 x2 ; x2 -> x2 !inv x1 -> x2 x1 x2^-1 ; x2 -> x2");
  CHECK(equal(full.get(), builtin_conj(2, 1, 2).get()));

  aut_ptr sparse = parse_spec(2, "x1 -> x2^-1 x1 x2 !inv x1 -> x2 x1 x2^-1");
  CHECK(equal(sparse.get(), full.get()));

  aut_ptr spread = parse_spec(2, "x1 -> x2^-1 x1 x2\n!inv\nx1 -> x2 x1 x2^-1\n");
  CHECK(equal(spread.get(), full.get()));
}

TEST_CASE("spec errors carry positions") {
  SyntaxError missing = capture_syntax(2, "x1 -> x1 x1");
  CHECK(std::string(missing.what()).find("!inv") != std::string::npos);
  CHECK(missing.line == 1);
  CHECK(missing.column == 12);

  SyntaxError second_line = capture_syntax(2, "x1 -> x1 x2 ;\nx9 -> x1 !inv x1 -> x1");
  CHECK(second_line.line == 2);
  CHECK(second_line.column == 1);
  CHECK(std::string(second_line.what()).find("x9") != std::string::npos);

  SyntaxError bad_word = capture_syntax(2, "x1 -> x3 !inv x1 -> x3");
  CHECK(bad_word.line == 1);
  CHECK(bad_word.column == 7);

  CHECK(std::string(capture_syntax(2, "x1 -> x1 ; x1 -> x1 !inv id").what())
            .find("duplicate") != std::string::npos);
  CHECK(std::string(capture_syntax(2, "x1 -> !inv x1 -> x1").what()).find("empty image") !=
        std::string::npos);
  CHECK(std::string(capture_syntax(2, "x1 x2 !inv").what()).find("`->`") != std::string::npos);
  CHECK(std::string(capture_syntax(2, "twist(1,2)").what()).find("unknown built-in") !=
        std::string::npos);
  CHECK(std::string(capture_syntax(2, "conj(1)").what()).find("2 arguments") !=
        std::string::npos);
  CHECK(std::string(capture_syntax(2, "conj(1,2").what()).find("missing `)`") !=
        std::string::npos);
  CHECK(std::string(capture_syntax(2, "conj(1,)").what()).find("expected an integer") !=
        std::string::npos);
  CHECK(std::string(capture_syntax(2, "").what()).find("empty automorphism spec") !=
        std::string::npos);
  CHECK(std::string(capture_syntax(2, "conj(1,2) conj(2,1) extra^").what())
            .find("expected `(`") != std::string::npos);

  try {
    parse_spec(2, "x1 -> x1 x1 !inv x1 -> x1 x1");
    FAIL("validation should reject a non-inverse");
  } catch (const ApiError& e) {
    CHECK(e.code == IAN_ERR_NOT_INVERSE);
  }
}

TEST_CASE("spec lists") {
  auto gens = parse_specs(3, "conj(1,2) | conj(1,3) | ad(x2)");
  REQUIRE(gens.size() == 3);
  CHECK(equal(gens[0].get(), builtin_conj(3, 1, 2).get()));
  CHECK(equal(gens[1].get(), builtin_conj(3, 1, 3).get()));

  try {
    parse_specs(2, "conj(1,2) | ");
    FAIL("trailing separator should be rejected");
  } catch (const SyntaxError& e) {
    CHECK(std::string(e.what()).find("empty automorphism spec") != std::string::npos);
  }

  SyntaxError later = capture_syntax(2, "x9 -> x1 !inv x1 -> x1");
  auto in_list = [&] {
    try {
      parse_specs(2, "conj(1,2) | x9 -> x1 !inv x1 -> x1");
    } catch (const SyntaxError& e) {
      return e;
    }
    FAIL("expected a syntax error");
    return SyntaxError(0, 0, "");
  }();
  CHECK(in_list.line == 1);
  CHECK(in_list.column == later.column + 12);  // shifted by "conj(1,2) | "
}

TEST_CASE("printing round-trips") {
  std::vector<std::string> pool = {"conj(1,2)", "conj(2,1)",    "mul_r(1,2)", "swap(1,2)",
                                   "inv(1)",    "ad([x1,x2])", "ad(x2 x1)",  "id"};
  std::vector<std::string> pool3 = {"conj(1,3)", "mul_r(3,1)^-1", "swap(2,3)", "ad([x2,x3] x1)"};

  std::minstd_rand rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    int rank = trial % 2 == 0 ? 2 : 3;
    std::string text;
    int factors = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < factors; ++i) {
      if (!text.empty()) text += ' ';
      if (rank == 3 && rng() % 2 == 0) {
        text += pool3[rng() % pool3.size()];
      } else {
        text += pool[rng() % pool.size()];
      }
    }
    aut_ptr a = parse_spec(rank, text);
    std::string printed = print_spec(a.get());
    aut_ptr back = parse_spec(rank, printed);
    CAPTURE(text);
    CAPTURE(printed);
    CHECK(equal(a.get(), back.get()));
  }

  aut_ptr ident = parse_spec(2, "id");
  CHECK(equal(ident.get(), parse_spec(2, print_spec(ident.get())).get()));
}
