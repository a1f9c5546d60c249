#pragma once

#include <stdexcept>
#include <string>

namespace ian {

enum class Errc {
  invalid_argument,
  rank_mismatch,
  index_range,
  not_inverse,
  parse,
  non_unit,
  not_lie,
  identity_word,
  truncation_too_small,
  zero_element,
  depth_too_low,
  not_ia,
  trivial_subgroup,
  all_inner_up_to_budget,
  dimension_mismatch,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

constexpr const char* errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::rank_mismatch: return "rank-mismatch";
    case Errc::index_range: return "index-range";
    case Errc::not_inverse: return "not-inverse";
    case Errc::parse: return "parse";
    case Errc::non_unit: return "non-unit";
    case Errc::not_lie: return "not-lie";
    case Errc::identity_word: return "identity-word";
    case Errc::truncation_too_small: return "truncation-too-small";
    case Errc::zero_element: return "zero-element";
    case Errc::depth_too_low: return "depth-too-low";
    case Errc::not_ia: return "not-ia";
    case Errc::trivial_subgroup: return "trivial-subgroup";
    case Errc::all_inner_up_to_budget: return "all-inner-up-to-budget";
    case Errc::dimension_mismatch: return "dimension-mismatch";
    case Errc::internal: return "internal";
  }
  return "unknown";
}

}  // namespace ian
