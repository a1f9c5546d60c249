#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "autspec.hpp"
#include "ian.h"

using nlohmann::json;

namespace {

// Parameter problem detected before dispatching into the library.
struct CliError {
  int code;
  std::string message;
};

struct Options {
  int n = 1;
  int degree = 6;
  int c = 1;
  int modulus = 0;
  bool outer = false;
  long cases = 100;
  std::uint64_t seed = 0;
  std::string word;
  std::string spec;
  std::string spec_file;
  std::string format = "text";
};

std::string dec(long long v) { return std::to_string(v); }

// "[1, -2, 0]" from a JSON array of decimal strings.
std::string plain_list(const json& arr) {
  std::string out = "[";
  bool first = true;
  for (const auto& v : arr) {
    if (!first) out += ", ";
    out += v.get<std::string>();
    first = false;
  }
  return out + "]";
}

std::string spec_text(const Options& o, size_t inline_count, size_t file_count) {
  if ((inline_count > 0) == (file_count > 0)) {
    throw CliError{IAN_ERR_INVALID_ARGUMENT, "provide exactly one of --spec and --spec-file"};
  }
  if (inline_count > 0) return o.spec;
  std::ifstream in(o.spec_file);
  if (!in) throw CliError{IAN_ERR_INVALID_ARGUMENT, "cannot read " + o.spec_file};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<const ian_aut*> raw_view(const std::vector<autspec::aut_ptr>& gens) {
  std::vector<const ian_aut*> out;
  for (const auto& g : gens) out.push_back(g.get());
  return out;
}

autspec::word_ptr parse_cli_word(int rank, const std::string& text) {
  ian_word* w = nullptr;
  autspec::check(ian_word_parse(rank, text.c_str(), &w));
  return autspec::word_ptr(w);
}

json mat_json(const ian_mat* m) {
  char* s = nullptr;
  autspec::check(ian_mat_json(m, &s));
  return json::parse(autspec::take_string(s));
}

std::string mat_text(const ian_mat* m) {
  char* s = nullptr;
  autspec::check(ian_mat_str(m, &s));
  return autspec::take_string(s);
}

void require_level_fits(int c, int degree) {
  if (c >= degree - 1) {
    throw CliError{IAN_ERR_INVALID_ARGUMENT,
                   "level must satisfy c < degree - 1 (got c=" + dec(c) +
                       ", degree=" + dec(degree) + ")"};
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Automorphisms of a free group acting on the lower central series"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* s) {
    s->add_option("--format", o.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto add_n = [&](CLI::App* s) {
    s->add_option("--n", o.n, "rank of the free group")->required()->check(CLI::PositiveNumber);
  };
  auto add_degree = [&](CLI::App* s) {
    s->add_option("--degree", o.degree, "series truncation (default 6, env IAN_TRUNCATION)")
        ->envname("IAN_TRUNCATION")
        ->check(CLI::Range(2, 1 << 20));
  };
  auto add_c = [&](CLI::App* s, const char* help) {
    s->add_option("--c", o.c, help)->required()->check(CLI::PositiveNumber);
  };
  auto add_word = [&](CLI::App* s) {
    s->add_option("--word", o.word, "word in x1..xn")->required();
  };
  struct SpecOpts {
    CLI::Option* inline_opt;
    CLI::Option* file_opt;
  };
  auto add_spec = [&](CLI::App* s) {
    return SpecOpts{s->add_option("--spec", o.spec, "automorphism spec (`|`-separated for lists)"),
                    s->add_option("--spec-file", o.spec_file, "file holding the spec")};
  };
  auto get_spec = [&](const SpecOpts& so) {
    return spec_text(o, so.inline_opt->count(), so.file_opt->count());
  };
  auto single_gen = [&](int rank, const std::string& spec) {
    auto gens = autspec::parse_specs(rank, spec);
    if (gens.size() != 1) {
      throw CliError{IAN_ERR_INVALID_ARGUMENT,
                     "this command takes a single automorphism, got " + dec(gens.size())};
    }
    return std::move(gens[0]);
  };

  using Handler = std::function<void(json&, json&, std::string&)>;
  std::vector<std::pair<CLI::App*, Handler>> commands;

  {
    CLI::App* s = app.add_subcommand("depth", "Filtration depth of an automorphism or subgroup");
    add_n(s);
    add_degree(s);
    SpecOpts so = add_spec(s);
    s->add_flag("--outer", o.outer, "measure modulo inner automorphisms");
    add_format(s);
    commands.emplace_back(s, [&, so](json& params, json& result, std::string& text) {
      std::string spec = get_spec(so);
      params = {{"n", dec(o.n)}, {"degree", dec(o.degree)}, {"outer", o.outer}, {"spec", spec}};
      auto gens = autspec::parse_specs(o.n, spec);
      if (gens.size() == 1 && !o.outer) {
        int kind = 0, depth = 0;
        char* t = nullptr;
        autspec::check(ian_aut_depth(gens[0].get(), o.degree, &kind, &depth, &t));
        text = autspec::take_string(t);
        const char* kind_name = kind == IAN_DEPTH_NOT_IA    ? "not-ia"
                                : kind == IAN_DEPTH_EXACT   ? "exact"
                                                            : "at-least";
        result = {{"mode", "single"},
                  {"kind", kind_name},
                  {"depth", kind == IAN_DEPTH_EXACT ? json(dec(depth)) : json(nullptr)},
                  {"text", text}};
      } else {
        auto raw = raw_view(gens);
        int at_least = 0, level = 0;
        autspec::check(ian_subgroup_depth(raw.data(), static_cast<long>(raw.size()), o.degree,
                                          o.outer ? 1 : 0, &at_least, &level));
        text = at_least ? ">= " + dec(o.degree) : dec(level);
        result = {{"mode", "subgroup"},
                  {"outer", o.outer},
                  {"at_least", at_least == 1},
                  {"level", at_least ? json(nullptr) : json(dec(level))},
                  {"text", text}};
      }
    });
  }

  {
    CLI::App* s = app.add_subcommand("johnson", "Level image of an automorphism in G_c");
    add_n(s);
    add_c(s, "filtration level");
    add_degree(s);
    SpecOpts so = add_spec(s);
    add_format(s);
    commands.emplace_back(s, [&, so](json& params, json& result, std::string& text) {
      std::string spec = get_spec(so);
      params = {{"n", dec(o.n)}, {"c", dec(o.c)}, {"degree", dec(o.degree)}, {"spec", spec}};
      require_level_fits(o.c, o.degree);
      auto a = single_gen(o.n, spec);
      ian_mat* m = nullptr;
      autspec::check(ian_johnson(a.get(), o.c, o.degree, &m));
      autspec::mat_ptr mp(m);
      result = {{"level", dec(o.c)}, {"matrix", mat_json(mp.get())}};
      text = mat_text(mp.get());
    });
  }

  {
    CLI::App* s = app.add_subcommand("outer-depth", "Class modulo inner automorphisms");
    add_n(s);
    add_degree(s);
    SpecOpts so = add_spec(s);
    add_format(s);
    commands.emplace_back(s, [&, so](json& params, json& result, std::string& text) {
      std::string spec = get_spec(so);
      params = {{"n", dec(o.n)}, {"degree", dec(o.degree)}, {"spec", spec}};
      auto a = single_gen(o.n, spec);
      ian_outer* cls = nullptr;
      autspec::check(ian_outer_depth(a.get(), o.degree, &cls));
      autspec::outer_ptr op(cls);
      int bounded = 0;
      autspec::check(ian_outer_is_bounded(op.get(), &bounded));
      if (bounded) {
        result = {{"inner_up_to_budget", true}};
        text = "inner up to the budget";
        return;
      }
      int level = 0;
      autspec::check(ian_outer_level(op.get(), &level));
      char* s2 = nullptr;
      autspec::check(ian_outer_residue_json(op.get(), &s2));
      json residue = json::parse(autspec::take_string(s2));
      ian_mat* img = nullptr;
      autspec::check(ian_outer_image(op.get(), &img));
      autspec::mat_ptr mp(img);
      result = {{"inner_up_to_budget", false},
                {"level", dec(level)},
                {"residue", residue},
                {"image", mat_json(mp.get())}};
      text = "level " + dec(level) + "\nresidue " + plain_list(residue);
    });
  }

  {
    CLI::App* s = app.add_subcommand("map-to-z", "Integer functional on a generated subgroup");
    add_n(s);
    add_degree(s);
    SpecOpts so = add_spec(s);
    s->add_flag("--outer", o.outer, "quotient by inner automorphisms first");
    add_format(s);
    commands.emplace_back(s, [&, so](json& params, json& result, std::string& text) {
      std::string spec = get_spec(so);
      params = {{"n", dec(o.n)}, {"degree", dec(o.degree)}, {"outer", o.outer}, {"spec", spec}};
      auto gens = autspec::parse_specs(o.n, spec);
      auto raw = raw_view(gens);
      ian_zfun* f = nullptr;
      autspec::check(ian_map_to_z(raw.data(), static_cast<long>(raw.size()), o.degree,
                                  o.outer ? 1 : 0, &f));
      autspec::zfun_ptr fp(f);
      int level = 0;
      autspec::check(ian_zfun_level(fp.get(), &level));
      char* s2 = nullptr;
      autspec::check(ian_zfun_divisor_str(fp.get(), &s2));
      std::string divisor = autspec::take_string(s2);
      autspec::check(ian_zfun_functional_json(fp.get(), &s2));
      json functional = json::parse(autspec::take_string(s2));
      autspec::check(ian_zfun_generator_evaluations_json(fp.get(), &s2));
      json evals = json::parse(autspec::take_string(s2));
      result = {{"level", dec(level)},
                {"outer", o.outer},
                {"divisor", divisor},
                {"functional", functional},
                {"generator_evaluations", evals}};
      text = "level " + dec(level) + ", divisor " + divisor + ", generator evaluations " +
             plain_list(evals);
    });
  }

  {
    CLI::App* s = app.add_subcommand("magnus", "Magnus expansion of a word");
    add_n(s);
    add_degree(s);
    add_word(s);
    add_format(s);
    commands.emplace_back(s, [&](json& params, json& result, std::string& text) {
      params = {{"n", dec(o.n)}, {"degree", dec(o.degree)}, {"word", o.word}};
      auto w = parse_cli_word(o.n, o.word);
      ian_series* ser = nullptr;
      autspec::check(ian_magnus_expand(w.get(), o.degree, &ser));
      autspec::series_ptr sp(ser);
      char* s2 = nullptr;
      autspec::check(ian_series_json(sp.get(), &s2));
      result = json::parse(autspec::take_string(s2));
      autspec::check(ian_series_str(sp.get(), &s2));
      text = autspec::take_string(s2);
    });
  }

  {
    CLI::App* s = app.add_subcommand("gamma-depth", "Lower-central depth of a word");
    add_n(s);
    add_degree(s);
    add_word(s);
    add_format(s);
    commands.emplace_back(s, [&](json& params, json& result, std::string& text) {
      params = {{"n", dec(o.n)}, {"degree", dec(o.degree)}, {"word", o.word}};
      auto w = parse_cli_word(o.n, o.word);
      int depth = 0;
      char* t = nullptr;
      autspec::check(ian_gamma_depth(w.get(), o.degree, &depth, &t));
      text = autspec::take_string(t);
      result = {{"depth", depth >= 0 ? json(dec(depth)) : json(nullptr)}, {"text", text}};
    });
  }

  {
    CLI::App* s = app.add_subcommand("basis", "Lyndon basis of a degree component");
    add_n(s);
    add_c(s, "component degree");
    add_format(s);
    commands.emplace_back(s, [&](json& params, json& result, std::string& text) {
      params = {{"n", dec(o.n)}, {"c", dec(o.c)}};
      long size = 0;
      autspec::check(ian_lyndon_basis_size(o.n, o.c, &size));
      json entries = json::array();
      std::ostringstream lines;
      for (long i = 0; i < size; ++i) {
        char* word = nullptr;
        char* tree = nullptr;
        autspec::check(ian_lyndon_basis_entry(o.n, o.c, i, &word, &tree));
        std::string ws = autspec::take_string(word);
        std::string ts = autspec::take_string(tree);
        entries.push_back({{"word", ws}, {"tree", ts}});
        lines << ws << "  " << ts << "\n";
      }
      result = {{"size", dec(size)}, {"entries", entries}};
      text = lines.str();
      if (!text.empty()) text.pop_back();
    });
  }

  {
    CLI::App* s = app.add_subcommand("witt", "Rank of a degree component of the free Lie ring");
    add_n(s);
    add_c(s, "component degree");
    add_format(s);
    commands.emplace_back(s, [&](json& params, json& result, std::string& text) {
      params = {{"n", dec(o.n)}, {"c", dec(o.c)}};
      char* s2 = nullptr;
      autspec::check(ian_witt_rank(o.n, o.c, &s2));
      text = autspec::take_string(s2);
      result = text;
    });
  }

  {
    CLI::App* s = app.add_subcommand("center-check",
                                     "Kernel rank of v -> ([x_i, v])_i on a degree component");
    add_n(s);
    add_c(s, "component degree");
    s->add_option("--modulus", o.modulus, "0 for the integers, or a prime")
        ->check(CLI::Range(0, 1 << 20));
    add_format(s);
    commands.emplace_back(s, [&](json& params, json& result, std::string& text) {
      params = {{"n", dec(o.n)}, {"c", dec(o.c)}, {"modulus", dec(o.modulus)}};
      long kernel = 0;
      autspec::check(ian_center_check(o.n, o.c, o.modulus, &kernel));
      text = dec(kernel);
      result = {{"kernel_rank", text}};
    });
  }

  {
    CLI::App* s = app.add_subcommand("ad-matrix", "Conjugation lattice at a level, with Smith data");
    add_n(s);
    add_c(s, "filtration level");
    add_degree(s);
    add_format(s);
    commands.emplace_back(s, [&](json& params, json& result, std::string& text) {
      params = {{"n", dec(o.n)}, {"c", dec(o.c)}, {"degree", dec(o.degree)}};
      require_level_fits(o.c, o.degree);
      ian_mat* m = nullptr;
      autspec::check(ian_ad_matrix(o.n, o.c, o.degree, &m));
      autspec::mat_ptr mp(m);
      long rank = 0;
      autspec::check(ian_mat_snf_rank(mp.get(), &rank));
      char* s2 = nullptr;
      autspec::check(ian_mat_snf_diagonal_json(mp.get(), &s2));
      json diagonal = json::parse(autspec::take_string(s2));
      result = {{"matrix", mat_json(mp.get())},
                {"snf_rank", dec(rank)},
                {"snf_diagonal", diagonal}};
      text = mat_text(mp.get()) + "\nsnf rank " + dec(rank) + "\nsnf diagonal " +
             plain_list(diagonal);
    });
  }

  {
    CLI::App* s = app.add_subcommand("verify", "Run the seeded invariant suites");
    add_n(s);
    add_degree(s);
    s->add_option("--cases", o.cases, "cases per sampled suite")
        ->check(CLI::Range(1L, 100000000L));
    s->add_option("--seed", o.seed, "PRNG seed");
    add_format(s);
    commands.emplace_back(s, [&](json& params, json& result, std::string& text) {
      params = {{"n", dec(o.n)},
                {"degree", dec(o.degree)},
                {"cases", dec(o.cases)},
                {"seed", std::to_string(o.seed)}};
      char* table = nullptr;
      char* js = nullptr;
      autspec::check(ian_verify_run(o.n, o.degree, o.cases, o.seed, nullptr, &table, &js));
      result = json::parse(autspec::take_string(js));
      text = autspec::take_string(table);
      if (!text.empty() && text.back() == '\n') text.pop_back();
    });
  }

  CLI11_PARSE(app, argc, argv);

  std::string command;
  Handler handler;
  for (auto& [sub, fn] : commands) {
    if (sub->parsed()) {
      command = sub->get_name();
      handler = fn;
    }
  }

  json params = json::object();
  json envelope{{"command", command}, {"params", params}, {"result", nullptr}, {"error", nullptr}};
  int code = IAN_OK;
  std::string message;
  try {
    json result;
    std::string text;
    handler(params, result, text);
    envelope["params"] = params;
    envelope["result"] = result;
    if (o.format == "json") {
      std::cout << envelope.dump() << "\n";
    } else {
      std::cout << text << "\n";
    }
    return 0;
  } catch (const CliError& e) {
    code = e.code;
    message = e.message;
  } catch (const autspec::SyntaxError& e) {
    code = IAN_ERR_PARSE;
    message = e.what();
  } catch (const autspec::ApiError& e) {
    code = e.code;
    message = e.what();
  } catch (const std::exception& e) {
    code = IAN_ERR_INTERNAL;
    message = e.what();
  }

  envelope["params"] = params;
  envelope["error"] = {{"code", ian_errc_name(code)}, {"message", message}};
  if (o.format == "json") {
    std::cout << envelope.dump() << "\n";
  } else {
    std::cerr << "error: " << ian_errc_name(code) << ": " << message << "\n";
  }
  return code;
}
