#include "autspec.hpp"

#include <cctype>
#include <sstream>
#include <utility>

namespace autspec {

namespace {

std::pair<int, int> position(const std::string& text, size_t off) {
  int line = 1, col = 1;
  for (size_t i = 0; i < off && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void syntax(const std::string& text, size_t off, const std::string& msg) {
  auto [line, col] = position(text, off);
  throw SyntaxError(line, col, msg);
}

size_t skip_ws(const std::string& text, size_t pos, size_t end) {
  while (pos < end && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  return pos;
}

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// Parses a word through the library, turning its column-marked complaints
// into SyntaxError at the word's own position.
word_ptr parse_word_at(int rank, const std::string& text, size_t begin, size_t end) {
  std::string fragment = text.substr(begin, end - begin);
  ian_word* w = nullptr;
  int status = ian_word_parse(rank, fragment.c_str(), &w);
  if (status == IAN_ERR_PARSE || status == IAN_ERR_INDEX_RANGE) {
    syntax(text, begin, ian_last_error());
  }
  check(status);
  return word_ptr(w);
}

long parse_int(const std::string& text, size_t& pos, size_t end) {
  size_t start = pos;
  bool neg = false;
  if (pos < end && (text[pos] == '-' || text[pos] == '+')) {
    neg = text[pos] == '-';
    ++pos;
  }
  if (pos >= end || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
    syntax(text, start, "expected an integer");
  }
  long value = 0;
  while (pos < end && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    value = value * 10 + (text[pos] - '0');
    if (value > 1000000) syntax(text, start, "integer out of range");
    ++pos;
  }
  return neg ? -value : value;
}

// `x<k>` at pos; returns k and advances.
int parse_generator_index(int rank, const std::string& text, size_t& pos, size_t end) {
  size_t start = pos;
  if (pos >= end || text[pos] != 'x') syntax(text, start, "expected a generator like x1");
  ++pos;
  if (pos >= end || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
    syntax(text, start, "expected a generator like x1");
  }
  long k = parse_int(text, pos, end);
  if (k < 1 || k > rank) {
    syntax(text, start, "generator x" + std::to_string(k) + " out of range for rank " +
                            std::to_string(rank));
  }
  return static_cast<int>(k);
}

// One `x<k> -> word` rule into images[k-1].
void parse_rule(int rank, const std::string& text, size_t begin, size_t end,
                std::vector<word_ptr>& images) {
  size_t pos = skip_ws(text, begin, end);
  int k = parse_generator_index(rank, text, pos, end);
  pos = skip_ws(text, pos, end);
  if (pos + 1 >= end || text[pos] != '-' || text[pos + 1] != '>') {
    syntax(text, pos, "expected `->` after the generator");
  }
  pos = skip_ws(text, pos + 2, end);
  size_t stop = end;
  while (stop > pos && std::isspace(static_cast<unsigned char>(text[stop - 1]))) --stop;
  if (pos >= stop) syntax(text, pos, "empty image word");
  if (images[static_cast<size_t>(k - 1)]) {
    syntax(text, begin, "duplicate rule for x" + std::to_string(k));
  }
  images[static_cast<size_t>(k - 1)] = parse_word_at(rank, text, pos, stop);
}

// `;`-separated rules in [begin, end); unnamed generators stay identity.
std::vector<word_ptr> parse_rules(int rank, const std::string& text, size_t begin, size_t end) {
  std::vector<word_ptr> images(static_cast<size_t>(rank));
  size_t pos = begin;
  while (pos < end) {
    size_t semi = text.find(';', pos);
    size_t stop = (semi == std::string::npos || semi >= end) ? end : semi;
    if (skip_ws(text, pos, stop) < stop) parse_rule(rank, text, pos, stop, images);
    pos = stop + (stop < end ? 1 : 0);
  }
  for (int i = 0; i < rank; ++i) {
    if (!images[static_cast<size_t>(i)]) {
      ian_word* w = nullptr;
      check(ian_word_generator(rank, i + 1, 1, &w));
      images[static_cast<size_t>(i)] = word_ptr(w);
    }
  }
  return images;
}

// Standalone `!inv` token, or npos.
size_t find_inv_marker(const std::string& text, size_t begin, size_t end) {
  for (size_t pos = begin; (pos = text.find("!inv", pos)) != std::string::npos && pos < end;
       ++pos) {
    bool left_ok = pos == begin || std::isspace(static_cast<unsigned char>(text[pos - 1]));
    size_t after = pos + 4;
    bool right_ok = after >= end || !is_word_char(text[after]);
    if (left_ok && right_ok) return pos;
  }
  return std::string::npos;
}

aut_ptr parse_freeform(int rank, const std::string& text, size_t begin, size_t end) {
  size_t marker = find_inv_marker(text, begin, end);
  if (marker == std::string::npos) {
    syntax(text, end, "missing `!inv` block with the inverse images");
  }
  if (find_inv_marker(text, marker + 4, end) != std::string::npos) {
    syntax(text, find_inv_marker(text, marker + 4, end), "more than one `!inv` block");
  }
  std::vector<word_ptr> fwd = parse_rules(rank, text, begin, marker);
  std::vector<word_ptr> bwd = parse_rules(rank, text, marker + 4, end);
  std::vector<const ian_word*> fp, bp;
  for (const auto& w : fwd) fp.push_back(w.get());
  for (const auto& w : bwd) bp.push_back(w.get());
  ian_aut* a = nullptr;
  check(ian_aut_build(rank, fp.data(), bp.data(), &a));
  return aut_ptr(a);
}

aut_ptr builtin(int rank, const std::string& name, const std::vector<long>& args,
                const std::string& text, size_t at) {
  auto want = [&](size_t n) {
    if (args.size() != n) {
      syntax(text, at,
             name + " takes " + std::to_string(n) + (n == 1 ? " argument" : " arguments"));
    }
  };
  ian_aut* a = nullptr;
  if (name == "conj") {
    want(2);
    check(ian_aut_conj(rank, static_cast<int>(args[0]), static_cast<int>(args[1]), &a));
  } else if (name == "mul_r") {
    want(2);
    check(ian_aut_mul_right(rank, static_cast<int>(args[0]), static_cast<int>(args[1]), &a));
  } else if (name == "swap") {
    want(2);
    check(ian_aut_swap(rank, static_cast<int>(args[0]), static_cast<int>(args[1]), &a));
  } else if (name == "inv") {
    want(1);
    check(ian_aut_inv_gen(rank, static_cast<int>(args[0]), &a));
  } else {
    syntax(text, at, "unknown built-in `" + name + "`");
  }
  return aut_ptr(a);
}

aut_ptr parse_product(int rank, const std::string& text, size_t begin, size_t end) {
  aut_ptr acc;
  size_t pos = skip_ws(text, begin, end);
  while (pos < end) {
    size_t at = pos;
    size_t name_end = pos;
    while (name_end < end && is_word_char(text[name_end])) ++name_end;
    std::string name = text.substr(pos, name_end - pos);
    if (name.empty()) syntax(text, pos, "expected a built-in name");
    pos = name_end;

    aut_ptr factor;
    if (name == "id") {
      ian_aut* a = nullptr;
      check(ian_aut_identity(rank, &a));
      factor = aut_ptr(a);
    } else {
      if (pos >= end || text[pos] != '(') syntax(text, pos, "expected `(` after " + name);
      size_t close = text.find(')', pos + 1);
      if (close == std::string::npos || close >= end) {
        syntax(text, pos, "missing `)` after " + name + "(");
      }
      if (name == "ad") {
        word_ptr y = parse_word_at(rank, text, pos + 1, close);
        ian_aut* a = nullptr;
        check(ian_aut_ad(y.get(), &a));
        factor = aut_ptr(a);
      } else {
        std::vector<long> args;
        size_t apos = skip_ws(text, pos + 1, close);
        while (apos < close) {
          args.push_back(parse_int(text, apos, close));
          apos = skip_ws(text, apos, close);
          if (apos < close) {
            if (text[apos] != ',') syntax(text, apos, "expected `,` between arguments");
            apos = skip_ws(text, apos + 1, close);
            if (apos >= close) syntax(text, apos, "expected an integer");
          }
        }
        factor = builtin(rank, name, args, text, at);
      }
      pos = close + 1;
    }

    pos = skip_ws(text, pos, end);
    if (pos < end && text[pos] == '^') {
      ++pos;
      long e = parse_int(text, pos, end);
      ian_aut* p = nullptr;
      check(ian_aut_pow(factor.get(), e, &p));
      factor = aut_ptr(p);
      pos = skip_ws(text, pos, end);
    }

    if (acc) {
      ian_aut* c = nullptr;
      check(ian_aut_compose(acc.get(), factor.get(), &c));
      acc = aut_ptr(c);
    } else {
      acc = std::move(factor);
    }
  }
  return acc;
}

aut_ptr parse_one(int rank, const std::string& text, size_t begin, size_t end) {
  if (rank < 1) throw ApiError(IAN_ERR_INVALID_ARGUMENT, "rank must be at least 1");
  size_t pos = skip_ws(text, begin, end);
  while (end > pos && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  if (pos >= end) syntax(text, pos, "empty automorphism spec");
  bool freeform = text[pos] == 'x' && pos + 1 < end &&
                  std::isdigit(static_cast<unsigned char>(text[pos + 1]));
  return freeform ? parse_freeform(rank, text, pos, end) : parse_product(rank, text, pos, end);
}

}  // namespace

std::string take_string(char* s) {
  if (!s) return "";
  std::string out = s;
  ian_string_free(s);
  return out;
}

aut_ptr parse_spec(int rank, const std::string& text) {
  return parse_one(rank, text, 0, text.size());
}

std::vector<aut_ptr> parse_specs(int rank, const std::string& text) {
  std::vector<aut_ptr> out;
  size_t pos = 0;
  for (;;) {
    size_t bar = text.find('|', pos);
    size_t end = bar == std::string::npos ? text.size() : bar;
    out.push_back(parse_one(rank, text, pos, end));
    if (bar == std::string::npos) break;
    pos = bar + 1;
  }
  return out;
}

std::string print_spec(const ian_aut* a) {
  int rank = 0;
  check(ian_aut_rank(a, &rank));
  auto side = [&](bool backward) {
    std::ostringstream os;
    for (int i = 1; i <= rank; ++i) {
      ian_word* w = nullptr;
      check(backward ? ian_aut_backward_image(a, i, &w) : ian_aut_image(a, i, &w));
      word_ptr wp(w);
      char* s = nullptr;
      check(ian_word_str(wp.get(), &s));
      if (i > 1) os << " ; ";
      os << "x" << i << " -> " << take_string(s);
    }
    return os.str();
  };
  return side(false) + " !inv " + side(true);
}

}  // namespace autspec
