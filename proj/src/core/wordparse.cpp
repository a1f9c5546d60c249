#include <cctype>
#include <string>

#include "core/error.hpp"
#include "core/word.hpp"

namespace ian {

namespace {

// Cursor over the input; all errors carry a 1-based column.
struct Cursor {
  const std::string& text;
  size_t pos = 0;

  [[noreturn]] void die(const std::string& what) const {
    fail(Errc::parse, what + " at column " + std::to_string(pos + 1));
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  long read_int() {
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) die("expected an integer");
    try {
      return std::stol(text.substr(start, pos - start));
    } catch (const std::out_of_range&) {
      pos = start;
      die("integer out of range");
    }
  }
};

Word parse_sequence(Cursor& c, int rank, bool stop_at_bracket);

// atom := '1' | 'x'<digits> | '[' word ',' word ']', optionally '^'<int>.
Word parse_atom(Cursor& c, int rank) {
  Word base;
  if (c.peek() == '1') {
    ++c.pos;
    base = Word::identity(rank);
  } else if (c.peek() == 'x') {
    ++c.pos;
    if (c.done() || !std::isdigit(static_cast<unsigned char>(c.peek()))) {
      c.die("expected a generator index after 'x'");
    }
    long idx = c.read_int();
    if (idx < 1 || idx > rank) {
      fail(Errc::index_range, "generator x" + std::to_string(idx) + " out of range for rank " +
                                  std::to_string(rank));
    }
    base = Word::generator(rank, static_cast<int>(idx));
  } else if (c.peek() == '[') {
    ++c.pos;
    Word u = parse_sequence(c, rank, true);
    c.skip_ws();
    if (c.done() || c.peek() != ',') c.die("expected ',' in commutator");
    ++c.pos;
    Word v = parse_sequence(c, rank, true);
    c.skip_ws();
    if (c.done() || c.peek() != ']') c.die("expected ']' closing commutator");
    ++c.pos;
    base = Word::commutator(u, v);
  } else {
    c.die(std::string("unexpected character '") + c.peek() + "'");
  }

  c.skip_ws();
  if (!c.done() && c.peek() == '^') {
    ++c.pos;
    c.skip_ws();
    long e = c.read_int();
    base = base.pow(e);
  }
  return base;
}

Word parse_sequence(Cursor& c, int rank, bool stop_at_bracket) {
  Word out = Word::identity(rank);
  bool any = false;
  for (;;) {
    c.skip_ws();
    if (c.done()) break;
    if (stop_at_bracket && (c.peek() == ',' || c.peek() == ']')) break;
    out = out * parse_atom(c, rank);
    any = true;
  }
  if (!any) c.die("expected a word");
  return out;
}

}  // namespace

Word parse_word(int rank, const std::string& text) {
  Cursor c{text};
  Word w = parse_sequence(c, rank, false);
  c.skip_ws();
  if (!c.done()) c.die("trailing input");
  return w;
}

}  // namespace ian
