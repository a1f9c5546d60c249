#pragma once

#include <span>
#include <string>
#include <vector>

namespace ian {

// One generator occurrence x_index^sign, index in 1..rank, sign = +1 or -1.
struct Letter {
  int index = 0;
  int sign = +1;

  Letter inverse() const { return {index, -sign}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

// Freely reduced word in F_n. Immutable value; the empty sequence is the
// identity. Every value carries its rank and operations check it.
class Word {
 public:
  Word() = default;

  static Word identity(int rank);
  static Word generator(int rank, int index, int sign = +1);
  // The unique freely reduced word equal to the given letter sequence.
  static Word reduce(int rank, std::span<const Letter> letters);

  int rank() const { return rank_; }
  const std::vector<Letter>& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  bool is_identity() const { return letters_.empty(); }

  Word operator*(const Word& rhs) const;
  Word inverse() const;
  Word pow(long e) const;
  static Word commutator(const Word& a, const Word& b);  // a^-1 b^-1 a b

  friend bool operator==(const Word&, const Word&) = default;
  bool operator<(const Word& rhs) const;  // (length, letters) order, for map keys

  std::string str() const;  // "x1 x2^-1", identity prints "1"

 private:
  Word(int rank, std::vector<Letter> letters) : rank_(rank), letters_(std::move(letters)) {}

  int rank_ = 0;
  std::vector<Letter> letters_;
};

// Generator-image substitution map; images all share the ambient rank.
class Endomorphism {
 public:
  Endomorphism() = default;
  Endomorphism(int rank, std::vector<Word> images);

  static Endomorphism identity(int rank);

  int rank() const { return rank_; }
  const Word& image(int index) const;  // image of x_index
  const std::vector<Word>& images() const { return images_; }

  Word apply(const Word& w) const;
  // Composite applying *this first, then `second`.
  Endomorphism then(const Endomorphism& second) const;
  bool fixes_all_generators() const;

  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;

 private:
  int rank_ = 0;
  std::vector<Word> images_;
};

// An endomorphism together with an explicit inverse; both composites are
// checked to fix every generator at construction.
class Automorphism {
 public:
  Automorphism() = default;
  Automorphism(Endomorphism forward, Endomorphism backward);

  static Automorphism identity(int rank);
  // Conjugation x -> y^-1 x y; its inverse conjugates by y^-1.
  static Automorphism ad(const Word& y);

  int rank() const { return forward_.rank(); }
  const Endomorphism& forward() const { return forward_; }
  const Endomorphism& backward() const { return backward_; }

  Word apply(const Word& w) const { return forward_.apply(w); }
  // compose(a, b) applies a first: result(w) = b(a(w)).
  Automorphism then(const Automorphism& b) const;
  Automorphism inverse() const;
  Automorphism pow(long e) const;
  bool is_identity() const { return forward_.fixes_all_generators(); }

  // Forward images determine the automorphism; the inverse is unique.
  friend bool operator==(const Automorphism& a, const Automorphism& b) {
    return a.forward_ == b.forward_;
  }

 private:
  Endomorphism forward_;
  Endomorphism backward_;
};

inline Automorphism aut_commutator(const Automorphism& a, const Automorphism& b) {
  return a.inverse().then(b.inverse()).then(a).then(b);
}

// Elementary automorphisms used by the CLI and by the samplers.
Automorphism aut_conj(int rank, int i, int j);       // x_i -> x_j^-1 x_i x_j
Automorphism aut_mul_right(int rank, int i, int j);  // x_i -> x_i x_j
Automorphism aut_swap(int rank, int i, int j);
Automorphism aut_inv_gen(int rank, int i);           // x_i -> x_i^-1
Automorphism aut_mul_comm(int rank, int i, int j, int k);  // x_i -> x_i [x_j, x_k]

// Word grammar shared with the CLI: tokens `x<k>`, `x<k>^-1` (and `^<int>`
// powers), whitespace separated; `[u,v]` expands to the commutator; `1` is
// the identity. Throws Errc::parse with a column marker on bad input.
Word parse_word(int rank, const std::string& text);

}  // namespace ian
