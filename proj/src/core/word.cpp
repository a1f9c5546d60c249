#include "core/word.hpp"

#include <sstream>

#include "core/error.hpp"

namespace ian {

namespace {

void check_rank(int rank) {
  if (rank < 1) fail(Errc::invalid_argument, "rank must be at least 1");
}

void check_same_rank(int a, int b) {
  if (a != b) {
    fail(Errc::rank_mismatch,
         "rank mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

// Push with free cancellation against the top of the stack.
void push_reduced(std::vector<Letter>& stack, Letter l) {
  if (!stack.empty() && stack.back().index == l.index && stack.back().sign == -l.sign) {
    stack.pop_back();
  } else {
    stack.push_back(l);
  }
}

}  // namespace

Word Word::identity(int rank) {
  check_rank(rank);
  return Word(rank, {});
}

Word Word::generator(int rank, int index, int sign) {
  check_rank(rank);
  if (index < 1 || index > rank) {
    fail(Errc::index_range, "generator index " + std::to_string(index) +
                                " out of range 1.." + std::to_string(rank));
  }
  if (sign != 1 && sign != -1) fail(Errc::invalid_argument, "letter sign must be +1 or -1");
  return Word(rank, {Letter{index, sign}});
}

Word Word::reduce(int rank, std::span<const Letter> letters) {
  check_rank(rank);
  std::vector<Letter> stack;
  stack.reserve(letters.size());
  for (const Letter& l : letters) {
    if (l.index < 1 || l.index > rank) {
      fail(Errc::index_range, "generator index " + std::to_string(l.index) +
                                  " out of range 1.." + std::to_string(rank));
    }
    if (l.sign != 1 && l.sign != -1) fail(Errc::invalid_argument, "letter sign must be +1 or -1");
    push_reduced(stack, l);
  }
  return Word(rank, std::move(stack));
}

Word Word::operator*(const Word& rhs) const {
  check_same_rank(rank_, rhs.rank_);
  std::vector<Letter> stack = letters_;
  stack.reserve(stack.size() + rhs.letters_.size());
  for (const Letter& l : rhs.letters_) push_reduced(stack, l);
  return Word(rank_, std::move(stack));
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return Word(rank_, std::move(out));  // reversal of a reduced word stays reduced
}

Word Word::pow(long e) const {
  Word base = e < 0 ? inverse() : *this;
  long k = e < 0 ? -e : e;
  Word acc = Word::identity(rank_);
  for (long i = 0; i < k; ++i) acc = acc * base;
  return acc;
}

Word Word::commutator(const Word& a, const Word& b) {
  check_same_rank(a.rank_, b.rank_);
  return a.inverse() * b.inverse() * a * b;
}

bool Word::operator<(const Word& rhs) const {
  if (letters_.size() != rhs.letters_.size()) return letters_.size() < rhs.letters_.size();
  for (size_t i = 0; i < letters_.size(); ++i) {
    const Letter &a = letters_[i], &b = rhs.letters_[i];
    if (a.index != b.index) return a.index < b.index;
    if (a.sign != b.sign) return a.sign > b.sign;  // positive letter first
  }
  return false;
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const Letter& l : letters_) {
    if (!first) os << ' ';
    first = false;
    os << 'x' << l.index;
    if (l.sign < 0) os << "^-1";
  }
  return os.str();
}

Endomorphism::Endomorphism(int rank, std::vector<Word> images) : rank_(rank), images_(std::move(images)) {
  check_rank(rank);
  if (static_cast<int>(images_.size()) != rank) {
    fail(Errc::invalid_argument, "endomorphism needs one image per generator");
  }
  for (const Word& w : images_) check_same_rank(rank_, w.rank());
}

Endomorphism Endomorphism::identity(int rank) {
  check_rank(rank);
  std::vector<Word> images;
  images.reserve(rank);
  for (int i = 1; i <= rank; ++i) images.push_back(Word::generator(rank, i));
  return Endomorphism(rank, std::move(images));
}

const Word& Endomorphism::image(int index) const {
  if (index < 1 || index > rank_) fail(Errc::index_range, "generator index out of range");
  return images_[static_cast<size_t>(index) - 1];
}

Word Endomorphism::apply(const Word& w) const {
  check_same_rank(rank_, w.rank());
  Word out = Word::identity(rank_);
  for (const Letter& l : w.letters()) {
    const Word& img = images_[static_cast<size_t>(l.index) - 1];
    out = out * (l.sign > 0 ? img : img.inverse());
  }
  return out;
}

Endomorphism Endomorphism::then(const Endomorphism& second) const {
  check_same_rank(rank_, second.rank_);
  std::vector<Word> images;
  images.reserve(rank_);
  for (const Word& w : images_) images.push_back(second.apply(w));
  return Endomorphism(rank_, std::move(images));
}

bool Endomorphism::fixes_all_generators() const {
  for (int i = 1; i <= rank_; ++i) {
    if (!(image(i) == Word::generator(rank_, i))) return false;
  }
  return true;
}

Automorphism::Automorphism(Endomorphism forward, Endomorphism backward)
    : forward_(std::move(forward)), backward_(std::move(backward)) {
  check_same_rank(forward_.rank(), backward_.rank());
  if (!forward_.then(backward_).fixes_all_generators() ||
      !backward_.then(forward_).fixes_all_generators()) {
    fail(Errc::not_inverse, "the given backward map does not invert the forward map");
  }
}

Automorphism Automorphism::identity(int rank) {
  return Automorphism(Endomorphism::identity(rank), Endomorphism::identity(rank));
}

Automorphism Automorphism::ad(const Word& y) {
  int n = y.rank();
  std::vector<Word> fwd, bwd;
  fwd.reserve(n);
  bwd.reserve(n);
  Word yi = y.inverse();
  for (int i = 1; i <= n; ++i) {
    Word x = Word::generator(n, i);
    fwd.push_back(yi * x * y);
    bwd.push_back(y * x * yi);
  }
  return Automorphism(Endomorphism(n, std::move(fwd)), Endomorphism(n, std::move(bwd)));
}

Automorphism Automorphism::then(const Automorphism& b) const {
  check_same_rank(rank(), b.rank());
  Automorphism out;
  out.forward_ = forward_.then(b.forward_);
  out.backward_ = b.backward_.then(backward_);  // (b . a)^-1 = a^-1 . b^-1
  return out;
}

Automorphism Automorphism::inverse() const {
  Automorphism out;
  out.forward_ = backward_;
  out.backward_ = forward_;
  return out;
}

Automorphism Automorphism::pow(long e) const {
  Automorphism base = e < 0 ? inverse() : *this;
  long k = e < 0 ? -e : e;
  Automorphism acc = Automorphism::identity(rank());
  for (long i = 0; i < k; ++i) acc = acc.then(base);
  return acc;
}

namespace {

void check_distinct(int i, int j) {
  if (i == j) fail(Errc::invalid_argument, "generator indices must be distinct");
}

std::vector<Word> identity_images(int rank) {
  std::vector<Word> images;
  images.reserve(rank);
  for (int k = 1; k <= rank; ++k) images.push_back(Word::generator(rank, k));
  return images;
}

}  // namespace

Automorphism aut_conj(int rank, int i, int j) {
  check_rank(rank);
  check_distinct(i, j);
  Word xi = Word::generator(rank, i), xj = Word::generator(rank, j);
  auto fwd = identity_images(rank);
  auto bwd = identity_images(rank);
  fwd[static_cast<size_t>(i) - 1] = xj.inverse() * xi * xj;
  bwd[static_cast<size_t>(i) - 1] = xj * xi * xj.inverse();
  return Automorphism(Endomorphism(rank, std::move(fwd)), Endomorphism(rank, std::move(bwd)));
}

Automorphism aut_mul_right(int rank, int i, int j) {
  check_rank(rank);
  check_distinct(i, j);
  Word xi = Word::generator(rank, i), xj = Word::generator(rank, j);
  auto fwd = identity_images(rank);
  auto bwd = identity_images(rank);
  fwd[static_cast<size_t>(i) - 1] = xi * xj;
  bwd[static_cast<size_t>(i) - 1] = xi * xj.inverse();
  return Automorphism(Endomorphism(rank, std::move(fwd)), Endomorphism(rank, std::move(bwd)));
}

Automorphism aut_swap(int rank, int i, int j) {
  check_rank(rank);
  check_distinct(i, j);
  auto images = identity_images(rank);
  std::swap(images[static_cast<size_t>(i) - 1], images[static_cast<size_t>(j) - 1]);
  Endomorphism e(rank, images);
  return Automorphism(e, e);
}

Automorphism aut_inv_gen(int rank, int i) {
  check_rank(rank);
  auto images = identity_images(rank);
  images[static_cast<size_t>(i) - 1] = Word::generator(rank, i, -1);
  Endomorphism e(rank, images);
  return Automorphism(e, e);
}

Automorphism aut_mul_comm(int rank, int i, int j, int k) {
  check_rank(rank);
  check_distinct(j, k);
  if (i == j || i == k) fail(Errc::invalid_argument, "x_i -> x_i [x_j, x_k] needs i distinct from j, k");
  Word xi = Word::generator(rank, i);
  Word xj = Word::generator(rank, j);
  Word xk = Word::generator(rank, k);
  auto fwd = identity_images(rank);
  auto bwd = identity_images(rank);
  fwd[static_cast<size_t>(i) - 1] = xi * Word::commutator(xj, xk);
  bwd[static_cast<size_t>(i) - 1] = xi * Word::commutator(xk, xj);
  return Automorphism(Endomorphism(rank, std::move(fwd)), Endomorphism(rank, std::move(bwd)));
}

}  // namespace ian
