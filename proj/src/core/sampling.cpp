#include "core/sampling.hpp"

#include "core/error.hpp"
#include "core/filtration.hpp"

namespace ian {

namespace {

constexpr int kRetries = 64;

}  // namespace

Word random_word(Rng& rng, int rank, int length) {
  if (rank < 1) fail(Errc::invalid_argument, "rank must be at least 1");
  if (length < 0) fail(Errc::invalid_argument, "length must be nonnegative");
  Word w = Word::identity(rank);
  int last_index = 0, last_sign = 0;
  for (int k = 0; k < length; ++k) {
    // choices are (index, sign) pairs minus the inverse of the previous letter
    int choices = 2 * rank - (last_index ? 1 : 0);
    int pick = static_cast<int>(rng.uniform(0, choices - 1));
    int index = 0, sign = 0;
    for (int i = 1; i <= rank && !index; ++i) {
      for (int s = 1; s >= -1; s -= 2) {
        if (i == last_index && s == -last_sign) continue;
        if (pick-- == 0) {
          index = i;
          sign = s;
          break;
        }
      }
    }
    Word g = Word::generator(rank, index);
    w = w * (sign > 0 ? g : g.inverse());
    last_index = index;
    last_sign = sign;
  }
  return w;
}

Word random_gamma_word(Rng& rng, int rank, int depth) {
  if (rank < 2) fail(Errc::invalid_argument, "rank must be at least 2");
  if (depth < 1) fail(Errc::invalid_argument, "depth must be at least 1");
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    Word w = random_word(rng, rank, static_cast<int>(rng.uniform(1, 3)));
    for (int k = 2; k <= depth; ++k) {
      w = Word::commutator(w, random_word(rng, rank, static_cast<int>(rng.uniform(1, 3))));
    }
    if (!w.is_identity()) return w;
  }
  fail(Errc::internal, "commutator sampling kept collapsing");
}

Automorphism random_ia(Rng& rng, int rank, int moves) {
  if (rank < 2) fail(Errc::invalid_argument, "rank must be at least 2");
  if (moves < 1) fail(Errc::invalid_argument, "moves must be at least 1");
  Automorphism out = Automorphism::identity(rank);
  for (int k = 0; k < moves; ++k) {
    if (rank >= 3 && rng.coin()) {
      int i = static_cast<int>(rng.uniform(1, rank));
      int j = static_cast<int>(rng.uniform(1, rank));
      while (j == i) j = static_cast<int>(rng.uniform(1, rank));
      int l = static_cast<int>(rng.uniform(1, rank));
      while (l == i || l == j) l = static_cast<int>(rng.uniform(1, rank));
      out = out.then(rng.coin() ? aut_mul_comm(rank, i, j, l) : aut_mul_comm(rank, i, j, l).inverse());
    } else {
      int i = static_cast<int>(rng.uniform(1, rank));
      int j = static_cast<int>(rng.uniform(1, rank));
      while (j == i) j = static_cast<int>(rng.uniform(1, rank));
      out = out.then(rng.coin() ? aut_conj(rank, i, j) : aut_conj(rank, i, j).inverse());
    }
  }
  return out;
}

namespace {

// Word over the generators other than x_skip, deep in the lower central
// series: sampled over a smaller alphabet and relabeled past the gap.
Word gamma_word_avoiding(Rng& rng, int rank, int skip, int depth) {
  Word small = random_gamma_word(rng, rank - 1, depth);
  std::vector<Letter> letters;
  letters.reserve(small.letters().size());
  for (Letter l : small.letters()) {
    if (l.index >= skip) ++l.index;
    letters.push_back(l);
  }
  return Word::reduce(rank, letters);
}

// x_i -> w^-1 x_i w for a single i; w must avoid x_i, otherwise the map is
// not invertible. The only nontrivial suffix is [x_i, w].
Automorphism partial_conj(int rank, int i, const Word& w) {
  std::vector<Word> fwd, bwd;
  for (int k = 1; k <= rank; ++k) {
    Word xk = Word::generator(rank, k);
    fwd.push_back(k == i ? w.inverse() * xk * w : xk);
    bwd.push_back(k == i ? w * xk * w.inverse() : xk);
  }
  return Automorphism(Endomorphism(rank, std::move(fwd)), Endomorphism(rank, std::move(bwd)));
}

// x_i -> x_i u for u avoiding x_i; the only nontrivial suffix is u itself.
Automorphism append_word(int rank, int i, const Word& u) {
  std::vector<Word> fwd, bwd;
  for (int k = 1; k <= rank; ++k) {
    Word xk = Word::generator(rank, k);
    fwd.push_back(k == i ? xk * u : xk);
    bwd.push_back(k == i ? xk * u.inverse() : xk);
  }
  return Automorphism(Endomorphism(rank, std::move(fwd)), Endomorphism(rank, std::move(bwd)));
}

Automorphism gc_move(Rng& rng, int rank, int depth) {
  // the single-generator moves need two letters left over, so rank 2 only
  // conjugates whole words (all of its depth-1 kernel is inner anyway)
  if (rank == 2) return Automorphism::ad(random_gamma_word(rng, rank, depth));
  switch (rng.uniform(0, 2)) {
    case 0:
      return Automorphism::ad(random_gamma_word(rng, rank, depth));
    case 1: {
      int i = static_cast<int>(rng.uniform(1, rank));
      return partial_conj(rank, i, gamma_word_avoiding(rng, rank, i, depth));
    }
    default: {
      int i = static_cast<int>(rng.uniform(1, rank));
      return append_word(rank, i, gamma_word_avoiding(rng, rank, i, depth + 1));
    }
  }
}

}  // namespace

Automorphism random_gc_move(Rng& rng, int rank, int depth) {
  if (rank < 2) fail(Errc::invalid_argument, "rank must be at least 2");
  if (depth < 1) fail(Errc::invalid_argument, "depth must be at least 1");
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    Automorphism out = gc_move(rng, rank, depth);
    if (out.is_identity()) continue;
    if (!aut_depth(out, depth).at_least(depth)) {
      fail(Errc::internal, "sampled automorphism misses the requested depth");
    }
    return out;
  }
  fail(Errc::internal, "automorphism sampling kept collapsing");
}

Automorphism random_gc(Rng& rng, int rank, int depth) {
  if (rank < 2) fail(Errc::invalid_argument, "rank must be at least 2");
  if (depth < 1) fail(Errc::invalid_argument, "depth must be at least 1");
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    Automorphism out;
    if (depth == 1 && rng.coin()) {
      out = random_ia(rng, rank, static_cast<int>(rng.uniform(2, 5)));
    } else {
      out = gc_move(rng, rank, depth);
    }
    if (rng.coin()) out = out.then(gc_move(rng, rank, depth));
    if (out.is_identity()) continue;
    int weight = 0;
    for (int i = 1; i <= rank; ++i) weight += out.forward().image(i).length();
    if (weight > 2000) continue;
    if (!aut_depth(out, depth).at_least(depth)) {
      fail(Errc::internal, "sampled automorphism misses the requested depth");
    }
    return out;
  }
  fail(Errc::internal, "automorphism sampling kept collapsing");
}

}  // namespace ian
