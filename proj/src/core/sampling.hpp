#pragma once

#include "core/rng.hpp"
#include "core/word.hpp"

namespace ian {

// Freely reduced word of exactly the given length.
Word random_word(Rng& rng, int rank, int length);

// Nontrivial word of lower-central depth at least `depth`: a left-normed
// commutator of short random words, retried past collapses.
Word random_gamma_word(Rng& rng, int rank, int depth);

// Product of `moves` random conjugation moves (rank >= 3 mixes in
// commutator-append moves); acts trivially on the abelianization.
Automorphism random_ia(Rng& rng, int rank, int moves);

// One elementary move of filtration depth at least `depth`: a conjugation
// by a deep word, a deep conjugation of a single generator, or a deep
// append to a single generator. Powers of a single move stay short, which
// composites do not.
Automorphism random_gc_move(Rng& rng, int rank, int depth);

// Nontrivial automorphism of filtration depth at least `depth`: one or two
// elementary moves; the depth is re-checked before release.
Automorphism random_gc(Rng& rng, int rank, int depth);

}  // namespace ian
