// End-to-end acceptance checks. Each check prints one PASS/FAIL line; the
// exit status is nonzero when any fail. Seeds are fixed so reruns are
// comparable.

#include <array>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "core/filtration.hpp"
#include "core/intmat.hpp"
#include "core/lyndon.hpp"
#include "core/rng.hpp"
#include "core/sampling.hpp"
#include "core/series.hpp"
#include "core/word.hpp"

using namespace ian;

namespace {

std::string fail_at(const std::string& where) { return "first failure: " + where; }

bool commutator_expansions(std::string& detail) {
  Rng rng(101);
  for (int i = 0; i < 500; ++i) {
    int rank = i % 2 == 0 ? 2 : 3;
    Word x = random_word(rng, rank, static_cast<int>(rng.uniform(1, 6)));
    Word y = random_word(rng, rank, static_cast<int>(rng.uniform(1, 6)));
    Word z = random_word(rng, rank, static_cast<int>(rng.uniform(1, 6)));

    Word split_right = Word::commutator(x, z) *
                       Word::commutator(z, Word::commutator(y, x)) * Word::commutator(x, y);
    if (Word::commutator(x, y * z) != split_right) {
      detail = fail_at("right split, triple " + std::to_string(i));
      return false;
    }
    Word split_left = Word::commutator(x, z) *
                      Word::commutator(Word::commutator(x, z), y) * Word::commutator(y, z);
    if (Word::commutator(x * y, z) != split_left) {
      detail = fail_at("left split, triple " + std::to_string(i));
      return false;
    }
  }
  detail = "500 triples, both expansions exact";
  return true;
}

bool image_additive_and_kernel(std::string& detail) {
  Rng rng(202);
  for (int i = 0; i < 200; ++i) {
    int c = 1 + i % 3;
    int rank = (i / 3) % 2 == 0 ? 2 : 3;
    int trunc = c + 2;
    Automorphism psi = random_gc(rng, rank, c);
    Automorphism phi = random_gc(rng, rank, c);

    JohnsonImage a = johnson(psi, c, trunc);
    JohnsonImage b = johnson(phi, c, trunc);
    JohnsonImage ab = johnson(psi.then(phi), c, trunc);
    bool zero = true;
    for (size_t r = 0; r < a.matrix.rows(); ++r) {
      for (size_t k = 0; k < a.matrix.cols(); ++k) {
        if (ab.matrix.at(r, k) != a.matrix.at(r, k) + b.matrix.at(r, k)) {
          detail = fail_at("additivity, pair " + std::to_string(i) + ", level " +
                           std::to_string(c));
          return false;
        }
        if (a.matrix.at(r, k) != 0) zero = false;
      }
    }
    if (zero != aut_depth(psi, trunc).at_least(c + 1)) {
      detail = fail_at("kernel, pair " + std::to_string(i) + ", level " + std::to_string(c));
      return false;
    }
  }
  detail = "200 pairs, levels 1..3, ranks 2 and 3";
  return true;
}

bool deep_words_move_deeper(std::string& detail) {
  Rng rng(303);
  for (int i = 0; i < 200; ++i) {
    int c = 1 + i % 3;
    int rank = (i / 3) % 2 == 0 ? 2 : 3;
    Automorphism psi = random_gc(rng, rank, c);
    Word x = random_gamma_word(rng, rank, 2);
    Word moved = x.inverse() * psi.apply(x);
    if (moved.is_identity()) continue;
    DepthReport r = gamma_depth(moved, c + 1);
    if (r.depth) {
      detail = fail_at("pair " + std::to_string(i) + ": depth " + std::to_string(*r.depth) +
                       " at level " + std::to_string(c));
      return false;
    }
  }
  detail = "200 pairs land at depth >= c+2";
  return true;
}

bool conjugation_matches_word_depth(std::string& detail) {
  Rng rng(404);
  for (int i = 0; i < 200; ++i) {
    int rank = i % 2 == 0 ? 2 : 3;
    int want = 1 + i % 4;
    Word y;
    DepthReport measured;
    do {
      y = random_gamma_word(rng, rank, want);
      measured = gamma_depth(y, 5);
    } while (!measured.depth || *measured.depth > 4);
    AutDepthReport a = aut_depth(Automorphism::ad(y), 5);
    if (a.kind != AutDepthReport::Kind::Exact || a.depth != *measured.depth) {
      detail = fail_at("word " + std::to_string(i) + " (" + y.str() + "): aut says " + a.str() +
                       ", word says " + measured.str());
      return false;
    }
  }
  detail = "200 words of depth 1..4";
  return true;
}

bool no_low_degree_centre(std::string& detail) {
  for (int rank = 2; rank <= 3; ++rank) {
    for (int degree = 1; degree <= 5; ++degree) {
      for (int modulus : {0, 2, 3, 5}) {
        long kernel = center_kernel_rank(rank, degree, modulus);
        if (kernel != 0) {
          detail = fail_at("rank " + std::to_string(rank) + ", degree " + std::to_string(degree) +
                           ", modulus " + std::to_string(modulus) + ": kernel rank " +
                           std::to_string(kernel));
          return false;
        }
      }
    }
  }
  detail = "ranks 2..3, degrees 1..5, moduli {0,2,3,5}";
  return true;
}

bool conjugation_lattice_full_rank(std::string& detail) {
  std::string diag;
  for (int rank = 2; rank <= 3; ++rank) {
    for (int c = 1; c <= 4; ++c) {
      const IntMatrix& a = ad_matrix(rank, c, c + 2);
      SNFResult s = snf(a);
      if (Int(static_cast<unsigned long>(s.rank())) != witt_rank(rank, c)) {
        detail = fail_at("rank " + std::to_string(rank) + ", level " + std::to_string(c) +
                         ": snf rank " + std::to_string(s.rank()) + " vs witt " +
                         witt_rank(rank, c).str());
        return false;
      }
      diag += " (" + std::to_string(rank) + "," + std::to_string(c) + ")";
      size_t n = std::min(s.d.rows(), s.d.cols());
      for (size_t k = 0; k < n; ++k) diag += (k == 0 ? " " : ",") + s.d.at(k, k).str();
    }
  }
  detail = "diagonals:" + diag;
  return true;
}

bool lattice_quotient_torsion_free(std::string& detail) {
  Rng rng(707);
  std::map<std::pair<int, int>, SNFResult> cache;
  int vacuous = 0;
  for (int i = 0; i < 200; ++i) {
    int c = 1 + i % 4;
    int rank = (i / 4) % 2 == 0 ? 2 : 3;
    int p = std::array<int, 3>{2, 3, 5}[i % 3];
    const IntMatrix& a = ad_matrix(rank, c, c + 2);
    auto [it, fresh] = cache.try_emplace({rank, c});
    if (fresh) it->second = snf(a);
    const SNFResult& s = it->second;

    Automorphism psi = random_gc_move(rng, rank, c);
    std::vector<Int> v = johnson(psi, c, c + 2).flatten();
    std::vector<Int> pv = v;
    for (Int& x : pv) x *= p;
    bool scaled_in = lattice_member(pv, a, s).has_value();
    bool plain_in = lattice_member(v, a, s).has_value();
    if (scaled_in && !plain_in) {
      detail = fail_at("case " + std::to_string(i) + ": " + std::to_string(p) +
                       "v lies in the lattice, v does not");
      return false;
    }
    if (!scaled_in) ++vacuous;
  }
  detail = "200 cases, levels 1..4, primes {2,3,5}, " + std::to_string(200 - vacuous) +
           " with the multiple inside";
  return true;
}

bool integer_surjections_count_exponents(std::string& detail) {
  struct Setup {
    int rank;
    bool outer;
    int trunc;
    Automorphism gen;
  };
  std::vector<Setup> setups = {
      {3, true, 3, aut_conj(3, 1, 3)},
      {2, false, 4, Automorphism::ad(Word::commutator(Word::generator(2, 1),
                                                      Word::generator(2, 2)))},
  };

  Rng rng(808);
  for (size_t which = 0; which < setups.size(); ++which) {
    const Setup& s = setups[which];
    ZFunctional f = map_to_Z({s.gen}, s.trunc, s.outer);
    if (f.divisor != 1) {
      detail = fail_at("setup " + std::to_string(which) + ": divisor " + f.divisor.str());
      return false;
    }
    Int g = 0;
    for (const Int& e : f.generator_evaluations) g = gcd(g, e);
    if (g != 1) {
      detail = fail_at("setup " + std::to_string(which) + ": evaluation gcd " + g.str());
      return false;
    }
    Int base = f.evaluate(s.gen);
    for (int i = 0; i < 50; ++i) {
      Automorphism word = Automorphism::identity(s.rank);
      long total = 0;
      long factors = rng.uniform(1, 8);
      for (long k = 0; k < factors; ++k) {
        long e = rng.coin() ? 1 : -1;
        total += e;
        word = word.then(e > 0 ? s.gen : s.gen.inverse());
      }
      if (f.evaluate(word) != base * total) {
        detail = fail_at("setup " + std::to_string(which) + ", word " + std::to_string(i) +
                         ": expected " + (base * Int(total)).str() + ", got " +
                         f.evaluate(word).str());
        return false;
      }
    }
  }
  detail = "both subgroups, gcd 1, 100 exponent sums exact";
  return true;
}

bool lyndon_counts_match(std::string& detail) {
  for (int rank = 2; rank <= 4; ++rank) {
    for (int degree = 1; degree <= 8; ++degree) {
      long brute = 0;
      std::vector<int> w(degree, 1);
      while (true) {
        bool lyndon = true;
        for (int shift = 1; shift < degree && lyndon; ++shift) {
          // w must be strictly smaller than each proper rotation.
          for (int k = 0; k < degree; ++k) {
            int lhs = w[k], rhs = w[(k + shift) % degree];
            if (lhs != rhs) {
              lyndon = lhs < rhs;
              break;
            }
            if (k == degree - 1) lyndon = false;  // periodic
          }
        }
        if (lyndon) ++brute;
        int pos = degree - 1;
        while (pos >= 0 && w[pos] == rank) w[pos--] = 1;
        if (pos < 0) break;
        ++w[pos];
      }
      if (Int(brute) != witt_rank(rank, degree) ||
          lyndon_basis(rank, degree).size() != static_cast<size_t>(brute)) {
        detail = fail_at("rank " + std::to_string(rank) + ", degree " + std::to_string(degree) +
                         ": brute " + std::to_string(brute) + ", witt " +
                         witt_rank(rank, degree).str() + ", basis " +
                         std::to_string(lyndon_basis(rank, degree).size()));
        return false;
      }
      if (rank == 2 && degree == 5 && brute != 6) {
        detail = fail_at("spot value (2,5): " + std::to_string(brute));
        return false;
      }
      if (rank == 3 && degree == 2 && brute != 3) {
        detail = fail_at("spot value (3,2): " + std::to_string(brute));
        return false;
      }
    }
  }
  detail = "ranks 2..4, degrees 1..8, spots (2,5)=6 and (3,2)=3";
  return true;
}

bool only_identity_hides(std::string& detail) {
  std::vector<Word> all = {Word::identity(2)};
  std::vector<Letter> letters;
  std::function<void()> extend = [&] {
    for (int index : {1, 2}) {
      for (int sign : {1, -1}) {
        Letter next{index, sign};
        if (!letters.empty() && letters.back() == next.inverse()) continue;
        letters.push_back(next);
        all.push_back(Word::reduce(2, letters));
        if (letters.size() < 6) extend();
        letters.pop_back();
      }
    }
  };
  extend();
  if (all.size() != 1457) {
    detail = fail_at("enumerated " + std::to_string(all.size()) + " words, expected 1457");
    return false;
  }
  for (const Word& w : all) {
    bool marked = !gamma_depth(w, 6).depth.has_value();
    if (marked != w.is_identity()) {
      detail = fail_at("word " + w.str());
      return false;
    }
  }
  detail = "1457 reduced words, identity alone reaches the marker";
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    bool (*run)(std::string&);
  };
  const std::vector<Criterion> checks = {
      {"commutator product expansions hold verbatim", commutator_expansions},
      {"level images add under composition, vanish exactly one level down", image_additive_and_kernel},
      {"depth-c maps move gamma_2 words into gamma_(c+2)", deep_words_move_deeper},
      {"conjugation depth equals the conjugator's word depth", conjugation_matches_word_depth},
      {"bracketing against all generators kills nothing", no_low_degree_centre},
      {"conjugation lattice has full Lyndon rank", conjugation_lattice_full_rank},
      {"conjugation lattice quotient is torsion-free", lattice_quotient_torsion_free},
      {"integer surjections count signed exponents", integer_surjections_count_exponents},
      {"Lyndon basis sizes match brute-force rotation counts", lyndon_counts_match},
      {"only the identity word stays invisible through degree 6", only_identity_hides},
  };

  int failures = 0;
  for (size_t i = 0; i < checks.size(); ++i) {
    std::string detail;
    bool ok = false;
    try {
      ok = checks[i].run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (!ok) ++failures;
    std::printf("%s  %2zu  %s%s%s%s\n", ok ? "PASS" : "FAIL", i + 1, checks[i].label,
                detail.empty() ? "" : "  [", detail.c_str(), detail.empty() ? "" : "]");
  }
  if (failures) std::printf("%d of %zu checks FAILED\n", failures, checks.size());
  else std::printf("all %zu checks passed\n", checks.size());
  return failures == 0 ? 0 : 1;
}
