#include "core/verify.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "core/error.hpp"
#include "core/filtration.hpp"
#include "core/intmat.hpp"
#include "core/lyndon.hpp"
#include "core/rng.hpp"
#include "core/sampling.hpp"
#include "core/series.hpp"
#include "core/word.hpp"

namespace ian {

bool VerifyReport::all_passed() const {
  return std::all_of(suites.begin(), suites.end(),
                     [](const SuiteResult& s) { return s.failed == 0; });
}

std::string VerifyReport::table() const {
  std::ostringstream os;
  size_t width = 4;
  for (const auto& s : suites) width = std::max(width, s.name.size());
  for (const auto& s : suites) {
    os << s.name << std::string(width - s.name.size() + 2, ' ') << s.passed << "/" << s.cases
       << (s.failed ? "  FAIL" : "  ok");
    if (!s.first_failure.empty()) os << "  (" << s.first_failure << ")";
    os << "\n";
  }
  os << (all_passed() ? "all suites passed" : "some suites FAILED") << "\n";
  return os.str();
}

std::string VerifyReport::to_json() const {
  nlohmann::json suites_json = nlohmann::json::array();
  for (const auto& s : suites) {
    suites_json.push_back({{"name", s.name},
                           {"cases", std::to_string(s.cases)},
                           {"passed", std::to_string(s.passed)},
                           {"failed", std::to_string(s.failed)},
                           {"first_failure", s.first_failure}});
  }
  nlohmann::json j{{"rank", std::to_string(rank)},
                   {"truncation", std::to_string(truncation)},
                   {"cases", std::to_string(cases)},
                   {"seed", std::to_string(seed)},
                   {"all_passed", all_passed()},
                   {"suites", suites_json}};
  return j.dump();
}

namespace {

struct Harness {
  int rank;
  int truncation;
  long cases;
  std::uint64_t seed;
  std::vector<SuiteResult> results;

  // Each suite draws from its own stream so that adding or reordering
  // suites does not perturb the others.
  void suite(const std::string& name, long count, const std::function<bool(Rng&)>& one_case) {
    SuiteResult r;
    r.name = name;
    r.cases = count;
    Rng rng(seed * 1000003ull + results.size() + 1);
    for (long i = 0; i < count; ++i) {
      bool ok = false;
      try {
        ok = one_case(rng);
      } catch (const std::exception& e) {
        if (r.first_failure.empty()) r.first_failure = e.what();
      }
      if (ok) {
        ++r.passed;
      } else {
        ++r.failed;
        if (r.first_failure.empty()) r.first_failure = "case " + std::to_string(i) + " failed";
      }
    }
    results.push_back(std::move(r));
  }
};

LieElement random_lie(Rng& rng, int rank, int degree, long bound) {
  const auto& basis = lyndon_basis(rank, degree);
  std::vector<Int> coords(basis.size());
  for (auto& c : coords) c = rng.uniform(-bound, bound);
  return LieElement(rank, degree, std::move(coords));
}

bool depth_at_least(const Word& w, int bound, int truncation) {
  DepthReport d = gamma_depth(w, truncation);
  return !d.depth || *d.depth >= bound;
}

}  // namespace

VerifyReport run_verification(int rank, int truncation, long cases, std::uint64_t seed) {
  if (rank < 2) fail(Errc::invalid_argument, "verification needs rank at least 2");
  if (truncation < 3) fail(Errc::invalid_argument, "verification needs truncation at least 3");
  if (cases < 1) fail(Errc::invalid_argument, "need at least one case");

  const int n = rank;
  const int D = truncation;
  Harness h{rank, truncation, cases, seed, {}};

  h.suite("words/group-laws", cases, [n](Rng& rng) {
    Word u = random_word(rng, n, static_cast<int>(rng.uniform(0, 6)));
    Word v = random_word(rng, n, static_cast<int>(rng.uniform(0, 6)));
    Word w = random_word(rng, n, static_cast<int>(rng.uniform(0, 6)));
    return (u * u.inverse()).is_identity() && (u * v).inverse() == v.inverse() * u.inverse() &&
           (u * v) * w == u * (v * w);
  });

  h.suite("words/commutator-expansion", cases, [n](Rng& rng) {
    Word x = random_word(rng, n, static_cast<int>(rng.uniform(0, 5)));
    Word y = random_word(rng, n, static_cast<int>(rng.uniform(0, 5)));
    Word z = random_word(rng, n, static_cast<int>(rng.uniform(0, 5)));
    bool left = Word::commutator(x, y * z) ==
                Word::commutator(x, z) * Word::commutator(z, Word::commutator(y, x)) *
                    Word::commutator(x, y);
    bool right = Word::commutator(x * y, z) ==
                 Word::commutator(x, z) * Word::commutator(Word::commutator(x, z), y) *
                     Word::commutator(y, z);
    return left && right;
  });

  h.suite("words/parse-roundtrip", cases, [n](Rng& rng) {
    Word w = random_word(rng, n, static_cast<int>(rng.uniform(0, 8)));
    return parse_word(n, w.str()) == w;
  });

  h.suite("aut/conjugation-homomorphism", cases, [n](Rng& rng) {
    Word u = random_word(rng, n, static_cast<int>(rng.uniform(0, 4)));
    Word v = random_word(rng, n, static_cast<int>(rng.uniform(0, 4)));
    return Automorphism::ad(u).then(Automorphism::ad(v)) == Automorphism::ad(u * v);
  });

  h.suite("aut/inverse-roundtrip", cases, [n](Rng& rng) {
    Automorphism a = random_ia(rng, n, static_cast<int>(rng.uniform(1, 4)));
    if (rng.coin()) a = a.then(aut_swap(n, 1, 2));
    return a.then(a.inverse()).is_identity() && a.inverse().then(a).is_identity();
  });

  h.suite("magnus/multiplicative", cases, [n, D](Rng& rng) {
    Word u = random_word(rng, n, static_cast<int>(rng.uniform(0, 5)));
    Word v = random_word(rng, n, static_cast<int>(rng.uniform(0, 5)));
    return magnus_expand(u * v, D) == series_mul(magnus_expand(u, D), magnus_expand(v, D));
  });

  h.suite("magnus/group-inverse", cases, [n, D](Rng& rng) {
    Word u = random_word(rng, n, static_cast<int>(rng.uniform(0, 5)));
    return magnus_expand(u.inverse(), D) == series_inverse(magnus_expand(u, D));
  });

  h.suite("magnus/commutator-superadditive", cases, [n, D](Rng& rng) {
    Word u = random_word(rng, n, static_cast<int>(rng.uniform(1, 3)));
    Word v = random_word(rng, n, static_cast<int>(rng.uniform(1, 3)));
    DepthReport du = gamma_depth(u, D);
    DepthReport dv = gamma_depth(v, D);
    if (!du.depth || !dv.depth) return true;
    return depth_at_least(Word::commutator(u, v), *du.depth + *dv.depth, D);
  });

  {
    auto degree = std::make_shared<int>(0);
    h.suite("lie/basis-count", std::min(D, 6), [n, degree](Rng&) {
      ++*degree;
      return Int(lyndon_basis(n, *degree).size()) == witt_rank(n, *degree);
    });
  }

  h.suite("lie/bracket-bilinear", cases, [n](Rng& rng) {
    int da = 1 + static_cast<int>(rng.uniform(0, 1));
    int db = 1 + static_cast<int>(rng.uniform(0, 1));
    LieElement a = random_lie(rng, n, da, 3);
    LieElement b = random_lie(rng, n, da, 3);
    LieElement c = random_lie(rng, n, db, 3);
    Int k = rng.uniform(-3, 3);
    return bracket(a + b, c) == bracket(a, c) + bracket(b, c) &&
           bracket(a.scaled(k), c) == bracket(a, c).scaled(k);
  });

  h.suite("lie/bracket-antisymmetric", cases, [n](Rng& rng) {
    LieElement a = random_lie(rng, n, 1 + static_cast<int>(rng.uniform(0, 1)), 3);
    LieElement b = random_lie(rng, n, 1 + static_cast<int>(rng.uniform(0, 1)), 3);
    return bracket(a, b) == -bracket(b, a) && bracket(a, a).is_zero();
  });

  h.suite("lie/jacobi", cases, [n](Rng& rng) {
    LieElement a = random_lie(rng, n, 1, 3);
    LieElement b = random_lie(rng, n, 1 + static_cast<int>(rng.uniform(0, 1)), 3);
    LieElement c = random_lie(rng, n, 1 + static_cast<int>(rng.uniform(0, 1)), 3);
    LieElement sum = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) +
                     bracket(c, bracket(a, b));
    return sum.is_zero();
  });

  h.suite("lie/dsw-roundtrip", cases, [n, D](Rng& rng) {
    int d = 1 + static_cast<int>(rng.uniform(0, std::min(3, D - 1) - 1));
    LieElement v = random_lie(rng, n, d, 4);
    return dsw_project(lie_to_series(v, d), d) == v;
  });

  h.suite("lie/lift-roundtrip", cases, [n, D](Rng& rng) {
    int d = 1 + static_cast<int>(rng.uniform(0, std::min(3, D) - 1));
    LieElement v = random_lie(rng, n, d, 2);
    if (v.is_zero()) return true;
    auto [depth, lead] = leading_lie_part(lift_lie_to_word(v), d);
    return depth == d && lead == v;
  });

  h.suite("lattice/snf-contract", cases, [](Rng& rng) {
    IntMatrix a(2 + rng.uniform(0, 3), 2 + rng.uniform(0, 3));
    for (size_t i = 0; i < a.rows(); ++i) {
      for (size_t j = 0; j < a.cols(); ++j) a.at(i, j) = rng.uniform(-6, 6);
    }
    SNFResult s = snf(a);
    Int du = determinant(s.u), dv = determinant(s.v);
    if (!(s.u * a * s.v == s.d)) return false;
    if (!((du == 1 || du == -1) && (dv == 1 || dv == -1))) return false;
    size_t steps = std::min(a.rows(), a.cols());
    for (size_t i = 0; i + 1 < steps; ++i) {
      if (s.d.at(i + 1, i + 1) != 0 && (s.d.at(i, i) == 0 || s.d.at(i + 1, i + 1) % s.d.at(i, i) != 0)) {
        return false;
      }
    }
    return true;
  });

  h.suite("lattice/membership", cases, [](Rng& rng) {
    IntMatrix gens(2 + rng.uniform(0, 2), 1 + rng.uniform(0, 3));
    for (size_t i = 0; i < gens.rows(); ++i) {
      for (size_t j = 0; j < gens.cols(); ++j) gens.at(i, j) = rng.uniform(-4, 4);
    }
    std::vector<Int> c(gens.cols());
    for (auto& e : c) e = rng.uniform(-4, 4);
    std::vector<Int> v = mat_vec(gens, c);
    auto back = lattice_member(v, gens);
    return back.has_value() && mat_vec(gens, *back) == v;
  });

  h.suite("lattice/saturation", cases, [](Rng& rng) {
    IntMatrix gens(2 + rng.uniform(0, 2), 1 + rng.uniform(0, 2));
    for (size_t i = 0; i < gens.rows(); ++i) {
      for (size_t j = 0; j < gens.cols(); ++j) gens.at(i, j) = rng.uniform(-4, 4);
    }
    IntMatrix sat = saturation(gens);
    for (size_t j = 0; j < gens.cols(); ++j) {
      std::vector<Int> col(gens.rows());
      for (size_t i = 0; i < gens.rows(); ++i) col[i] = gens.at(i, j);
      if (!lattice_member(col, sat)) return false;
    }
    IntMatrix again = saturation(sat);
    return again.cols() == sat.cols() && snf(sat).rank() == sat.cols();
  });

  h.suite("filtration/conjugation-depth", cases, [n, D](Rng& rng) {
    Word y = random_word(rng, n, static_cast<int>(rng.uniform(1, 5)));
    DepthReport wd = gamma_depth(y, D);
    AutDepthReport ar = aut_depth(Automorphism::ad(y), D);
    if (wd.depth && *wd.depth < D) {
      return ar.kind == AutDepthReport::Kind::Exact && ar.depth == *wd.depth;
    }
    return ar.kind == AutDepthReport::Kind::AtLeast;
  });

  h.suite("filtration/image-additive", cases, [n, D](Rng& rng) {
    int c = 1 + static_cast<int>(rng.uniform(0, D >= 4 ? 1 : 0));
    Automorphism psi = random_gc(rng, n, c);
    Automorphism phi = random_gc(rng, n, c);
    JohnsonImage jp = johnson(psi, c, c + 2);
    JohnsonImage jq = johnson(phi, c, c + 2);
    JohnsonImage jc = johnson(psi.then(phi), c, c + 2);
    for (size_t i = 0; i < jp.matrix.rows(); ++i) {
      for (size_t j = 0; j < jp.matrix.cols(); ++j) {
        if (jc.matrix.at(i, j) != jp.matrix.at(i, j) + jq.matrix.at(i, j)) return false;
      }
    }
    return true;
  });

  h.suite("filtration/image-kernel", cases, [n, D](Rng& rng) {
    int c = 1 + static_cast<int>(rng.uniform(0, D >= 4 ? 1 : 0));
    Automorphism psi = random_gc(rng, n, c);
    bool zero = true;
    for (const Int& e : johnson(psi, c, c + 2).flatten()) zero = zero && e == 0;
    return zero == aut_depth(psi, c + 1).at_least(c + 1);
  });

  h.suite("filtration/action-on-deep-words", cases, [n, D](Rng& rng) {
    int c = 1 + static_cast<int>(rng.uniform(0, D >= 4 ? 1 : 0));
    Automorphism psi = random_gc(rng, n, c);
    Word x = random_gamma_word(rng, n, 2);
    return depth_at_least(x.inverse() * psi.apply(x), c + 2, c + 2);
  });

  h.suite("filtration/inner-witness", cases, [n, D](Rng& rng) {
    int c = 1 + static_cast<int>(rng.uniform(0, D >= 4 ? 1 : 0));
    Word y = random_gamma_word(rng, n, c);
    auto [depth, lead] = leading_lie_part(y, c + 2);
    if (depth != c) return true;
    auto got = is_inner_mod_next(Automorphism::ad(y), c, c + 2);
    return got.has_value() && *got == lead;
  });

  h.suite("filtration/outer-classes", cases, [n, D](Rng& rng) {
    Word y = random_word(rng, n, static_cast<int>(rng.uniform(1, 4)));
    if (!outer_depth(Automorphism::ad(y), std::min(D, 4)).inner_up_to_budget) return false;
    if (n < 3) return true;
    OuterClass base = outer_depth(aut_conj(n, 1, n), 3);
    OuterClass moved = outer_depth(aut_conj(n, 1, n).then(Automorphism::ad(y)), 3);
    return !base.inner_up_to_budget && !moved.inner_up_to_budget && base.level == 1 &&
           moved.level == 1 && base.residue == moved.residue;
  });

  h.suite("filtration/torsion-probe", cases, [n, D](Rng& rng) {
    int c = 1 + static_cast<int>(rng.uniform(0, D >= 4 ? 1 : 0));
    Automorphism psi = random_gc_move(rng, n, c);
    long p = std::vector<long>{2, 3, 5}[rng.uniform(0, 2)];
    std::vector<Int> v = johnson(psi, c, c + 2).flatten();
    std::vector<Int> pv = v;
    for (auto& e : pv) e *= p;
    const IntMatrix& lat = ad_matrix(n, c, c + 2);
    if (lattice_member(pv, lat).has_value()) return lattice_member(v, lat).has_value();
    return true;
  });

  h.suite("filtration/integer-functional", cases, [n, D](Rng& rng) {
    Automorphism g;
    AutDepthReport rep;
    for (int tries = 0; tries < 32; ++tries) {
      g = random_gc_move(rng, n, 1 + static_cast<int>(rng.uniform(0, D >= 4 ? 1 : 0)));
      rep = aut_depth(g, D);
      if (rep.kind == AutDepthReport::Kind::Exact && rep.depth + 2 <= D) break;
    }
    if (rep.kind != AutDepthReport::Kind::Exact || rep.depth + 2 > D) return true;
    ZFunctional f = map_to_Z({g}, D, false);
    Int e = f.generator_evaluations[0];
    if (e != 1 && e != -1) return false;
    long k = rng.uniform(-3, 3);
    return f.evaluate(g.pow(k)) == k * e;
  });

  {
    auto combos = std::make_shared<std::vector<std::pair<int, int>>>();
    for (int d = 1; d <= std::min(D, 4); ++d) {
      for (int m : {0, 2, 3}) combos->emplace_back(d, m);
    }
    auto next = std::make_shared<size_t>(0);
    h.suite("center/kernel-vanishes", static_cast<long>(combos->size()),
            [n, combos, next](Rng&) {
              auto [d, m] = (*combos)[(*next)++];
              return center_kernel_rank(n, d, m) == 0;
            });
  }

  VerifyReport report;
  report.rank = rank;
  report.truncation = truncation;
  report.cases = cases;
  report.seed = seed;
  report.suites = std::move(h.results);
  return report;
}

}  // namespace ian
