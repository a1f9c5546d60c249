#include "core/filtration.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "core/error.hpp"
#include "core/series.hpp"

namespace ian {

std::vector<Word> suffixes(const Automorphism& psi) {
  const int n = psi.rank();
  std::vector<Word> out;
  out.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    Word xi = Word::generator(n, i);
    out.push_back(xi.inverse() * psi.apply(xi));
  }
  return out;
}

std::string AutDepthReport::str() const {
  switch (kind) {
    case Kind::NotIA:
      return "not IA";
    case Kind::AtLeast:
      return ">= " + std::to_string(truncation);
    case Kind::Exact:
    default:
      return std::to_string(depth);
  }
}

AutDepthReport aut_depth(const Automorphism& psi, int truncation) {
  if (truncation < 1) fail(Errc::invalid_argument, "truncation must be at least 1");
  AutDepthReport rep;
  rep.truncation = truncation;
  int best = truncation + 1;
  for (const Word& w : suffixes(psi)) {
    DepthReport d = gamma_depth(w, truncation);
    if (d.depth && *d.depth < best) best = *d.depth;
  }
  if (best == 1) {
    rep.kind = AutDepthReport::Kind::NotIA;
  } else if (best > truncation) {
    rep.kind = AutDepthReport::Kind::AtLeast;
  } else {
    rep.kind = AutDepthReport::Kind::Exact;
    rep.depth = best - 1;
  }
  return rep;
}

std::vector<Int> JohnsonImage::flatten() const {
  std::vector<Int> out;
  out.reserve(matrix.rows() * matrix.cols());
  for (size_t i = 0; i < matrix.rows(); ++i) {
    for (size_t j = 0; j < matrix.cols(); ++j) out.push_back(matrix.at(i, j));
  }
  return out;
}

JohnsonImage johnson(const Automorphism& psi, int level, int truncation) {
  if (level < 1) fail(Errc::invalid_argument, "level must be at least 1");
  if (truncation < level + 2) {
    fail(Errc::truncation_too_small, "a level-" + std::to_string(level) +
                                         " image needs truncation at least " +
                                         std::to_string(level + 2));
  }
  const int n = psi.rank();
  const auto& target = lyndon_basis(n, level + 1);

  JohnsonImage im;
  im.rank = n;
  im.level = level;
  im.matrix = IntMatrix(static_cast<size_t>(n), target.size());

  int row = 0;
  for (const Word& w : suffixes(psi)) {
    Series delta = magnus_expand(w, level + 1) - Series::one(n, level + 1);
    auto low = delta.lowest_degree();
    if (low && *low <= level) {
      fail(Errc::depth_too_low, "generator suffix has depth " + std::to_string(*low) +
                                    ", below the requested level");
    }
    LieElement h = dsw_project(delta.homogeneous_part(level + 1), level + 1);
    for (size_t j = 0; j < target.size(); ++j) im.matrix.at(static_cast<size_t>(row), j) = h.coord(j);
    ++row;
  }
  return im;
}

namespace {

struct AdLattice {
  IntMatrix matrix;
  SNFResult decomp;
};

const AdLattice& ad_lattice(int rank, int level) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<const AdLattice>> cache;
  const std::pair<int, int> key{rank, level};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }

  const auto& basis = lyndon_basis(rank, level);
  const auto& target = lyndon_basis(rank, level + 1);
  auto data = std::make_unique<AdLattice>();
  data->matrix = IntMatrix(static_cast<size_t>(rank) * target.size(), basis.size());
  for (size_t j = 0; j < basis.size(); ++j) {
    Word y = lyndon_tree_word(rank, basis[j]);
    std::vector<Int> col = johnson(Automorphism::ad(y), level, level + 2).flatten();
    for (size_t i = 0; i < col.size(); ++i) data->matrix.at(i, j) = col[i];
  }
  data->decomp = snf(data->matrix);

  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.try_emplace(key, std::move(data));
  return *it->second;
}

std::vector<Int> residue_vector(const SNFResult& s, const std::vector<Int>& v) {
  std::vector<Int> w = mat_vec(s.u, v);
  const size_t r = s.rank();
  for (size_t i = 0; i < r; ++i) {
    const Int& di = s.d.at(i, i);
    w[i] %= di;
    if (w[i] < 0) w[i] += di;
  }
  return w;
}

}  // namespace

const IntMatrix& ad_matrix(int rank, int level, int truncation) {
  if (level < 1) fail(Errc::invalid_argument, "level must be at least 1");
  if (truncation < level + 2) {
    fail(Errc::truncation_too_small, "a level-" + std::to_string(level) +
                                         " image needs truncation at least " +
                                         std::to_string(level + 2));
  }
  return ad_lattice(rank, level).matrix;
}

std::optional<LieElement> is_inner_mod_next(const Automorphism& psi, int level, int truncation) {
  JohnsonImage im = johnson(psi, level, truncation);
  const AdLattice& lat = ad_lattice(psi.rank(), level);
  auto coeffs = lattice_member(im.flatten(), lat.matrix, lat.decomp);
  if (!coeffs) return std::nullopt;
  return LieElement(psi.rank(), level, std::move(*coeffs));
}

OuterClass outer_depth(const Automorphism& psi, int truncation) {
  OuterClass out;
  out.truncation = truncation;
  Automorphism cur = psi;
  for (int round = 0;; ++round) {
    if (round > truncation + 2) fail(Errc::internal, "conjugation stripping failed to gain depth");
    AutDepthReport rep = aut_depth(cur, truncation);
    if (rep.kind == AutDepthReport::Kind::NotIA) {
      fail(Errc::not_ia, "automorphism acts nontrivially on the abelianization");
    }
    if (rep.kind == AutDepthReport::Kind::AtLeast || rep.depth + 2 > truncation) {
      out.inner_up_to_budget = true;
      out.representative = cur;
      return out;
    }
    const int c = rep.depth;
    JohnsonImage im = johnson(cur, c, truncation);
    std::vector<Int> v = im.flatten();
    const AdLattice& lat = ad_lattice(cur.rank(), c);
    auto coeffs = lattice_member(v, lat.matrix, lat.decomp);
    if (!coeffs) {
      out.level = c;
      out.representative = cur;
      out.image = std::move(im);
      out.residue = residue_vector(lat.decomp, v);
      return out;
    }
    LieElement y(cur.rank(), c, std::move(*coeffs));
    cur = cur.then(Automorphism::ad(lift_lie_to_word(-y)));
  }
}

namespace {

void check_generators(const std::vector<Automorphism>& gens) {
  if (gens.empty()) fail(Errc::invalid_argument, "need at least one generator");
  const int n = gens.front().rank();
  for (const auto& g : gens) {
    if (g.rank() != n) fail(Errc::rank_mismatch, "generators must share one rank");
  }
  if (std::all_of(gens.begin(), gens.end(), [](const Automorphism& g) { return g.is_identity(); })) {
    fail(Errc::trivial_subgroup, "every generator is the identity");
  }
}

}  // namespace

SubgroupDepth subgroup_depth(const std::vector<Automorphism>& gens, int truncation, bool outer) {
  check_generators(gens);
  SubgroupDepth out;
  out.truncation = truncation;
  if (!outer) {
    int best = truncation;
    for (const auto& g : gens) {
      AutDepthReport rep = aut_depth(g, truncation);
      if (rep.kind == AutDepthReport::Kind::NotIA) {
        fail(Errc::not_ia, "a generator acts nontrivially on the abelianization");
      }
      if (rep.kind == AutDepthReport::Kind::Exact) best = std::min(best, rep.depth);
    }
    if (best == truncation) {
      out.at_least = true;
      out.level = truncation;
    } else {
      out.level = best;
    }
  } else {
    int best = truncation;
    bool any = false;
    for (const auto& g : gens) {
      OuterClass oc = outer_depth(g, truncation);
      if (!oc.inner_up_to_budget) {
        any = true;
        best = std::min(best, oc.level);
      }
    }
    if (!any) {
      fail(Errc::all_inner_up_to_budget, "every generator is inner as far as the truncation resolves");
    }
    out.level = best;
  }
  return out;
}

Int ZFunctional::evaluate(const Automorphism& g) const {
  if (g.rank() != rank) fail(Errc::rank_mismatch, "automorphism rank does not match the functional");
  Automorphism cur = g;
  if (outer) {
    for (int round = 0;; ++round) {
      if (round > level + 2) fail(Errc::internal, "conjugation stripping failed to gain depth");
      AutDepthReport rep = aut_depth(cur, truncation);
      if (rep.kind == AutDepthReport::Kind::NotIA) {
        fail(Errc::not_ia, "automorphism acts nontrivially on the abelianization");
      }
      if (rep.at_least(level)) break;
      auto y = is_inner_mod_next(cur, rep.depth, truncation);
      if (!y) fail(Errc::depth_too_low, "outer class sits below the functional's level");
      cur = cur.then(Automorphism::ad(lift_lie_to_word(-*y)));
    }
  }
  std::vector<Int> v = johnson(cur, level, truncation).flatten();
  if (v.size() != functional.size()) fail(Errc::internal, "image size does not match the functional");
  Int s = 0;
  for (size_t i = 0; i < v.size(); ++i) s += functional[i] * v[i];
  if (s % divisor != 0) {
    fail(Errc::invalid_argument, "value not divisible by the divisor; element lies outside the subgroup");
  }
  return s / divisor;
}

ZFunctional map_to_Z(const std::vector<Automorphism>& gens, int truncation, bool outer) {
  check_generators(gens);
  const int n = gens.front().rank();

  ZFunctional f;
  f.rank = n;
  f.truncation = truncation;
  f.outer = outer;

  std::vector<std::vector<Int>> taus;
  if (!outer) {
    int best = truncation;
    for (const auto& g : gens) {
      AutDepthReport rep = aut_depth(g, truncation);
      if (rep.kind == AutDepthReport::Kind::NotIA) {
        fail(Errc::not_ia, "a generator acts nontrivially on the abelianization");
      }
      if (rep.kind == AutDepthReport::Kind::Exact) best = std::min(best, rep.depth);
    }
    if (best == truncation || best + 2 > truncation) {
      fail(Errc::truncation_too_small, "generators sit deeper than the truncation resolves");
    }
    f.level = best;
    for (const auto& g : gens) taus.push_back(johnson(g, best, truncation).flatten());

    const size_t dim = taus.front().size();
    size_t pick = dim;
    for (size_t p = 0; p < dim && pick == dim; ++p) {
      for (const auto& t : taus) {
        if (t[p] != 0) {
          pick = p;
          break;
        }
      }
    }
    if (pick == dim) fail(Errc::internal, "no coordinate sees any generator");
    f.functional.assign(dim, 0);
    f.functional[pick] = 1;
    for (const auto& t : taus) f.generator_evaluations.push_back(t[pick]);
  } else {
    int best = truncation;
    bool any = false;
    std::vector<OuterClass> classes;
    classes.reserve(gens.size());
    for (const auto& g : gens) {
      classes.push_back(outer_depth(g, truncation));
      if (!classes.back().inner_up_to_budget) {
        any = true;
        best = std::min(best, classes.back().level);
      }
    }
    if (!any) {
      fail(Errc::all_inner_up_to_budget, "every generator is inner as far as the truncation resolves");
    }
    f.level = best;

    const AdLattice& lat = ad_lattice(n, best);
    const size_t m = lat.matrix.rows();
    for (const auto& oc : classes) {
      if (!oc.inner_up_to_budget && oc.level == best) {
        taus.push_back(oc.image.flatten());
      } else {
        taus.emplace_back(m, Int(0));
      }
    }

    // Rows of the transform below the lattice rank annihilate the lattice;
    // the class of some generator escapes its saturation, so a row that sees
    // it exists.
    const size_t r = lat.decomp.rank();
    size_t pick = m;
    for (size_t row = r; row < m && pick == m; ++row) {
      for (const auto& t : taus) {
        Int s = 0;
        for (size_t j = 0; j < m; ++j) s += lat.decomp.u.at(row, j) * t[j];
        if (s != 0) {
          pick = row;
          break;
        }
      }
    }
    if (pick == m) fail(Errc::internal, "no annihilating functional sees the outer class");
    f.functional.resize(m);
    for (size_t j = 0; j < m; ++j) f.functional[j] = lat.decomp.u.at(pick, j);
    for (const auto& t : taus) {
      Int s = 0;
      for (size_t j = 0; j < m; ++j) s += f.functional[j] * t[j];
      f.generator_evaluations.push_back(s);
    }
  }

  Int d = 0;
  for (const auto& e : f.generator_evaluations) d = gcd(d, e);
  f.divisor = d;
  for (auto& e : f.generator_evaluations) e /= d;
  return f;
}

}  // namespace ian
