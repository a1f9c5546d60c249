#include "core/lyndon.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <tuple>

#include "core/error.hpp"
#include "core/intmat.hpp"

namespace ian {

namespace {

void check_params(int rank, int degree) {
  if (rank < 1) fail(Errc::invalid_argument, "rank must be at least 1");
  if (degree < 1) fail(Errc::invalid_argument, "degree must be at least 1");
}

Int ipow(int base, int exp) {
  Int r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

int mobius(int d) {
  int cnt = 0;
  for (int p = 2; static_cast<long>(p) * p <= d; ++p) {
    if (d % p == 0) {
      d /= p;
      if (d % p == 0) return 0;
      ++cnt;
    }
  }
  if (d > 1) ++cnt;
  return cnt % 2 == 0 ? 1 : -1;
}

}  // namespace

std::vector<Foliage> lyndon_words(int rank, int length) {
  check_params(rank, length);
  std::vector<Foliage> out;
  Foliage w{1};
  for (;;) {
    if (static_cast<int>(w.size()) == length) out.push_back(w);
    size_t k = w.size();
    w.resize(static_cast<size_t>(length));
    for (size_t i = k; i < w.size(); ++i) w[i] = w[i - k];
    while (!w.empty() && w.back() == rank) w.pop_back();
    if (w.empty()) break;
    ++w.back();
  }
  return out;
}

Int witt_rank(int rank, int degree) {
  check_params(rank, degree);
  Int total = 0;
  for (int d = 1; d <= degree; ++d) {
    if (degree % d != 0) continue;
    int mu = mobius(d);
    if (mu != 0) total += Int(mu) * ipow(rank, degree / d);
  }
  return total / degree;
}

const std::vector<Foliage>& lyndon_basis(int rank, int degree) {
  check_params(rank, degree);
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<const std::vector<Foliage>>> cache;
  std::pair<int, int> key{rank, degree};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto computed = std::make_unique<const std::vector<Foliage>>(lyndon_words(rank, degree));
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.try_emplace(key, std::move(computed));
  return *it->second;
}

size_t standard_split(const Foliage& w) {
  if (w.size() < 2) fail(Errc::invalid_argument, "standard factorization needs length >= 2");
  size_t best = 1;
  for (size_t s = 2; s < w.size(); ++s) {
    if (std::lexicographical_compare(w.begin() + static_cast<long>(s), w.end(),
                                     w.begin() + static_cast<long>(best), w.end())) {
      best = s;
    }
  }
  return best;
}

std::string lyndon_tree_str(const Foliage& w) {
  if (w.empty()) fail(Errc::invalid_argument, "empty foliage");
  if (w.size() == 1) return "x" + std::to_string(w[0]);
  size_t s = standard_split(w);
  Foliage left(w.begin(), w.begin() + static_cast<long>(s));
  Foliage right(w.begin() + static_cast<long>(s), w.end());
  return "[" + lyndon_tree_str(left) + "," + lyndon_tree_str(right) + "]";
}

Word lyndon_tree_word(int rank, const Foliage& w) {
  if (w.empty()) fail(Errc::invalid_argument, "empty foliage");
  if (w.size() == 1) return Word::generator(rank, w[0]);
  size_t s = standard_split(w);
  Foliage left(w.begin(), w.begin() + static_cast<long>(s));
  Foliage right(w.begin() + static_cast<long>(s), w.end());
  return Word::commutator(lyndon_tree_word(rank, left), lyndon_tree_word(rank, right));
}

LieElement::LieElement(int rank, int degree) : rank_(rank), degree_(degree) {
  check_params(rank, degree);
  coords_.resize(lyndon_basis(rank, degree).size());
}

LieElement::LieElement(int rank, int degree, std::vector<Int> coords)
    : rank_(rank), degree_(degree), coords_(std::move(coords)) {
  check_params(rank, degree);
  if (coords_.size() != lyndon_basis(rank, degree).size()) {
    fail(Errc::dimension_mismatch, "coordinate vector length != basis size");
  }
}

LieElement LieElement::basis_element(int rank, const Foliage& w) {
  LieElement out(rank, static_cast<int>(w.size()));
  const auto& basis = lyndon_basis(rank, out.degree_);
  auto it = std::lower_bound(basis.begin(), basis.end(), w);
  if (it == basis.end() || *it != w) fail(Errc::invalid_argument, "not a Lyndon word");
  out.coords_[static_cast<size_t>(it - basis.begin())] = 1;
  return out;
}

bool LieElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Int& c) { return c == 0; });
}

namespace {

void check_same_shape(const LieElement& a, const LieElement& b) {
  if (a.rank() != b.rank()) fail(Errc::rank_mismatch, "ranks differ");
  if (a.degree() != b.degree()) fail(Errc::dimension_mismatch, "degrees differ");
}

}  // namespace

LieElement LieElement::operator+(const LieElement& rhs) const {
  check_same_shape(*this, rhs);
  LieElement out = *this;
  for (size_t i = 0; i < coords_.size(); ++i) out.coords_[i] += rhs.coords_[i];
  return out;
}

LieElement LieElement::operator-(const LieElement& rhs) const {
  check_same_shape(*this, rhs);
  LieElement out = *this;
  for (size_t i = 0; i < coords_.size(); ++i) out.coords_[i] -= rhs.coords_[i];
  return out;
}

LieElement LieElement::operator-() const { return scaled(-1); }

LieElement LieElement::scaled(const Int& k) const {
  LieElement out = *this;
  for (Int& c : out.coords_) c *= k;
  return out;
}

std::string LieElement::str() const {
  const auto& basis = lyndon_basis(rank_, degree_);
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coords_.size(); ++i) {
    Int c = coords_[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    if (c != 1) os << c << " ";
    os << lyndon_tree_str(basis[i]);
  }
  if (first) return "0";
  return os.str();
}

namespace {

LieElement bracket_words(int rank, const Foliage& u, const Foliage& v);

// Bilinear expansion against a single basis word on the left.
LieElement bracket_left_word(int rank, const Foliage& u, const LieElement& b) {
  LieElement out(rank, static_cast<int>(u.size()) + b.degree());
  const auto& basis = lyndon_basis(rank, b.degree());
  for (size_t j = 0; j < basis.size(); ++j) {
    if (b.coord(j) == 0) continue;
    out = out + bracket_words(rank, u, basis[j]).scaled(b.coord(j));
  }
  return out;
}

// [u,v] for basis words, collected into the Lyndon basis: antisymmetry to
// order the pair, then either a standard concatenation or the Jacobi
// rewriting [[x,y],v] = [x,[y,v]] + [[x,v],y] on u = xy.
LieElement bracket_words(int rank, const Foliage& u, const Foliage& v) {
  int degree = static_cast<int>(u.size() + v.size());
  if (u == v) return LieElement(rank, degree);
  if (v < u) return -bracket_words(rank, v, u);

  static std::mutex mu;
  static std::map<std::tuple<int, Foliage, Foliage>, LieElement> cache;
  std::tuple<int, Foliage, Foliage> key{rank, u, v};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  LieElement result(rank, degree);
  Foliage uv = u;
  uv.insert(uv.end(), v.begin(), v.end());
  if (u.size() == 1 || standard_split(uv) == u.size()) {
    result = LieElement::basis_element(rank, uv);
  } else {
    size_t s = standard_split(u);
    Foliage x(u.begin(), u.begin() + static_cast<long>(s));
    Foliage y(u.begin() + static_cast<long>(s), u.end());
    result = bracket_left_word(rank, x, bracket_words(rank, y, v)) -
             bracket_left_word(rank, y, bracket_words(rank, x, v));
  }

  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.try_emplace(std::move(key), std::move(result));
  return it->second;
}

}  // namespace

LieElement bracket(const LieElement& a, const LieElement& b) {
  if (a.rank() != b.rank()) fail(Errc::rank_mismatch, "ranks differ");
  int rank = a.rank();
  LieElement out(rank, a.degree() + b.degree());
  const auto& basis_a = lyndon_basis(rank, a.degree());
  const auto& basis_b = lyndon_basis(rank, b.degree());
  for (size_t i = 0; i < basis_a.size(); ++i) {
    if (a.coord(i) == 0) continue;
    for (size_t j = 0; j < basis_b.size(); ++j) {
      if (b.coord(j) == 0) continue;
      out = out + bracket_words(rank, basis_a[i], basis_b[j]).scaled(a.coord(i) * b.coord(j));
    }
  }
  return out;
}

namespace {

// Associative expansion of a basis word's bracketing, memoized at its own
// degree.
const Series& basis_series(int rank, const Foliage& w) {
  static std::mutex mu;
  static std::map<std::pair<int, Foliage>, std::unique_ptr<const Series>> cache;
  std::pair<int, Foliage> key{rank, w};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }

  Series s(rank, static_cast<int>(w.size()));
  if (w.size() == 1) {
    s.add_term({w[0]}, 1);
  } else {
    size_t split = standard_split(w);
    Foliage left(w.begin(), w.begin() + static_cast<long>(split));
    Foliage right(w.begin() + static_cast<long>(split), w.end());
    Series a = basis_series(rank, left);
    Series b = basis_series(rank, right);
    Series aw(rank, static_cast<int>(w.size())), bw = aw;
    for (const auto& [m, c] : a.terms()) aw.add_term(m, c);
    for (const auto& [m, c] : b.terms()) bw.add_term(m, c);
    s = series_mul(aw, bw) - series_mul(bw, aw);
  }

  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.try_emplace(std::move(key), std::make_unique<const Series>(std::move(s)));
  return *it->second;
}

}  // namespace

Series lie_to_series(const LieElement& v, int truncation) {
  Series out(v.rank(), truncation);
  const auto& basis = lyndon_basis(v.rank(), v.degree());
  for (size_t i = 0; i < basis.size(); ++i) {
    if (v.coord(i) == 0) continue;
    for (const auto& [m, c] : basis_series(v.rank(), basis[i]).terms()) {
      out.add_term(m, c * v.coord(i));
    }
  }
  return out;
}

LieElement dsw_project(const Series& h, int degree) {
  if (degree < 1) fail(Errc::invalid_argument, "degree must be at least 1");
  int rank = h.rank();
  for (const auto& [m, c] : h.terms()) {
    if (static_cast<int>(m.size()) != degree) {
      fail(Errc::invalid_argument, "input is not homogeneous of the stated degree");
    }
  }

  // theta: left-normed bracketing, monomial by monomial
  LieElement theta(rank, degree);
  for (const auto& [m, c] : h.terms()) {
    LieElement l = LieElement::basis_element(rank, {m[0]});
    for (size_t k = 1; k < m.size(); ++k) {
      l = bracket(l, LieElement::basis_element(rank, {m[k]}));
    }
    theta = theta + l.scaled(c);
  }

  // h is a Lie element iff theta(h) = degree * h associatively
  Series scaled_h(rank, h.truncation());
  for (const auto& [m, c] : h.terms()) scaled_h.add_term(m, c * degree);
  if (lie_to_series(theta, h.truncation()) != scaled_h) {
    fail(Errc::not_lie, "input is not a Lie element");
  }

  std::vector<Int> coords = theta.coords();
  for (Int& c : coords) {
    if (c % degree != 0) fail(Errc::not_lie, "projection is not integral");
    c /= degree;
  }
  return LieElement(rank, degree, std::move(coords));
}

std::pair<int, LieElement> leading_lie_part(const Word& w, int truncation) {
  if (w.is_identity()) fail(Errc::identity_word, "the identity has no leading part");
  DepthReport r = gamma_depth(w, truncation);
  if (!r.depth) {
    fail(Errc::truncation_too_small,
         "depth exceeds the truncation; raise it to expose the leading part");
  }
  int c = *r.depth;
  Series mu = magnus_expand(w, truncation);
  mu.add_term({}, -1);
  return {c, dsw_project(mu.homogeneous_part(c), c)};
}

Word lift_lie_to_word(const LieElement& v) {
  if (v.is_zero()) fail(Errc::zero_element, "cannot lift the zero element");
  const auto& basis = lyndon_basis(v.rank(), v.degree());
  Word out = Word::identity(v.rank());
  for (size_t i = 0; i < basis.size(); ++i) {
    const Int& e = v.coord(i);
    if (e == 0) continue;
    if (e > std::numeric_limits<long>::max() || e < std::numeric_limits<long>::min()) {
      fail(Errc::invalid_argument, "coordinate too large to realize as a word");
    }
    out = out * lyndon_tree_word(v.rank(), basis[i]).pow(static_cast<long>(e));
  }
  return out;
}

long center_kernel_rank(int rank, int degree, int modulus) {
  check_params(rank, degree);
  if (rank < 2) fail(Errc::invalid_argument, "rank must be at least 2");
  if (modulus != 0) {
    bool prime = modulus >= 2;
    for (int p = 2; static_cast<long>(p) * p <= modulus && prime; ++p) {
      if (modulus % p == 0) prime = false;
    }
    if (!prime) fail(Errc::invalid_argument, "modulus must be 0 or a prime");
  }

  // SNF diagonal of the stacked bracket map, cached per (rank, degree)
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<Int>> cache;
  std::pair<int, int> key{rank, degree};
  std::vector<Int> diag;
  bool have = false;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) {
      diag = it->second;
      have = true;
    }
  }
  if (!have) {
    const auto& basis = lyndon_basis(rank, degree);
    size_t dim_lo = basis.size();
    size_t dim_hi = lyndon_basis(rank, degree + 1).size();
    IntMatrix m(static_cast<size_t>(rank) * dim_hi, dim_lo);
    for (size_t j = 0; j < dim_lo; ++j) {
      LieElement bj = LieElement::basis_element(rank, basis[j]);
      for (int i = 1; i <= rank; ++i) {
        LieElement img = bracket(LieElement::basis_element(rank, {i}), bj);
        for (size_t r = 0; r < dim_hi; ++r) {
          m.at(static_cast<size_t>(i - 1) * dim_hi + r, j) = img.coord(r);
        }
      }
    }
    SNFResult s = snf(m);
    for (size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) diag.push_back(s.d.at(i, i));
    std::lock_guard<std::mutex> lock(mu);
    cache.try_emplace(key, diag);
  }

  size_t dim_lo = lyndon_basis(rank, degree).size();
  size_t r = 0;
  for (const Int& d : diag) {
    if (d == 0) continue;
    if (modulus != 0 && d % modulus == 0) continue;
    ++r;
  }
  return static_cast<long>(dim_lo) - static_cast<long>(r);
}

}  // namespace ian
