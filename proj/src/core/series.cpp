#include "core/series.hpp"

#include <sstream>

#include "core/error.hpp"

namespace ian {

namespace {

void check_params(int rank, int truncation) {
  if (rank < 1) fail(Errc::invalid_argument, "rank must be at least 1");
  if (truncation < 1) fail(Errc::invalid_argument, "truncation must be at least 1");
}

void check_compatible(const Series& a, const Series& b) {
  if (a.rank() != b.rank()) fail(Errc::rank_mismatch, "series ranks differ");
  if (a.truncation() != b.truncation()) {
    fail(Errc::invalid_argument, "series truncations differ");
  }
}

}  // namespace

Series::Series(int rank, int truncation) : rank_(rank), truncation_(truncation) {
  check_params(rank, truncation);
}

Series Series::one(int rank, int truncation) {
  Series s(rank, truncation);
  s.add_term({}, 1);
  return s;
}

Series Series::variable(int rank, int truncation, int index) {
  Series s(rank, truncation);
  if (index < 1 || index > rank) fail(Errc::index_range, "variable index out of range");
  s.add_term({index}, 1);
  return s;
}

Int Series::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Int(0) : it->second;
}

void Series::add_term(const Monomial& m, const Int& c) {
  if (static_cast<int>(m.size()) > truncation_) return;
  if (c == 0) return;
  for (int idx : m) {
    if (idx < 1 || idx > rank_) fail(Errc::index_range, "monomial index out of range");
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Series Series::operator+(const Series& rhs) const {
  check_compatible(*this, rhs);
  Series out = *this;
  for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
  return out;
}

Series Series::operator-(const Series& rhs) const {
  check_compatible(*this, rhs);
  Series out = *this;
  for (const auto& [m, c] : rhs.terms_) out.add_term(m, -c);
  return out;
}

Series Series::operator-() const {
  Series out(rank_, truncation_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

bool Series::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second == 1;
}

std::optional<int> Series::lowest_degree() const {
  if (terms_.empty()) return std::nullopt;
  return static_cast<int>(terms_.begin()->first.size());  // map is (degree, lex) ordered
}

Series Series::homogeneous_part(int degree) const {
  Series out(rank_, truncation_);
  for (const auto& [m, c] : terms_) {
    if (static_cast<int>(m.size()) == degree) out.terms_.emplace(m, c);
  }
  return out;
}

std::string Series::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Int a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (m.empty()) {
      os << a;
    } else {
      if (a != 1) os << a << " ";
      for (size_t i = 0; i < m.size(); ++i) {
        if (i) os << ".";
        os << "X" << m[i];
      }
    }
  }
  return os.str();
}

Series series_mul(const Series& a, const Series& b) {
  check_compatible(a, b);
  Series out(a.rank(), a.truncation());
  int D = a.truncation();
  for (const auto& [ma, ca] : a.terms()) {
    int da = static_cast<int>(ma.size());
    for (const auto& [mb, cb] : b.terms()) {
      if (da + static_cast<int>(mb.size()) > D) break;  // b's terms are degree-sorted
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Series series_inverse(const Series& a) {
  if (a.coeff({}) != 1) fail(Errc::non_unit, "series constant term must be 1");
  Series r = a;  // r = a - 1, lowest degree >= 1
  r.add_term({}, -1);
  Series out = Series::one(a.rank(), a.truncation());
  Series power = Series::one(a.rank(), a.truncation());
  int sign = 1;
  for (int k = 1; k <= a.truncation(); ++k) {
    power = series_mul(power, r);
    if (power.is_zero()) break;
    sign = -sign;
    out = sign > 0 ? out + power : out - power;
  }
  return out;
}

Series magnus_expand(const Word& w, int truncation) {
  check_params(w.rank(), truncation);
  int n = w.rank();
  // Letter images: 1 + X_i for x_i, the alternating geometric series for
  // x_i^-1.
  std::vector<Series> pos, neg;
  pos.reserve(n);
  neg.reserve(n);
  for (int i = 1; i <= n; ++i) {
    Series p = Series::one(n, truncation);
    p.add_term({i}, 1);
    pos.push_back(p);
    Series q(n, truncation);
    Monomial m;
    Int sign = 1;
    for (int d = 0; d <= truncation; ++d) {
      q.add_term(m, sign);
      m.push_back(i);
      sign = -sign;
    }
    neg.push_back(q);
  }
  Series out = Series::one(n, truncation);
  for (const Letter& l : w.letters()) {
    const Series& img =
        l.sign > 0 ? pos[static_cast<size_t>(l.index) - 1] : neg[static_cast<size_t>(l.index) - 1];
    out = series_mul(out, img);
  }
  return out;
}

std::string DepthReport::str() const {
  if (depth) return std::to_string(*depth);
  return ">= " + std::to_string(truncation + 1);
}

DepthReport gamma_depth(const Word& w, int truncation) {
  Series mu = magnus_expand(w, truncation);
  mu.add_term({}, -1);
  auto low = mu.lowest_degree();
  if (!low) return DepthReport{std::nullopt, truncation};
  return DepthReport{*low, truncation};
}

}  // namespace ian
