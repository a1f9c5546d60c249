#include "core/intmat.hpp"

#include <sstream>

#include "core/error.hpp"

namespace ian {

IntMatrix IntMatrix::identity(size_t n) {
  IntMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) fail(Errc::dimension_mismatch, "matrix product shape mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
    }
  }
  return out;
}

void IntMatrix::swap_rows(size_t i, size_t j) {
  if (i == j) return;
  for (size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(size_t i, size_t j) {
  if (i == j) return;
  for (size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t r = 0; r < rows_; ++r) {
    if (r) os << ", ";
    os << "[";
    for (size_t c = 0; c < cols_; ++c) {
      if (c) os << ", ";
      os << at(r, c);
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

std::vector<Int> mat_vec(const IntMatrix& m, const std::vector<Int>& v) {
  if (v.size() != m.cols()) fail(Errc::dimension_mismatch, "matrix-vector shape mismatch");
  std::vector<Int> out(m.rows());
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) out[i] += m.at(i, j) * v[j];
  }
  return out;
}

size_t SNFResult::rank() const {
  size_t r = 0;
  size_t steps = std::min(d.rows(), d.cols());
  for (size_t i = 0; i < steps; ++i) {
    if (d.at(i, i) != 0) ++r;
  }
  return r;
}

namespace {

// Elementary operations applied in lockstep to D, the transform, and its
// tracked inverse.
struct Worker {
  IntMatrix d, u, v, ui, vi;

  explicit Worker(const IntMatrix& a)
      : d(a),
        u(IntMatrix::identity(a.rows())),
        v(IntMatrix::identity(a.cols())),
        ui(IntMatrix::identity(a.rows())),
        vi(IntMatrix::identity(a.cols())) {}

  void row_swap(size_t i, size_t j) {
    if (i == j) return;
    d.swap_rows(i, j);
    u.swap_rows(i, j);
    ui.swap_cols(i, j);
  }
  void col_swap(size_t i, size_t j) {
    if (i == j) return;
    d.swap_cols(i, j);
    v.swap_cols(i, j);
    vi.swap_rows(i, j);
  }
  // row dst += k * row src
  void row_axpy(size_t dst, size_t src, const Int& k) {
    for (size_t c = 0; c < d.cols(); ++c) d.at(dst, c) += k * d.at(src, c);
    for (size_t c = 0; c < u.cols(); ++c) u.at(dst, c) += k * u.at(src, c);
    for (size_t r = 0; r < ui.rows(); ++r) ui.at(r, src) -= k * ui.at(r, dst);
  }
  // col dst += k * col src
  void col_axpy(size_t dst, size_t src, const Int& k) {
    for (size_t r = 0; r < d.rows(); ++r) d.at(r, dst) += k * d.at(r, src);
    for (size_t r = 0; r < v.rows(); ++r) v.at(r, dst) += k * v.at(r, src);
    for (size_t c = 0; c < vi.cols(); ++c) vi.at(src, c) -= k * vi.at(dst, c);
  }
  void row_negate(size_t i) {
    for (size_t c = 0; c < d.cols(); ++c) d.at(i, c) = -d.at(i, c);
    for (size_t c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
    for (size_t r = 0; r < ui.rows(); ++r) ui.at(r, i) = -ui.at(r, i);
  }
};

}  // namespace

SNFResult snf(const IntMatrix& a) {
  Worker w(a);
  size_t m = a.rows(), n = a.cols();
  size_t steps = std::min(m, n);

  for (size_t t = 0; t < steps; ++t) {
    for (;;) {
      // smallest nonzero absolute value; first in row-major order on ties
      size_t pr = 0, pc = 0;
      bool found = false;
      Int best;
      for (size_t i = t; i < m; ++i) {
        for (size_t j = t; j < n; ++j) {
          const Int& e = w.d.at(i, j);
          if (e == 0) continue;
          Int mag = abs(e);
          if (!found || mag < best) {
            found = true;
            best = mag;
            pr = i;
            pc = j;
          }
        }
      }
      if (!found) {
        t = steps;  // remaining block is zero
        break;
      }
      w.row_swap(t, pr);
      w.col_swap(t, pc);

      const Int& pivot = w.d.at(t, t);
      bool dirty = false;
      for (size_t i = t + 1; i < m; ++i) {
        if (w.d.at(i, t) == 0) continue;
        Int q = w.d.at(i, t) / pivot;
        if (q != 0) w.row_axpy(i, t, -q);
        if (w.d.at(i, t) != 0) dirty = true;
      }
      for (size_t j = t + 1; j < n; ++j) {
        if (w.d.at(t, j) == 0) continue;
        Int q = w.d.at(t, j) / pivot;
        if (q != 0) w.col_axpy(j, t, -q);
        if (w.d.at(t, j) != 0) dirty = true;
      }
      if (dirty) continue;

      // the pivot must divide the rest of the block; pull an offending row
      // up so the next pass shrinks the pivot
      bool divides = true;
      for (size_t i = t + 1; i < m && divides; ++i) {
        for (size_t j = t + 1; j < n && divides; ++j) {
          if (w.d.at(i, j) % pivot != 0) {
            w.row_axpy(t, i, 1);
            divides = false;
          }
        }
      }
      if (divides) break;
    }
    if (t == steps) break;
  }

  for (size_t i = 0; i < steps; ++i) {
    if (w.d.at(i, i) < 0) w.row_negate(i);
  }
  return SNFResult{std::move(w.d), std::move(w.u), std::move(w.v), std::move(w.ui),
                   std::move(w.vi)};
}

Int determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) fail(Errc::dimension_mismatch, "determinant needs a square matrix");
  size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Int sign = 1, prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      size_t p = k + 1;
      while (p < n && m.at(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

std::optional<std::vector<Int>> lattice_member(const std::vector<Int>& v, const IntMatrix& gens) {
  return lattice_member(v, gens, snf(gens));
}

std::optional<std::vector<Int>> lattice_member(const std::vector<Int>& v, const IntMatrix& gens,
                                               const SNFResult& s) {
  if (v.size() != gens.rows()) fail(Errc::dimension_mismatch, "vector length != ambient rank");
  std::vector<Int> w = mat_vec(s.u, v);
  size_t m = gens.rows(), k = gens.cols();
  std::vector<Int> y(k);
  for (size_t i = 0; i < m; ++i) {
    const Int& di = (i < k) ? s.d.at(i, i) : Int(0);
    if (di == 0) {
      if (w[i] != 0) return std::nullopt;
    } else {
      if (w[i] % di != 0) return std::nullopt;
      y[i] = w[i] / di;
    }
  }
  std::vector<Int> c = mat_vec(s.v, y);
  if (mat_vec(gens, c) != v) fail(Errc::internal, "lattice membership re-check failed");
  return c;
}

IntMatrix saturation(const IntMatrix& gens) {
  SNFResult s = snf(gens);
  size_t r = s.rank();
  IntMatrix out(gens.rows(), r);
  for (size_t i = 0; i < gens.rows(); ++i) {
    for (size_t j = 0; j < r; ++j) out.at(i, j) = s.u_inv.at(i, j);
  }
  return out;
}

IntMatrix annihilating_functionals(const IntMatrix& gens, size_t ambient_rank) {
  if (gens.rows() != ambient_rank) {
    fail(Errc::dimension_mismatch, "generator columns do not live in the stated ambient rank");
  }
  SNFResult s = snf(gens);
  size_t r = s.rank();
  IntMatrix out(ambient_rank - r, ambient_rank);
  for (size_t i = r; i < ambient_rank; ++i) {
    for (size_t j = 0; j < ambient_rank; ++j) out.at(i - r, j) = s.u.at(i, j);
  }
  return out;
}

}  // namespace ian
