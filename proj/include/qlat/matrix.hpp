#pragma once
// Dense row-major matrices over a pluggable scalar: exact Gaussian rationals
// or std::complex<double>. The ScalarOps traits capture the only two things
// the algorithms care about — how to conjugate/measure a scalar and whether
// comparisons are exact or tolerance-based (which also drives pivot choice).

#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qlat/errors.hpp"
#include "qlat/rational.hpp"

namespace qlat {

template <class S>
struct ScalarOps;

template <>
struct ScalarOps<GaussRat> {
  using Real = BigRat;
  static constexpr bool exact = true;
  static GaussRat conj(const GaussRat& x) { return qlat::conj(x); }
  static Real abs_sq(const GaussRat& x) { return norm_sq(x); }
  static Real real(const GaussRat& x) { return x.re; }
  static Real imag(const GaussRat& x) { return x.im; }
  static bool is_zero(const GaussRat& x, double /*eps*/) { return x.is_zero(); }
  // Pivot quality; any positive value works since exact elimination only
  // needs nonzero-ness, but magnitudes keep the interface uniform.
  static double pivot_size(const GaussRat& x) {
    return std::abs(x.re.convert_to<double>()) + std::abs(x.im.convert_to<double>());
  }
};

template <>
struct ScalarOps<std::complex<double>> {
  using Real = double;
  static constexpr bool exact = false;
  static std::complex<double> conj(const std::complex<double>& x) { return std::conj(x); }
  static Real abs_sq(const std::complex<double>& x) { return std::norm(x); }
  static Real real(const std::complex<double>& x) { return x.real(); }
  static Real imag(const std::complex<double>& x) { return x.imag(); }
  static bool is_zero(const std::complex<double>& x, double eps) { return std::abs(x) <= eps; }
  static double pivot_size(const std::complex<double>& x) { return std::abs(x); }
};

template <class S>
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<S> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, S{}) {
    if (r < 0 || c < 0) throw InputError("matrix dimensions must be non-negative");
  }

  S& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const S& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = S{1};
    return m;
  }

  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
  friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }
};

using RatMat = Mat<GaussRat>;
using CxMat = Mat<std::complex<double>>;

template <class S>
Mat<S> mul(const Mat<S>& x, const Mat<S>& y) {
  if (x.cols != y.rows) throw InputError("matrix product shape mismatch");
  Mat<S> z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const S& xik = x.at(i, k);
      if (ScalarOps<S>::exact && ScalarOps<S>::is_zero(xik, 0)) continue;
      for (int j = 0; j < y.cols; ++j) z.at(i, j) += xik * y.at(k, j);
    }
  return z;
}

template <class S>
Mat<S> add(const Mat<S>& x, const Mat<S>& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw InputError("matrix sum shape mismatch");
  Mat<S> z = x;
  for (size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
  return z;
}

template <class S>
Mat<S> sub(const Mat<S>& x, const Mat<S>& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw InputError("matrix difference shape mismatch");
  Mat<S> z = x;
  for (size_t i = 0; i < z.a.size(); ++i) z.a[i] -= y.a[i];
  return z;
}

template <class S>
Mat<S> scale(const S& c, const Mat<S>& x) {
  Mat<S> z = x;
  for (auto& v : z.a) v = c * v;
  return z;
}

template <class S>
Mat<S> adjoint(const Mat<S>& x) {
  Mat<S> z(x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) z.at(j, i) = ScalarOps<S>::conj(x.at(i, j));
  return z;
}

template <class S>
Mat<S> transpose(const Mat<S>& x) {
  Mat<S> z(x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) z.at(j, i) = x.at(i, j);
  return z;
}

template <class S>
S trace(const Mat<S>& x) {
  if (x.rows != x.cols) throw InputError("trace requires a square matrix");
  S t{};
  for (int i = 0; i < x.rows; ++i) t += x.at(i, i);
  return t;
}

// Kronecker product: (x ⊗ y)[(i1*yr+i2),(j1*yc+j2)] = x[i1,j1] * y[i2,j2].
template <class S>
Mat<S> kron(const Mat<S>& x, const Mat<S>& y) {
  Mat<S> z(x.rows * y.rows, x.cols * y.cols);
  for (int i1 = 0; i1 < x.rows; ++i1)
    for (int j1 = 0; j1 < x.cols; ++j1) {
      const S& v = x.at(i1, j1);
      if (ScalarOps<S>::exact && ScalarOps<S>::is_zero(v, 0)) continue;
      for (int i2 = 0; i2 < y.rows; ++i2)
        for (int j2 = 0; j2 < y.cols; ++j2)
          z.at(i1 * y.rows + i2, j1 * y.cols + j2) = v * y.at(i2, j2);
    }
  return z;
}

// Largest entry magnitude of x - y; exact scalars report 0 or 1 (equal / not).
template <class S>
double max_abs_diff(const Mat<S>& x, const Mat<S>& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw InputError("matrix difference shape mismatch");
  double worst = 0.0;
  for (size_t i = 0; i < x.a.size(); ++i) {
    if constexpr (ScalarOps<S>::exact) {
      if (!(x.a[i] == y.a[i])) worst = std::max(worst, 1.0);
    } else {
      worst = std::max(worst, std::abs(x.a[i] - y.a[i]));
    }
  }
  return worst;
}

template <class S>
bool approx_equal(const Mat<S>& x, const Mat<S>& y, double eps) {
  if (x.rows != y.rows || x.cols != y.cols) return false;
  for (size_t i = 0; i < x.a.size(); ++i)
    if (!ScalarOps<S>::is_zero(x.a[i] - y.a[i], eps)) return false;
  return true;
}

template <class S>
bool is_zero_mat(const Mat<S>& x, double eps) {
  for (const auto& v : x.a)
    if (!ScalarOps<S>::is_zero(v, eps)) return false;
  return true;
}

// Hermitian inner product of two column vectors, conjugate-linear in the
// first argument: <u, v> = u† v.
template <class S>
S inner(const Mat<S>& u, const Mat<S>& v) {
  if (u.cols != 1 || v.cols != 1 || u.rows != v.rows)
    throw InputError("inner product requires column vectors of equal length");
  S t{};
  for (int i = 0; i < u.rows; ++i) t += ScalarOps<S>::conj(u.at(i, 0)) * v.at(i, 0);
  return t;
}

template <class S>
typename ScalarOps<S>::Real norm_sq_vec(const Mat<S>& v) {
  if (v.cols != 1) throw InputError("norm requires a column vector");
  typename ScalarOps<S>::Real t{};
  for (int i = 0; i < v.rows; ++i) t += ScalarOps<S>::abs_sq(v.at(i, 0));
  return t;
}

template <class S>
Mat<S> column(const Mat<S>& x, int j) {
  Mat<S> v(x.rows, 1);
  for (int i = 0; i < x.rows; ++i) v.at(i, 0) = x.at(i, j);
  return v;
}

template <class S>
Mat<S> hcat(const Mat<S>& x, const Mat<S>& y) {
  if (x.rows != y.rows) throw InputError("horizontal concat row mismatch");
  Mat<S> z(x.rows, x.cols + y.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int j = 0; j < x.cols; ++j) z.at(i, j) = x.at(i, j);
    for (int j = 0; j < y.cols; ++j) z.at(i, x.cols + j) = y.at(i, j);
  }
  return z;
}

template <class S>
Mat<S> vcat(const Mat<S>& x, const Mat<S>& y) {
  if (x.cols != y.cols) throw InputError("vertical concat column mismatch");
  Mat<S> z(x.rows + y.rows, x.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) z.at(i, j) = x.at(i, j);
  for (int i = 0; i < y.rows; ++i)
    for (int j = 0; j < x.cols; ++j) z.at(x.rows + i, j) = y.at(i, j);
  return z;
}

// In-place reduced row echelon form. Returns the pivot column indices.
// Exact scalars take the first nonzero pivot; floats take the largest.
template <class S>
std::vector<int> rref(Mat<S>& m, double eps) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int best = -1;
    if constexpr (ScalarOps<S>::exact) {
      for (int r = row; r < m.rows; ++r)
        if (!ScalarOps<S>::is_zero(m.at(r, col), eps)) {
          best = r;
          break;
        }
    } else {
      double best_size = eps;
      for (int r = row; r < m.rows; ++r) {
        double sz = ScalarOps<S>::pivot_size(m.at(r, col));
        if (sz > best_size) {
          best_size = sz;
          best = r;
        }
      }
    }
    if (best < 0) continue;
    if (best != row)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(best, j), m.at(row, j));
    S inv = S{1} / m.at(row, col);
    for (int j = 0; j < m.cols; ++j) m.at(row, j) = inv * m.at(row, j);
    m.at(row, col) = S{1};
    for (int r = 0; r < m.rows; ++r) {
      if (r == row) continue;
      S f = m.at(r, col);
      if (ScalarOps<S>::is_zero(f, eps)) continue;
      for (int j = 0; j < m.cols; ++j) m.at(r, j) -= f * m.at(row, j);
      m.at(r, col) = S{};
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class S>
int rank(const Mat<S>& m, double eps) {
  Mat<S> w = m;
  return static_cast<int>(rref(w, eps).size());
}

// Columns of `m` at the pivot positions of its RREF: a basis (as columns)
// for the column space, drawn from the original columns.
template <class S>
Mat<S> column_space_basis(const Mat<S>& m, double eps) {
  Mat<S> w = m;
  std::vector<int> piv = rref(w, eps);
  Mat<S> b(m.rows, static_cast<int>(piv.size()));
  for (int j = 0; j < b.cols; ++j)
    for (int i = 0; i < m.rows; ++i) b.at(i, j) = m.at(i, piv[j]);
  return b;
}

// Basis (as columns) of the null space {v : m v = 0} via back substitution
// on the RREF. Returns an m.cols × (m.cols - rank) matrix.
template <class S>
Mat<S> kernel_basis(const Mat<S>& m, double eps) {
  Mat<S> w = m;
  std::vector<int> piv = rref(w, eps);
  std::vector<bool> is_pivot(m.cols, false);
  for (int p : piv) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int j = 0; j < m.cols; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Mat<S> k(m.cols, static_cast<int>(free_cols.size()));
  for (size_t f = 0; f < free_cols.size(); ++f) {
    int fc = free_cols[f];
    k.at(fc, static_cast<int>(f)) = S{1};
    for (size_t p = 0; p < piv.size(); ++p)
      k.at(piv[p], static_cast<int>(f)) = -w.at(static_cast<int>(p), fc);
  }
  return k;
}

// Solve a x = b (a square, b may have several right-hand sides) by
// Gauss-Jordan elimination on the augmented matrix. Throws on singular a.
template <class S>
Mat<S> solve_linear(const Mat<S>& a, const Mat<S>& b, double eps) {
  if (a.rows != a.cols) throw InputError("solve_linear requires a square matrix");
  if (a.rows != b.rows) throw InputError("solve_linear shape mismatch");
  Mat<S> aug = hcat(a, b);
  std::vector<int> piv = rref(aug, eps);
  for (size_t i = 0; i < piv.size(); ++i)
    if (piv[i] != static_cast<int>(i) || piv[i] >= a.cols)
      throw InputError("solve_linear: singular matrix");
  if (static_cast<int>(piv.size()) != a.cols) throw InputError("solve_linear: singular matrix");
  Mat<S> x(a.cols, b.cols);
  for (int i = 0; i < a.cols; ++i)
    for (int j = 0; j < b.cols; ++j) x.at(i, j) = aug.at(i, a.cols + j);
  return x;
}

// Canonical basis of the column space: the nonzero rows of the RREF of the
// transpose, returned as columns. Two matrices span the same subspace iff
// they produce identical canonical bases (exact scalars), and each canonical
// column's first nonzero entry is 1.
template <class S>
Mat<S> canonical_basis(const Mat<S>& m, double eps) {
  Mat<S> w = transpose(m);
  std::vector<int> piv = rref(w, eps);
  Mat<S> b(m.rows, static_cast<int>(piv.size()));
  for (int j = 0; j < b.cols; ++j)
    for (int i = 0; i < m.rows; ++i) b.at(i, j) = w.at(j, i);
  return b;
}

// Convert an exact matrix to floating point.
inline CxMat to_complex(const RatMat& m) {
  CxMat z(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i)
    z.a[i] = {m.a[i].re.convert_to<double>(), m.a[i].im.convert_to<double>()};
  return z;
}

}  // namespace qlat
