#include "core/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace oblique {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

void Matrix::symmetrize() {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j) {
      double m = 0.5 * ((*this)(i, j) + (*this)(j, i));
      (*this)(i, j) = m;
      (*this)(j, i) = m;
    }
}

bool Matrix::symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool Matrix::all_finite() const {
  for (double v : data_)
    if (!std::isfinite(v)) return false;
  return true;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::fabs(v));
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    fail(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}

std::vector<double> multiply(const Matrix& a, const std::vector<double>& x) {
  if (a.cols() != x.size())
    fail(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
  std::vector<double> y(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * x[k];
    y[i] = s;
  }
  return y;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m = std::max(m, std::fabs(a(i, j) - b(i, j)));
  return m;
}

double identity_defect(const Matrix& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m = std::max(m, std::fabs(a(i, j) - (i == j ? 1.0 : 0.0)));
  return m;
}

namespace {

// In-place LU with partial pivoting on an extended-precision working copy.
// Returns false only for a hard zero pivot column; near-singularity is the
// caller's call, via the pivot extremes reported in pmin/pmax.
bool lu_factor(std::size_t n, std::vector<long double>& a,
               std::vector<std::size_t>& perm, int& sign, long double& pmin,
               long double& pmax) {
  perm.resize(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  sign = 1;
  pmin = 0.0L;
  pmax = 0.0L;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    long double best = fabsl(a[perm[k] * n + k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      long double cand = fabsl(a[perm[i] * n + k]);
      if (cand > best) {
        best = cand;
        piv = i;
      }
    }
    if (piv != k) {
      std::swap(perm[k], perm[piv]);
      sign = -sign;
    }
    long double pivot = a[perm[k] * n + k];
    long double mag = fabsl(pivot);
    if (k == 0) {
      pmin = pmax = mag;
    } else {
      pmin = std::min(pmin, mag);
      pmax = std::max(pmax, mag);
    }
    if (pivot == 0.0L) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      long double m = a[perm[i] * n + k] / pivot;
      a[perm[i] * n + k] = m;
      for (std::size_t j = k + 1; j < n; ++j)
        a[perm[i] * n + j] -= m * a[perm[k] * n + j];
    }
  }
  return true;
}

void lu_solve(std::size_t n, const std::vector<long double>& lu,
              const std::vector<std::size_t>& perm,
              const std::vector<long double>& b, std::vector<long double>& x) {
  x.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    long double s = b[perm[i]];
    for (std::size_t j = 0; j < i; ++j) s -= lu[perm[i] * n + j] * x[j];
    x[i] = s;
  }
  for (std::size_t ii = n; ii-- > 0;) {
    long double s = x[ii];
    for (std::size_t j = ii + 1; j < n; ++j) s -= lu[perm[ii] * n + j] * x[j];
    x[ii] = s / lu[perm[ii] * n + ii];
  }
}

}  // namespace

std::optional<Inversion> try_invert(const Matrix& a, double pivot_ratio) {
  if (a.rows() != a.cols())
    fail(ErrorCode::DimensionMismatch, "cannot invert a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<long double> work(n * n), orig(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) orig[i * n + j] = work[i * n + j] = a(i, j);

  std::vector<std::size_t> perm;
  int sign = 0;
  long double pmin = 0.0L, pmax = 0.0L;
  bool ok = lu_factor(n, work, perm, sign, pmin, pmax);
  long double det = sign;
  for (std::size_t k = 0; k < n; ++k) det *= work[perm[k] * n + k];
  if (!ok || pmax == 0.0L || pmin <= pivot_ratio * pmax) return std::nullopt;

  // Columns of the inverse, then one Newton-Schulz pass x <- x + x(I - a x)
  // to push the forward error well below the double rounding floor.
  std::vector<long double> inv(n * n), b(n), col(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(b.begin(), b.end(), 0.0L);
    b[j] = 1.0L;
    lu_solve(n, work, perm, b, col);
    for (std::size_t i = 0; i < n; ++i) inv[i * n + j] = col[i];
  }
  std::vector<long double> resid(n * n), corr(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      long double s = (i == j) ? 1.0L : 0.0L;
      for (std::size_t k = 0; k < n; ++k) s -= orig[i * n + k] * inv[k * n + j];
      resid[i * n + j] = s;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      long double s = 0.0L;
      for (std::size_t k = 0; k < n; ++k) s += inv[i * n + k] * resid[k * n + j];
      corr[i * n + j] = s;
    }

  Inversion out{Matrix(n, n), static_cast<double>(det)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out.inverse(i, j) = static_cast<double>(inv[i * n + j] + corr[i * n + j]);
  if (!out.inverse.all_finite()) return std::nullopt;
  return out;
}

double determinant(const Matrix& a) {
  if (a.rows() != a.cols())
    fail(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<long double> work(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) work[i * n + j] = a(i, j);
  std::vector<std::size_t> perm;
  int sign = 0;
  long double pmin = 0.0L, pmax = 0.0L;
  if (!lu_factor(n, work, perm, sign, pmin, pmax)) return 0.0;
  long double det = sign;
  for (std::size_t k = 0; k < n; ++k) det *= work[perm[k] * n + k];
  return static_cast<double>(det);
}

bool is_singular(const Matrix& a, double pivot_ratio) {
  if (a.rows() != a.cols())
    fail(ErrorCode::DimensionMismatch, "singularity test on a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<long double> work(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) work[i * n + j] = a(i, j);
  std::vector<std::size_t> perm;
  int sign = 0;
  long double pmin = 0.0L, pmax = 0.0L;
  if (!lu_factor(n, work, perm, sign, pmin, pmax)) return true;
  return pmax == 0.0L || pmin <= pivot_ratio * pmax;
}

std::optional<Matrix> try_cholesky(const Matrix& a) {
  if (a.rows() != a.cols())
    fail(ErrorCode::DimensionMismatch, "cholesky of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<long double> l(n * n, 0.0L);
  for (std::size_t j = 0; j < n; ++j) {
    long double d = a(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= l[j * n + k] * l[j * n + k];
    if (!(d > 0.0L)) return std::nullopt;
    long double root = sqrtl(d);
    l[j * n + j] = root;
    for (std::size_t i = j + 1; i < n; ++i) {
      long double s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l[i * n + k] * l[j * n + k];
      l[i * n + j] = s / root;
    }
  }
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      out(i, j) = static_cast<double>(l[i * n + j]);
  return out;
}

}  // namespace oblique
