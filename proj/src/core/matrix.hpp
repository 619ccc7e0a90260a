#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "core/error.hpp"

namespace oblique {

// Dense row-major matrix of doubles. Everything in this library is tiny
// (n <= 6), so there is no blocking or aliasing cleverness anywhere.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}

  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Matrix transposed() const;

  // Averages with the transpose; restores exact symmetry after an inversion.
  void symmetrize();

  bool symmetric() const;  // exact entrywise comparison
  bool all_finite() const;
  double max_abs() const;

 private:
  std::size_t rows_, cols_;
  std::vector<double> data_;
};

Matrix multiply(const Matrix& a, const Matrix& b);
std::vector<double> multiply(const Matrix& a, const std::vector<double>& x);
double max_abs_diff(const Matrix& a, const Matrix& b);
double identity_defect(const Matrix& a);  // max |a - I|

struct Inversion {
  Matrix inverse;
  double determinant;
};

// LU with partial pivoting, accumulated in extended precision, plus one
// Newton-Schulz refinement pass on the inverse. A matrix counts as singular
// when the pivot ratio min|u_ii| / max|u_ii| falls at or below `pivot_ratio`
// (scale-invariant; reduces to |det| <= ~1e-12 for unit-scale input).
std::optional<Inversion> try_invert(const Matrix& a,
                                    double pivot_ratio = 1e-12);

double determinant(const Matrix& a);
bool is_singular(const Matrix& a, double pivot_ratio = 1e-12);

// Lower Cholesky factor of a symmetric matrix; nullopt unless every pivot
// is strictly positive.
std::optional<Matrix> try_cholesky(const Matrix& a);

}  // namespace oblique
