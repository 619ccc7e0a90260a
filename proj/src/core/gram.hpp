#pragma once

#include <vector>

#include "core/matrix.hpp"

namespace oblique {

// Matrix of pairwise dot products of a vector set. Symmetric by
// construction; the diagonal holds squared norms and must stay positive.
class GramMatrix {
 public:
  static GramMatrix from_entries(Matrix entries);

  // Builds g_ij = v_i . v_j, computing each pair once so the result is
  // exactly symmetric. All vectors must share one dimension.
  static GramMatrix from_vectors(const std::vector<std::vector<double>>& vectors);

  std::size_t dim() const { return m_.rows(); }
  const Matrix& entries() const { return m_; }
  double at(std::size_t i, std::size_t j) const { return m_(i, j); }
  bool unit_diagonal(double tol = 1e-12) const;

 private:
  explicit GramMatrix(Matrix m) : m_(std::move(m)) {}
  Matrix m_;
};

struct InverseGram {
  Matrix entries;
  double determinant;
};

// Determinant of the 3x3 Gram matrix of unit vectors, evaluated directly
// from the off-diagonal dot products p = g01, q = g02, r = g12:
//   D = 1 + 2pqr - p^2 - q^2 - r^2.
double unit_determinant3(const GramMatrix& gram);

// Pivoted-elimination inverse, symmetrized by averaging with its transpose.
// Raises SingularGram when the vector set is (numerically) linearly
// dependent.
InverseGram invert(const GramMatrix& gram);

// Closed-form inverse of the 3x3 unit-vector Gram matrix, from the adjugate
// of [[1,p,q],[p,1,r],[q,r,1]] over D:
//   A00 = (1 - r^2)/D   A01 = (qr - p)/D   A02 = (pr - q)/D
//   A11 = (1 - q^2)/D   A12 = (pq - r)/D   A22 = (1 - p^2)/D
// Must agree with invert() wherever both are defined.
InverseGram closed_form_inverse3(const GramMatrix& gram);

}  // namespace oblique
