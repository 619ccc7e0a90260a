#include "core/gram.hpp"

#include <cmath>

namespace oblique {

namespace {

constexpr double kUnitDiagTol = 1e-12;
constexpr double kSingularD = 1e-12;

void require_unit3(const GramMatrix& g) {
  if (g.dim() != 3)
    fail(ErrorCode::InvalidArgument, "unit-basis form needs a 3x3 gram matrix");
  if (!g.unit_diagonal(kUnitDiagTol))
    fail(ErrorCode::NotUnitBasis,
         "gram diagonal deviates from 1 beyond 1e-12: basis vectors are not unit length");
}

}  // namespace

GramMatrix GramMatrix::from_entries(Matrix entries) {
  if (entries.rows() == 0 || entries.rows() != entries.cols())
    fail(ErrorCode::InvalidArgument, "gram matrix must be square and non-empty");
  if (!entries.all_finite())
    fail(ErrorCode::NonFinite, "gram matrix entry is not finite");
  if (!entries.symmetric())
    fail(ErrorCode::InvalidArgument, "gram matrix must be symmetric");
  for (std::size_t i = 0; i < entries.rows(); ++i)
    if (!(entries(i, i) > 0.0))
      fail(ErrorCode::InvalidArgument, "gram diagonal must be positive");
  return GramMatrix(std::move(entries));
}

GramMatrix GramMatrix::from_vectors(
    const std::vector<std::vector<double>>& vectors) {
  const std::size_t n = vectors.size();
  if (n == 0) fail(ErrorCode::InvalidArgument, "gram matrix of an empty vector set");
  const std::size_t d = vectors[0].size();
  if (d == 0) fail(ErrorCode::InvalidArgument, "gram matrix of zero-length vectors");
  for (const auto& v : vectors) {
    if (v.size() != d)
      fail(ErrorCode::DimensionMismatch, "gram matrix input vectors differ in length");
    for (double c : v)
      if (!std::isfinite(c)) fail(ErrorCode::NonFinite, "vector component is not finite");
  }
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < d; ++k) s += vectors[i][k] * vectors[j][k];
      g(i, j) = s;
      g(j, i) = s;
    }
  for (std::size_t i = 0; i < n; ++i)
    if (!(g(i, i) > 0.0))
      fail(ErrorCode::InvalidArgument, "gram diagonal must be positive: zero vector in the set");
  return GramMatrix(std::move(g));
}

bool GramMatrix::unit_diagonal(double tol) const {
  for (std::size_t i = 0; i < m_.rows(); ++i)
    if (std::fabs(m_(i, i) - 1.0) > tol) return false;
  return true;
}

double unit_determinant3(const GramMatrix& gram) {
  require_unit3(gram);
  const long double p = gram.at(0, 1);
  const long double q = gram.at(0, 2);
  const long double r = gram.at(1, 2);
  return static_cast<double>(1.0L + 2.0L * p * q * r - p * p - q * q - r * r);
}

InverseGram invert(const GramMatrix& gram) {
  auto inv = try_invert(gram.entries());
  if (!inv)
    fail(ErrorCode::SingularGram,
         "gram matrix is numerically singular: vector set is linearly dependent");
  inv->inverse.symmetrize();
  return {std::move(inv->inverse), inv->determinant};
}

InverseGram closed_form_inverse3(const GramMatrix& gram) {
  require_unit3(gram);
  const long double p = gram.at(0, 1);
  const long double q = gram.at(0, 2);
  const long double r = gram.at(1, 2);
  const long double d = 1.0L + 2.0L * p * q * r - p * p - q * q - r * r;
  if (fabsl(d) <= kSingularD)
    fail(ErrorCode::SingularGram,
         "unit-basis gram determinant is below 1e-12: vector set is linearly dependent");
  Matrix a(3, 3);
  a(0, 0) = static_cast<double>((1.0L - r * r) / d);
  a(1, 1) = static_cast<double>((1.0L - q * q) / d);
  a(2, 2) = static_cast<double>((1.0L - p * p) / d);
  a(0, 1) = a(1, 0) = static_cast<double>((q * r - p) / d);
  a(0, 2) = a(2, 0) = static_cast<double>((p * r - q) / d);
  a(1, 2) = a(2, 1) = static_cast<double>((p * q - r) / d);
  return {std::move(a), static_cast<double>(d)};
}

}  // namespace oblique
