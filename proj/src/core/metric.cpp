#include "core/metric.hpp"

#include <cmath>

namespace oblique {

BasisN BasisN::create(std::vector<std::vector<double>> vectors, BasisRole role) {
  const std::size_t n = vectors.size();
  if (n == 0) fail(ErrorCode::InvalidArgument, "basis needs at least one vector");
  for (const auto& v : vectors) {
    if (v.size() != n)
      fail(ErrorCode::DimensionMismatch,
           "basis needs n vectors of n components each");
    for (double c : v)
      if (!std::isfinite(c)) fail(ErrorCode::NonFinite, "vector component is not finite");
  }
  Matrix rows(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rows(i, j) = vectors[i][j];
  if (is_singular(rows))
    fail(ErrorCode::DegenerateBasis,
         "degenerate basis: vectors are numerically linearly dependent");
  return BasisN(std::move(vectors), role);
}

ComponentVector::ComponentVector(std::vector<double> components, Variance variance)
    : c_(std::move(components)), variance_(variance) {
  if (c_.empty()) fail(ErrorCode::InvalidArgument, "empty component vector");
  for (double c : c_)
    if (!std::isfinite(c)) fail(ErrorCode::NonFinite, "component is not finite");
}

MetricTensor MetricTensor::lower(Matrix entries) {
  if (entries.rows() == 0 || entries.rows() != entries.cols())
    fail(ErrorCode::InvalidArgument, "metric must be a non-empty square matrix");
  if (!entries.all_finite())
    fail(ErrorCode::NonFinite, "metric entry is not finite");
  if (!entries.symmetric())
    fail(ErrorCode::InvalidArgument, "metric must be symmetric");
  if (!try_cholesky(entries))
    fail(ErrorCode::NotPositiveDefinite, "metric is not positive-definite");
  auto inv = try_invert(entries);
  if (!inv)
    fail(ErrorCode::NotPositiveDefinite,
         "metric is numerically singular and cannot be inverted");
  inv->inverse.symmetrize();
  return MetricTensor(std::move(entries), std::move(inv->inverse),
                      inv->determinant, MetricKind::Lower);
}

MetricTensor metric_from_basis(const BasisN& basis) {
  try {
    return MetricTensor::lower(GramMatrix::from_vectors(basis.vectors()).entries());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotPositiveDefinite ||
        e.code() == ErrorCode::SingularGram)
      fail(ErrorCode::DegenerateBasis,
           "degenerate basis: gram matrix is numerically singular");
    throw;
  }
}

MetricTensor inverse_metric(const MetricTensor& metric) {
  const MetricKind flipped = metric.kind() == MetricKind::Lower
                                 ? MetricKind::Upper
                                 : MetricKind::Lower;
  return MetricTensor(metric.inverse_, metric.g_, 1.0 / metric.det_, flipped);
}

namespace {

void require_dims(const ComponentVector& v, const MetricTensor& metric) {
  if (v.dim() != metric.dim())
    fail(ErrorCode::DimensionMismatch,
         "component vector and metric dimensions differ");
}

void require_lower(const MetricTensor& metric, const char* op) {
  if (metric.kind() != MetricKind::Lower)
    fail(ErrorCode::InvalidArgument,
         std::string(op) + " expects a lower-index metric");
}

}  // namespace

ComponentVector lower_index(const ComponentVector& v, const MetricTensor& metric) {
  require_lower(metric, "lower_index");
  if (v.variance() != Variance::Contravariant)
    fail(ErrorCode::InvalidArgument,
         "lower_index expects contravariant components");
  require_dims(v, metric);
  return ComponentVector(multiply(metric.entries(), v.values()),
                         Variance::Covariant);
}

ComponentVector raise_index(const ComponentVector& v, const MetricTensor& metric) {
  require_lower(metric, "raise_index");
  if (v.variance() != Variance::Covariant)
    fail(ErrorCode::InvalidArgument, "raise_index expects covariant components");
  require_dims(v, metric);
  return ComponentVector(multiply(metric.conjugate_entries(), v.values()),
                         Variance::Contravariant);
}

double line_element(const ComponentVector& dx, const MetricTensor& metric) {
  require_lower(metric, "line_element");
  if (dx.variance() != Variance::Contravariant)
    fail(ErrorCode::InvalidArgument,
         "line_element expects a contravariant displacement");
  require_dims(dx, metric);
  double s = 0.0;
  for (std::size_t i = 0; i < dx.dim(); ++i)
    for (std::size_t j = 0; j < dx.dim(); ++j)
      s += metric.entries()(i, j) * dx[i] * dx[j];
  return s;
}

double tangent_normalization_defect(const ComponentVector& tangent,
                                    const MetricTensor& metric) {
  bool zero = true;
  for (std::size_t i = 0; i < tangent.dim(); ++i)
    if (tangent[i] != 0.0) zero = false;
  if (zero)
    fail(ErrorCode::ZeroTangent, "tangent vector is zero: no normalization to check");
  return line_element(tangent, metric) - 1.0;
}

// Accumulates the product in extended precision so the reported defect
// reflects the stored entries of g and its conjugate, not rounding in the
// measurement itself.
double conjugacy_defect(const MetricTensor& metric) {
  const Matrix& g = metric.entries();
  const Matrix& inv = metric.conjugate_entries();
  const std::size_t n = g.rows();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      long double sum = 0.0L;
      for (std::size_t k = 0; k < n; ++k)
        sum += static_cast<long double>(g(i, k)) * inv(k, j);
      if (i == j) sum -= 1.0L;
      const double defect = std::fabs(static_cast<double>(sum));
      if (defect > worst) worst = defect;
    }
  return worst;
}

}  // namespace oblique
