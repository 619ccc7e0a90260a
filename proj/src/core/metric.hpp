#pragma once

#include <vector>

#include "core/gram.hpp"
#include "core/matrix.hpp"
#include "core/reciprocal.hpp"

namespace oblique {

enum class MetricKind { Lower, Upper };

// Ordered set of n linearly independent vectors in n dimensions.
class BasisN {
 public:
  static BasisN create(std::vector<std::vector<double>> vectors,
                       BasisRole role = BasisRole::Original);

  std::size_t dim() const { return vectors_.size(); }
  const std::vector<double>& vector(std::size_t i) const { return vectors_[i]; }
  const std::vector<std::vector<double>>& vectors() const { return vectors_; }
  BasisRole role() const { return role_; }

 private:
  BasisN(std::vector<std::vector<double>> vectors, BasisRole role)
      : vectors_(std::move(vectors)), role_(role) {}

  std::vector<std::vector<double>> vectors_;
  BasisRole role_;
};

// Coefficient vector tagged with how it transforms.
class ComponentVector {
 public:
  ComponentVector(std::vector<double> components, Variance variance);

  std::size_t dim() const { return c_.size(); }
  double operator[](std::size_t i) const { return c_[i]; }
  const std::vector<double>& values() const { return c_; }
  Variance variance() const { return variance_; }

 private:
  std::vector<double> c_;
  Variance variance_;
};

// Symmetric positive-definite bilinear form. Construction factorizes once
// and caches the inverse by value, so raising indices never re-inverts.
class MetricTensor {
 public:
  // Lower-index metric from raw entries; must be square, finite, exactly
  // symmetric, and positive-definite.
  static MetricTensor lower(Matrix entries);

  std::size_t dim() const { return g_.rows(); }
  MetricKind kind() const { return kind_; }
  const Matrix& entries() const { return g_; }
  const Matrix& conjugate_entries() const { return inverse_; }
  double determinant() const { return det_; }

 private:
  MetricTensor(Matrix g, Matrix inverse, double det, MetricKind kind)
      : g_(std::move(g)), inverse_(std::move(inverse)), det_(det), kind_(kind) {}

  friend MetricTensor inverse_metric(const MetricTensor&);

  Matrix g_;
  Matrix inverse_;
  double det_;
  MetricKind kind_;
};

// g_ij = e_i . e_j for the given frame.
MetricTensor metric_from_basis(const BasisN& basis);

// Conjugate metric: entries and cache swap, kind flips. Satisfies
// g_ik g^kj = delta_i^j.
MetricTensor inverse_metric(const MetricTensor& metric);

// Covariant components g_ij v^j of a contravariant vector.
ComponentVector lower_index(const ComponentVector& v, const MetricTensor& metric);

// Contravariant components g^ij v_j of a covariant vector, via the cached
// conjugate entries.
ComponentVector raise_index(const ComponentVector& v, const MetricTensor& metric);

// Squared length g_ij dx^i dx^j of a contravariant displacement.
double line_element(const ComponentVector& dx, const MetricTensor& metric);

// g_ij t^i t^j - 1: zero exactly when t has unit length under the metric.
double tangent_normalization_defect(const ComponentVector& tangent,
                                    const MetricTensor& metric);

// max |g_ik g^kj - delta_i^j| over all entries.
double conjugacy_defect(const MetricTensor& metric);

}  // namespace oblique
