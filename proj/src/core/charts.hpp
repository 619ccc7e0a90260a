#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "core/matrix.hpp"
#include "core/metric.hpp"

namespace oblique {

struct Jacobian {
  Matrix matrix;                   // n_out x n_in, column j = d(out)/d(in_j)
  std::vector<double> base_point;  // where it was evaluated
};

// Differentiable map between coordinate systems. The forward map is an
// arbitrary function value; an analytic Jacobian and a domain guard are
// optional. Charts are values: copying one shares the callables.
class Chart {
 public:
  using ForwardFn = std::function<std::vector<double>(const std::vector<double>&)>;
  using JacobianFn = std::function<Matrix(const std::vector<double>&)>;
  using GuardFn = std::function<bool(const std::vector<double>&)>;

  Chart(std::string name, std::size_t n_in, std::size_t n_out, ForwardFn forward,
        JacobianFn analytic_jacobian = {}, GuardFn domain_guard = {});

  static Chart identity(std::size_t n);
  static Chart linear(Matrix a);  // x -> A x, constant Jacobian A
  static Chart polar();           // (r, theta) -> (x, y), guard r >= 0
  static Chart spherical();       // (r, theta, phi) -> (x, y, z)

  // Registry lookup backing the CLI surface. `matrix` is required for
  // "linear" and rejected elsewhere; `dim` sizes "identity" and must match
  // the fixed dimension of the others when nonzero.
  static Chart from_name(const std::string& name, std::size_t dim,
                         const Matrix* matrix);

  const std::string& name() const { return name_; }
  std::size_t n_in() const { return n_in_; }
  std::size_t n_out() const { return n_out_; }
  bool has_analytic_jacobian() const { return static_cast<bool>(analytic_); }
  bool in_domain(const std::vector<double>& point) const;

  // Evaluates the forward map; rejects points outside the domain and any
  // non-finite result.
  std::vector<double> apply(const std::vector<double>& point) const;

  // Same chart with the analytic Jacobian dropped, forcing the finite
  // difference path.
  Chart numeric_only() const;

  friend Jacobian jacobian(const Chart& chart, const std::vector<double>& point);
  friend Chart compose(const Chart& outer, const Chart& inner);

 private:
  std::string name_;
  std::size_t n_in_, n_out_;
  ForwardFn forward_;
  JacobianFn analytic_;
  GuardFn guard_;
};

// Analytic Jacobian when the chart carries one, otherwise central finite
// differences with step h_j = cbrt(eps) * max(1, |x_j|).
Jacobian jacobian(const Chart& chart, const std::vector<double>& point);

// outer after inner. Chains analytic Jacobians when both charts carry them.
Chart compose(const Chart& outer, const Chart& inner);

// New-frame components J v of a contravariant vector. The Jacobian must be
// square and nonsingular: coordinate changes are invertible where defined.
ComponentVector push_contravariant(const Jacobian& jac, const ComponentVector& v);

// New-frame components (J^-1)^T v of a covariant vector.
ComponentVector pull_covariant(const Jacobian& jac, const ComponentVector& v);

// Scalar function of position; the prototype source of covariant components.
class ScalarField {
 public:
  using Fn = std::function<double(const std::vector<double>&)>;

  ScalarField(std::size_t dim, Fn f) : dim_(dim), f_(std::move(f)) {}

  std::size_t dim() const { return dim_; }
  double operator()(const std::vector<double>& point) const;

 private:
  std::size_t dim_;
  Fn f_;
};

// Central-difference gradient; covariant by construction.
ComponentVector gradient(const ScalarField& field, const std::vector<double>& point);

// First-order change grad_i dx^i of a scalar along a displacement. Invariant
// under chart changes when both factors transform by their own laws.
double directional_increment(const ComponentVector& grad, const ComponentVector& dx);

// Metric J^T J induced by the chart at a point; RankDeficient wherever the
// Jacobian loses column rank (e.g. the polar chart at r = 0).
MetricTensor pullback_metric(const Chart& chart, const std::vector<double>& point);

}  // namespace oblique
