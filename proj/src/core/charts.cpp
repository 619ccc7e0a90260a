#include "core/charts.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace oblique {

namespace {

const double kFdStep = std::cbrt(std::numeric_limits<double>::epsilon());

void require_point_dim(std::size_t expected, const std::vector<double>& point) {
  if (point.size() != expected)
    fail(ErrorCode::DimensionMismatch, "point dimension does not match the chart");
  for (double c : point)
    if (!std::isfinite(c)) fail(ErrorCode::NonFinite, "point component is not finite");
}

}  // namespace

Chart::Chart(std::string name, std::size_t n_in, std::size_t n_out,
             ForwardFn forward, JacobianFn analytic_jacobian, GuardFn domain_guard)
    : name_(std::move(name)),
      n_in_(n_in),
      n_out_(n_out),
      forward_(std::move(forward)),
      analytic_(std::move(analytic_jacobian)),
      guard_(std::move(domain_guard)) {
  if (n_in_ == 0 || n_out_ == 0)
    fail(ErrorCode::InvalidArgument, "chart dimensions must be positive");
  if (!forward_) fail(ErrorCode::InvalidArgument, "chart needs a forward map");
}

Chart Chart::identity(std::size_t n) {
  return Chart(
      "identity", n, n, [](const std::vector<double>& x) { return x; },
      [n](const std::vector<double>&) { return Matrix::identity(n); });
}

Chart Chart::linear(Matrix a) {
  if (a.rows() == 0 || a.rows() != a.cols())
    fail(ErrorCode::InvalidArgument, "linear chart needs a square matrix");
  if (!a.all_finite())
    fail(ErrorCode::NonFinite, "linear chart matrix entry is not finite");
  const std::size_t n = a.rows();
  return Chart(
      "linear", n, n,
      [a](const std::vector<double>& x) { return multiply(a, x); },
      [a](const std::vector<double>&) { return a; });
}

Chart Chart::polar() {
  return Chart(
      "polar", 2, 2,
      [](const std::vector<double>& p) {
        return std::vector<double>{p[0] * std::cos(p[1]), p[0] * std::sin(p[1])};
      },
      [](const std::vector<double>& p) {
        Matrix j(2, 2);
        j(0, 0) = std::cos(p[1]);
        j(0, 1) = -p[0] * std::sin(p[1]);
        j(1, 0) = std::sin(p[1]);
        j(1, 1) = p[0] * std::cos(p[1]);
        return j;
      },
      // r < 0 is outside the chart; r = 0 is admitted and surfaces as a
      // rank/singularity error in the operations that need an invertible map.
      [](const std::vector<double>& p) { return p[0] >= 0.0; });
}

Chart Chart::spherical() {
  return Chart(
      "spherical", 3, 3,
      [](const std::vector<double>& p) {
        const double r = p[0], th = p[1], ph = p[2];
        return std::vector<double>{r * std::sin(th) * std::cos(ph),
                                   r * std::sin(th) * std::sin(ph),
                                   r * std::cos(th)};
      },
      [](const std::vector<double>& p) {
        const double r = p[0], th = p[1], ph = p[2];
        const double st = std::sin(th), ct = std::cos(th);
        const double sp = std::sin(ph), cp = std::cos(ph);
        Matrix j(3, 3);
        j(0, 0) = st * cp; j(0, 1) = r * ct * cp; j(0, 2) = -r * st * sp;
        j(1, 0) = st * sp; j(1, 1) = r * ct * sp; j(1, 2) = r * st * cp;
        j(2, 0) = ct;      j(2, 1) = -r * st;     j(2, 2) = 0.0;
        return j;
      },
      [](const std::vector<double>& p) {
        return p[0] >= 0.0 && p[1] >= 0.0 && p[1] <= std::acos(-1.0);
      });
}

Chart Chart::from_name(const std::string& name, std::size_t dim,
                       const Matrix* matrix) {
  if (name == "linear") {
    if (!matrix)
      fail(ErrorCode::InvalidArgument, "linear chart needs a matrix");
    if (dim != 0 && matrix->rows() != dim)
      fail(ErrorCode::DimensionMismatch,
           "linear chart matrix does not match the requested dimension");
    return linear(*matrix);
  }
  if (matrix)
    fail(ErrorCode::InvalidArgument,
         "only the linear chart takes a matrix parameter");
  if (name == "identity") {
    if (dim == 0) fail(ErrorCode::InvalidArgument, "identity chart needs a dimension");
    return identity(dim);
  }
  if (name == "polar") {
    if (dim != 0 && dim != 2)
      fail(ErrorCode::DimensionMismatch, "polar chart is two-dimensional");
    return polar();
  }
  if (name == "spherical") {
    if (dim != 0 && dim != 3)
      fail(ErrorCode::DimensionMismatch, "spherical chart is three-dimensional");
    return spherical();
  }
  fail(ErrorCode::InvalidArgument, "unknown chart: " + name);
}

bool Chart::in_domain(const std::vector<double>& point) const {
  return !guard_ || guard_(point);
}

std::vector<double> Chart::apply(const std::vector<double>& point) const {
  require_point_dim(n_in_, point);
  if (!in_domain(point))
    fail(ErrorCode::OutOfDomain, "point is outside the chart domain");
  std::vector<double> out = forward_(point);
  if (out.size() != n_out_)
    fail(ErrorCode::DimensionMismatch, "chart forward map returned the wrong dimension");
  for (double c : out)
    if (!std::isfinite(c))
      fail(ErrorCode::NonFinite, "chart evaluation produced a non-finite value");
  return out;
}

Chart Chart::numeric_only() const {
  Chart c = *this;
  c.analytic_ = JacobianFn{};
  return c;
}

Jacobian jacobian(const Chart& chart, const std::vector<double>& point) {
  require_point_dim(chart.n_in(), point);
  if (!chart.in_domain(point))
    fail(ErrorCode::OutOfDomain, "point is outside the chart domain");
  if (chart.analytic_) {
    Matrix j = chart.analytic_(point);
    if (j.rows() != chart.n_out() || j.cols() != chart.n_in())
      fail(ErrorCode::DimensionMismatch, "analytic Jacobian has the wrong shape");
    if (!j.all_finite())
      fail(ErrorCode::NonFinite, "analytic Jacobian entry is not finite");
    return {std::move(j), point};
  }
  Matrix j(chart.n_out(), chart.n_in());
  std::vector<double> lo = point, hi = point;
  for (std::size_t k = 0; k < chart.n_in(); ++k) {
    const double h = kFdStep * std::max(1.0, std::fabs(point[k]));
    hi[k] = point[k] + h;
    lo[k] = point[k] - h;
    const std::vector<double> fp = chart.apply(hi);
    const std::vector<double> fm = chart.apply(lo);
    for (std::size_t i = 0; i < chart.n_out(); ++i)
      j(i, k) = (fp[i] - fm[i]) / (2.0 * h);
    hi[k] = point[k];
    lo[k] = point[k];
  }
  return {std::move(j), point};
}

Chart compose(const Chart& outer, const Chart& inner) {
  if (inner.n_out() != outer.n_in())
    fail(ErrorCode::DimensionMismatch, "chart composition dimensions do not chain");
  Chart::ForwardFn fwd = [outer, inner](const std::vector<double>& x) {
    return outer.forward_(inner.forward_(x));
  };
  Chart::JacobianFn jac;
  if (outer.analytic_ && inner.analytic_) {
    jac = [outer, inner](const std::vector<double>& x) {
      return multiply(outer.analytic_(inner.forward_(x)), inner.analytic_(x));
    };
  }
  Chart::GuardFn guard = [outer, inner](const std::vector<double>& x) {
    if (!inner.in_domain(x)) return false;
    if (!outer.guard_) return true;
    return outer.guard_(inner.forward_(x));
  };
  return Chart(outer.name_ + "." + inner.name_, inner.n_in(), outer.n_out(),
               std::move(fwd), std::move(jac), std::move(guard));
}

namespace {

const Matrix& require_square(const Jacobian& jac) {
  if (jac.matrix.rows() != jac.matrix.cols())
    fail(ErrorCode::DimensionMismatch,
         "component transformation needs a square Jacobian");
  return jac.matrix;
}

}  // namespace

ComponentVector push_contravariant(const Jacobian& jac, const ComponentVector& v) {
  const Matrix& j = require_square(jac);
  if (v.dim() != j.cols())
    fail(ErrorCode::DimensionMismatch, "components do not match the Jacobian");
  if (v.variance() != Variance::Contravariant)
    fail(ErrorCode::InvalidArgument,
         "push_contravariant expects contravariant components");
  if (is_singular(j))
    fail(ErrorCode::SingularJacobian,
         "Jacobian is numerically singular at the base point");
  return ComponentVector(multiply(j, v.values()), Variance::Contravariant);
}

ComponentVector pull_covariant(const Jacobian& jac, const ComponentVector& v) {
  const Matrix& j = require_square(jac);
  if (v.dim() != j.cols())
    fail(ErrorCode::DimensionMismatch, "components do not match the Jacobian");
  if (v.variance() != Variance::Covariant)
    fail(ErrorCode::InvalidArgument, "pull_covariant expects covariant components");
  auto inv = try_invert(j);
  if (!inv)
    fail(ErrorCode::SingularJacobian,
         "Jacobian is numerically singular at the base point");
  return ComponentVector(multiply(inv->inverse.transposed(), v.values()),
                         Variance::Covariant);
}

double ScalarField::operator()(const std::vector<double>& point) const {
  require_point_dim(dim_, point);
  return f_(point);
}

ComponentVector gradient(const ScalarField& field, const std::vector<double>& point) {
  require_point_dim(field.dim(), point);
  std::vector<double> g(field.dim());
  std::vector<double> lo = point, hi = point;
  for (std::size_t k = 0; k < field.dim(); ++k) {
    const double h = kFdStep * std::max(1.0, std::fabs(point[k]));
    hi[k] = point[k] + h;
    lo[k] = point[k] - h;
    const double fp = field(hi);
    const double fm = field(lo);
    if (!std::isfinite(fp) || !std::isfinite(fm))
      fail(ErrorCode::NonFinite, "scalar field evaluation is not finite");
    g[k] = (fp - fm) / (2.0 * h);
    hi[k] = point[k];
    lo[k] = point[k];
  }
  return ComponentVector(std::move(g), Variance::Covariant);
}

double directional_increment(const ComponentVector& grad, const ComponentVector& dx) {
  if (grad.variance() != Variance::Covariant)
    fail(ErrorCode::InvalidArgument,
         "directional_increment expects a covariant gradient");
  if (dx.variance() != Variance::Contravariant)
    fail(ErrorCode::InvalidArgument,
         "directional_increment expects a contravariant displacement");
  if (grad.dim() != dx.dim())
    fail(ErrorCode::DimensionMismatch, "gradient and displacement dimensions differ");
  double s = 0.0;
  for (std::size_t i = 0; i < grad.dim(); ++i) s += grad[i] * dx[i];
  return s;
}

MetricTensor pullback_metric(const Chart& chart, const std::vector<double>& point) {
  const Jacobian jac = jacobian(chart, point);
  const Matrix& j = jac.matrix;
  Matrix g(j.cols(), j.cols());
  for (std::size_t a = 0; a < j.cols(); ++a)
    for (std::size_t b = a; b < j.cols(); ++b) {
      double s = 0.0;
      for (std::size_t k = 0; k < j.rows(); ++k) s += j(k, a) * j(k, b);
      g(a, b) = s;
      g(b, a) = s;
    }
  // Column-rank test before handing the form to MetricTensor: a pivot at or
  // below 1e-12 of the largest diagonal marks a coordinate singularity.
  {
    Matrix probe = g;
    double scale = 0.0;
    for (std::size_t i = 0; i < probe.rows(); ++i)
      scale = std::max(scale, std::fabs(probe(i, i)));
    bool deficient = scale == 0.0;
    if (!deficient) {
      const double floor = 1e-12 * scale;
      for (std::size_t c = 0; c < probe.rows() && !deficient; ++c) {
        if (probe(c, c) <= floor) {
          deficient = true;
          break;
        }
        for (std::size_t i = c + 1; i < probe.rows(); ++i) {
          const double m = probe(i, c) / probe(c, c);
          for (std::size_t k = c; k < probe.rows(); ++k)
            probe(i, k) -= m * probe(c, k);
        }
      }
    }
    if (deficient)
      fail(ErrorCode::RankDeficient,
           "chart Jacobian loses rank at the base point");
  }
  try {
    return MetricTensor::lower(std::move(g));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotPositiveDefinite)
      fail(ErrorCode::RankDeficient, "chart Jacobian loses rank at the base point");
    throw;
  }
}

}  // namespace oblique
