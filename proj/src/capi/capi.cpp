#include "oblique/oblique.h"

#include <cstring>
#include <string>
#include <vector>

#include "core/charts.hpp"
#include "core/gram.hpp"
#include "core/matrix.hpp"
#include "core/metric.hpp"
#include "core/reciprocal.hpp"
#include "core/vec3.hpp"

struct oblique_basis3 {
  oblique::Basis3 value;
};
struct oblique_components3 {
  oblique::Components3 value;
};
struct oblique_metric {
  oblique::MetricTensor value;
};
struct oblique_chart {
  oblique::Chart value;
};

namespace {

thread_local std::string t_last_message;

oblique_status status_of(oblique::ErrorCode code) {
  using oblique::ErrorCode;
  switch (code) {
    case ErrorCode::DegenerateBasis:     return OBLIQUE_ERR_DEGENERATE_BASIS;
    case ErrorCode::SingularGram:        return OBLIQUE_ERR_SINGULAR_GRAM;
    case ErrorCode::NotUnitBasis:        return OBLIQUE_ERR_NOT_UNIT_BASIS;
    case ErrorCode::DimensionMismatch:   return OBLIQUE_ERR_DIMENSION_MISMATCH;
    case ErrorCode::NotPositiveDefinite: return OBLIQUE_ERR_NOT_POSITIVE_DEFINITE;
    case ErrorCode::FingerprintMismatch: return OBLIQUE_ERR_FINGERPRINT_MISMATCH;
    case ErrorCode::SingularJacobian:    return OBLIQUE_ERR_SINGULAR_JACOBIAN;
    case ErrorCode::OutOfDomain:         return OBLIQUE_ERR_OUT_OF_DOMAIN;
    case ErrorCode::NonFinite:           return OBLIQUE_ERR_NON_FINITE;
    case ErrorCode::RankDeficient:       return OBLIQUE_ERR_RANK_DEFICIENT;
    case ErrorCode::ZeroTangent:         return OBLIQUE_ERR_ZERO_TANGENT;
    case ErrorCode::InvalidArgument:     return OBLIQUE_ERR_INVALID_ARGUMENT;
  }
  return OBLIQUE_ERR_INVALID_ARGUMENT;
}

template <typename Fn>
oblique_status guarded(Fn&& fn) {
  try {
    fn();
    t_last_message.clear();
    return OBLIQUE_OK;
  } catch (const oblique::Error& e) {
    t_last_message = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    t_last_message = e.what();
    return OBLIQUE_ERR_INVALID_ARGUMENT;
  }
}

oblique_status null_argument() {
  t_last_message = "null pointer argument";
  return OBLIQUE_ERR_INVALID_ARGUMENT;
}

oblique::Vec3 to_vec3(const double v[3]) { return {v[0], v[1], v[2]}; }

oblique::Matrix to_matrix(size_t rows, size_t cols, const double* data) {
  oblique::Matrix m(rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) m(i, j) = data[i * cols + j];
  return m;
}

void from_matrix(const oblique::Matrix& m, double* out) {
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) out[i * m.cols() + j] = m(i, j);
}

}  // namespace

extern "C" {

const char* oblique_version(void) { return "1.0.0"; }

const char* oblique_status_name(oblique_status status) {
  switch (status) {
    case OBLIQUE_OK:                        return "OK";
    case OBLIQUE_ERR_DEGENERATE_BASIS:      return "DEGENERATE_BASIS";
    case OBLIQUE_ERR_SINGULAR_GRAM:         return "SINGULAR_GRAM";
    case OBLIQUE_ERR_NOT_UNIT_BASIS:        return "NOT_UNIT_BASIS";
    case OBLIQUE_ERR_DIMENSION_MISMATCH:    return "DIMENSION_MISMATCH";
    case OBLIQUE_ERR_NOT_POSITIVE_DEFINITE: return "NOT_POSITIVE_DEFINITE";
    case OBLIQUE_ERR_FINGERPRINT_MISMATCH:  return "FINGERPRINT_MISMATCH";
    case OBLIQUE_ERR_SINGULAR_JACOBIAN:     return "SINGULAR_JACOBIAN";
    case OBLIQUE_ERR_OUT_OF_DOMAIN:         return "OUT_OF_DOMAIN";
    case OBLIQUE_ERR_NON_FINITE:            return "NON_FINITE";
    case OBLIQUE_ERR_RANK_DEFICIENT:        return "RANK_DEFICIENT";
    case OBLIQUE_ERR_ZERO_TANGENT:          return "ZERO_TANGENT";
    case OBLIQUE_ERR_INVALID_ARGUMENT:      return "INVALID_ARGUMENT";
  }
  return "UNKNOWN_STATUS";
}

const char* oblique_last_message(void) { return t_last_message.c_str(); }

/* --- 3-vector primitives ------------------------------------------------ */

oblique_status oblique_dot3(const double u[3], const double v[3], double* out) {
  if (!u || !v || !out) return null_argument();
  return guarded([&] { *out = oblique::dot(to_vec3(u), to_vec3(v)); });
}

oblique_status oblique_cross3(const double u[3], const double v[3], double out[3]) {
  if (!u || !v || !out) return null_argument();
  return guarded([&] {
    const oblique::Vec3 w = oblique::cross(to_vec3(u), to_vec3(v));
    out[0] = w.x();
    out[1] = w.y();
    out[2] = w.z();
  });
}

oblique_status oblique_triple3(const double a[3], const double b[3],
                               const double c[3], double* out) {
  if (!a || !b || !c || !out) return null_argument();
  return guarded([&] {
    *out = oblique::triple_product(to_vec3(a), to_vec3(b), to_vec3(c));
  });
}

/* --- Gram matrices ------------------------------------------------------ */

oblique_status oblique_gram_matrix(size_t n, const double* vectors,
                                   double* gram_out) {
  if (!vectors || !gram_out) return null_argument();
  return guarded([&] {
    std::vector<std::vector<double>> rows(n);
    for (size_t i = 0; i < n; ++i)
      rows[i].assign(vectors + i * n, vectors + (i + 1) * n);
    from_matrix(oblique::GramMatrix::from_vectors(rows).entries(), gram_out);
  });
}

oblique_status oblique_gram_invert(size_t n, const double* gram,
                                   double* inverse_out, double* det_out) {
  if (!gram || !inverse_out) return null_argument();
  return guarded([&] {
    const oblique::InverseGram inv =
        oblique::invert(oblique::GramMatrix::from_entries(to_matrix(n, n, gram)));
    from_matrix(inv.entries, inverse_out);
    if (det_out) *det_out = inv.determinant;
  });
}

oblique_status oblique_gram_unit_determinant3(const double gram[9], double* out) {
  if (!gram || !out) return null_argument();
  return guarded([&] {
    *out = oblique::unit_determinant3(
        oblique::GramMatrix::from_entries(to_matrix(3, 3, gram)));
  });
}

oblique_status oblique_gram_closed_form_inverse3(const double gram[9],
                                                 double inverse_out[9],
                                                 double* det_out) {
  if (!gram || !inverse_out) return null_argument();
  return guarded([&] {
    const oblique::InverseGram inv = oblique::closed_form_inverse3(
        oblique::GramMatrix::from_entries(to_matrix(3, 3, gram)));
    from_matrix(inv.entries, inverse_out);
    if (det_out) *det_out = inv.determinant;
  });
}

/* --- Basis3 and reciprocal machinery ------------------------------------ */

oblique_status oblique_basis3_create(const double rows[9], oblique_basis3** out) {
  if (!rows || !out) return null_argument();
  return guarded([&] {
    *out = new oblique_basis3{oblique::Basis3::create(
        to_vec3(rows), to_vec3(rows + 3), to_vec3(rows + 6))};
  });
}

void oblique_basis3_destroy(oblique_basis3* basis) { delete basis; }

oblique_status oblique_basis3_rows(const oblique_basis3* basis, double out[9]) {
  if (!basis || !out) return null_argument();
  return guarded([&] {
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 3; ++j) out[i * 3 + j] = basis->value.e(i)[j];
  });
}

oblique_status oblique_basis3_role(const oblique_basis3* basis,
                                   oblique_basis_role* out) {
  if (!basis || !out) return null_argument();
  *out = basis->value.role() == oblique::BasisRole::Original
             ? OBLIQUE_BASIS_ORIGINAL
             : OBLIQUE_BASIS_DUAL;
  return OBLIQUE_OK;
}

oblique_status oblique_basis3_triple(const oblique_basis3* basis, double* out) {
  if (!basis || !out) return null_argument();
  *out = basis->value.triple();
  return OBLIQUE_OK;
}

oblique_status oblique_basis3_reciprocal(const oblique_basis3* basis,
                                         oblique_basis3** out) {
  if (!basis || !out) return null_argument();
  return guarded([&] {
    *out = new oblique_basis3{oblique::reciprocal_basis(basis->value)};
  });
}

oblique_status oblique_basis3_duality_defect(const oblique_basis3* basis,
                                             const oblique_basis3* dual,
                                             double out[9]) {
  if (!basis || !dual || !out) return null_argument();
  return guarded([&] {
    from_matrix(oblique::duality_defect(basis->value, dual->value), out);
  });
}

oblique_status oblique_basis3_completeness_defect(const oblique_basis3* basis,
                                                  double out[9]) {
  if (!basis || !out) return null_argument();
  return guarded([&] {
    from_matrix(oblique::completeness_defect(basis->value), out);
  });
}

oblique_status oblique_basis3_contravariant(const oblique_basis3* basis,
                                            const double v[3],
                                            oblique_components3** out) {
  if (!basis || !v || !out) return null_argument();
  return guarded([&] {
    *out = new oblique_components3{
        oblique::contravariant_components(to_vec3(v), basis->value)};
  });
}

oblique_status oblique_basis3_covariant(const oblique_basis3* basis,
                                        const double v[3],
                                        oblique_components3** out) {
  if (!basis || !v || !out) return null_argument();
  return guarded([&] {
    *out = new oblique_components3{
        oblique::covariant_components(to_vec3(v), basis->value)};
  });
}

oblique_status oblique_basis3_components_via_gram(const oblique_basis3* basis,
                                                  const double v[3],
                                                  oblique_components3** out) {
  if (!basis || !v || !out) return null_argument();
  return guarded([&] {
    *out = new oblique_components3{
        oblique::components_via_gram(to_vec3(v), basis->value)};
  });
}

oblique_status oblique_basis3_reconstruct(const oblique_basis3* basis,
                                          const oblique_components3* components,
                                          double out[3]) {
  if (!basis || !components || !out) return null_argument();
  return guarded([&] {
    const oblique::Vec3 v = oblique::reconstruct(components->value, basis->value);
    out[0] = v.x();
    out[1] = v.y();
    out[2] = v.z();
  });
}

oblique_status oblique_basis3_scalar_product_mixed(const oblique_basis3* basis,
                                                   const double u[3],
                                                   const double v[3],
                                                   double* out) {
  if (!basis || !u || !v || !out) return null_argument();
  return guarded([&] {
    *out = oblique::scalar_product_mixed(to_vec3(u), to_vec3(v), basis->value);
  });
}

void oblique_components3_destroy(oblique_components3* components) {
  delete components;
}

oblique_status oblique_components3_values(const oblique_components3* components,
                                          double out[3]) {
  if (!components || !out) return null_argument();
  for (size_t i = 0; i < 3; ++i) out[i] = components->value[i];
  return OBLIQUE_OK;
}

oblique_status oblique_components3_variance(const oblique_components3* components,
                                            oblique_variance* out) {
  if (!components || !out) return null_argument();
  *out = components->value.variance() == oblique::Variance::Contravariant
             ? OBLIQUE_CONTRAVARIANT
             : OBLIQUE_COVARIANT;
  return OBLIQUE_OK;
}

/* --- Metric tensors ------------------------------------------------------ */

oblique_status oblique_metric_create(size_t n, const double* entries,
                                     oblique_metric** out) {
  if (!entries || !out) return null_argument();
  return guarded([&] {
    *out = new oblique_metric{
        oblique::MetricTensor::lower(to_matrix(n, n, entries))};
  });
}

oblique_status oblique_metric_from_basis(size_t n, const double* vectors,
                                         oblique_metric** out) {
  if (!vectors || !out) return null_argument();
  return guarded([&] {
    std::vector<std::vector<double>> rows(n);
    for (size_t i = 0; i < n; ++i)
      rows[i].assign(vectors + i * n, vectors + (i + 1) * n);
    *out = new oblique_metric{
        oblique::metric_from_basis(oblique::BasisN::create(std::move(rows)))};
  });
}

void oblique_metric_destroy(oblique_metric* metric) { delete metric; }

oblique_status oblique_metric_dim(const oblique_metric* metric, size_t* out) {
  if (!metric || !out) return null_argument();
  *out = metric->value.dim();
  return OBLIQUE_OK;
}

oblique_status oblique_metric_get_kind(const oblique_metric* metric,
                                       oblique_metric_kind* out) {
  if (!metric || !out) return null_argument();
  *out = metric->value.kind() == oblique::MetricKind::Lower
             ? OBLIQUE_METRIC_LOWER
             : OBLIQUE_METRIC_UPPER;
  return OBLIQUE_OK;
}

oblique_status oblique_metric_entries(const oblique_metric* metric, double* out) {
  if (!metric || !out) return null_argument();
  from_matrix(metric->value.entries(), out);
  return OBLIQUE_OK;
}

oblique_status oblique_metric_determinant(const oblique_metric* metric,
                                          double* out) {
  if (!metric || !out) return null_argument();
  *out = metric->value.determinant();
  return OBLIQUE_OK;
}

oblique_status oblique_metric_inverse(const oblique_metric* metric,
                                      oblique_metric** out) {
  if (!metric || !out) return null_argument();
  return guarded([&] {
    *out = new oblique_metric{oblique::inverse_metric(metric->value)};
  });
}

oblique_status oblique_metric_conjugacy_defect(const oblique_metric* metric,
                                               double* out) {
  if (!metric || !out) return null_argument();
  return guarded([&] { *out = oblique::conjugacy_defect(metric->value); });
}

oblique_status oblique_metric_lower_index(const oblique_metric* metric,
                                          const double* contravariant,
                                          double* covariant_out) {
  if (!metric || !contravariant || !covariant_out) return null_argument();
  return guarded([&] {
    const size_t n = metric->value.dim();
    const oblique::ComponentVector lowered = oblique::lower_index(
        oblique::ComponentVector(std::vector<double>(contravariant, contravariant + n),
                                 oblique::Variance::Contravariant),
        metric->value);
    for (size_t i = 0; i < n; ++i) covariant_out[i] = lowered[i];
  });
}

oblique_status oblique_metric_raise_index(const oblique_metric* metric,
                                          const double* covariant,
                                          double* contravariant_out) {
  if (!metric || !covariant || !contravariant_out) return null_argument();
  return guarded([&] {
    const size_t n = metric->value.dim();
    const oblique::ComponentVector raised = oblique::raise_index(
        oblique::ComponentVector(std::vector<double>(covariant, covariant + n),
                                 oblique::Variance::Covariant),
        metric->value);
    for (size_t i = 0; i < n; ++i) contravariant_out[i] = raised[i];
  });
}

oblique_status oblique_metric_line_element(const oblique_metric* metric,
                                           const double* dx, double* out) {
  if (!metric || !dx || !out) return null_argument();
  return guarded([&] {
    const size_t n = metric->value.dim();
    *out = oblique::line_element(
        oblique::ComponentVector(std::vector<double>(dx, dx + n),
                                 oblique::Variance::Contravariant),
        metric->value);
  });
}

oblique_status oblique_metric_tangent_defect(const oblique_metric* metric,
                                             const double* tangent, double* out) {
  if (!metric || !tangent || !out) return null_argument();
  return guarded([&] {
    const size_t n = metric->value.dim();
    *out = oblique::tangent_normalization_defect(
        oblique::ComponentVector(std::vector<double>(tangent, tangent + n),
                                 oblique::Variance::Contravariant),
        metric->value);
  });
}

/* --- Coordinate charts ---------------------------------------------------- */

oblique_status oblique_chart_create(const char* name, size_t dim,
                                    const double* matrix, oblique_chart** out) {
  if (!name || !out) return null_argument();
  return guarded([&] {
    if (matrix) {
      const oblique::Matrix m = to_matrix(dim, dim, matrix);
      *out = new oblique_chart{oblique::Chart::from_name(name, dim, &m)};
    } else {
      *out = new oblique_chart{oblique::Chart::from_name(name, dim, nullptr)};
    }
  });
}

void oblique_chart_destroy(oblique_chart* chart) { delete chart; }

oblique_status oblique_chart_dims(const oblique_chart* chart, size_t* n_in,
                                  size_t* n_out) {
  if (!chart || !n_in || !n_out) return null_argument();
  *n_in = chart->value.n_in();
  *n_out = chart->value.n_out();
  return OBLIQUE_OK;
}

oblique_status oblique_chart_apply(const oblique_chart* chart,
                                   const double* point, double* out) {
  if (!chart || !point || !out) return null_argument();
  return guarded([&] {
    const std::vector<double> image = chart->value.apply(
        std::vector<double>(point, point + chart->value.n_in()));
    std::memcpy(out, image.data(), image.size() * sizeof(double));
  });
}

oblique_status oblique_chart_jacobian(const oblique_chart* chart,
                                      const double* point, double* jacobian_out) {
  if (!chart || !point || !jacobian_out) return null_argument();
  return guarded([&] {
    const oblique::Jacobian jac = oblique::jacobian(
        chart->value, std::vector<double>(point, point + chart->value.n_in()));
    from_matrix(jac.matrix, jacobian_out);
  });
}

oblique_status oblique_chart_pullback_metric(const oblique_chart* chart,
                                             const double* point,
                                             oblique_metric** out) {
  if (!chart || !point || !out) return null_argument();
  return guarded([&] {
    *out = new oblique_metric{oblique::pullback_metric(
        chart->value, std::vector<double>(point, point + chart->value.n_in()))};
  });
}

oblique_status oblique_push_contravariant(size_t n, const double* jacobian,
                                          const double* components, double* out) {
  if (!jacobian || !components || !out) return null_argument();
  return guarded([&] {
    const oblique::Jacobian jac{to_matrix(n, n, jacobian), {}};
    const oblique::ComponentVector pushed = oblique::push_contravariant(
        jac, oblique::ComponentVector(std::vector<double>(components, components + n),
                                      oblique::Variance::Contravariant));
    for (size_t i = 0; i < n; ++i) out[i] = pushed[i];
  });
}

oblique_status oblique_pull_covariant(size_t n, const double* jacobian,
                                      const double* components, double* out) {
  if (!jacobian || !components || !out) return null_argument();
  return guarded([&] {
    const oblique::Jacobian jac{to_matrix(n, n, jacobian), {}};
    const oblique::ComponentVector pulled = oblique::pull_covariant(
        jac, oblique::ComponentVector(std::vector<double>(components, components + n),
                                      oblique::Variance::Covariant));
    for (size_t i = 0; i < n; ++i) out[i] = pulled[i];
  });
}

oblique_status oblique_contract(size_t n, const double* covariant,
                                const double* contravariant, double* out) {
  if (!covariant || !contravariant || !out) return null_argument();
  return guarded([&] {
    *out = oblique::directional_increment(
        oblique::ComponentVector(std::vector<double>(covariant, covariant + n),
                                 oblique::Variance::Covariant),
        oblique::ComponentVector(
            std::vector<double>(contravariant, contravariant + n),
            oblique::Variance::Contravariant));
  });
}

oblique_status oblique_gradient(oblique_scalar_fn field, void* user, size_t n,
                                const double* point, double* covariant_out) {
  if (!field || !point || !covariant_out) return null_argument();
  return guarded([&] {
    const oblique::ScalarField f(n, [field, user, n](const std::vector<double>& x) {
      return field(x.data(), n, user);
    });
    const oblique::ComponentVector g =
        oblique::gradient(f, std::vector<double>(point, point + n));
    for (size_t i = 0; i < n; ++i) covariant_out[i] = g[i];
  });
}

} /* extern "C" */
