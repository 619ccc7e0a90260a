/*
 * oblique: non-orthogonal bases that behave like orthonormal ones.
 *
 * C interface to the oblique core. All objects are opaque handles created
 * and destroyed here; every fallible call returns an oblique_status and
 * writes results only on OBLIQUE_OK. oblique_last_message() carries the
 * detail text of the most recent failure in the calling thread.
 *
 * Conventions: matrices are row-major double arrays; a "basis" argument is
 * n rows of n components each; all outputs are caller-allocated.
 */

#ifndef OBLIQUE_H
#define OBLIQUE_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum oblique_status {
  OBLIQUE_OK = 0,
  OBLIQUE_ERR_DEGENERATE_BASIS = 1,
  OBLIQUE_ERR_SINGULAR_GRAM = 2,
  OBLIQUE_ERR_NOT_UNIT_BASIS = 3,
  OBLIQUE_ERR_DIMENSION_MISMATCH = 4,
  OBLIQUE_ERR_NOT_POSITIVE_DEFINITE = 5,
  OBLIQUE_ERR_FINGERPRINT_MISMATCH = 6,
  OBLIQUE_ERR_SINGULAR_JACOBIAN = 7,
  OBLIQUE_ERR_OUT_OF_DOMAIN = 8,
  OBLIQUE_ERR_NON_FINITE = 9,
  OBLIQUE_ERR_RANK_DEFICIENT = 10,
  OBLIQUE_ERR_ZERO_TANGENT = 11,
  OBLIQUE_ERR_INVALID_ARGUMENT = 12
} oblique_status;

typedef enum oblique_variance {
  OBLIQUE_CONTRAVARIANT = 0,
  OBLIQUE_COVARIANT = 1
} oblique_variance;

typedef enum oblique_basis_role {
  OBLIQUE_BASIS_ORIGINAL = 0,
  OBLIQUE_BASIS_DUAL = 1
} oblique_basis_role;

typedef enum oblique_metric_kind {
  OBLIQUE_METRIC_LOWER = 0,
  OBLIQUE_METRIC_UPPER = 1
} oblique_metric_kind;

typedef struct oblique_basis3 oblique_basis3;
typedef struct oblique_components3 oblique_components3;
typedef struct oblique_metric oblique_metric;
typedef struct oblique_chart oblique_chart;

const char* oblique_version(void);
const char* oblique_status_name(oblique_status status);
const char* oblique_last_message(void);

/* --- 3-vector primitives ------------------------------------------------ */

oblique_status oblique_dot3(const double u[3], const double v[3], double* out);
oblique_status oblique_cross3(const double u[3], const double v[3], double out[3]);
oblique_status oblique_triple3(const double a[3], const double b[3],
                               const double c[3], double* out);

/* --- Gram matrices ------------------------------------------------------ */

/* gram_out[i*n+j] = row_i . row_j for n row vectors of n components. */
oblique_status oblique_gram_matrix(size_t n, const double* vectors,
                                   double* gram_out);

/* Pivoted-elimination inverse of a symmetric positive-diagonal matrix. */
oblique_status oblique_gram_invert(size_t n, const double* gram,
                                   double* inverse_out, double* det_out);

/* Determinant of a 3x3 unit-vector Gram matrix from its off-diagonal dots. */
oblique_status oblique_gram_unit_determinant3(const double gram[9], double* out);

/* Closed-form inverse of a 3x3 unit-vector Gram matrix. */
oblique_status oblique_gram_closed_form_inverse3(const double gram[9],
                                                 double inverse_out[9],
                                                 double* det_out);

/* --- Basis3 and reciprocal machinery ------------------------------------ */

/* rows = e1, e2, e3 row-major. Fails with DEGENERATE_BASIS when coplanar. */
oblique_status oblique_basis3_create(const double rows[9], oblique_basis3** out);
void oblique_basis3_destroy(oblique_basis3* basis);

oblique_status oblique_basis3_rows(const oblique_basis3* basis, double out[9]);
oblique_status oblique_basis3_role(const oblique_basis3* basis,
                                   oblique_basis_role* out);
oblique_status oblique_basis3_triple(const oblique_basis3* basis, double* out);

oblique_status oblique_basis3_reciprocal(const oblique_basis3* basis,
                                         oblique_basis3** out);

/* out[i*3+j] = e_i . d_j - delta_ij. */
oblique_status oblique_basis3_duality_defect(const oblique_basis3* basis,
                                             const oblique_basis3* dual,
                                             double out[9]);

/* Sum of dyads e_i (x) e_i' minus the identity. */
oblique_status oblique_basis3_completeness_defect(const oblique_basis3* basis,
                                                  double out[9]);

oblique_status oblique_basis3_contravariant(const oblique_basis3* basis,
                                            const double v[3],
                                            oblique_components3** out);
oblique_status oblique_basis3_covariant(const oblique_basis3* basis,
                                        const double v[3],
                                        oblique_components3** out);

/* Independent contravariant route through the Gram system G c = (v . e_i). */
oblique_status oblique_basis3_components_via_gram(const oblique_basis3* basis,
                                                  const double v[3],
                                                  oblique_components3** out);

/* Expands components over the basis (contravariant) or its reciprocal
 * (covariant). Fails with FINGERPRINT_MISMATCH when the components were
 * computed against a different basis. */
oblique_status oblique_basis3_reconstruct(const oblique_basis3* basis,
                                          const oblique_components3* components,
                                          double out[3]);

/* u . v from mixed components over one basis and its reciprocal. */
oblique_status oblique_basis3_scalar_product_mixed(const oblique_basis3* basis,
                                                   const double u[3],
                                                   const double v[3],
                                                   double* out);

void oblique_components3_destroy(oblique_components3* components);
oblique_status oblique_components3_values(const oblique_components3* components,
                                          double out[3]);
oblique_status oblique_components3_variance(const oblique_components3* components,
                                            oblique_variance* out);

/* --- Metric tensors ------------------------------------------------------ */

/* Lower-index metric from row-major entries: symmetric positive-definite. */
oblique_status oblique_metric_create(size_t n, const double* entries,
                                     oblique_metric** out);

/* g_ij = e_i . e_j for n basis rows of n components. */
oblique_status oblique_metric_from_basis(size_t n, const double* vectors,
                                         oblique_metric** out);

void oblique_metric_destroy(oblique_metric* metric);

oblique_status oblique_metric_dim(const oblique_metric* metric, size_t* out);
oblique_status oblique_metric_get_kind(const oblique_metric* metric,
                                       oblique_metric_kind* out);
oblique_status oblique_metric_entries(const oblique_metric* metric, double* out);
oblique_status oblique_metric_determinant(const oblique_metric* metric,
                                          double* out);

/* Conjugate metric: kind flips, cached entries swap. */
oblique_status oblique_metric_inverse(const oblique_metric* metric,
                                      oblique_metric** out);

/* max |g_ik g^kj - delta_i^j|. */
oblique_status oblique_metric_conjugacy_defect(const oblique_metric* metric,
                                               double* out);

oblique_status oblique_metric_lower_index(const oblique_metric* metric,
                                          const double* contravariant,
                                          double* covariant_out);
oblique_status oblique_metric_raise_index(const oblique_metric* metric,
                                          const double* covariant,
                                          double* contravariant_out);

/* g_ij dx^i dx^j. */
oblique_status oblique_metric_line_element(const oblique_metric* metric,
                                           const double* dx, double* out);

/* g_ij t^i t^j - 1; fails with ZERO_TANGENT on a zero vector. */
oblique_status oblique_metric_tangent_defect(const oblique_metric* metric,
                                             const double* tangent, double* out);

/* --- Coordinate charts ---------------------------------------------------- */

/* Built-in charts: "identity" (any dim), "polar" (2), "spherical" (3),
 * "linear" (dim x dim matrix required; pass NULL for the others). */
oblique_status oblique_chart_create(const char* name, size_t dim,
                                    const double* matrix, oblique_chart** out);
void oblique_chart_destroy(oblique_chart* chart);

oblique_status oblique_chart_dims(const oblique_chart* chart, size_t* n_in,
                                  size_t* n_out);
oblique_status oblique_chart_apply(const oblique_chart* chart,
                                   const double* point, double* out);

/* Analytic Jacobian when the chart has one, else central differences.
 * jacobian_out is n_out x n_in row-major. */
oblique_status oblique_chart_jacobian(const oblique_chart* chart,
                                      const double* point, double* jacobian_out);

/* Metric J^T J induced at the point; RANK_DEFICIENT at coordinate
 * singularities such as the polar origin. */
oblique_status oblique_chart_pullback_metric(const oblique_chart* chart,
                                             const double* point,
                                             oblique_metric** out);

/* New-frame components J v of a contravariant vector; the n x n Jacobian
 * must be nonsingular. */
oblique_status oblique_push_contravariant(size_t n, const double* jacobian,
                                          const double* components, double* out);

/* New-frame components (J^-1)^T v of a covariant vector. */
oblique_status oblique_pull_covariant(size_t n, const double* jacobian,
                                      const double* components, double* out);

/* Invariant pairing sum_i covariant_i contravariant^i. */
oblique_status oblique_contract(size_t n, const double* covariant,
                                const double* contravariant, double* out);

/* Central-difference gradient of a caller-supplied scalar field; the result
 * is covariant. `user` is passed through untouched. */
typedef double (*oblique_scalar_fn)(const double* point, size_t n, void* user);
oblique_status oblique_gradient(oblique_scalar_fn field, void* user, size_t n,
                                const double* point, double* covariant_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* OBLIQUE_H */
