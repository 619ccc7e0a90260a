#include <doctest.h>

#include <cmath>

#include "core/error.hpp"
#include "core/metric.hpp"
#include "core/reciprocal.hpp"
#include "oracles.hpp"
#include "support.hpp"

using oblique::BasisN;
using oblique::ComponentVector;
using oblique::Error;
using oblique::ErrorCode;
using oblique::Matrix;
using oblique::MetricKind;
using oblique::MetricTensor;
using oblique::Variance;

namespace {

Matrix worked_gram() {
  Matrix g(3, 3);
  const double rows[3][3] = {{1, 1, 1}, {1, 2, 2}, {1, 2, 3}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g(i, j) = rows[i][j];
  return g;
}

}  // namespace

TEST_CASE("metric from a basis reproduces the gram matrix") {
  const BasisN b = BasisN::create({{1, 0, 0}, {1, 1, 0}, {1, 1, 1}});
  const MetricTensor g = oblique::metric_from_basis(b);
  CHECK(g.kind() == MetricKind::Lower);
  CHECK(oblique::max_abs_diff(g.entries(), worked_gram()) == 0.0);
  CHECK(g.determinant() == 1.0);

  // Integer input keeps the inverse exact: the worked conjugate metric.
  const double expected_inv[3][3] = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(g.conjugate_entries()(i, j) == expected_inv[i][j]);
  CHECK(oblique::conjugacy_defect(g) == 0.0);
}

TEST_CASE("metric construction rejects what it must") {
  Matrix asym = Matrix::identity(3);
  asym(0, 1) = 0.2;
  CHECK_THROWS_WITH_AS(MetricTensor::lower(asym), "metric must be symmetric", Error);

  Matrix indef = Matrix::identity(2);
  indef(0, 0) = -1.0;
  try {
    MetricTensor::lower(indef);
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPositiveDefinite);
  }

  // A coplanar frame has a semidefinite gram matrix.
  try {
    oblique::metric_from_basis(BasisN::create({{1, 0}, {2, 0}}));
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateBasis);
  }

  CHECK_THROWS_AS(BasisN::create({{1, 0, 0}, {0, 1, 0}}), Error);  // not square
}

TEST_CASE("conjugate metric is the matrix inverse, oracle checked") {
  testgen::Rng rng(testgen::kSeed + 30);
  for (std::size_t n = 2; n <= 6; ++n) {
    for (int iter = 0; iter < 40; ++iter) {
      const Matrix spd = testgen::random_spd(rng, n);
      const MetricTensor g = MetricTensor::lower(spd);
      std::vector<double> flat(n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) flat[i * n + j] = spd(i, j);
      const std::vector<double> ref = oracle::inverse_n(flat, n);
      double refmax = 0.0;
      for (double x : ref) refmax = std::max(refmax, std::fabs(x));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          CHECK(std::fabs(g.conjugate_entries()(i, j) - ref[i * n + j]) <=
                1e-7 * refmax);
      CHECK(oblique::conjugacy_defect(g) <= 1e-10 * static_cast<double>(n));
    }
  }
}

TEST_CASE("inverse metric swaps kind and inverts the determinant") {
  testgen::Rng rng(testgen::kSeed + 31);
  const Matrix spd = testgen::random_spd(rng, 4);
  const MetricTensor g = MetricTensor::lower(spd);
  const MetricTensor ginv = oblique::inverse_metric(g);
  CHECK(ginv.kind() == MetricKind::Upper);
  CHECK(ginv.determinant() == doctest::Approx(1.0 / g.determinant()).epsilon(1e-12));
  CHECK(oblique::max_abs_diff(ginv.entries(), g.conjugate_entries()) == 0.0);
  CHECK(oblique::max_abs_diff(ginv.conjugate_entries(), g.entries()) == 0.0);
  // Inverting twice restores the lower kind.
  const MetricTensor gback = oblique::inverse_metric(ginv);
  CHECK(gback.kind() == MetricKind::Lower);
  CHECK(oblique::max_abs_diff(gback.entries(), g.entries()) == 0.0);
}

TEST_CASE("worked example: lowering and raising an index") {
  const MetricTensor g = MetricTensor::lower(worked_gram());
  const ComponentVector contra({-1.0, -1.0, 4.0}, Variance::Contravariant);
  const ComponentVector lowered = oblique::lower_index(contra, g);
  CHECK(lowered.variance() == Variance::Covariant);
  CHECK(lowered.values()[0] == 2.0);
  CHECK(lowered.values()[1] == 5.0);
  CHECK(lowered.values()[2] == 9.0);

  const ComponentVector raised = oblique::raise_index(lowered, g);
  CHECK(raised.variance() == Variance::Contravariant);
  CHECK(raised.values()[0] == -1.0);
  CHECK(raised.values()[1] == -1.0);
  CHECK(raised.values()[2] == 4.0);
}

TEST_CASE("index maps respect variance and dimension") {
  const MetricTensor g = MetricTensor::lower(worked_gram());
  const ComponentVector cov({1, 2, 3}, Variance::Covariant);
  const ComponentVector contra({1, 2, 3}, Variance::Contravariant);
  CHECK_THROWS_AS(oblique::lower_index(cov, g), Error);       // already covariant
  CHECK_THROWS_AS(oblique::raise_index(contra, g), Error);    // already contravariant
  CHECK_THROWS_AS(
      oblique::lower_index(ComponentVector({1, 2}, Variance::Contravariant), g),
      Error);
}

TEST_CASE("raise after lower is the identity map") {
  testgen::Rng rng(testgen::kSeed + 32);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t n = 2 + iter % 5;
    const MetricTensor g = MetricTensor::lower(testgen::random_spd(rng, n));
    const std::vector<double> v = testgen::random_vector(rng, n);
    const ComponentVector down =
        oblique::lower_index(ComponentVector(v, Variance::Contravariant), g);
    const ComponentVector up = oblique::raise_index(down, g);
    double vmax = 1.0;
    for (double x : v) vmax = std::max(vmax, std::fabs(x));
    for (std::size_t i = 0; i < n; ++i)
      CHECK(std::fabs(up.values()[i] - v[i]) <= 1e-9 * vmax);
  }
}

TEST_CASE("line element matches the euclidean length in the modelled frame") {
  // Components of v in the basis, measured with the basis metric, must give
  // back |v|^2 no matter how oblique the basis is.
  testgen::Rng rng(testgen::kSeed + 33);
  for (int iter = 0; iter < 200; ++iter) {
    const oblique::Basis3 b = testgen::random_basis3(rng);
    const oblique::Vec3 v = testgen::random_vec3(rng, 0.1, 5.0);
    const oblique::Components3 c = oblique::contravariant_components(v, b);
    const MetricTensor g = oblique::metric_from_basis(
        BasisN::create({{b.e(0).x(), b.e(0).y(), b.e(0).z()},
                        {b.e(1).x(), b.e(1).y(), b.e(1).z()},
                        {b.e(2).x(), b.e(2).y(), b.e(2).z()}}));
    const ComponentVector cv(
        {c.values()[0], c.values()[1], c.values()[2]}, Variance::Contravariant);
    const double ds2 = oblique::line_element(cv, g);
    CHECK(ds2 == doctest::Approx(dot(v, v)).epsilon(1e-10));
  }
}

TEST_CASE("tangent normalization defect and the zero tangent") {
  const MetricTensor g = MetricTensor::lower(worked_gram());
  // e1 modelled in its own basis has components (1,0,0) and unit length.
  const ComponentVector e1({1, 0, 0}, Variance::Contravariant);
  CHECK(oblique::tangent_normalization_defect(e1, g) == 0.0);
  const ComponentVector twice({2, 0, 0}, Variance::Contravariant);
  CHECK(oblique::tangent_normalization_defect(twice, g) == doctest::Approx(3.0));
  try {
    oblique::tangent_normalization_defect(
        ComponentVector({0, 0, 0}, Variance::Contravariant), g);
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroTangent);
  }
}

TEST_CASE("reciprocal basis metric is the conjugate metric") {
  testgen::Rng rng(testgen::kSeed + 34);
  for (int iter = 0; iter < 200; ++iter) {
    const oblique::Basis3 b = testgen::random_basis3(rng);
    const oblique::Basis3 d = oblique::reciprocal_basis(b);
    const MetricTensor g = oblique::metric_from_basis(
        BasisN::create({{b.e(0).x(), b.e(0).y(), b.e(0).z()},
                        {b.e(1).x(), b.e(1).y(), b.e(1).z()},
                        {b.e(2).x(), b.e(2).y(), b.e(2).z()}}));
    const MetricTensor gd = oblique::metric_from_basis(
        BasisN::create({{d.e(0).x(), d.e(0).y(), d.e(0).z()},
                        {d.e(1).x(), d.e(1).y(), d.e(1).z()},
                        {d.e(2).x(), d.e(2).y(), d.e(2).z()}}));
    double scale = g.conjugate_entries().max_abs();
    CHECK(oblique::max_abs_diff(gd.entries(), g.conjugate_entries()) <=
          1e-9 * std::max(1.0, scale));
  }
}
