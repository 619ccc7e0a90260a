#include "core/reciprocal.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>

namespace oblique {

namespace {

constexpr double kDegenerateRatio = 1e-12;

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t bits) {
  for (int b = 0; b < 8; ++b) {
    h ^= (bits >> (8 * b)) & 0xffu;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t hash_frame(const Vec3& e1, const Vec3& e2, const Vec3& e3) {
  std::uint64_t h = 1469598103934665603ull;
  for (const Vec3* v : {&e1, &e2, &e3})
    for (std::size_t i = 0; i < 3; ++i)
      h = fnv1a(h, std::bit_cast<std::uint64_t>((*v)[i]));
  return h;
}

Matrix outer(const Vec3& u, const Vec3& v) {
  Matrix m(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = u[i] * v[j];
  return m;
}

std::array<double, 3> dots_with(const Vec3& v, const Basis3& basis) {
  return {dot(v, basis.e(0)), dot(v, basis.e(1)), dot(v, basis.e(2))};
}

}  // namespace

Basis3::Basis3(const Vec3& e1, const Vec3& e2, const Vec3& e3, BasisRole role,
               double triple)
    : e_{e1, e2, e3},
      role_(role),
      triple_(triple),
      fingerprint_(hash_frame(e1, e2, e3)) {}

Basis3 Basis3::create(const Vec3& e1, const Vec3& e2, const Vec3& e3,
                      BasisRole role) {
  const double vol = triple_product(e1, e2, e3);
  const double scale = std::max({norm(e1), norm(e2), norm(e3)});
  if (std::fabs(vol) <= kDegenerateRatio * scale * scale * scale) {
    char msg[64];
    std::snprintf(msg, sizeof msg, "degenerate basis: |triple| = %.17g",
                  std::fabs(vol));
    fail(ErrorCode::DegenerateBasis, msg);
  }
  return Basis3(e1, e2, e3, role, vol);
}

Basis3 reciprocal_basis(const Basis3& basis) {
  const double v = basis.triple();
  const Vec3 d1 = cross(basis.e(1), basis.e(2)) / v;
  const Vec3 d2 = cross(basis.e(2), basis.e(0)) / v;
  const Vec3 d3 = cross(basis.e(0), basis.e(1)) / v;
  const BasisRole flipped = basis.role() == BasisRole::Original
                                ? BasisRole::Dual
                                : BasisRole::Original;
  return Basis3::create(d1, d2, d3, flipped);
}

Matrix duality_defect(const Basis3& basis, const Basis3& dual) {
  Matrix m(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      m(i, j) = dot(basis.e(i), dual.e(j)) - (i == j ? 1.0 : 0.0);
  return m;
}

Components3::Components3(const std::array<double, 3>& values, Variance variance,
                         std::uint64_t basis_fingerprint)
    : c_(values), variance_(variance), basis_fingerprint_(basis_fingerprint) {
  for (double c : values)
    if (!std::isfinite(c)) fail(ErrorCode::NonFinite, "component is not finite");
}

Components3 contravariant_components(const Vec3& v, const Basis3& basis) {
  const Basis3 dual = reciprocal_basis(basis);
  return Components3(dots_with(v, dual), Variance::Contravariant,
                     basis.fingerprint());
}

Components3 covariant_components(const Vec3& v, const Basis3& basis) {
  return Components3(dots_with(v, basis), Variance::Covariant,
                     basis.fingerprint());
}

Components3 components_via_gram(const Vec3& v, const Basis3& basis) {
  const GramMatrix g = GramMatrix::from_vectors(
      {{basis.e(0).x(), basis.e(0).y(), basis.e(0).z()},
       {basis.e(1).x(), basis.e(1).y(), basis.e(1).z()},
       {basis.e(2).x(), basis.e(2).y(), basis.e(2).z()}});
  const InverseGram inv = invert(g);
  const std::array<double, 3> rhs = dots_with(v, basis);
  std::array<double, 3> c{};
  for (std::size_t i = 0; i < 3; ++i)
    c[i] = inv.entries(i, 0) * rhs[0] + inv.entries(i, 1) * rhs[1] +
           inv.entries(i, 2) * rhs[2];

  // For unit bases the closed-form inverse is available; cross-check the
  // elimination route against it. Disagreement means the system is too close
  // to singular for either answer to stand.
  if (g.unit_diagonal()) {
    const InverseGram cf = closed_form_inverse3(g);
    double limit = 0.0, diff = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
      double y = cf.entries(i, 0) * rhs[0] + cf.entries(i, 1) * rhs[1] +
                 cf.entries(i, 2) * rhs[2];
      diff = std::max(diff, std::fabs(y - c[i]));
      limit = std::max(limit, std::fabs(c[i]));
    }
    if (diff > 1e-9 * std::max(1.0, limit))
      fail(ErrorCode::SingularGram,
           "gram solve and closed-form routes disagree: basis is numerically singular");
  }
  return Components3(c, Variance::Contravariant, basis.fingerprint());
}

Vec3 reconstruct(const Components3& components, const Basis3& basis) {
  if (components.basis_fingerprint() != basis.fingerprint())
    fail(ErrorCode::FingerprintMismatch,
         "components were computed against a different basis");
  if (components.variance() == Variance::Contravariant)
    return components[0] * basis.e(0) + components[1] * basis.e(1) +
           components[2] * basis.e(2);
  const Basis3 dual = reciprocal_basis(basis);
  return components[0] * dual.e(0) + components[1] * dual.e(1) +
         components[2] * dual.e(2);
}

Matrix completeness_defect(const Basis3& basis) {
  const Basis3 dual = reciprocal_basis(basis);
  Matrix sum(3, 3);
  for (std::size_t k = 0; k < 3; ++k) {
    const Matrix dyad = outer(basis.e(k), dual.e(k));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) sum(i, j) += dyad(i, j);
  }
  for (std::size_t i = 0; i < 3; ++i) sum(i, i) -= 1.0;
  return sum;
}

double scalar_product_mixed(const Vec3& u, const Vec3& v, const Basis3& basis) {
  const Basis3 dual = reciprocal_basis(basis);
  double s = 0.0;
  for (std::size_t i = 0; i < 3; ++i) s += dot(v, basis.e(i)) * dot(u, dual.e(i));
  return s;
}

}  // namespace oblique
