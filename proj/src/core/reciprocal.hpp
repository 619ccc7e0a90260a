#pragma once

#include <array>
#include <cstdint>

#include "core/gram.hpp"
#include "core/matrix.hpp"
#include "core/vec3.hpp"

namespace oblique {

enum class BasisRole { Original, Dual };
enum class Variance { Contravariant, Covariant };

// Ordered triple of linearly independent 3-vectors. Construction rejects
// coplanar sets: |e1 . (e2 x e3)| must exceed 1e-12 * max-norm^3.
// Left-handed triples (negative triple product) are fine.
class Basis3 {
 public:
  static Basis3 create(const Vec3& e1, const Vec3& e2, const Vec3& e3,
                       BasisRole role = BasisRole::Original);

  const Vec3& e(std::size_t i) const { return e_[i]; }
  BasisRole role() const { return role_; }
  double triple() const { return triple_; }

  // Content hash of the nine stored components; pins Components3 values to
  // the exact frame that produced them.
  std::uint64_t fingerprint() const { return fingerprint_; }

 private:
  Basis3(const Vec3& e1, const Vec3& e2, const Vec3& e3, BasisRole role,
         double triple);

  std::array<Vec3, 3> e_;
  BasisRole role_;
  double triple_;
  std::uint64_t fingerprint_;
};

// Expansion coefficients of one vector relative to one Basis3.
class Components3 {
 public:
  Components3(const std::array<double, 3>& values, Variance variance,
              std::uint64_t basis_fingerprint);

  double operator[](std::size_t i) const { return c_[i]; }
  const std::array<double, 3>& values() const { return c_; }
  Variance variance() const { return variance_; }
  std::uint64_t basis_fingerprint() const { return basis_fingerprint_; }

 private:
  std::array<double, 3> c_;
  Variance variance_;
  std::uint64_t basis_fingerprint_;
};

// Dual triple: e1' = e2 x e3 / V, e2' = e3 x e1 / V, e3' = e1 x e2 / V,
// with V the triple product. Satisfies e_i . e_j' = delta_ij; applying it
// twice returns the original triple. Flips the role tag.
Basis3 reciprocal_basis(const Basis3& basis);

// Entry (i, j) = e_i . d_j - delta_ij. Zero exactly when `dual` really is
// the reciprocal of `basis`.
Matrix duality_defect(const Basis3& basis, const Basis3& dual);

// Coefficients along the basis vectors themselves: c_i = v . e_i'.
Components3 contravariant_components(const Vec3& v, const Basis3& basis);

// Coefficients along the reciprocal vectors: c_i = v . e_i.
Components3 covariant_components(const Vec3& v, const Basis3& basis);

// Contravariant coefficients by the independent route: solve G c = rhs with
// G the basis Gram matrix and rhs_i = v . e_i. Must agree with
// contravariant_components for every nondegenerate basis.
Components3 components_via_gram(const Vec3& v, const Basis3& basis);

// Expands components over `basis` (contravariant) or over its reciprocal
// (covariant). Refuses components fingerprinted against a different frame.
Vec3 reconstruct(const Components3& components, const Basis3& basis);

// Sum of dyads e_i (x) e_i' minus the identity; zero when the basis and its
// dual resolve arbitrary vectors exactly.
Matrix completeness_defect(const Basis3& basis);

// u . v evaluated from mixed components:
// (v . e1)(u . e1') + (v . e2)(u . e2') + (v . e3)(u . e3').
double scalar_product_mixed(const Vec3& u, const Vec3& v, const Basis3& basis);

}  // namespace oblique
