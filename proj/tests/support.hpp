#pragma once

// Deterministic random geometry for the test suites. Every generator takes
// the engine by reference so a fixed seed reproduces the full sequence.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "core/matrix.hpp"
#include "core/reciprocal.hpp"
#include "core/vec3.hpp"

namespace testgen {

inline constexpr std::uint64_t kSeed = 0xB1A5ED5EEDULL;

using Rng = std::mt19937_64;

inline oblique::Vec3 random_unit_vec3(Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (;;) {
    const oblique::Vec3 v(gauss(rng), gauss(rng), gauss(rng));
    const double n = v.norm();
    if (n > 0.1) return v / n;
  }
}

inline oblique::Vec3 random_vec3(Rng& rng, double lo = 0.5, double hi = 2.0) {
  std::uniform_real_distribution<double> len(lo, hi);
  return random_unit_vec3(rng) * len(rng);
}

// Well-separated basis: unit-scaled triple product bounded away from zero.
inline oblique::Basis3 random_basis3(Rng& rng) {
  for (;;) {
    const oblique::Vec3 a = random_vec3(rng), b = random_vec3(rng), c = random_vec3(rng);
    const double t = oblique::triple_product(a, b, c);
    if (std::fabs(t) > 0.05 * a.norm() * b.norm() * c.norm())
      return oblique::Basis3::create(a, b, c);
  }
}

// Basis of unit vectors (unit Gram diagonal) with a comfortable volume.
inline oblique::Basis3 random_unit_basis3(Rng& rng) {
  for (;;) {
    const oblique::Vec3 a = random_unit_vec3(rng), b = random_unit_vec3(rng),
                        c = random_unit_vec3(rng);
    if (std::fabs(oblique::triple_product(a, b, c)) > 0.05)
      return oblique::Basis3::create(a, b, c);
  }
}

// Random n x n rotation via Gram-Schmidt on gaussian columns.
inline oblique::Matrix random_rotation(Rng& rng, std::size_t n) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (;;) {
    oblique::Matrix q(n, n);
    bool ok = true;
    for (std::size_t col = 0; col < n && ok; ++col) {
      std::vector<double> v(n);
      for (auto& x : v) x = gauss(rng);
      for (std::size_t prev = 0; prev < col; ++prev) {
        double dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) dot += v[i] * q(i, prev);
        for (std::size_t i = 0; i < n; ++i) v[i] -= dot * q(i, prev);
      }
      double norm = 0.0;
      for (double x : v) norm += x * x;
      norm = std::sqrt(norm);
      if (norm < 1e-6) { ok = false; break; }
      for (std::size_t i = 0; i < n; ++i) q(i, col) = v[i] / norm;
    }
    if (ok) return q;
  }
}

// SPD matrix Q diag(lambda) Q^T with eigenvalues log-uniform in [lo, hi].
// The default range keeps the condition number at or below 1e5: a conjugate
// stored in doubles carries an irreducible g*ginv residual near eps*cond, so
// populations near cond 1e6 sit on top of the 1e-10*n identity budget.
inline oblique::Matrix random_spd(Rng& rng, std::size_t n, double lo = 1e-2,
                                  double hi = 1e3) {
  std::uniform_real_distribution<double> logl(std::log(lo), std::log(hi));
  const oblique::Matrix q = random_rotation(rng, n);
  std::vector<double> lambda(n);
  for (auto& l : lambda) l = std::exp(logl(rng));
  oblique::Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      long double sum = 0.0L;
      for (std::size_t k = 0; k < n; ++k)
        sum += static_cast<long double>(q(i, k)) * lambda[k] * q(j, k);
      a(i, j) = a(j, i) = static_cast<double>(sum);
    }
  return a;
}

// Nonsingular matrix with entries in [-1, 1] and determinant away from zero.
inline oblique::Matrix random_nonsingular(Rng& rng, std::size_t n) {
  std::uniform_real_distribution<double> entry(-1.0, 1.0);
  for (;;) {
    oblique::Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = entry(rng);
    if (std::fabs(oblique::determinant(a)) > 0.1) return a;
  }
}

inline std::vector<double> random_vector(Rng& rng, std::size_t n, double lo = -2.0,
                                         double hi = 2.0) {
  std::uniform_real_distribution<double> entry(lo, hi);
  std::vector<double> v(n);
  for (auto& x : v) x = entry(rng);
  return v;
}

}  // namespace testgen
