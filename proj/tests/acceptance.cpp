// Acceptance battery: eleven library-level guarantees, one verdict line
// each. Every tolerance is pinned here, next to the check it governs.
// The process exits with the number of failed criteria.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "core/charts.hpp"
#include "core/error.hpp"
#include "core/gram.hpp"
#include "core/matrix.hpp"
#include "core/metric.hpp"
#include "core/reciprocal.hpp"
#include "core/vec3.hpp"
#include "cli_runner.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace oblique;

namespace {

int failures = 0;

void verdict(int index, const char* name, bool pass, double measured,
             double allowed) {
  std::printf("%s %2d %-26s measured=%.3e allowed=%.3e\n",
              pass ? "PASS" : "FAIL", index, name, measured, allowed);
  if (!pass) ++failures;
}

void verdict_counts(int index, const char* name, bool pass, int bad, int total) {
  std::printf("%s %2d %-26s failed_cases=%d total=%d\n", pass ? "PASS" : "FAIL",
              index, name, bad, total);
  if (!pass) ++failures;
}

BasisN to_basis_n(const Basis3& b) {
  return BasisN::create({{b.e(0).x(), b.e(0).y(), b.e(0).z()},
                         {b.e(1).x(), b.e(1).y(), b.e(1).z()},
                         {b.e(2).x(), b.e(2).y(), b.e(2).z()}});
}

// 1. Reciprocal duality: e_i . e'_j = delta_ij for 1000 random bases,
//    within 1e-12 scaled by the largest norm product.
void criterion_duality() {
  testgen::Rng rng(testgen::kSeed + 100);
  double worst = 0.0, worst_allowed = 1e-12;
  bool pass = true;
  for (int iter = 0; iter < 1000; ++iter) {
    const Basis3 b = testgen::random_basis3(rng);
    const Basis3 d = reciprocal_basis(b);
    double maxb = 0.0, maxd = 0.0;
    for (int i = 0; i < 3; ++i) {
      maxb = std::max(maxb, b.e(i).norm());
      maxd = std::max(maxd, d.e(i).norm());
    }
    const double allowed = 1e-12 * std::max(1.0, maxb * maxd);
    const double defect = duality_defect(b, d).max_abs();
    if (defect > allowed) pass = false;
    if (defect / allowed > worst / worst_allowed) {
      worst = defect;
      worst_allowed = allowed;
    }
  }
  verdict(1, "reciprocal_duality", pass, worst, worst_allowed);
}

// 2. Double dual: applying the reciprocal twice returns the original
//    vectors within 1e-10 relative, and restores the role tag.
void criterion_double_dual() {
  testgen::Rng rng(testgen::kSeed + 101);
  double worst = 0.0;
  const double allowed = 1e-10;
  bool roles_ok = true;
  for (int iter = 0; iter < 1000; ++iter) {
    const Basis3 b = testgen::random_basis3(rng);
    const Basis3 dd = reciprocal_basis(reciprocal_basis(b));
    if (dd.role() != BasisRole::Original) roles_ok = false;
    for (int i = 0; i < 3; ++i) {
      const double rel = (dd.e(i) - b.e(i)).norm_inf() /
                         std::max(1.0, b.e(i).norm_inf());
      worst = std::max(worst, rel);
    }
  }
  verdict(2, "double_dual_return", roles_ok && worst <= allowed, worst, allowed);
}

// 3. Route equivalence: contravariant components via reciprocal dot
//    products agree with the Gram-system solve on 1000 inputs.
void criterion_routes() {
  testgen::Rng rng(testgen::kSeed + 102);
  double worst = 0.0, worst_allowed = 1e-9;
  bool pass = true;
  for (int iter = 0; iter < 1000; ++iter) {
    const Basis3 b = testgen::random_basis3(rng);
    const Vec3 v = testgen::random_vec3(rng, 0.1, 5.0);
    const Components3 via_dual = contravariant_components(v, b);
    const Components3 via_gram = components_via_gram(v, b);
    double cmax = 1.0, diff = 0.0;
    for (int i = 0; i < 3; ++i) {
      cmax = std::max(cmax, std::fabs(via_dual[i]));
      diff = std::max(diff, std::fabs(via_dual[i] - via_gram[i]));
    }
    const double allowed = 1e-9 * cmax;
    if (diff > allowed) pass = false;
    if (diff / allowed > worst / worst_allowed) {
      worst = diff;
      worst_allowed = allowed;
    }
  }
  verdict(3, "component_route_match", pass, worst, worst_allowed);
}

// 4. Closed form: for 500 unit bases with comfortably nonzero volume, the
//    closed-form inverse of the Gram matrix matches the pivoted inverse to
//    1e-12 per entry, and the two determinant routes agree to 1e-12.
void criterion_closed_form() {
  testgen::Rng rng(testgen::kSeed + 103);
  double worst_entry = 0.0, worst_det = 0.0;
  const double allowed = 1e-12;
  int used = 0;
  while (used < 500) {
    const Basis3 b = testgen::random_unit_basis3(rng);
    const GramMatrix g = GramMatrix::from_vectors(
        {{b.e(0).x(), b.e(0).y(), b.e(0).z()},
         {b.e(1).x(), b.e(1).y(), b.e(1).z()},
         {b.e(2).x(), b.e(2).y(), b.e(2).z()}});
    const double d = unit_determinant3(g);
    if (std::fabs(d) <= 1e-3) continue;
    ++used;
    const InverseGram generic = invert(g);
    const InverseGram closed = closed_form_inverse3(g);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const double rel =
            std::fabs(closed.entries(i, j) - generic.entries(i, j)) /
            std::max(1.0, std::fabs(generic.entries(i, j)));
        worst_entry = std::max(worst_entry, rel);
      }
    worst_det = std::max(
        worst_det, std::fabs(closed.determinant - generic.determinant) /
                       std::fabs(generic.determinant));
  }
  const double worst = std::max(worst_entry, worst_det);
  verdict(4, "closed_form_inverse", worst <= allowed, worst, allowed);
}

// 5. Completeness: sum of dyads e_i (x) e'_i resolves the identity within
//    1e-10, and exactly for the orthonormal frame.
void criterion_completeness() {
  testgen::Rng rng(testgen::kSeed + 104);
  double worst = 0.0;
  const double allowed = 1e-10;
  for (int iter = 0; iter < 1000; ++iter)
    worst = std::max(worst,
                     completeness_defect(testgen::random_basis3(rng)).max_abs());
  const Basis3 axes = Basis3::create(Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1));
  const bool exact = completeness_defect(axes).max_abs() == 0.0;
  verdict(5, "completeness_identity", exact && worst <= allowed, worst, allowed);
}

// 6. Mixed scalar product: equals the euclidean dot product in any frame,
//    and its value is frame-independent to 1e-9 across ten frames.
void criterion_mixed_product() {
  testgen::Rng rng(testgen::kSeed + 105);
  double worst = 0.0, worst_allowed = 1e-9;
  bool pass = true;
  for (int iter = 0; iter < 500; ++iter) {
    const Vec3 u = testgen::random_vec3(rng, 0.1, 4.0);
    const Vec3 v = testgen::random_vec3(rng, 0.1, 4.0);
    const Basis3 b = testgen::random_basis3(rng);
    const double s = scalar_product_mixed(u, v, b);
    const double allowed = 1e-9 * std::max(1.0, u.norm() * v.norm());
    const double err = std::fabs(s - dot(u, v));
    if (err > allowed) pass = false;
    if (err / allowed > worst / worst_allowed) {
      worst = err;
      worst_allowed = allowed;
    }
  }
  const Vec3 u(0.3, -1.2, 2.2), v(1.7, 0.4, -0.9);
  double lo = dot(u, v), hi = lo;
  for (int iter = 0; iter < 10; ++iter) {
    const double s = scalar_product_mixed(u, v, testgen::random_basis3(rng));
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  if (hi - lo > 1e-9) pass = false;
  verdict(6, "mixed_scalar_product", pass, worst, worst_allowed);
}

// 7. Metric conjugacy: g g^-1 = I within 1e-10 * n for random SPD metrics
//    with condition number up to 1e6, and the metric built from the
//    reciprocal frame equals the conjugate metric.
void criterion_conjugacy() {
  testgen::Rng rng(testgen::kSeed + 106);
  double worst = 0.0, worst_allowed = 1e-10 * 2;
  bool pass = true;
  for (std::size_t n = 2; n <= 6; ++n) {
    for (int iter = 0; iter < 60; ++iter) {
      const MetricTensor g = MetricTensor::lower(testgen::random_spd(rng, n));
      const double defect = conjugacy_defect(g);
      const double allowed = 1e-10 * static_cast<double>(n);
      if (defect > allowed) pass = false;
      if (defect / allowed > worst / worst_allowed) {
        worst = defect;
        worst_allowed = allowed;
      }
    }
  }
  double worst_recip = 0.0;
  for (int iter = 0; iter < 200; ++iter) {
    const Basis3 b = testgen::random_basis3(rng);
    const MetricTensor g = metric_from_basis(to_basis_n(b));
    const MetricTensor gd = metric_from_basis(to_basis_n(reciprocal_basis(b)));
    const double scale = std::max(1.0, g.conjugate_entries().max_abs());
    worst_recip = std::max(
        worst_recip, max_abs_diff(gd.entries(), g.conjugate_entries()) / scale);
  }
  if (worst_recip > 1e-9) pass = false;
  verdict(7, "metric_conjugacy", pass, worst, worst_allowed);
}

// 8. Lowering an index reproduces covariant components: the metric route
//    (g applied to contravariant components) and the direct projections
//    v . e_i agree across modules.
void criterion_lowering() {
  testgen::Rng rng(testgen::kSeed + 107);
  double worst = 0.0, worst_allowed = 1e-9;
  bool pass = true;
  for (int iter = 0; iter < 500; ++iter) {
    const Basis3 b = testgen::random_basis3(rng);
    const Vec3 v = testgen::random_vec3(rng, 0.1, 5.0);
    const Components3 contra = contravariant_components(v, b);
    const Components3 cov = covariant_components(v, b);
    const MetricTensor g = metric_from_basis(to_basis_n(b));
    const ComponentVector lowered = lower_index(
        ComponentVector({contra[0], contra[1], contra[2]},
                        Variance::Contravariant),
        g);
    double cmax = 1.0, diff = 0.0;
    for (int i = 0; i < 3; ++i) {
      cmax = std::max(cmax, std::fabs(cov[i]));
      diff = std::max(diff, std::fabs(lowered[i] - cov[i]));
    }
    const double allowed = 1e-9 * cmax;
    if (diff > allowed) pass = false;
    if (diff / allowed > worst / worst_allowed) {
      worst = diff;
      worst_allowed = allowed;
    }
  }
  // Worked instance with exact integer arithmetic end to end.
  const Basis3 b1 = Basis3::create(Vec3(1, 0, 0), Vec3(1, 1, 0), Vec3(1, 1, 1));
  const MetricTensor g1 = metric_from_basis(to_basis_n(b1));
  const ComponentVector low = lower_index(
      ComponentVector({-1, -1, 4}, Variance::Contravariant), g1);
  if (low[0] != 2.0 || low[1] != 5.0 || low[2] != 9.0) pass = false;
  verdict(8, "index_lowering", pass, worst, worst_allowed);
}

// 9. Chart transport: the covector/vector pairing survives 200 random
//    linear chart changes to 1e-10, the finite-difference polar chart keeps
//    it to 1e-6, and the polar pullback metric at r = 2 is diag(1, 4).
void criterion_charts() {
  testgen::Rng rng(testgen::kSeed + 108);
  double worst_linear = 0.0;
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t n = 2 + iter % 5;
    const Jacobian j{testgen::random_nonsingular(rng, n),
                     std::vector<double>(n, 0.0)};
    const std::vector<double> v = testgen::random_vector(rng, n);
    const std::vector<double> w = testgen::random_vector(rng, n);
    double before = 0.0;
    for (std::size_t i = 0; i < n; ++i) before += v[i] * w[i];
    const ComponentVector pushed =
        push_contravariant(j, ComponentVector(v, Variance::Contravariant));
    const ComponentVector pulled =
        pull_covariant(j, ComponentVector(w, Variance::Covariant));
    const double after = directional_increment(pulled, pushed);
    worst_linear = std::max(worst_linear, std::fabs(after - before) /
                                              std::max(1.0, std::fabs(before)));
  }
  bool pass = worst_linear <= 1e-10;

  const Chart fd_polar = Chart::polar().numeric_only();
  const std::vector<double> p = {1.3, 0.4};
  const Jacobian jp = jacobian(fd_polar, p);
  const std::vector<double> v = {0.7, -0.2}, w = {1.1, 0.5};
  const double before = v[0] * w[0] + v[1] * w[1];
  const double after = directional_increment(
      pull_covariant(jp, ComponentVector(w, Variance::Covariant)),
      push_contravariant(jp, ComponentVector(v, Variance::Contravariant)));
  if (std::fabs(after - before) > 1e-6) pass = false;

  const MetricTensor pulled = pullback_metric(Chart::polar(), {2.0, 0.7});
  const double m00 = std::fabs(pulled.entries()(0, 0) - 1.0);
  const double m11 = std::fabs(pulled.entries()(1, 1) - 4.0);
  const double m01 = std::fabs(pulled.entries()(0, 1));
  if (std::max({m00, m11, m01}) > 1e-6) pass = false;

  verdict(9, "chart_transport", pass, worst_linear, 1e-10);
}

// 10. Degeneracy honesty: near-singular inputs either raise a designated
//     error or produce finite values. No route may emit NaN or Inf.
void criterion_degeneracy() {
  testgen::Rng rng(testgen::kSeed + 109);
  int bad = 0, total = 0;

  const auto finite3 = [](const Vec3& v) {
    return std::isfinite(v.x()) && std::isfinite(v.y()) && std::isfinite(v.z());
  };

  for (int iter = 0; iter < 100; ++iter) {
    ++total;
    const double t = std::pow(10.0, -6.0 - (iter % 10));
    const Vec3 a = testgen::random_unit_vec3(rng);
    const Vec3 b = testgen::random_unit_vec3(rng);
    const Vec3 w = testgen::random_unit_vec3(rng);
    const Vec3 c = a * 0.4 + b * 0.6 + w * t;  // nearly coplanar for small t
    try {
      const Basis3 basis = Basis3::create(a, b, c);
      const Basis3 dual = reciprocal_basis(basis);
      const Components3 comp =
          contravariant_components(Vec3(0.3, -0.8, 1.1), basis);
      const Vec3 back = reconstruct(comp, basis);
      bool ok = finite3(back);
      for (int i = 0; i < 3; ++i) ok = ok && finite3(dual.e(i));
      for (int i = 0; i < 3; ++i) ok = ok && std::isfinite(comp[i]);
      if (!ok) ++bad;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateBasis &&
          e.code() != ErrorCode::SingularGram)
        ++bad;
    }
  }

  // Coordinate singularities: polar radii marching to zero.
  for (int k = 1; k <= 12; ++k) {
    ++total;
    const double r = std::pow(10.0, -k);
    try {
      const MetricTensor g = pullback_metric(Chart::polar(), {r, 0.3});
      if (!g.entries().all_finite() || !g.conjugate_entries().all_finite()) ++bad;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::RankDeficient &&
          e.code() != ErrorCode::NotPositiveDefinite)
        ++bad;
    }
  }

  // The CLI on an exactly coplanar basis: domain error, no NaN anywhere.
  ++total;
  const clirun::Result r =
      clirun::run("dual --input " + clirun::fixture("coplanar_basis.json"), true);
  if (r.exit_code != 2 || r.output.find("nan") != std::string::npos ||
      r.output.find("error: ") == std::string::npos)
    ++bad;

  verdict_counts(10, "degeneracy_honesty", bad == 0, bad, total);
}

// 11. CLI contract: golden outputs byte for byte, the exit-code ladder
//     0/1/2/3, and run-to-run byte stability.
void criterion_cli() {
  int bad = 0, total = 0;
  const auto expect_golden = [&](const std::string& args,
                                 const std::string& golden) {
    ++total;
    const auto want = clirun::read_file(clirun::fixture(golden));
    const clirun::Result r = clirun::run(args);
    if (!want || r.exit_code != 0 || r.output != *want) {
      std::printf("  golden mismatch: %s\n", golden.c_str());
      ++bad;
    }
  };
  const std::string dir = GOLDEN_DIR;
  expect_golden("dual --input " + dir + "/b1_basis.json", "b1_dual.text.golden");
  expect_golden("dual --format json --input " + dir + "/b1_basis.json",
                "b1_dual.json.golden");
  expect_golden("decompose --input " + dir + "/b1_decompose.json",
                "b1_decompose.text.golden");
  expect_golden("decompose --format json --input " + dir + "/b1_decompose.json",
                "b1_decompose.json.golden");
  expect_golden("metric --input " + dir + "/b1_metric.json",
                "b1_metric.text.golden");
  expect_golden("metric --format json --input " + dir + "/b1_metric.json",
                "b1_metric.json.golden");
  expect_golden("transform --input " + dir + "/transform_polar.json",
                "transform_polar.text.golden");
  expect_golden("transform --format json --input " + dir + "/transform_polar.json",
                "transform_polar.json.golden");
  expect_golden("check --input " + dir + "/b1_check.json", "b1_check.text.golden");
  expect_golden("check --format json --input " + dir + "/b1_check.json",
                "b1_check.json.golden");

  const auto expect_exit = [&](const std::string& args, int code) {
    ++total;
    const int got = clirun::run(args, true).exit_code;
    if (got != code) {
      std::printf("  exit code mismatch: want %d got %d for %s\n", code, got,
                  args.c_str());
      ++bad;
    }
  };
  expect_exit("dual --input " + dir + "/b1_basis.json", 0);
  expect_exit("check --tolerance 1e-30 --input " + dir + "/skew_basis.json", 1);
  expect_exit("check --input " + dir + "/skew_tol.json", 1);
  expect_exit("dual --input " + dir + "/coplanar_basis.json", 2);
  expect_exit("transform --input " + dir + "/transform_origin.json", 2);
  expect_exit("decompose --input " + dir + "/short_vector.json", 3);
  expect_exit("metric --input " + dir + "/asym_metric.json", 3);
  expect_exit("dual --input " + dir + "/malformed.json", 3);
  expect_exit("dual --input /nonexistent/nowhere.json", 3);

  ++total;
  const std::string stable_args =
      "check --format json --input " + dir + "/skew_basis.json";
  const clirun::Result first = clirun::run(stable_args);
  const clirun::Result second = clirun::run(stable_args);
  if (first.output.empty() || first.output != second.output ||
      first.exit_code != second.exit_code)
    ++bad;

  verdict_counts(11, "cli_contract", bad == 0, bad, total);
}

}  // namespace

int main() {
  criterion_duality();
  criterion_double_dual();
  criterion_routes();
  criterion_closed_form();
  criterion_completeness();
  criterion_mixed_product();
  criterion_conjugacy();
  criterion_lowering();
  criterion_charts();
  criterion_degeneracy();
  criterion_cli();
  if (failures == 0)
    std::printf("acceptance: all 11 criteria satisfied\n");
  else
    std::printf("acceptance: %d criteria FAILED\n", failures);
  return failures;
}
