// oblique: command-line front end over the C API.
//
// Subcommands: dual, decompose, metric, transform, check. Input is a JSON
// problem file; output is a deterministic report in text or JSON form.
// Exit codes: 0 success, 1 invariant failure, 2 numeric domain error,
// 3 input/parse error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "oblique/oblique.h"

using njson = nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

struct CliError {
  int exit_code;
  std::string message;
};

[[noreturn]] void input_error(const std::string& message) {
  throw CliError{3, message};
}

// Numeric-domain statuses exit 2; argument and shape problems exit 3.
int exit_code_for(oblique_status status) {
  switch (status) {
    case OBLIQUE_ERR_DIMENSION_MISMATCH:
    case OBLIQUE_ERR_INVALID_ARGUMENT:
      return 3;
    default:
      return 2;
  }
}

void check_status(oblique_status status) {
  if (status != OBLIQUE_OK)
    throw CliError{exit_code_for(status), oblique_last_message()};
}

using Basis3Ptr = std::unique_ptr<oblique_basis3, void (*)(oblique_basis3*)>;
using Components3Ptr =
    std::unique_ptr<oblique_components3, void (*)(oblique_components3*)>;
using MetricPtr = std::unique_ptr<oblique_metric, void (*)(oblique_metric*)>;
using ChartPtr = std::unique_ptr<oblique_chart, void (*)(oblique_chart*)>;

Basis3Ptr make_basis3(const double rows[9]) {
  oblique_basis3* raw = nullptr;
  check_status(oblique_basis3_create(rows, &raw));
  return Basis3Ptr(raw, oblique_basis3_destroy);
}

Basis3Ptr make_reciprocal(const oblique_basis3* basis) {
  oblique_basis3* raw = nullptr;
  check_status(oblique_basis3_reciprocal(basis, &raw));
  return Basis3Ptr(raw, oblique_basis3_destroy);
}

MetricPtr make_metric_from_entries(size_t n, const double* entries) {
  oblique_metric* raw = nullptr;
  check_status(oblique_metric_create(n, entries, &raw));
  return MetricPtr(raw, oblique_metric_destroy);
}

MetricPtr make_metric_from_basis(size_t n, const double* vectors) {
  oblique_metric* raw = nullptr;
  check_status(oblique_metric_from_basis(n, vectors, &raw));
  return MetricPtr(raw, oblique_metric_destroy);
}

MetricPtr make_metric_inverse(const oblique_metric* metric) {
  oblique_metric* raw = nullptr;
  check_status(oblique_metric_inverse(metric, &raw));
  return MetricPtr(raw, oblique_metric_destroy);
}

ChartPtr make_chart(const std::string& name, size_t dim, const double* matrix) {
  oblique_chart* raw = nullptr;
  check_status(oblique_chart_create(name.c_str(), dim, matrix, &raw));
  return ChartPtr(raw, oblique_chart_destroy);
}

Components3Ptr wrap_components(oblique_components3* raw) {
  return Components3Ptr(raw, oblique_components3_destroy);
}

// --- formatting -----------------------------------------------------------

// Reports normalize negative zero so text and JSON stay byte-stable.
double canon(double v) { return v == 0.0 ? 0.0 : v; }

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", canon(v));
  return buf;
}

std::string render_row(const ojson& row) {
  std::string s = "[";
  bool first = true;
  for (const auto& v : row) {
    if (!first) s += ", ";
    first = false;
    s += fmt17(v.get<double>());
  }
  return s + "]";
}

void render_entry(std::ostream& out, const std::string& key, const ojson& value) {
  if (value.is_string()) {
    out << key << ": " << value.get<std::string>() << "\n";
  } else if (value.is_number()) {
    out << key << ": " << fmt17(value.get<double>()) << "\n";
  } else if (value.is_array() && !value.empty() && value.front().is_array()) {
    out << key << ":\n";
    for (const auto& row : value) out << "  " << render_row(row) << "\n";
  } else if (value.is_array()) {
    out << key << ": " << render_row(value) << "\n";
  } else if (value.is_object()) {
    for (const auto& [sub, subvalue] : value.items())
      render_entry(out, key + " " + sub, subvalue);
  }
}

struct Check {
  std::string name;
  double defect;
  double tolerance;

  bool pass() const { return defect <= tolerance; }
};

struct Report {
  std::string command;
  ojson results = ojson::object();
  std::vector<Check> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass()) return false;
    return true;
  }
};

void print_report(const Report& report, const std::string& format) {
  if (format == "json") {
    ojson doc;
    doc["command"] = report.command;
    doc["results"] = report.results;
    ojson defects = ojson::object(), tolerances = ojson::object();
    for (const auto& c : report.checks) {
      defects[c.name] = c.defect;
      tolerances[c.name] = c.tolerance;
    }
    doc["defects"] = defects;
    doc["tolerances"] = tolerances;
    doc["status"] = report.pass() ? "pass" : "fail";
    std::printf("%s\n", doc.dump(2).c_str());
    return;
  }
  std::ostringstream out;
  out << "command: " << report.command << "\n";
  for (const auto& [key, value] : report.results.items())
    render_entry(out, key, value);
  for (const auto& c : report.checks)
    out << "defect " << c.name << " = " << fmt17(c.defect) << " (tolerance "
        << fmt17(c.tolerance) << ") " << (c.pass() ? "PASS" : "FAIL") << "\n";
  out << "status: " << (report.pass() ? "pass" : "fail") << "\n";
  std::fputs(out.str().c_str(), stdout);
}

// --- input parsing ----------------------------------------------------------

njson load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) input_error("cannot open input file: " + path);
  try {
    return njson::parse(in);
  } catch (const njson::exception& e) {
    input_error(std::string("invalid JSON: ") + e.what());
  }
}

double number_at(const njson& v, const std::string& what) {
  if (!v.is_number()) input_error(what + " must be a number");
  return v.get<double>();
}

std::vector<double> parse_numbers(const njson& v, const std::string& what) {
  if (!v.is_array() || v.empty()) input_error(what + " must be a non-empty array of numbers");
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& c : v) out.push_back(number_at(c, what + " entry"));
  return out;
}

// Square row-major matrix from an array of equally sized rows.
std::vector<double> parse_square(const njson& v, const std::string& what,
                                 size_t& n_out) {
  if (!v.is_array() || v.empty()) input_error(what + " must be an array of rows");
  const size_t n = v.size();
  std::vector<double> flat;
  flat.reserve(n * n);
  for (const auto& row : v) {
    const std::vector<double> r = parse_numbers(row, what + " row");
    if (r.size() != n) input_error(what + " must be square (n rows of n entries)");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  n_out = n;
  return flat;
}

std::array<double, 9> parse_basis3(const njson& problem) {
  if (!problem.contains("basis")) input_error("missing required field: basis");
  size_t n = 0;
  const std::vector<double> flat = parse_square(problem["basis"], "basis", n);
  if (n != 3) input_error("basis must be 3 vectors of 3 components");
  std::array<double, 9> rows{};
  std::copy(flat.begin(), flat.end(), rows.begin());
  return rows;
}

oblique_variance parse_variance(const njson& problem) {
  if (!problem.contains("variance"))
    input_error("a component vector needs a declared variance");
  const njson& v = problem["variance"];
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s == "contravariant") return OBLIQUE_CONTRAVARIANT;
    if (s == "covariant") return OBLIQUE_COVARIANT;
  }
  input_error("variance must be \"contravariant\" or \"covariant\"");
}

std::optional<double> file_tolerance(const njson& problem) {
  if (!problem.contains("tolerance")) return std::nullopt;
  const double t = number_at(problem["tolerance"], "tolerance");
  if (!(t > 0.0)) input_error("tolerance must be positive");
  return t;
}

// --- shared numeric helpers -------------------------------------------------

double max_abs(const double* v, size_t n) {
  double m = 0.0;
  for (size_t i = 0; i < n; ++i) m = std::max(m, std::fabs(v[i]));
  return m;
}

double max_row_norm3(const double rows[9]) {
  double m = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double* r = rows + 3 * i;
    m = std::max(m, std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]));
  }
  return m;
}

ojson rows_json(const double* flat, size_t rows, size_t cols) {
  ojson out = ojson::array();
  for (size_t i = 0; i < rows; ++i) {
    ojson row = ojson::array();
    for (size_t j = 0; j < cols; ++j) row.push_back(canon(flat[i * cols + j]));
    out.push_back(row);
  }
  return out;
}

ojson vec_json(const double* v, size_t n) {
  ojson out = ojson::array();
  for (size_t i = 0; i < n; ++i) out.push_back(canon(v[i]));
  return out;
}

struct Options {
  std::string input_path;
  std::string format = "text";
  std::optional<double> tolerance;  // flag override; beats the file field

  double resolve(const std::optional<double>& from_file, double fallback) const {
    if (tolerance) return *tolerance;
    if (from_file) return *from_file;
    return fallback;
  }
};

// --- commands ----------------------------------------------------------------

Report run_dual(const njson& problem, const Options& opt) {
  const std::array<double, 9> rows = parse_basis3(problem);
  const std::optional<double> file_tol = file_tolerance(problem);

  const Basis3Ptr basis = make_basis3(rows.data());
  const Basis3Ptr dual = make_reciprocal(basis.get());
  double dual_rows[9], defect[9];
  check_status(oblique_basis3_rows(dual.get(), dual_rows));
  check_status(oblique_basis3_duality_defect(basis.get(), dual.get(), defect));

  const double scale =
      std::max(1.0, max_row_norm3(rows.data()) * max_row_norm3(dual_rows));

  Report report;
  report.command = "dual";
  report.results["basis"] = rows_json(rows.data(), 3, 3);
  report.results["reciprocal_basis"] = rows_json(dual_rows, 3, 3);
  report.checks.push_back(
      {"duality", max_abs(defect, 9), opt.resolve(file_tol, 1e-12 * scale)});
  return report;
}

Report run_decompose(const njson& problem, const Options& opt) {
  const std::array<double, 9> rows = parse_basis3(problem);
  if (!problem.contains("vector")) input_error("missing required field: vector");
  const std::vector<double> v = parse_numbers(problem["vector"], "vector");
  if (v.size() != 3) input_error("vector must have 3 components");
  const std::optional<double> file_tol = file_tolerance(problem);

  const Basis3Ptr basis = make_basis3(rows.data());
  oblique_components3* raw = nullptr;
  check_status(oblique_basis3_contravariant(basis.get(), v.data(), &raw));
  const Components3Ptr contra = wrap_components(raw);
  check_status(oblique_basis3_components_via_gram(basis.get(), v.data(), &raw));
  const Components3Ptr via_gram = wrap_components(raw);
  check_status(oblique_basis3_covariant(basis.get(), v.data(), &raw));
  const Components3Ptr cov = wrap_components(raw);

  double c_dual[3], c_gram[3], c_cov[3];
  check_status(oblique_components3_values(contra.get(), c_dual));
  check_status(oblique_components3_values(via_gram.get(), c_gram));
  check_status(oblique_components3_values(cov.get(), c_cov));

  double recon_contra[3], recon_cov[3];
  check_status(oblique_basis3_reconstruct(basis.get(), contra.get(), recon_contra));
  check_status(oblique_basis3_reconstruct(basis.get(), cov.get(), recon_cov));

  double route_diff = 0.0, err_contra = 0.0, err_cov = 0.0;
  for (int i = 0; i < 3; ++i) {
    route_diff = std::max(route_diff, std::fabs(c_dual[i] - c_gram[i]));
    err_contra = std::max(err_contra, std::fabs(recon_contra[i] - v[i]));
    err_cov = std::max(err_cov, std::fabs(recon_cov[i] - v[i]));
  }

  const double route_tol = opt.resolve(file_tol, 1e-9 * std::max(1.0, max_abs(c_dual, 3)));
  const double recon_tol = opt.resolve(file_tol, 1e-9 * std::max(1.0, max_abs(v.data(), 3)));

  Report report;
  report.command = "decompose";
  report.results["basis"] = rows_json(rows.data(), 3, 3);
  report.results["vector"] = vec_json(v.data(), 3);
  report.results["contravariant"] = vec_json(c_dual, 3);
  report.results["contravariant_gram_route"] = vec_json(c_gram, 3);
  report.results["covariant"] = vec_json(c_cov, 3);
  report.checks.push_back({"route_disagreement", route_diff, route_tol});
  report.checks.push_back({"reconstruction_contravariant", err_contra, recon_tol});
  report.checks.push_back({"reconstruction_covariant", err_cov, recon_tol});
  return report;
}

MetricPtr metric_from_problem(const njson& problem, size_t& n_out) {
  const bool has_basis = problem.contains("basis");
  const bool has_metric = problem.contains("metric");
  if (has_basis == has_metric)
    input_error("provide exactly one of: basis, metric");
  if (has_basis) {
    const std::vector<double> rows = parse_square(problem["basis"], "basis", n_out);
    return make_metric_from_basis(n_out, rows.data());
  }
  std::vector<double> entries = parse_square(problem["metric"], "metric", n_out);
  for (size_t i = 0; i < n_out; ++i)
    for (size_t j = i + 1; j < n_out; ++j)
      if (entries[i * n_out + j] != entries[j * n_out + i])
        input_error("metric must be symmetric");
  return make_metric_from_entries(n_out, entries.data());
}

Report run_metric(const njson& problem, const Options& opt) {
  const std::optional<double> file_tol = file_tolerance(problem);
  size_t n = 0;
  const MetricPtr metric = metric_from_problem(problem, n);
  const MetricPtr inverse = make_metric_inverse(metric.get());

  std::vector<double> g(n * n), ginv(n * n);
  check_status(oblique_metric_entries(metric.get(), g.data()));
  check_status(oblique_metric_entries(inverse.get(), ginv.data()));
  double det = 0.0, conj = 0.0;
  check_status(oblique_metric_determinant(metric.get(), &det));
  check_status(oblique_metric_conjugacy_defect(metric.get(), &conj));

  Report report;
  report.command = "metric";
  report.results["metric"] = rows_json(g.data(), n, n);
  report.results["inverse_metric"] = rows_json(ginv.data(), n, n);
  report.results["determinant"] = canon(det);

  if (problem.contains("vector")) {
    const std::vector<double> v = parse_numbers(problem["vector"], "vector");
    if (v.size() != n) input_error("vector dimension does not match the metric");
    const oblique_variance variance = parse_variance(problem);
    std::vector<double> mapped(n);
    if (variance == OBLIQUE_CONTRAVARIANT) {
      check_status(oblique_metric_lower_index(metric.get(), v.data(), mapped.data()));
      report.results["variance"] = "contravariant";
      report.results["vector"] = vec_json(v.data(), n);
      report.results["lowered"] = vec_json(mapped.data(), n);
    } else {
      check_status(oblique_metric_raise_index(metric.get(), v.data(), mapped.data()));
      report.results["variance"] = "covariant";
      report.results["vector"] = vec_json(v.data(), n);
      report.results["raised"] = vec_json(mapped.data(), n);
    }
  }

  report.checks.push_back(
      {"metric_conjugacy", conj, opt.resolve(file_tol, 1e-10 * static_cast<double>(n))});
  return report;
}

Report run_transform(const njson& problem, const Options& opt) {
  if (!problem.contains("chart")) input_error("missing required field: chart");
  const njson& chart_obj = problem["chart"];
  if (!chart_obj.is_object()) input_error("chart must be an object");
  if (!chart_obj.contains("name") || !chart_obj["name"].is_string())
    input_error("chart needs a name");
  if (!chart_obj.contains("point")) input_error("chart needs a point");
  const std::string name = chart_obj["name"].get<std::string>();
  const std::vector<double> point = parse_numbers(chart_obj["point"], "chart point");
  const size_t n = point.size();
  const std::optional<double> file_tol = file_tolerance(problem);

  std::vector<double> matrix;
  if (chart_obj.contains("matrix")) {
    size_t mn = 0;
    matrix = parse_square(chart_obj["matrix"], "chart matrix", mn);
    if (mn != n) input_error("chart matrix must be n x n for an n-component point");
  }

  const ChartPtr chart = make_chart(name, n, matrix.empty() ? nullptr : matrix.data());
  std::vector<double> image(n), jac(n * n);
  check_status(oblique_chart_apply(chart.get(), point.data(), image.data()));
  check_status(oblique_chart_jacobian(chart.get(), point.data(), jac.data()));

  Report report;
  report.command = "transform";
  report.results["chart"] = ojson{{"name", name}};
  if (!matrix.empty()) report.results["chart"]["matrix"] = rows_json(matrix.data(), n, n);
  report.results["point"] = vec_json(point.data(), n);
  report.results["image"] = vec_json(image.data(), n);
  report.results["jacobian"] = rows_json(jac.data(), n, n);

  const bool has_vector = problem.contains("vector");
  const bool has_covector = problem.contains("covector");
  if (!has_vector && !has_covector)
    input_error("transform needs a vector or a covector");

  std::vector<double> pushed(n), pulled(n);
  bool vector_is_contravariant = false;
  std::vector<double> v, u;

  if (has_vector) {
    v = parse_numbers(problem["vector"], "vector");
    if (v.size() != n) input_error("vector dimension does not match the chart");
    const oblique_variance variance = parse_variance(problem);
    vector_is_contravariant = variance == OBLIQUE_CONTRAVARIANT;
    report.results["variance"] =
        vector_is_contravariant ? "contravariant" : "covariant";
    report.results["vector"] = vec_json(v.data(), n);
    if (vector_is_contravariant) {
      check_status(oblique_push_contravariant(n, jac.data(), v.data(), pushed.data()));
      report.results["transformed_vector"] = vec_json(pushed.data(), n);
    } else {
      check_status(oblique_pull_covariant(n, jac.data(), v.data(), pushed.data()));
      report.results["transformed_vector"] = vec_json(pushed.data(), n);
    }
  }
  if (has_covector) {
    u = parse_numbers(problem["covector"], "covector");
    if (u.size() != n) input_error("covector dimension does not match the chart");
    check_status(oblique_pull_covariant(n, jac.data(), u.data(), pulled.data()));
    report.results["covector"] = vec_json(u.data(), n);
    report.results["transformed_covector"] = vec_json(pulled.data(), n);
  }

  // The pairing of a covariant with a contravariant vector is chart-independent.
  if (has_vector && has_covector && vector_is_contravariant) {
    double before = 0.0, after = 0.0;
    check_status(oblique_contract(n, u.data(), v.data(), &before));
    check_status(oblique_contract(n, pulled.data(), pushed.data(), &after));
    report.results["contraction_before"] = canon(before);
    report.results["contraction_after"] = canon(after);
    report.checks.push_back(
        {"contraction_invariance", std::fabs(after - before),
         opt.resolve(file_tol, 1e-10 * std::max(1.0, std::fabs(before)))});
  }
  return report;
}

Report run_check(const njson& problem, const Options& opt) {
  const bool has_basis = problem.contains("basis");
  const bool has_metric = problem.contains("metric");
  if (has_basis == has_metric)
    input_error("provide exactly one of: basis, metric");
  const std::optional<double> file_tol = file_tolerance(problem);

  Report report;
  report.command = "check";
  ojson checks_summary = ojson::object();

  if (has_basis) {
    size_t n = 0;
    const std::vector<double> flat = parse_square(problem["basis"], "basis", n);
    report.results["basis"] = rows_json(flat.data(), n, n);

    if (n == 3) {
      const Basis3Ptr basis = make_basis3(flat.data());
      const Basis3Ptr dual = make_reciprocal(basis.get());
      const Basis3Ptr dual2 = make_reciprocal(dual.get());

      double dual_rows[9], dual2_rows[9], defect[9], completeness[9];
      check_status(oblique_basis3_rows(dual.get(), dual_rows));
      check_status(oblique_basis3_rows(dual2.get(), dual2_rows));
      check_status(oblique_basis3_duality_defect(basis.get(), dual.get(), defect));
      check_status(oblique_basis3_completeness_defect(basis.get(), completeness));

      double dd = 0.0;  // relative row-wise double-dual return error
      for (int i = 0; i < 3; ++i) {
        const double* a = flat.data() + 3 * i;
        const double* b = dual2_rows + 3 * i;
        double diff = 0.0;
        for (int j = 0; j < 3; ++j) diff = std::max(diff, std::fabs(a[j] - b[j]));
        dd = std::max(dd, diff / std::max(1.0, max_abs(a, 3)));
      }

      const double scale =
          std::max(1.0, max_row_norm3(flat.data()) * max_row_norm3(dual_rows));
      report.checks.push_back(
          {"duality", max_abs(defect, 9), opt.resolve(file_tol, 1e-12 * scale)});
      report.checks.push_back({"double_dual", dd, opt.resolve(file_tol, 1e-10)});
      report.checks.push_back({"completeness", max_abs(completeness, 9),
                               opt.resolve(file_tol, 1e-10)});
    }

    const MetricPtr metric = make_metric_from_basis(n, flat.data());
    double conj = 0.0;
    check_status(oblique_metric_conjugacy_defect(metric.get(), &conj));
    report.checks.push_back({"metric_conjugacy", conj,
                             opt.resolve(file_tol, 1e-10 * static_cast<double>(n))});
  } else {
    size_t n = 0;
    std::vector<double> entries = parse_square(problem["metric"], "metric", n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        if (entries[i * n + j] != entries[j * n + i])
          input_error("metric must be symmetric");
    report.results["metric"] = rows_json(entries.data(), n, n);
    const MetricPtr metric = make_metric_from_entries(n, entries.data());
    double conj = 0.0;
    check_status(oblique_metric_conjugacy_defect(metric.get(), &conj));
    report.checks.push_back({"metric_conjugacy", conj,
                             opt.resolve(file_tol, 1e-10 * static_cast<double>(n))});
  }

  for (const auto& c : report.checks)
    checks_summary[c.name] = c.pass() ? "pass" : "fail";
  report.results["check"] = checks_summary;
  return report;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"non-orthogonal bases that behave like orthonormal ones"};
  app.set_version_flag("--version", oblique_version());
  app.require_subcommand(1);

  Options opt;
  double tol_flag = 0.0;
  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--input", opt.input_path, "problem file (JSON)")->required();
    cmd->add_option("--tolerance", tol_flag,
                    "override every resolved tolerance with this value");
    cmd->add_option("--format", opt.format, "report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };

  CLI::App* dual = app.add_subcommand("dual", "reciprocal basis and duality defect");
  CLI::App* decompose =
      app.add_subcommand("decompose", "components of a vector in an oblique basis");
  CLI::App* metric =
      app.add_subcommand("metric", "metric tensor, conjugate, index maps");
  CLI::App* transform =
      app.add_subcommand("transform", "component transformation under a chart");
  CLI::App* check = app.add_subcommand("check", "full invariant battery");
  for (CLI::App* cmd : {dual, decompose, metric, transform, check}) add_common(cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  for (CLI::App* cmd : {dual, decompose, metric, transform, check})
    if (cmd->parsed() && cmd->count("--tolerance") > 0) {
      if (!(tol_flag > 0.0)) {
        std::fprintf(stderr, "error: tolerance must be positive\n");
        return 3;
      }
      opt.tolerance = tol_flag;
    }

  try {
    const njson problem = load_problem(opt.input_path);
    Report report;
    if (dual->parsed()) report = run_dual(problem, opt);
    else if (decompose->parsed()) report = run_decompose(problem, opt);
    else if (metric->parsed()) report = run_metric(problem, opt);
    else if (transform->parsed()) report = run_transform(problem, opt);
    else report = run_check(problem, opt);
    print_report(report, opt.format);
    return report.pass() ? 0 : 1;
  } catch (const CliError& e) {
    std::fprintf(stderr, "error: %s\n", e.message.c_str());
    return e.exit_code;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
}
