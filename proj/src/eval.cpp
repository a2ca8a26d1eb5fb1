#include "cdara/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

namespace cdara {

namespace {

std::string fmt(double v, const char* spec = "%.6g") {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> out;
  if (count <= 1) {
    out.push_back(lo);
    return out;
  }
  for (int i = 0; i < count; ++i) out.push_back(lo + (hi - lo) * double(i) / double(count - 1));
  return out;
}

ProblemSpec preset_for(int example) {
  if (example == 1) return presets::example1();
  if (example == 2) return presets::example2();
  throw std::invalid_argument("unknown example: " + std::to_string(example));
}

}  // namespace

std::pair<double, double> exact_solution(int example, const FracParams& params, double x, double t) {
  auto [big_x, big_t] = to_stretched(x, t, params);
  double u = 0.0;
  if (example == 1)
    u = std::exp(-big_t) * std::sin(big_x);
  else if (example == 2)
    u = big_x * big_x * std::exp(big_t);
  else
    throw std::invalid_argument("unknown example: " + std::to_string(example));
  return {u, u};
}

std::pair<Expression, Expression> series_approximation(const SeriesSolution& sol, std::size_t order) {
  const std::size_t stored = sol.u_components.size() - 1;
  auto [u, v] = partial_sum(sol, std::min(order, stored));
  return {truncate_t_order(u, int(order)), truncate_t_order(v, int(order))};
}

std::vector<ErrorTableRow> error_table(int example, std::size_t order, double x,
                                       const std::vector<double>& t_values,
                                       const FracParams& params) {
  const SeriesSolution sol = solve(preset_for(example), order);
  const Expression approx_u = series_approximation(sol, order).first;
  std::vector<ErrorTableRow> rows;
  rows.reserve(t_values.size());
  for (double t : t_values) {
    auto [big_x, big_t] = to_stretched(x, t, params);
    ErrorTableRow row;
    row.t = t;
    row.exact = exact_solution(example, params, x, t).first;
    row.approx = evaluate(approx_u, big_x, big_t);
    row.abs_error = std::abs(row.exact - row.approx);
    rows.push_back(row);
  }
  return rows;
}

std::string format_error_table(const std::vector<ErrorTableRow>& rows) {
  std::string out = "    t        exact         approx        abs_error\n";
  for (const auto& r : rows) {
    char line[160];
    std::snprintf(line, sizeof(line), "  %-7g  %-12.6g  %-12.6g  %.6g\n", r.t, r.exact, r.approx,
                  r.abs_error);
    out += line;
  }
  return out;
}

std::string error_table_csv(const std::vector<ErrorTableRow>& rows) {
  std::string out = "t,exact,approx,abs_error\n";
  for (const auto& r : rows)
    out += fmt(r.t) + "," + fmt(r.exact) + "," + fmt(r.approx) + "," + fmt(r.abs_error) + "\n";
  return out;
}

double residual_check(const ProblemSpec& spec, const Expression& u, const Expression& v,
                      const FracParams& params,
                      const std::vector<std::pair<double, double>>& points) {
  params.validate();
  const Field2D fu = [&](double x, double t) {
    auto [big_x, big_t] = to_stretched(x, t, params);
    return evaluate(u, big_x, big_t);
  };
  const Field2D fv = [&](double x, double t) {
    auto [big_x, big_t] = to_stretched(x, t, params);
    return evaluate(v, big_x, big_t);
  };
  const Field2D fuv = [&](double x, double t) { return fu(x, t) * fv(x, t); };

  const bool singular = spec.geometry == Geometry::SingularBessel;
  double worst = 0.0;
  for (const auto& [x, t] : points) {
    auto [big_x, big_t] = to_stretched(x, t, params);
    auto one_residual = [&](const Field2D& fw, double coupling, const Expression& src) {
      double lin = conformable_dxx_numeric(fw, x, t, params.p);
      if (singular) lin += conformable_dx_numeric(fw, x, t, params.p) / big_x;
      const double nonlinear = spec.lambda * fw(x, t) * conformable_dx_numeric(fw, x, t, params.p) +
                               coupling * conformable_dx_numeric(fuv, x, t, params.p);
      return conformable_dt_numeric(fw, x, t, params.q) - lin + nonlinear -
             evaluate(src, big_x, big_t);
    };
    worst = std::max(worst, std::abs(one_residual(fu, spec.alpha, spec.source_k)));
    worst = std::max(worst, std::abs(one_residual(fv, spec.beta, spec.source_l)));
  }
  return worst;
}

double residual_check(const ProblemSpec& spec, const SeriesSolution& sol, const FracParams& params,
                      const std::vector<std::pair<double, double>>& points) {
  auto [u, v] = partial_sum(sol, sol.u_components.size() - 1);
  return residual_check(spec, u, v, params, points);
}

std::string surface_csv(int example, const ProblemSpec& spec, std::size_t order,
                        const std::vector<FracParams>& params_list, const SurfaceGrid& grid) {
  const SeriesSolution sol = solve(spec, order);
  auto [approx_u, approx_v] = series_approximation(sol, order);
  const auto xs = linspace(grid.x_min, grid.x_max, grid.x_count);
  const auto ts = linspace(grid.t_min, grid.t_max, grid.t_count);

  std::string out = "x,t,p,q,u_approx,u_exact,v_approx,v_exact\n";
  const char* g9 = "%.9g";
  for (const auto& params : params_list) {
    params.validate();
    for (double x : xs) {
      for (double t : ts) {
        auto [big_x, big_t] = to_stretched(x, t, params);
        const double ua = evaluate(approx_u, big_x, big_t);
        const double va = evaluate(approx_v, big_x, big_t);
        double ue = std::numeric_limits<double>::quiet_NaN(), ve = ue;
        if (example == 1 || example == 2) {
          auto [eu, ev] = exact_solution(example, params, x, t);
          ue = eu;
          ve = ev;
        }
        out += fmt(x, g9) + "," + fmt(t, g9) + "," + fmt(params.p, g9) + "," + fmt(params.q, g9) +
               "," + fmt(ua, g9) + "," + fmt(ue, g9) + "," + fmt(va, g9) + "," + fmt(ve, g9) + "\n";
      }
    }
  }
  return out;
}

void emit_surface(int example, const ProblemSpec& spec, std::size_t order,
                  const std::vector<FracParams>& params_list, const SurfaceGrid& grid,
                  const std::string& path) {
  write_file(path, surface_csv(example, spec, order, params_list, grid));
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
}

namespace {

TransformCheckRow quadrature_row(const std::string& name, const Expression& e) {
  TransformCheckRow row;
  row.name = name;
  row.method = "quadrature";
  const ImageExpr image = double_ara(e);
  row.detail = "G = " + to_string(image);
  const Complex r{3.0, 0.0}, s{3.0, 0.0};
  const Complex sym = eval_image(image, r, s);
  QuadratureConfig cfg;  // 64 nodes
  double worst = 0.0;
  for (double order : {1.0, 0.8}) {
    const FracParams params{order, order};
    const Complex num = numeric_double_ara(field_from_expression(e, params), r, s, params, cfg);
    worst = std::max(worst, std::abs(num - sym) / std::abs(sym));
  }
  row.residual = worst;
  row.threshold = 1e-8;
  row.pass = row.residual < row.threshold;
  return row;
}

TransformCheckRow rule_row(const std::string& name, const std::string& method,
                           const std::string& detail, double residual) {
  TransformCheckRow row;
  row.name = name;
  row.method = method;
  row.detail = detail;
  row.residual = residual;
  row.threshold = 1e-12;
  row.pass = residual < row.threshold;
  return row;
}

}  // namespace

std::vector<TransformCheckRow> verify_transforms() {
  std::vector<TransformCheckRow> rows;

  rows.push_back(quadrature_row("1", constant(1.0)));
  rows.push_back(quadrature_row("X^2 T^3", multiply(x_power(2), t_power(3))));
  rows.push_back(quadrature_row("e^{X+T}", exp_xt(1.0, 1.0)));
  rows.push_back(quadrature_row("sin(X) sin(T)", multiply(sin_x(1.0), sin_t(1.0))));

  // Mixed test expression with poles at 0, +-i and +-1.
  const Expression h = add(multiply(sin_x(1.0), exp_xt(0.0, -1.0)),
                           multiply(x_power(2), exp_xt(0.0, 1.0)));
  const std::string hs = "h = sin(X) e^{-T} + X^2 e^{T}";

  rows.push_back(rule_row("X h", "panel", hs, check_multiplication_rule(h, MultiplicationRule::X)));
  rows.push_back(rule_row("T h", "panel", hs, check_multiplication_rule(h, MultiplicationRule::T)));
  rows.push_back(
      rule_row("X^2 h", "panel", hs, check_multiplication_rule(h, MultiplicationRule::XX)));
  rows.push_back(
      rule_row("T^2 h", "panel", hs, check_multiplication_rule(h, MultiplicationRule::TT)));
  rows.push_back(
      rule_row("X T h", "panel", hs, check_multiplication_rule(h, MultiplicationRule::XT)));

  rows.push_back(rule_row("dX h", "symbolic", hs, check_derivative_rule(h, DerivativeRule::DX)));
  rows.push_back(rule_row("dT h", "symbolic", hs, check_derivative_rule(h, DerivativeRule::DT)));
  rows.push_back(rule_row("dXX h", "symbolic", hs, check_derivative_rule(h, DerivativeRule::DXX)));
  rows.push_back(rule_row("dTT h", "symbolic", hs, check_derivative_rule(h, DerivativeRule::DTT)));

  rows.push_back(rule_row("X dT h", "panel", hs, check_mixed_rule(h, MixedRule::XTimesDT)));
  rows.push_back(rule_row("T dX h", "panel", hs, check_mixed_rule(h, MixedRule::TTimesDX)));

  return rows;
}

std::vector<TransformCheckRow> verify_transforms(const std::string& report_path) {
  const auto rows = verify_transforms();
  write_file(report_path, format_transform_report(rows));
  return rows;
}

std::string format_transform_report(const std::vector<TransformCheckRow>& rows) {
  std::string out = "transform table verification\n";
  out += "----------------------------------------------------------------------\n";
  int i = 0;
  bool all = true;
  for (const auto& r : rows) {
    char line[256];
    std::snprintf(line, sizeof(line), "%2d  %-14s %-10s residual %-12.3g %s\n", ++i,
                  r.name.c_str(), r.method.c_str(), r.residual, r.pass ? "PASS" : "FAIL");
    out += line;
    out += "      " + r.detail + "\n";
    all = all && r.pass;
  }
  out += all ? "all rows pass\n" : "FAILURES present\n";
  return out;
}

}  // namespace cdara
