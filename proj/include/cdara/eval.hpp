#pragma once
// Evaluation front end: closed-form reference solutions for the two built-in
// problems, error tables, independent numeric residual checking of finished
// series, solution-surface CSV emission, and the transform verification
// report.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cdara/ara.hpp"
#include "cdara/burgers.hpp"
#include "cdara/conformable.hpp"
#include "cdara/expr.hpp"

namespace cdara {

// Closed-form solutions of the built-in problems at physical (x, t):
// example 1: u = v = e^{-T} sin X, example 2: u = v = X^2 e^T.
std::pair<double, double> exact_solution(int example, const FracParams& params, double x, double t);

// Order-N approximation of a solved series: the T-Taylor truncation of the
// partial sum through index N, i.e. all contributions of T-degree <= N.
std::pair<Expression, Expression> series_approximation(const SeriesSolution& sol, std::size_t order);

struct ErrorTableRow {
  double t = 0.0;
  double exact = 0.0;
  double approx = 0.0;
  double abs_error = 0.0;
};

std::vector<ErrorTableRow> error_table(int example, std::size_t order, double x,
                                       const std::vector<double>& t_values,
                                       const FracParams& params);

std::string format_error_table(const std::vector<ErrorTableRow>& rows);
std::string error_table_csv(const std::vector<ErrorTableRow>& rows);

// Max PDE residual magnitude of the pair (u, v) over the sample points, with
// every conformable derivative taken numerically (independent of the exact
// derivatives the solver used).
double residual_check(const ProblemSpec& spec, const Expression& u, const Expression& v,
                      const FracParams& params, const std::vector<std::pair<double, double>>& points);

// Same, on the full partial sum of a solved series.
double residual_check(const ProblemSpec& spec, const SeriesSolution& sol, const FracParams& params,
                      const std::vector<std::pair<double, double>>& points);

struct SurfaceGrid {
  double x_min = 0.1, x_max = 3.0;
  int x_count = 30;
  double t_min = 0.5, t_max = 0.5;
  int t_count = 1;
};

// CSV with header x,t,p,q,u_approx,u_exact,v_approx,v_exact; one row per grid
// point for each requested parameter pair.  exact columns are NaN when no
// closed form is known (custom problem specs).
std::string surface_csv(int example, const ProblemSpec& spec, std::size_t order,
                        const std::vector<FracParams>& params_list, const SurfaceGrid& grid);

void emit_surface(int example, const ProblemSpec& spec, std::size_t order,
                  const std::vector<FracParams>& params_list, const SurfaceGrid& grid,
                  const std::string& path);

void write_file(const std::string& path, const std::string& content);

// Transform-table verification: every elementary image against quadrature and
// every operational rule (symbolic or panel-based).
struct TransformCheckRow {
  std::string name;
  std::string method;    // "quadrature", "panel", "symbolic"
  std::string detail;    // image or rule description
  double residual = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

std::vector<TransformCheckRow> verify_transforms();
std::vector<TransformCheckRow> verify_transforms(const std::string& report_path);
std::string format_transform_report(const std::vector<TransformCheckRow>& rows);

}  // namespace cdara
