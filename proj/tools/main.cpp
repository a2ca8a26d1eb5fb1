// Command-line front end: solve the built-in or user-supplied coupled Burgers
// problems, reproduce the error tables, emit solution surfaces as CSV, verify
// the transform table, and check PDE residuals numerically.

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cdara/eval.hpp"
#include "cdara/json_io.hpp"

namespace {

using namespace cdara;

struct ProblemChoice {
  int example = 0;  // 0 = custom spec file
  std::string spec_path;

  ProblemSpec resolve() const {
    if (!spec_path.empty()) return load_problem_file(spec_path);
    if (example == 1) return presets::example1();
    if (example == 2) return presets::example2();
    throw CLI::ValidationError("choose --example 1|2 or --spec <file>");
  }
};

void add_problem_flags(CLI::App* cmd, ProblemChoice& choice) {
  cmd->add_option("--example", choice.example, "built-in problem (1 regular, 2 singular)")
      ->check(CLI::IsMember({1, 2}));
  cmd->add_option("--spec", choice.spec_path, "problem spec JSON file");
}

std::vector<double> steps(double lo, double hi, int count) {
  std::vector<double> out;
  if (count <= 1) {
    out.push_back(lo);
    return out;
  }
  for (int i = 0; i < count; ++i) out.push_back(lo + (hi - lo) * double(i) / double(count - 1));
  return out;
}

int run_solve(const ProblemChoice& choice, std::size_t order, const std::string& out_path) {
  const ProblemSpec spec = choice.resolve();
  const SeriesSolution sol = solve(spec, order);
  for (std::size_t n = 0; n < sol.u_components.size(); ++n)
    std::printf("u[%zu] = %s\n", n, to_string(sol.u_components[n]).c_str());
  for (std::size_t n = 0; n < sol.v_components.size(); ++n)
    std::printf("v[%zu] = %s\n", n, to_string(sol.v_components[n]).c_str());
  if (sol.terminated_at)
    std::printf("terminated at n = %zu\n", *sol.terminated_at);
  else
    std::printf("no termination within order %zu\n", order);
  auto [u, v] = partial_sum(sol, order);
  std::printf("u partial sum = %s\n", to_string(u).c_str());
  std::printf("v partial sum = %s\n", to_string(v).c_str());

  if (!out_path.empty()) {
    nlohmann::json j;
    j["order"] = order;
    j["terminated_at"] = nullptr;
    if (sol.terminated_at) j["terminated_at"] = *sol.terminated_at;
    for (const auto& c : sol.u_components)
      j["u_components"].push_back(nlohmann::json::parse(expression_to_json(c)));
    for (const auto& c : sol.v_components)
      j["v_components"].push_back(nlohmann::json::parse(expression_to_json(c)));
    write_file(out_path, j.dump(2) + "\n");
    std::printf("wrote %s\n", out_path.c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conformable double ARA decomposition solver for coupled Burgers systems"};
  app.require_subcommand(1);

  // solve
  ProblemChoice solve_choice;
  std::size_t solve_order = 6;
  std::string solve_out;
  CLI::App* cmd_solve = app.add_subcommand("solve", "compute series components");
  add_problem_flags(cmd_solve, solve_choice);
  cmd_solve->add_option("--order", solve_order, "truncation order N");
  cmd_solve->add_option("--out", solve_out, "write components as JSON");

  // table
  ProblemChoice table_choice;
  std::size_t table_order = 6;
  double table_p = 1.0, table_q = 1.0, table_x = 1.0;
  double t_min = 0.1, t_max = 0.5;
  int t_steps = 9;
  std::string table_out;
  CLI::App* cmd_table = app.add_subcommand("table", "error table against the closed form");
  cmd_table->add_option("--example", table_choice.example, "built-in problem (1 or 2)")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  cmd_table->add_option("--order", table_order, "truncation order N");
  cmd_table->add_option("--p", table_p, "space order in (0,1]");
  cmd_table->add_option("--q", table_q, "time order in (0,1]");
  cmd_table->add_option("--x", table_x, "evaluation abscissa");
  cmd_table->add_option("--t-min", t_min, "first time value");
  cmd_table->add_option("--t-max", t_max, "last time value");
  cmd_table->add_option("--t-steps", t_steps, "number of time values");
  cmd_table->add_option("--out", table_out, "also write the table as CSV");

  // surface
  ProblemChoice surf_choice;
  std::size_t surf_order = 6;
  std::vector<double> surf_p{1.0}, surf_q{1.0};
  SurfaceGrid grid;
  std::string surf_out;
  CLI::App* cmd_surface = app.add_subcommand("surface", "solution surface CSV");
  add_problem_flags(cmd_surface, surf_choice);
  cmd_surface->add_option("--order", surf_order, "truncation order N");
  cmd_surface->add_option("--p", surf_p, "space orders (repeatable)");
  cmd_surface->add_option("--q", surf_q, "time orders (repeatable)");
  cmd_surface->add_option("--x-min", grid.x_min, "grid start in x");
  cmd_surface->add_option("--x-max", grid.x_max, "grid end in x");
  cmd_surface->add_option("--x-steps", grid.x_count, "grid points in x");
  cmd_surface->add_option("--t-min", grid.t_min, "grid start in t");
  cmd_surface->add_option("--t-max", grid.t_max, "grid end in t");
  cmd_surface->add_option("--t-steps", grid.t_count, "grid points in t");
  cmd_surface->add_option("--out", surf_out, "output CSV path")->required();

  // residual
  ProblemChoice res_choice;
  std::size_t res_order = 6;
  double res_p = 1.0, res_q = 1.0;
  double rx_min = 0.5, rx_max = 1.5, rt_min = 0.1, rt_max = 0.5;
  int rx_steps = 5, rt_steps = 5;
  CLI::App* cmd_residual = app.add_subcommand("residual", "numeric PDE residual of the series");
  add_problem_flags(cmd_residual, res_choice);
  cmd_residual->add_option("--order", res_order, "truncation order N");
  cmd_residual->add_option("--p", res_p, "space order in (0,1]");
  cmd_residual->add_option("--q", res_q, "time order in (0,1]");
  cmd_residual->add_option("--x-min", rx_min, "sample grid start in x");
  cmd_residual->add_option("--x-max", rx_max, "sample grid end in x");
  cmd_residual->add_option("--x-steps", rx_steps, "sample points in x");
  cmd_residual->add_option("--t-min", rt_min, "sample grid start in t");
  cmd_residual->add_option("--t-max", rt_max, "sample grid end in t");
  cmd_residual->add_option("--t-steps", rt_steps, "sample points in t");

  // verify-transforms
  std::string verify_out;
  CLI::App* cmd_verify = app.add_subcommand("verify-transforms", "transform table verification");
  cmd_verify->add_option("--out", verify_out, "write the report to a file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_solve->parsed()) return run_solve(solve_choice, solve_order, solve_out);

    if (cmd_table->parsed()) {
      const auto rows = error_table(table_choice.example, table_order, table_x,
                                    steps(t_min, t_max, t_steps), FracParams{table_p, table_q});
      std::fputs(format_error_table(rows).c_str(), stdout);
      if (!table_out.empty()) {
        write_file(table_out, error_table_csv(rows));
        std::printf("wrote %s\n", table_out.c_str());
      }
      return 0;
    }

    if (cmd_surface->parsed()) {
      if (surf_q.size() == 1 && surf_p.size() > 1) surf_q.assign(surf_p.size(), surf_q[0]);
      if (surf_p.size() == 1 && surf_q.size() > 1) surf_p.assign(surf_q.size(), surf_p[0]);
      if (surf_p.size() != surf_q.size())
        throw CLI::ValidationError("--p and --q need matching counts (or a single value)");
      std::vector<FracParams> params_list;
      for (std::size_t i = 0; i < surf_p.size(); ++i)
        params_list.push_back({surf_p[i], surf_q[i]});
      const ProblemSpec spec = surf_choice.resolve();
      emit_surface(surf_choice.example, spec, surf_order, params_list, grid, surf_out);
      std::printf("wrote %s\n", surf_out.c_str());
      return 0;
    }

    if (cmd_residual->parsed()) {
      const ProblemSpec spec = res_choice.resolve();
      const SeriesSolution sol = solve(spec, res_order);
      auto [u, v] = partial_sum(sol, res_order);
      std::vector<std::pair<double, double>> points;
      for (double x : steps(rx_min, rx_max, rx_steps))
        for (double t : steps(rt_min, rt_max, rt_steps)) points.push_back({x, t});
      const double r = residual_check(spec, u, v, FracParams{res_p, res_q}, points);
      std::printf("max residual over %zu points: %.6g\n", points.size(), r);
      return 0;
    }

    if (cmd_verify->parsed()) {
      const auto rows = verify_out.empty() ? verify_transforms() : verify_transforms(verify_out);
      std::fputs(format_transform_report(rows).c_str(), stdout);
      if (!verify_out.empty()) std::printf("wrote %s\n", verify_out.c_str());
      for (const auto& row : rows)
        if (!row.pass) return 1;
      return 0;
    }
  } catch (const std::exception& err) {
    std::fprintf(stderr, "error: %s\n", err.what());
    return 1;
  }
  return 0;
}
