#include "cdara/conformable.hpp"

#include <cmath>

namespace cdara {

void FracParams::validate() const {
  if (!(p > 0.0 && p <= 1.0) || !(q > 0.0 && q <= 1.0))
    throw DomainError("fractional orders must lie in (0, 1]");
}

std::pair<double, double> to_stretched(double x, double t, const FracParams& params) {
  params.validate();
  if (x < 0.0 || t < 0.0) throw DomainError("to_stretched: negative coordinate");
  return {std::pow(x, params.p) / params.p, std::pow(t, params.q) / params.q};
}

std::pair<double, double> from_stretched(double big_x, double big_t, const FracParams& params) {
  params.validate();
  if (big_x < 0.0 || big_t < 0.0) throw DomainError("from_stretched: negative coordinate");
  return {std::pow(params.p * big_x, 1.0 / params.p), std::pow(params.q * big_t, 1.0 / params.q)};
}

double conformable_dx_numeric(const Field2D& h, double x, double t, double p, double step) {
  if (x <= 0.0) throw DomainError("conformable_dx_numeric: requires x > 0");
  return std::pow(x, 1.0 - p) * (h(x + step, t) - h(x - step, t)) / (2.0 * step);
}

double conformable_dx_limit(const Field2D& h, double x, double t, double p, double delta) {
  if (x <= 0.0) throw DomainError("conformable_dx_limit: requires x > 0");
  return (h(x + delta * std::pow(x, 1.0 - p), t) - h(x, t)) / delta;
}

double conformable_dt_numeric(const Field2D& h, double x, double t, double q, double step) {
  if (t <= 0.0) throw DomainError("conformable_dt_numeric: requires t > 0");
  return std::pow(t, 1.0 - q) * (h(x, t + step) - h(x, t - step)) / (2.0 * step);
}

double conformable_dxx_numeric(const Field2D& h, double x, double t, double p, double step) {
  if (x <= 0.0) throw DomainError("conformable_dxx_numeric: requires x > 0");
  const double hx = (h(x + step, t) - h(x - step, t)) / (2.0 * step);
  const double hxx = (h(x + step, t) - 2.0 * h(x, t) + h(x - step, t)) / (step * step);
  return (1.0 - p) * std::pow(x, 1.0 - 2.0 * p) * hx + std::pow(x, 2.0 * (1.0 - p)) * hxx;
}

}  // namespace cdara
