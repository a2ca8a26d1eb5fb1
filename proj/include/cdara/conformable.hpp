#pragma once
// Conformable fractional machinery: the stretched-coordinate map
// (x, t) <-> (X, T) = (x^p/p, t^q/q) and numeric derivative oracles.
//
// The solver itself never differentiates numerically: all its derivatives are
// exact in the expression basis.  These oracles exist to verify the
// stretched-coordinate identity d^p/dx^p = x^{1-p} d/dx independently and to
// check PDE residuals of finished solutions.

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

namespace cdara {

struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Fractional orders p, q in (0, 1].
struct FracParams {
  double p = 1.0;
  double q = 1.0;
  void validate() const;
};

// x >= 0, t >= 0 -> (X, T) = (x^p/p, t^q/q).
std::pair<double, double> to_stretched(double x, double t, const FracParams& params);

// Inverse map: X, T >= 0 -> (x, t) = ((pX)^{1/p}, (qT)^{1/q}).
std::pair<double, double> from_stretched(double big_x, double big_t, const FracParams& params);

using Field2D = std::function<double(double, double)>;

// x^{1-p} times the central difference of h in x.  Requires x > 0.
double conformable_dx_numeric(const Field2D& h, double x, double t, double p, double step = 1e-5);

// Limit-quotient form: shifts the stretched coordinate by delta * x^{1-p} and
// divides by delta.  Converges to conformable_dx_numeric as delta -> 0.
double conformable_dx_limit(const Field2D& h, double x, double t, double p, double delta = 1e-6);

double conformable_dt_numeric(const Field2D& h, double x, double t, double q, double step = 1e-5);

// Second conformable x-derivative, expanded as
// (1-p) x^{1-2p} h_x + x^{2(1-p)} h_xx with central differences.
double conformable_dxx_numeric(const Field2D& h, double x, double t, double p, double step = 1e-4);

}  // namespace cdara
