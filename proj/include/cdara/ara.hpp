#pragma once
// Exact symbolic single and double conformable ARA transforms on the
// expression basis, exact inversion by table, a Gauss-Laguerre quadrature
// oracle for the defining integral, and executable checks of the operational
// rules (coordinate multiplication, conformable derivatives, mixed products).
//
// The image of c * X^n T^m e^{mu X + nu T} is
//
//     c * n! m! * r s / ((r - mu)^{n+1} (s - nu)^{m+1}),
//
// independent of the fractional orders: the substitution u = x^p/p, v = t^q/q
// removes p and q from the defining integral.

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cdara/conformable.hpp"
#include "cdara/expr.hpp"

namespace cdara {

// single_ara_x/t called on an expression that depends on the other variable.
struct NotSeparableError : std::runtime_error {
  explicit NotSeparableError(const std::string& what) : std::runtime_error(what) {}
};

// Quadrature requested below the field's convergence abscissa.
struct AbscissaError : std::runtime_error {
  explicit AbscissaError(const std::string& what) : std::runtime_error(what) {}
};

// One image term c * n! m! * r s / ((r - xpole)^{n+1} (s - tpole)^{m+1}).
struct ImageTerm {
  Complex coeff{0.0, 0.0};
  int xfact = 0;
  int tfact = 0;
  Complex xpole{0.0, 0.0};
  Complex tpole{0.0, 0.0};
};

// Canonical multiset of image terms; bijective with Expression.
class ImageExpr {
 public:
  ImageExpr() = default;
  explicit ImageExpr(std::vector<ImageTerm> raw_terms);

  const std::vector<ImageTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

 private:
  std::vector<ImageTerm> terms_;
};

ImageExpr double_ara(const Expression& e);
Expression inverse_double_ara(const ImageExpr& g);

ImageExpr image_add(const ImageExpr& a, const ImageExpr& b);
ImageExpr image_scale(const ImageExpr& g, Complex factor);
bool identical(const ImageExpr& a, const ImageExpr& b);

// Evaluate the image (or its r/s-partial derivative of order dr, ds <= 2).
Complex eval_image(const ImageExpr& g, Complex r, Complex s, int dr = 0, int ds = 0);

std::string to_string(const ImageExpr& g);

// One-variable image c * k! * v / (v - pole)^{k+1}.
struct SingleImageTerm {
  Complex coeff{0.0, 0.0};
  int fact = 0;
  Complex pole{0.0, 0.0};
};

struct SingleImage {
  std::vector<SingleImageTerm> terms;
};

// Require the expression constant in the other variable.
SingleImage single_ara_x(const Expression& e);
SingleImage single_ara_t(const Expression& e);

Complex eval_single(const SingleImage& g, Complex v, int deriv = 0);

// --- Quadrature oracle -----------------------------------------------------

struct QuadratureConfig {
  int node_count = 64;
  double abscissa_margin = 0.5;  // required Re(r) - growth_x and Re(s) - growth_t
};

// Complex-valued scalar field over physical (x, t) with exponential orders in
// the stretched coordinates (growth guard for the transform integral).
struct PhysicalField {
  std::function<Complex(double, double)> value;
  double growth_x = 0.0;
  double growth_t = 0.0;
};

PhysicalField field_from_expression(const Expression& e, const FracParams& params);

// Direct numerical evaluation of the defining double integral via generalized
// Gauss-Laguerre quadrature after the stretched-coordinate substitution.
// Complex r, s: the real part goes into the Laguerre weight, the oscillatory
// remainder into the integrand.
Complex numeric_double_ara(const PhysicalField& h, Complex r, Complex s,
                           const FracParams& params, const QuadratureConfig& cfg);

struct LaguerreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

LaguerreRule laguerre_rule(int n, double alpha = 0.0);

// --- Operational-rule checks ------------------------------------------------

// Images of X*h, T*h, X^2*h, T^2*h, XT*h expressed through r/s-derivatives of
// the image of h; certified numerically on a panel of sample points.
enum class MultiplicationRule { X, T, XX, TT, XT };

// Images of the conformable derivatives with boundary corrections; both sides
// reduce to the same canonical rational form, so cancellation is exact.
enum class DerivativeRule { DX, DXX, DT, DTT };

// Images of X * dT h and T * dX h.
enum class MixedRule { XTimesDT, TTimesDX };

// Panel of generic (r, s) sample points clear of the expression's poles.
std::vector<std::pair<Complex, Complex>> sample_panel(const Expression& e);

// Each check returns a scale-normalized residual; identities hold when the
// result is ~1e-15.  The derivative-rule check is fully symbolic.
double check_multiplication_rule(const Expression& e, MultiplicationRule which);
double check_derivative_rule(const Expression& e, DerivativeRule which);
double check_mixed_rule(const Expression& e, MixedRule which);

}  // namespace cdara
