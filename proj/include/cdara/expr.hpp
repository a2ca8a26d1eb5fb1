#pragma once
// Closed symbolic algebra over complex-exponential monomials in the stretched
// coordinates (X, T).  Everything the decomposition recursion touches --
// initial data, sources, series components -- is a finite canonical sum of
//
//     coeff * X^xpow * T^tpow * e^{xexp * X} * e^{texp * T}
//
// with complex coeff, xexp, texp and nonnegative integer powers.  Trigonometric
// functions enter as conjugate exponential pairs, so products, derivatives and
// time integrals never leave the basis.

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cdara {

using Complex = std::complex<double>;

// A term carried a non-finite coefficient or exponent, or a negative power.
struct InvalidTermError : std::runtime_error {
  explicit InvalidTermError(const std::string& what) : std::runtime_error(what) {}
};

// divide_by_x met a term with xpow == 0; X^{-1} is not in the basis.
struct NonExactDivisionError : std::runtime_error {
  explicit NonExactDivisionError(const std::string& what) : std::runtime_error(what) {}
};

// evaluate() saw an imaginary residue above tolerance: the expression is not
// conjugate-paired.
struct NotRealError : std::runtime_error {
  explicit NotRealError(const std::string& what) : std::runtime_error(what) {}
};

struct MonomialTerm {
  Complex coeff{0.0, 0.0};
  int xpow = 0;
  int tpow = 0;
  Complex xexp{0.0, 0.0};
  Complex texp{0.0, 0.0};
};

enum class Axis { X, T };

// Exponents closer than this merge into one key during canonicalization.
inline constexpr double kExponentTol = 1e-12;
// Coefficients below kPruneRel * max(1, max |coeff|) are dropped, so exact
// cancellations in the recursion yield the literal zero expression.
inline constexpr double kPruneRel = 1e-14;

// Canonical expression: keys (xpow, tpow, xexp, texp) are unique, terms are
// sorted lexicographically on the key, zero coefficients are pruned.
class Expression {
 public:
  Expression() = default;
  explicit Expression(std::vector<MonomialTerm> raw_terms);

  const std::vector<MonomialTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

 private:
  std::vector<MonomialTerm> terms_;
};

inline Expression canonicalize(std::vector<MonomialTerm> raw) {
  return Expression(std::move(raw));
}

Expression add(const Expression& a, const Expression& b);
Expression multiply(const Expression& a, const Expression& b);
Expression scale(const Expression& e, Complex factor);
Expression differentiate(const Expression& e, Axis axis);

// Exact antiderivative in T with value 0 at T = 0.
Expression integrate_t(const Expression& e);

// Partial: every term must carry xpow >= 1.
Expression divide_by_x(const Expression& e);

// Substitution X = 0 (resp. T = 0); stays in the basis.
Expression substitute_x_zero(const Expression& e);
Expression substitute_t_zero(const Expression& e);

// T-Taylor truncation: expands each e^{texp*T} factor and keeps contributions
// of T-degree <= order.  X factors are untouched.
Expression truncate_t_order(const Expression& e, int order);

double evaluate(const Expression& e, double x_val, double t_val);
Complex evaluate_complex(const Expression& e, double x_val, double t_val);

// Conjugate-pairing check: real-keyed coefficients real, complex-keyed terms
// paired with their conjugates.
bool is_real(const Expression& e);

// Elementary constructors.  Trig builders emit conjugate exponential pairs.
Expression constant(double c);
Expression x_power(int n);
Expression t_power(int m);
Expression exp_xt(double lambda, double beta);
Expression sin_x(double lambda);
Expression cos_x(double lambda);
Expression sin_t(double beta);
Expression cos_t(double beta);

// Bitwise canonical equality (keys and coefficients).
bool identical(const Expression& a, const Expression& b);

double max_abs_coeff(const Expression& e);

std::string to_string(const Expression& e);

inline Expression operator+(const Expression& a, const Expression& b) { return add(a, b); }
inline Expression operator-(const Expression& a, const Expression& b) { return add(a, scale(b, -1.0)); }
inline Expression operator*(const Expression& a, const Expression& b) { return multiply(a, b); }
inline Expression operator*(double c, const Expression& e) { return scale(e, c); }
inline Expression operator*(const Expression& e, double c) { return scale(e, c); }
inline Expression operator-(const Expression& e) { return scale(e, -1.0); }

}  // namespace cdara
