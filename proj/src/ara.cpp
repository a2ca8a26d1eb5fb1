#include "cdara/ara.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <tuple>

namespace cdara {

namespace {

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r *= double(n - k + i) / double(i);
  return r;
}

Complex cpow_int(Complex z, int n) {
  Complex r{1.0, 0.0};
  for (int i = 0; i < n; ++i) r *= z;
  return r;
}

Complex inv_pow(Complex z, int n) { return Complex{1.0, 0.0} / cpow_int(z, n); }

std::tuple<int, int, double, double, double, double> key_of(const ImageTerm& t) {
  return {t.xfact, t.tfact, t.xpole.real(), t.xpole.imag(), t.tpole.real(), t.tpole.imag()};
}

bool key_equal(const ImageTerm& a, const ImageTerm& b) {
  return a.xfact == b.xfact && a.tfact == b.tfact &&
         std::abs(a.xpole - b.xpole) <= kExponentTol && std::abs(a.tpole - b.tpole) <= kExponentTol;
}

// v / (v - pole)^{k+1} and its first two derivatives in v.
Complex rational_part(Complex v, Complex pole, int k, int deriv) {
  const Complex d = v - pole;
  switch (deriv) {
    case 0:
      return v * inv_pow(d, k + 1);
    case 1:
      return inv_pow(d, k + 1) - double(k + 1) * v * inv_pow(d, k + 2);
    default:
      return -2.0 * double(k + 1) * inv_pow(d, k + 2) +
             double(k + 1) * double(k + 2) * v * inv_pow(d, k + 3);
  }
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string format_complex(Complex z) {
  if (std::abs(z.imag()) <= 1e-14 * std::max(1.0, std::abs(z.real()))) return format_real(z.real());
  return "(" + format_real(z.real()) + (z.imag() < 0 ? "-" : "+") + format_real(std::abs(z.imag())) + "i)";
}

}  // namespace

ImageExpr::ImageExpr(std::vector<ImageTerm> raw) {
  for (const auto& t : raw) {
    if (t.xfact < 0 || t.tfact < 0) throw InvalidTermError("image term with negative factorial index");
    if (!std::isfinite(std::abs(t.coeff)) || !std::isfinite(std::abs(t.xpole)) ||
        !std::isfinite(std::abs(t.tpole)))
      throw InvalidTermError("image term with non-finite coefficient or pole");
  }
  std::sort(raw.begin(), raw.end(),
            [](const ImageTerm& a, const ImageTerm& b) { return key_of(a) < key_of(b); });
  std::vector<ImageTerm> merged;
  for (const auto& t : raw) {
    if (!merged.empty() && key_equal(merged.back(), t))
      merged.back().coeff += t.coeff;
    else
      merged.push_back(t);
  }
  double max_mag = 0.0;
  for (const auto& t : merged) max_mag = std::max(max_mag, std::abs(t.coeff));
  const double threshold = kPruneRel * std::max(1.0, max_mag);
  for (const auto& t : merged)
    if (std::abs(t.coeff) >= threshold) terms_.push_back(t);
}

ImageExpr double_ara(const Expression& e) {
  std::vector<ImageTerm> out;
  out.reserve(e.size());
  for (const auto& t : e.terms()) out.push_back({t.coeff, t.xpow, t.tpow, t.xexp, t.texp});
  return ImageExpr(std::move(out));
}

Expression inverse_double_ara(const ImageExpr& g) {
  std::vector<MonomialTerm> out;
  out.reserve(g.size());
  for (const auto& t : g.terms()) out.push_back({t.coeff, t.xfact, t.tfact, t.xpole, t.tpole});
  return Expression(std::move(out));
}

ImageExpr image_add(const ImageExpr& a, const ImageExpr& b) {
  std::vector<ImageTerm> all = a.terms();
  all.insert(all.end(), b.terms().begin(), b.terms().end());
  return ImageExpr(std::move(all));
}

ImageExpr image_scale(const ImageExpr& g, Complex factor) {
  std::vector<ImageTerm> out = g.terms();
  for (auto& t : out) t.coeff *= factor;
  return ImageExpr(std::move(out));
}

bool identical(const ImageExpr& a, const ImageExpr& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& ta = a.terms()[i];
    const auto& tb = b.terms()[i];
    if (ta.xfact != tb.xfact || ta.tfact != tb.tfact) return false;
    if (ta.xpole != tb.xpole || ta.tpole != tb.tpole) return false;
    if (ta.coeff != tb.coeff) return false;
  }
  return true;
}

Complex eval_image(const ImageExpr& g, Complex r, Complex s, int dr, int ds) {
  Complex acc{};
  for (const auto& t : g.terms())
    acc += t.coeff * factorial(t.xfact) * factorial(t.tfact) *
           rational_part(r, t.xpole, t.xfact, dr) * rational_part(s, t.tpole, t.tfact, ds);
  return acc;
}

std::string to_string(const ImageExpr& g) {
  if (g.is_zero()) return "0";
  std::string out;
  for (const auto& t : g.terms()) {
    if (!out.empty()) out += " + ";
    out += format_complex(t.coeff * factorial(t.xfact) * factorial(t.tfact));
    auto var_part = [](const char* var, Complex pole, int n) -> std::string {
      if (std::abs(pole) <= kExponentTol) {
        if (n == 0) return "";
        return std::string(" / ") + var + (n == 1 ? "" : "^" + std::to_string(n));
      }
      std::string s = std::string(" * ") + var + "/(" + var + " - " + format_complex(pole) + ")";
      if (n + 1 > 1) s += "^" + std::to_string(n + 1);
      return s;
    };
    out += var_part("r", t.xpole, t.xfact);
    out += var_part("s", t.tpole, t.tfact);
  }
  return out;
}

SingleImage single_ara_x(const Expression& e) {
  SingleImage g;
  for (const auto& t : e.terms()) {
    if (t.tpow != 0 || std::abs(t.texp) > kExponentTol)
      throw NotSeparableError("single_ara_x: expression depends on T");
    g.terms.push_back({t.coeff, t.xpow, t.xexp});
  }
  return g;
}

SingleImage single_ara_t(const Expression& e) {
  SingleImage g;
  for (const auto& t : e.terms()) {
    if (t.xpow != 0 || std::abs(t.xexp) > kExponentTol)
      throw NotSeparableError("single_ara_t: expression depends on X");
    g.terms.push_back({t.coeff, t.tpow, t.texp});
  }
  return g;
}

Complex eval_single(const SingleImage& g, Complex v, int deriv) {
  Complex acc{};
  for (const auto& t : g.terms)
    acc += t.coeff * factorial(t.fact) * rational_part(v, t.pole, t.fact, deriv);
  return acc;
}

// --- Quadrature ---------------------------------------------------------

LaguerreRule laguerre_rule(int n, double alpha) {
  LaguerreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  double z = 0.0;
  for (int i = 0; i < n; ++i) {
    // Stroud-Secrest initial guesses, then Newton on L_n^{(alpha)}.
    if (i == 0)
      z = (1.0 + alpha) * (3.0 + 0.92 * alpha) / (1.0 + 2.4 * n + 1.8 * alpha);
    else if (i == 1)
      z += (15.0 + 6.25 * alpha) / (1.0 + 0.9 * alpha + 2.5 * n);
    else {
      const double ai = i - 1;
      z += ((1.0 + 2.55 * ai) / (1.9 * ai) + 1.26 * ai * alpha / (1.0 + 3.5 * ai)) *
           (z - rule.nodes[i - 2]) / (1.0 + 0.3 * alpha);
    }
    double p1 = 0.0, p2 = 0.0, pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      p1 = 1.0;
      p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0 + alpha - z) * p2 - (j + alpha) * p3) / (j + 1.0);
      }
      pp = (n * p1 - (n + alpha) * p2) / z;
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= 1e-14 * std::max(1.0, std::abs(z))) break;
    }
    rule.nodes[i] = z;
    rule.weights[i] = -std::exp(std::lgamma(alpha + n) - std::lgamma(double(n))) / (pp * n * p2);
  }
  return rule;
}

PhysicalField field_from_expression(const Expression& e, const FracParams& params) {
  params.validate();
  PhysicalField f;
  for (const auto& t : e.terms()) {
    f.growth_x = std::max(f.growth_x, t.xexp.real());
    f.growth_t = std::max(f.growth_t, t.texp.real());
  }
  f.value = [e, params](double x, double t) {
    auto [big_x, big_t] = to_stretched(x, t, params);
    return evaluate_complex(e, big_x, big_t);
  };
  return f;
}

Complex numeric_double_ara(const PhysicalField& h, Complex r, Complex s,
                           const FracParams& params, const QuadratureConfig& cfg) {
  params.validate();
  if (cfg.node_count < 8) throw std::invalid_argument("numeric_double_ara: node_count must be >= 8");
  if (!(cfg.abscissa_margin > 0.0))
    throw std::invalid_argument("numeric_double_ara: abscissa_margin must be positive");
  if (r.real() <= 0.0 || s.real() <= 0.0)
    throw AbscissaError("numeric_double_ara: Re(r) and Re(s) must be positive");
  if (r.real() < h.growth_x + cfg.abscissa_margin || s.real() < h.growth_t + cfg.abscissa_margin)
    throw AbscissaError("numeric_double_ara: (r, s) inside the convergence margin of the field");

  const LaguerreRule rule = laguerre_rule(cfg.node_count);
  const double rr = r.real(), sr = s.real();
  std::vector<double> xs(cfg.node_count), us(cfg.node_count);
  std::vector<double> ts(cfg.node_count), vs(cfg.node_count);
  for (int i = 0; i < cfg.node_count; ++i) {
    us[i] = rule.nodes[i] / rr;
    xs[i] = std::pow(params.p * us[i], 1.0 / params.p);
    vs[i] = rule.nodes[i] / sr;
    ts[i] = std::pow(params.q * vs[i], 1.0 / params.q);
  }
  Complex acc{};
  for (int i = 0; i < cfg.node_count; ++i) {
    for (int j = 0; j < cfg.node_count; ++j) {
      const Complex phase =
          std::exp(Complex{0.0, -(r.imag() * us[i] + s.imag() * vs[j])});
      acc += rule.weights[i] * rule.weights[j] * phase * h.value(xs[i], ts[j]);
    }
  }
  return r * s / (rr * sr) * acc;
}

// --- Operational-rule checks ---------------------------------------------
//
// The multiplication and mixed rules involve r/s-derivatives of general
// rational images, so they are certified on numeric sample panels.  The
// derivative rules stay inside a small canonical rational algebra
// (powers of the variable and pole factors), so cancellation is exact.

namespace {

// var^power when pole_order == 0, else (var - pole)^{-pole_order}.
struct Atom {
  int power = 0;
  int pole_order = 0;
  Complex pole{0.0, 0.0};
};

struct RationalTerm {
  Complex coeff{0.0, 0.0};
  Atom r, s;
};

using RationalImage = std::vector<RationalTerm>;

std::tuple<int, int, double, double> atom_key(const Atom& a) {
  return {a.pole_order, a.power, a.pole.real(), a.pole.imag()};
}

bool atom_equal(const Atom& a, const Atom& b) {
  return a.pole_order == b.pole_order && a.power == b.power &&
         std::abs(a.pole - b.pole) <= kExponentTol;
}

// Canonical atoms of v^a / (v - pole)^k.
std::vector<std::pair<Complex, Atom>> reduce_part(int a, int k, Complex pole) {
  std::vector<std::pair<Complex, Atom>> out;
  if (k == 0) {
    out.push_back({Complex{1.0, 0.0}, Atom{a, 0, {}}});
    return out;
  }
  for (int j = 0; j <= a; ++j) {
    if (a - j > 0 && std::abs(pole) == 0.0) continue;
    const Complex c1 = binom(a, j) * cpow_int(pole, a - j);
    const int e = j - k;
    if (e < 0) {
      out.push_back({c1, Atom{0, -e, pole}});
    } else {
      for (int i = 0; i <= e; ++i) {
        if (e - i > 0 && std::abs(pole) == 0.0) continue;
        out.push_back({c1 * binom(e, i) * cpow_int(-pole, e - i), Atom{i, 0, {}}});
      }
    }
  }
  return out;
}

std::vector<std::pair<Complex, Atom>> atom_times_var(const Atom& a) {
  if (a.pole_order == 0) return {{Complex{1.0, 0.0}, Atom{a.power + 1, 0, {}}}};
  return reduce_part(1, a.pole_order, a.pole);
}

RationalImage canonical(RationalImage terms) {
  std::sort(terms.begin(), terms.end(), [](const RationalTerm& a, const RationalTerm& b) {
    return std::make_pair(atom_key(a.r), atom_key(a.s)) < std::make_pair(atom_key(b.r), atom_key(b.s));
  });
  RationalImage merged;
  for (const auto& t : terms) {
    if (!merged.empty() && atom_equal(merged.back().r, t.r) && atom_equal(merged.back().s, t.s))
      merged.back().coeff += t.coeff;
    else
      merged.push_back(t);
  }
  return merged;
}

RationalImage embed(const ImageExpr& g) {
  RationalImage out;
  for (const auto& t : g.terms()) {
    const Complex base = t.coeff * factorial(t.xfact) * factorial(t.tfact);
    const auto pr = reduce_part(1, t.xfact + 1, t.xpole);
    const auto ps = reduce_part(1, t.tfact + 1, t.tpole);
    for (const auto& [cr, ar] : pr)
      for (const auto& [cs, as] : ps) out.push_back({base * cr * cs, ar, as});
  }
  return canonical(std::move(out));
}

RationalImage mul_r(const RationalImage& g) {
  RationalImage out;
  for (const auto& t : g)
    for (const auto& [c, a] : atom_times_var(t.r)) out.push_back({t.coeff * c, a, t.s});
  return canonical(std::move(out));
}

RationalImage mul_s(const RationalImage& g) {
  RationalImage out;
  for (const auto& t : g)
    for (const auto& [c, a] : atom_times_var(t.s)) out.push_back({t.coeff * c, t.r, a});
  return canonical(std::move(out));
}

RationalImage subtract(RationalImage a, const RationalImage& b) {
  for (const auto& t : b) a.push_back({-t.coeff, t.r, t.s});
  return canonical(std::move(a));
}

double max_coeff(const RationalImage& g) {
  double m = 0.0;
  for (const auto& t : g) m = std::max(m, std::abs(t.coeff));
  return m;
}

}  // namespace

std::vector<std::pair<Complex, Complex>> sample_panel(const Expression& e) {
  double mx = 0.0, mt = 0.0;
  for (const auto& t : e.terms()) {
    mx = std::max(mx, t.xexp.real());
    mt = std::max(mt, t.texp.real());
  }
  const double rb = mx + 1.3, sb = mt + 1.7;
  const double dr[3] = {0.0, 0.7, 1.9};
  const double ds[3] = {0.0, 0.9, 2.3};
  const int combos[6][2] = {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}, {2, 0}};
  std::vector<std::pair<Complex, Complex>> panel;
  panel.reserve(6);
  for (const auto& c : combos)
    panel.push_back({Complex{rb + dr[c[0]], 0.0}, Complex{sb + ds[c[1]], 0.0}});
  return panel;
}

double check_multiplication_rule(const Expression& e, MultiplicationRule which) {
  const ImageExpr g = double_ara(e);
  Expression lhs_expr;
  switch (which) {
    case MultiplicationRule::X:
      lhs_expr = multiply(x_power(1), e);
      break;
    case MultiplicationRule::T:
      lhs_expr = multiply(t_power(1), e);
      break;
    case MultiplicationRule::XX:
      lhs_expr = multiply(x_power(2), e);
      break;
    case MultiplicationRule::TT:
      lhs_expr = multiply(t_power(2), e);
      break;
    case MultiplicationRule::XT:
      lhs_expr = multiply(x_power(1), multiply(t_power(1), e));
      break;
  }
  const ImageExpr lhs = double_ara(lhs_expr);

  double worst = 0.0;
  for (const auto& [r, s] : sample_panel(lhs_expr)) {
    const Complex g0 = eval_image(g, r, s);
    Complex rhs{};
    switch (which) {
      case MultiplicationRule::X:
        rhs = -eval_image(g, r, s, 1, 0) + g0 / r;
        break;
      case MultiplicationRule::T:
        rhs = -eval_image(g, r, s, 0, 1) + g0 / s;
        break;
      case MultiplicationRule::XX:
        rhs = eval_image(g, r, s, 2, 0) - 2.0 / r * eval_image(g, r, s, 1, 0) + 2.0 / (r * r) * g0;
        break;
      case MultiplicationRule::TT:
        rhs = eval_image(g, r, s, 0, 2) - 2.0 / s * eval_image(g, r, s, 0, 1) + 2.0 / (s * s) * g0;
        break;
      case MultiplicationRule::XT:
        rhs = eval_image(g, r, s, 1, 1) - eval_image(g, r, s, 1, 0) / s -
              eval_image(g, r, s, 0, 1) / r + g0 / (r * s);
        break;
    }
    const Complex lv = eval_image(lhs, r, s);
    worst = std::max(worst, std::abs(lv - rhs) / std::max({1.0, std::abs(lv), std::abs(rhs)}));
  }
  return worst;
}

double check_derivative_rule(const Expression& e, DerivativeRule which) {
  const RationalImage g = embed(double_ara(e));
  RationalImage lhs, rhs;
  switch (which) {
    case DerivativeRule::DX: {
      lhs = embed(double_ara(differentiate(e, Axis::X)));
      const RationalImage bnd = embed(double_ara(substitute_x_zero(e)));
      rhs = subtract(mul_r(g), mul_r(bnd));
      break;
    }
    case DerivativeRule::DXX: {
      lhs = embed(double_ara(differentiate(differentiate(e, Axis::X), Axis::X)));
      const RationalImage bnd0 = embed(double_ara(substitute_x_zero(e)));
      const RationalImage bnd1 = embed(double_ara(substitute_x_zero(differentiate(e, Axis::X))));
      rhs = subtract(subtract(mul_r(mul_r(g)), mul_r(mul_r(bnd0))), mul_r(bnd1));
      break;
    }
    case DerivativeRule::DT: {
      lhs = embed(double_ara(differentiate(e, Axis::T)));
      const RationalImage bnd = embed(double_ara(substitute_t_zero(e)));
      rhs = subtract(mul_s(g), mul_s(bnd));
      break;
    }
    case DerivativeRule::DTT: {
      lhs = embed(double_ara(differentiate(differentiate(e, Axis::T), Axis::T)));
      const RationalImage bnd0 = embed(double_ara(substitute_t_zero(e)));
      const RationalImage bnd1 = embed(double_ara(substitute_t_zero(differentiate(e, Axis::T))));
      rhs = subtract(subtract(mul_s(mul_s(g)), mul_s(mul_s(bnd0))), mul_s(bnd1));
      break;
    }
  }
  const RationalImage diff = subtract(lhs, rhs);
  const double scale = std::max({1.0, max_coeff(lhs), max_coeff(rhs)});
  return max_coeff(diff) / scale;
}

double check_mixed_rule(const Expression& e, MixedRule which) {
  const ImageExpr g = double_ara(e);
  double worst = 0.0;
  if (which == MixedRule::XTimesDT) {
    const Expression lhs_expr = multiply(x_power(1), differentiate(e, Axis::T));
    const ImageExpr lhs = double_ara(lhs_expr);
    const SingleImage f0 = single_ara_x(substitute_t_zero(e));
    for (const auto& [r, s] : sample_panel(add(lhs_expr, e))) {
      const Complex rhs = -s * eval_image(g, r, s, 1, 0) + s / r * eval_image(g, r, s) +
                          s * eval_single(f0, r, 1) - s / r * eval_single(f0, r);
      const Complex lv = eval_image(lhs, r, s);
      worst = std::max(worst, std::abs(lv - rhs) / std::max({1.0, std::abs(lv), std::abs(rhs)}));
    }
  } else {
    const Expression lhs_expr = multiply(t_power(1), differentiate(e, Axis::X));
    const ImageExpr lhs = double_ara(lhs_expr);
    const SingleImage f0 = single_ara_t(substitute_x_zero(e));
    for (const auto& [r, s] : sample_panel(add(lhs_expr, e))) {
      const Complex rhs = -r * eval_image(g, r, s, 0, 1) + r / s * eval_image(g, r, s) +
                          r * eval_single(f0, s, 1) - r / s * eval_single(f0, s);
      const Complex lv = eval_image(lhs, r, s);
      worst = std::max(worst, std::abs(lv - rhs) / std::max({1.0, std::abs(lv), std::abs(rhs)}));
    }
  }
  return worst;
}

}  // namespace cdara
