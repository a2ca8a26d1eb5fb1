#include "cdara/expr.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <tuple>

namespace cdara {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

std::tuple<int, int, double, double, double, double> key_of(const MonomialTerm& t) {
  return {t.xpow, t.tpow, t.xexp.real(), t.xexp.imag(), t.texp.real(), t.texp.imag()};
}

bool key_less(const MonomialTerm& a, const MonomialTerm& b) { return key_of(a) < key_of(b); }

bool key_equal(const MonomialTerm& a, const MonomialTerm& b) {
  return a.xpow == b.xpow && a.tpow == b.tpow &&
         std::abs(a.xexp.real() - b.xexp.real()) <= kExponentTol &&
         std::abs(a.xexp.imag() - b.xexp.imag()) <= kExponentTol &&
         std::abs(a.texp.real() - b.texp.real()) <= kExponentTol &&
         std::abs(a.texp.imag() - b.texp.imag()) <= kExponentTol;
}

double ipow(double base, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= base;
  return r;
}

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
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

Expression::Expression(std::vector<MonomialTerm> raw) {
  for (const auto& t : raw) {
    if (t.xpow < 0 || t.tpow < 0) throw InvalidTermError("monomial term with negative power");
    if (!finite(t.coeff) || !finite(t.xexp) || !finite(t.texp))
      throw InvalidTermError("monomial term with non-finite coefficient or exponent");
  }
  std::sort(raw.begin(), raw.end(), key_less);

  std::vector<MonomialTerm> merged;
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

Expression add(const Expression& a, const Expression& b) {
  std::vector<MonomialTerm> all = a.terms();
  all.insert(all.end(), b.terms().begin(), b.terms().end());
  return Expression(std::move(all));
}

Expression multiply(const Expression& a, const Expression& b) {
  std::vector<MonomialTerm> out;
  out.reserve(a.size() * b.size());
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms())
      out.push_back({ta.coeff * tb.coeff, ta.xpow + tb.xpow, ta.tpow + tb.tpow,
                     ta.xexp + tb.xexp, ta.texp + tb.texp});
  return Expression(std::move(out));
}

Expression scale(const Expression& e, Complex factor) {
  std::vector<MonomialTerm> out = e.terms();
  for (auto& t : out) t.coeff *= factor;
  return Expression(std::move(out));
}

Expression differentiate(const Expression& e, Axis axis) {
  std::vector<MonomialTerm> out;
  for (const auto& t : e.terms()) {
    if (axis == Axis::X) {
      if (t.xpow > 0) out.push_back({t.coeff * double(t.xpow), t.xpow - 1, t.tpow, t.xexp, t.texp});
      if (std::abs(t.xexp) > 0.0) out.push_back({t.coeff * t.xexp, t.xpow, t.tpow, t.xexp, t.texp});
    } else {
      if (t.tpow > 0) out.push_back({t.coeff * double(t.tpow), t.xpow, t.tpow - 1, t.xexp, t.texp});
      if (std::abs(t.texp) > 0.0) out.push_back({t.coeff * t.texp, t.xpow, t.tpow, t.xexp, t.texp});
    }
  }
  return Expression(std::move(out));
}

Expression integrate_t(const Expression& e) {
  std::vector<MonomialTerm> out;
  for (const auto& t : e.terms()) {
    const int m = t.tpow;
    if (std::abs(t.texp) <= kExponentTol) {
      out.push_back({t.coeff / double(m + 1), t.xpow, m + 1, t.xexp, t.texp});
      continue;
    }
    // Repeated integration by parts: antiderivative e^{nu T} P(T) with
    // a_{m-j} = (-1)^j m! / ((m-j)! nu^{j+1}), minus its value at T = 0.
    const Complex nu = t.texp;
    Complex a0{};
    for (int j = 0; j <= m; ++j) {
      Complex aj = (j % 2 ? -1.0 : 1.0) * factorial(m) / (factorial(m - j) * std::pow(nu, double(j + 1)));
      out.push_back({t.coeff * aj, t.xpow, m - j, t.xexp, nu});
      if (m - j == 0) a0 = aj;
    }
    out.push_back({-t.coeff * a0, t.xpow, 0, t.xexp, Complex{0.0, 0.0}});
  }
  return Expression(std::move(out));
}

Expression divide_by_x(const Expression& e) {
  std::vector<MonomialTerm> out;
  out.reserve(e.size());
  for (const auto& t : e.terms()) {
    if (t.xpow == 0)
      throw NonExactDivisionError("divide_by_x: term without X factor (coeff " +
                                  format_complex(t.coeff) + ")");
    MonomialTerm r = t;
    --r.xpow;
    out.push_back(r);
  }
  return Expression(std::move(out));
}

Expression substitute_x_zero(const Expression& e) {
  std::vector<MonomialTerm> out;
  for (const auto& t : e.terms()) {
    if (t.xpow > 0) continue;
    out.push_back({t.coeff, 0, t.tpow, Complex{0.0, 0.0}, t.texp});
  }
  return Expression(std::move(out));
}

Expression substitute_t_zero(const Expression& e) {
  std::vector<MonomialTerm> out;
  for (const auto& t : e.terms()) {
    if (t.tpow > 0) continue;
    out.push_back({t.coeff, t.xpow, 0, t.xexp, Complex{0.0, 0.0}});
  }
  return Expression(std::move(out));
}

Expression truncate_t_order(const Expression& e, int order) {
  std::vector<MonomialTerm> out;
  for (const auto& t : e.terms()) {
    if (std::abs(t.texp) <= kExponentTol) {
      if (t.tpow <= order) out.push_back(t);
      continue;
    }
    Complex nu_pow{1.0, 0.0};
    for (int j = 0; t.tpow + j <= order; ++j) {
      out.push_back({t.coeff * nu_pow / factorial(j), t.xpow, t.tpow + j, t.xexp, Complex{0.0, 0.0}});
      nu_pow *= t.texp;
    }
  }
  return Expression(std::move(out));
}

Complex evaluate_complex(const Expression& e, double x_val, double t_val) {
  Complex acc{};
  for (const auto& t : e.terms())
    acc += t.coeff * ipow(x_val, t.xpow) * ipow(t_val, t.tpow) *
           std::exp(t.xexp * x_val + t.texp * t_val);
  return acc;
}

double evaluate(const Expression& e, double x_val, double t_val) {
  Complex acc{};
  double scale_mag = 0.0;
  for (const auto& t : e.terms()) {
    Complex v = t.coeff * ipow(x_val, t.xpow) * ipow(t_val, t.tpow) *
                std::exp(t.xexp * x_val + t.texp * t_val);
    acc += v;
    scale_mag += std::abs(v);
  }
  const double tol = 1e-10 * std::max(1.0, scale_mag);
  if (std::abs(acc.imag()) > tol)
    throw NotRealError("evaluate: imaginary residue " + format_real(acc.imag()) +
                       " above tolerance; expression is not conjugate-paired");
  return acc.real();
}

bool is_real(const Expression& e) {
  const auto& ts = e.terms();
  const double tol = 1e-10 * std::max(1.0, max_abs_coeff(e));
  for (const auto& t : ts) {
    const bool real_key = std::abs(t.xexp.imag()) <= kExponentTol && std::abs(t.texp.imag()) <= kExponentTol;
    if (real_key) {
      if (std::abs(t.coeff.imag()) > tol) return false;
      continue;
    }
    bool paired = false;
    for (const auto& u : ts) {
      if (u.xpow != t.xpow || u.tpow != t.tpow) continue;
      if (std::abs(u.xexp - std::conj(t.xexp)) > kExponentTol) continue;
      if (std::abs(u.texp - std::conj(t.texp)) > kExponentTol) continue;
      if (std::abs(u.coeff - std::conj(t.coeff)) <= tol) paired = true;
      break;
    }
    if (!paired) return false;
  }
  return true;
}

Expression constant(double c) { return Expression({{Complex{c, 0.0}, 0, 0, {}, {}}}); }

Expression x_power(int n) { return Expression({{Complex{1.0, 0.0}, n, 0, {}, {}}}); }

Expression t_power(int m) { return Expression({{Complex{1.0, 0.0}, 0, m, {}, {}}}); }

Expression exp_xt(double lambda, double beta) {
  return Expression({{Complex{1.0, 0.0}, 0, 0, Complex{lambda, 0.0}, Complex{beta, 0.0}}});
}

Expression sin_x(double lambda) {
  return Expression({{Complex{0.0, -0.5}, 0, 0, Complex{0.0, lambda}, {}},
                     {Complex{0.0, 0.5}, 0, 0, Complex{0.0, -lambda}, {}}});
}

Expression cos_x(double lambda) {
  return Expression({{Complex{0.5, 0.0}, 0, 0, Complex{0.0, lambda}, {}},
                     {Complex{0.5, 0.0}, 0, 0, Complex{0.0, -lambda}, {}}});
}

Expression sin_t(double beta) {
  return Expression({{Complex{0.0, -0.5}, 0, 0, {}, Complex{0.0, beta}},
                     {Complex{0.0, 0.5}, 0, 0, {}, Complex{0.0, -beta}}});
}

Expression cos_t(double beta) {
  return Expression({{Complex{0.5, 0.0}, 0, 0, {}, Complex{0.0, beta}},
                     {Complex{0.5, 0.0}, 0, 0, {}, Complex{0.0, -beta}}});
}

bool identical(const Expression& a, const Expression& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& ta = a.terms()[i];
    const auto& tb = b.terms()[i];
    if (ta.xpow != tb.xpow || ta.tpow != tb.tpow) return false;
    if (ta.xexp != tb.xexp || ta.texp != tb.texp) return false;
    if (ta.coeff != tb.coeff) return false;
  }
  return true;
}

double max_abs_coeff(const Expression& e) {
  double m = 0.0;
  for (const auto& t : e.terms()) m = std::max(m, std::abs(t.coeff));
  return m;
}

namespace {

void append_power_factors(std::string& s, const MonomialTerm& t) {
  if (t.xpow == 1) s += " X";
  if (t.xpow > 1) s += " X^" + std::to_string(t.xpow);
  if (t.tpow == 1) s += " T";
  if (t.tpow > 1) s += " T^" + std::to_string(t.tpow);
}

std::string exp_factor(const char* var, double rate) {
  if (rate == 0.0) return "";
  std::string s = " e^{";
  if (rate == -1.0)
    s += "-";
  else if (rate != 1.0)
    s += format_real(rate) + " ";
  s += var;
  s += "}";
  return s;
}

std::string phase_string(double b, double d) {
  std::string s;
  if (b != 0.0) s += (b == 1.0 ? "X" : format_real(b) + " X");
  if (d != 0.0) {
    if (!s.empty()) s += d > 0 ? " + " : " - ";
    else if (d < 0) s += "-";
    double ad = std::abs(d);
    s += (ad == 1.0 ? "T" : format_real(ad) + " T");
  }
  return s;
}

}  // namespace

std::string to_string(const Expression& e) {
  if (e.is_zero()) return "0";
  const auto& ts = e.terms();
  std::vector<bool> used(ts.size(), false);
  std::string out;
  auto emit = [&out](const std::string& piece, bool negative) {
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += piece;
  };

  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (used[i]) continue;
    const auto& t = ts[i];
    const bool complex_key = std::abs(t.xexp.imag()) > kExponentTol || std::abs(t.texp.imag()) > kExponentTol;

    if (complex_key) {
      // Look for the conjugate partner; emit the pair in trig form.
      std::size_t j = ts.size();
      for (std::size_t k = i + 1; k < ts.size(); ++k) {
        if (used[k] || ts[k].xpow != t.xpow || ts[k].tpow != t.tpow) continue;
        if (std::abs(ts[k].xexp - std::conj(t.xexp)) > kExponentTol) continue;
        if (std::abs(ts[k].texp - std::conj(t.texp)) > kExponentTol) continue;
        if (std::abs(ts[k].coeff - std::conj(t.coeff)) > 1e-9 * std::max(1.0, std::abs(t.coeff))) continue;
        j = k;
        break;
      }
      if (j < ts.size()) {
        used[i] = used[j] = true;
        // Pick the representative with positive phase.
        const MonomialTerm& rep = (t.xexp.imag() > 0 || (t.xexp.imag() == 0 && t.texp.imag() > 0)) ? t : ts[j];
        const double b = rep.xexp.imag(), d = rep.texp.imag();
        const double alpha = 2.0 * rep.coeff.real(), beta = -2.0 * rep.coeff.imag();
        std::string phase = phase_string(b, d);
        std::string factors;
        append_power_factors(factors, rep);
        factors += exp_factor("X", rep.xexp.real());
        factors += exp_factor("T", rep.texp.real());

        std::string piece;
        auto trig_piece = [&](double c, const char* fn) {
          std::string p;
          if (std::abs(c) != 1.0) p += format_real(std::abs(c)) + " ";
          p += fn;
          p += "(" + phase + ")";
          return p;
        };
        if (alpha != 0.0 && beta != 0.0) {
          piece = "[" + format_real(alpha) + " cos(" + phase + ") " + (beta > 0 ? "+ " : "- ") +
                  format_real(std::abs(beta)) + " sin(" + phase + ")]";
          piece += factors;
          emit(piece, false);
        } else if (alpha != 0.0) {
          piece = trig_piece(alpha, "cos") + factors;
          emit(piece, alpha < 0.0);
        } else {
          piece = trig_piece(beta, "sin") + factors;
          emit(piece, beta < 0.0);
        }
        continue;
      }
      // No partner: print the raw complex term.
      used[i] = true;
      std::string piece = format_complex(t.coeff);
      append_power_factors(piece, t);
      if (std::abs(t.xexp) > 0.0) piece += " e^{" + format_complex(t.xexp) + " X}";
      if (std::abs(t.texp) > 0.0) piece += " e^{" + format_complex(t.texp) + " T}";
      emit(piece, false);
      continue;
    }

    used[i] = true;
    const double c = t.coeff.real();
    std::string piece;
    const bool bare = t.xpow == 0 && t.tpow == 0 && t.xexp.real() == 0.0 && t.texp.real() == 0.0;
    if (std::abs(c) != 1.0 || bare) piece += format_real(std::abs(c));
    append_power_factors(piece, t);
    piece += exp_factor("X", t.xexp.real());
    piece += exp_factor("T", t.texp.real());
    if (!piece.empty() && piece[0] == ' ') piece.erase(0, 1);
    emit(piece, c < 0.0);
  }
  return out;
}

}  // namespace cdara
