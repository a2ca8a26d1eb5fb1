#include "cdara/burgers.hpp"

#include <cmath>

namespace cdara {

void ProblemSpec::validate() const {
  if (!std::isfinite(lambda) || !std::isfinite(alpha) || !std::isfinite(beta))
    throw std::invalid_argument("problem spec: non-finite parameter");
  for (const Expression* ic : {&ic_k1, &ic_l1})
    for (const auto& t : ic->terms())
      if (t.tpow != 0 || std::abs(t.texp) > kExponentTol)
        throw std::invalid_argument("problem spec: initial condition depends on T");
}

std::pair<Expression, Expression> init_components(const ProblemSpec& spec) {
  spec.validate();
  return {add(spec.ic_k1, integrate_t(spec.source_k)), add(spec.ic_l1, integrate_t(spec.source_l))};
}

Expression bessel_operator(const Expression& w) {
  try {
    return divide_by_x(differentiate(multiply(x_power(1), differentiate(w, Axis::X)), Axis::X));
  } catch (const NonExactDivisionError& err) {
    // Report the term that leaves the basis.
    Expression inner = differentiate(multiply(x_power(1), differentiate(w, Axis::X)), Axis::X);
    for (const auto& t : inner.terms())
      if (t.xpow == 0) throw SingularStepError(err.what(), t);
    throw;
  }
}

namespace {

std::pair<Expression, Expression> step_common(const ProblemSpec& spec, const ComponentList& u,
                                              const ComponentList& v, std::size_t n,
                                              bool singular) {
  if (u.size() < n + 1 || v.size() < n + 1)
    throw MissingComponentError("step: components through index " + std::to_string(n) + " required");
  const Expression a_n = adomian_a(u, n);
  const Expression b_n = adomian_b(v, n);
  const Expression dx_c_n = differentiate(adomian_c(u, v, n), Axis::X);

  const Expression lin_u =
      singular ? bessel_operator(u[n]) : differentiate(differentiate(u[n], Axis::X), Axis::X);
  const Expression lin_v =
      singular ? bessel_operator(v[n]) : differentiate(differentiate(v[n], Axis::X), Axis::X);

  Expression du = add(lin_u, add(scale(a_n, -spec.lambda), scale(dx_c_n, -spec.alpha)));
  Expression dv = add(lin_v, add(scale(b_n, -spec.lambda), scale(dx_c_n, -spec.beta)));
  return {integrate_t(du), integrate_t(dv)};
}

}  // namespace

std::pair<Expression, Expression> step_regular(const ProblemSpec& spec, const ComponentList& u,
                                               const ComponentList& v, std::size_t n) {
  return step_common(spec, u, v, n, false);
}

std::pair<Expression, Expression> step_singular(const ProblemSpec& spec, const ComponentList& u,
                                                const ComponentList& v, std::size_t n) {
  return step_common(spec, u, v, n, true);
}

SeriesSolution solve(const ProblemSpec& spec, std::size_t max_order) {
  SeriesSolution sol;
  sol.spec = spec;
  auto [u0, v0] = init_components(spec);
  sol.u_components = {std::move(u0)};
  sol.v_components = {std::move(v0)};

  const bool singular = spec.geometry == Geometry::SingularBessel;
  int consecutive_zero = 0;
  for (std::size_t n = 0; n < max_order; ++n) {
    if (sol.terminated_at) {
      sol.u_components.emplace_back();
      sol.v_components.emplace_back();
      continue;
    }
    auto [un, vn] = singular ? step_singular(spec, sol.u_components, sol.v_components, n)
                             : step_regular(spec, sol.u_components, sol.v_components, n);
    const bool zero_step = un.is_zero() && vn.is_zero();
    sol.u_components.push_back(std::move(un));
    sol.v_components.push_back(std::move(vn));
    if (zero_step) {
      if (++consecutive_zero == 2) sol.terminated_at = n;  // first of the two zero indices
    } else {
      consecutive_zero = 0;
    }
  }
  return sol;
}

std::pair<Expression, Expression> partial_sum(const SeriesSolution& sol, std::size_t order) {
  if (order >= sol.u_components.size())
    throw MissingComponentError("partial_sum: order " + std::to_string(order) +
                                " beyond stored components");
  Expression u, v;
  for (std::size_t n = 0; n <= order; ++n) {
    u = add(u, sol.u_components[n]);
    v = add(v, sol.v_components[n]);
  }
  return {u, v};
}

std::pair<Expression, Expression> pde_residual(const ProblemSpec& spec, const Expression& u,
                                               const Expression& v) {
  const bool singular = spec.geometry == Geometry::SingularBessel;
  auto residual = [&](const Expression& w, const Expression& other, double coupling,
                      const Expression& src) {
    const Expression lin =
        singular ? bessel_operator(w) : differentiate(differentiate(w, Axis::X), Axis::X);
    Expression r = differentiate(w, Axis::T) - lin;
    r = add(r, scale(multiply(w, differentiate(w, Axis::X)), spec.lambda));
    r = add(r, scale(differentiate(multiply(w, other), Axis::X), coupling));
    return r - src;
  };
  return {residual(u, v, spec.alpha, spec.source_k), residual(v, u, spec.beta, spec.source_l)};
}

namespace presets {

ProblemSpec example1() {
  ProblemSpec spec;
  spec.lambda = -2.0;
  spec.alpha = 1.0;
  spec.beta = 1.0;
  spec.geometry = Geometry::Regular;
  spec.ic_k1 = sin_x(1.0);
  spec.ic_l1 = sin_x(1.0);
  return spec;
}

ProblemSpec example2() {
  ProblemSpec spec;
  spec.lambda = -2.0;
  spec.alpha = 1.0;
  spec.beta = 1.0;
  spec.geometry = Geometry::SingularBessel;
  const Expression source = multiply(x_power(2), exp_xt(0.0, 1.0)) - 4.0 * exp_xt(0.0, 1.0);
  spec.source_k = source;
  spec.source_l = source;
  spec.ic_k1 = x_power(2);
  spec.ic_l1 = x_power(2);
  return spec;
}

}  // namespace presets

}  // namespace cdara
