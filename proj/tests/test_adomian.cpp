#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cdara/adomian.hpp"
#include "test_support.hpp"

using namespace cdara;
using cdara::testing::random_real_expression;

namespace {

// Convolution written out long-hand, for cross-checking the implementation.
Expression direct_a(const ComponentList& u, std::size_t n) {
  Expression acc;
  for (std::size_t k = 0; k <= n; ++k)
    acc = add(acc, multiply(u[k], differentiate(u[n - k], Axis::X)));
  return acc;
}

}  // namespace

TEST_CASE("lowest-order polynomials match the listed expansions") {
  const ComponentList u = {sin_x(1.0), multiply(t_power(1), sin_x(1.0)),
                           multiply(t_power(2), cos_x(1.0)), multiply(x_power(1), t_power(3))};
  const ComponentList v = {cos_x(1.0), multiply(t_power(1), cos_x(2.0)),
                           multiply(x_power(2), t_power(1)), exp_xt(1.0, 1.0), x_power(1)};

  CHECK(identical(adomian_a(u, 0), multiply(u[0], differentiate(u[0], Axis::X))));
  CHECK(identical(adomian_a(u, 2),
                  add(multiply(u[0], differentiate(u[2], Axis::X)),
                      add(multiply(u[1], differentiate(u[1], Axis::X)),
                          multiply(u[2], differentiate(u[0], Axis::X))))));

  CHECK(identical(adomian_b(v, 1), add(multiply(v[0], differentiate(v[1], Axis::X)),
                                       multiply(v[1], differentiate(v[0], Axis::X)))));
  CHECK(identical(adomian_b(v, 3), direct_a(v, 3)));
  CHECK(adomian_b({Expression{}}, 0).is_zero());

  CHECK(identical(adomian_c(u, v, 0), multiply(u[0], v[0])));
  CHECK(identical(adomian_c(u, v, 2), add(multiply(u[0], v[2]),
                                          add(multiply(u[1], v[1]), multiply(u[2], v[0])))));
}

TEST_CASE("single-component nonlinearity") {
  const ComponentList u = {sin_x(1.0)};
  const Expression a0 = adomian_a(u, 0);
  // sin X cos X = sin(2X)/2
  for (double x : {0.3, 0.7, 1.1})
    CHECK(std::abs(evaluate(a0, x, 0.0) - 0.5 * std::sin(2.0 * x)) < 1e-12);
}

TEST_CASE("missing components are reported") {
  const ComponentList u = {sin_x(1.0), cos_x(1.0)};
  CHECK_THROWS_AS(adomian_a(u, 2), MissingComponentError);
  CHECK_THROWS_AS(adomian_c(u, {sin_x(1.0)}, 1), MissingComponentError);
}

TEST_CASE("symmetric component lists collapse") {
  std::mt19937 rng(4321);
  ComponentList u;
  for (int i = 0; i < 4; ++i) u.push_back(random_real_expression(rng));

  for (std::size_t n = 0; n < 4; ++n) {
    CHECK(identical(adomian_a(u, n), adomian_b(u, n)));
    Expression c_direct;
    for (std::size_t k = 0; k <= n; ++k) c_direct = add(c_direct, multiply(u[k], u[n - k]));
    CHECK(identical(adomian_c(u, u, n), c_direct));
  }
  // u = v makes C_1 twice the cross product.
  CHECK(identical(adomian_c(u, u, 1), 2.0 * multiply(u[0], u[1])));
}

TEST_CASE("partial sums of the polynomials rebuild the truncated product") {
  std::mt19937 rng(8765);
  ComponentList u;
  for (int i = 0; i < 4; ++i) u.push_back(random_real_expression(rng, 2, 2));
  const std::size_t N = 3;

  // sum_{n<=N} A_n == sum_{j+k<=N} u_j dX u_k, both assembled symbolically.
  Expression lhs;
  for (std::size_t n = 0; n <= N; ++n) lhs = add(lhs, adomian_a(u, n));
  Expression rhs;
  for (std::size_t j = 0; j <= N; ++j)
    for (std::size_t k = 0; j + k <= N; ++k)
      rhs = add(rhs, multiply(u[j], differentiate(u[k], Axis::X)));
  CHECK(identical(lhs, rhs));
}

TEST_CASE("each polynomial is linear in the component it indexes") {
  std::mt19937 rng(1111);
  ComponentList u;
  for (int i = 0; i < 3; ++i) u.push_back(random_real_expression(rng, 2, 2));

  // Doubling u_j (exact in floating point) scales exactly the addends of A_n
  // that touch index j.  A_0 is quadratic in u_0; every addend of A_1 holds
  // index 1 once; in A_2 only the outer addends hold index 2.
  {
    ComponentList scaled = u;
    scaled[0] = 2.0 * u[0];
    CHECK(identical(adomian_a(scaled, 0), 4.0 * adomian_a(u, 0)));
  }
  {
    ComponentList scaled = u;
    scaled[1] = 2.0 * u[1];
    CHECK(identical(adomian_a(scaled, 1), 2.0 * adomian_a(u, 1)));
  }
  {
    ComponentList scaled = u;
    scaled[2] = 2.0 * u[2];
    const Expression extra = add(multiply(u[0], differentiate(u[2], Axis::X)),
                                 multiply(u[2], differentiate(u[0], Axis::X)));
    CHECK(identical(adomian_a(scaled, 2) - adomian_a(u, 2), extra));
  }
}
