#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cdara/conformable.hpp"

using namespace cdara;

TEST_CASE("stretched-coordinate map") {
  {
    auto [X, T] = to_stretched(1.0, 1.0, {1.0, 1.0});
    CHECK(X == 1.0);
    CHECK(T == 1.0);
  }
  {
    auto [X, T] = to_stretched(1.0, 1.0, {0.5, 0.5});
    CHECK(X == doctest::Approx(2.0));
    CHECK(T == doctest::Approx(2.0));
  }
  {
    auto [X, T] = to_stretched(2.0, 0.0, {0.5, 1.0});
    CHECK(X == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(T == 0.0);
  }
  CHECK_THROWS_AS(to_stretched(-1.0, 0.0, {1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(to_stretched(1.0, -0.1, {1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(to_stretched(1.0, 1.0, {1.5, 1.0}), DomainError);
  CHECK_THROWS_AS(to_stretched(1.0, 1.0, {0.0, 1.0}), DomainError);
}

TEST_CASE("inverse map round-trips") {
  {
    auto [x, t] = from_stretched(1.0, 1.0, {1.0, 1.0});
    CHECK(x == 1.0);
    CHECK(t == 1.0);
  }
  {
    const FracParams params{0.8, 0.9};
    auto [X, T] = to_stretched(1.7, 0.4, params);
    auto [x, t] = from_stretched(X, T, params);
    CHECK(x == doctest::Approx(1.7).epsilon(1e-12));
    CHECK(t == doctest::Approx(0.4).epsilon(1e-12));
  }
  {
    auto [x, t] = from_stretched(2.0, 2.0, {0.5, 0.5});
    CHECK(x == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(t == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(from_stretched(-1.0, 0.0, {1.0, 1.0}), DomainError);
}

TEST_CASE("map is strictly increasing") {
  const FracParams params{0.7, 0.6};
  double prev_x = -1.0, prev_t = -1.0;
  for (double v = 0.1; v < 3.0; v += 0.3) {
    auto [X, T] = to_stretched(v, v, params);
    CHECK(X > prev_x);
    CHECK(T > prev_t);
    prev_x = X;
    prev_t = T;
  }
}

namespace {

// h(x, t) = (x^p/p)^2 for a given order, as a physical field.
Field2D squared_stretch(double p) {
  return [p](double x, double) {
    const double X = std::pow(x, p) / p;
    return X * X;
  };
}

}  // namespace

TEST_CASE("central-difference conformable derivative") {
  // X^2 differentiates to 2X at any order.
  CHECK(conformable_dx_numeric(squared_stretch(0.5), 1.0, 0.0, 0.5) ==
        doctest::Approx(4.0).epsilon(1e-8));

  // Order 1 is the ordinary derivative.
  const Field2D ident = [](double x, double) { return x; };
  CHECK(conformable_dx_numeric(ident, 2.0, 0.0, 1.0) == doctest::Approx(1.0).epsilon(1e-10));

  // sin X differentiates to cos X.
  const double p = 0.7;
  const Field2D sine = [p](double x, double) { return std::sin(std::pow(x, p) / p); };
  CHECK(conformable_dx_numeric(sine, 1.0, 0.0, p) ==
        doctest::Approx(std::cos(1.0 / 0.7)).epsilon(1e-8));

  CHECK_THROWS_AS(conformable_dx_numeric(ident, 0.0, 0.0, 0.5), DomainError);
}

TEST_CASE("limit-quotient derivative") {
  for (double p : {0.4, 0.7, 1.0}) {
    const Field2D stretch = [p](double x, double) { return std::pow(x, p) / p; };
    CHECK(conformable_dx_limit(stretch, 1.3, 0.0, p) == doctest::Approx(1.0).epsilon(1e-5));
  }
  const Field2D square = [](double x, double) { return x * x; };
  CHECK(conformable_dx_limit(square, 1.0, 0.0, 1.0) == doctest::Approx(2.0).epsilon(1e-5));
  CHECK_THROWS_AS(conformable_dx_limit(square, 0.0, 0.0, 0.5), DomainError);
}

TEST_CASE("limit quotient converges to the central-difference form at first order") {
  const double p = 0.7;
  const Field2D sine = [p](double x, double) { return std::sin(std::pow(x, p) / p); };
  const double reference = conformable_dx_numeric(sine, 1.2, 0.0, p);
  const double d1 = std::abs(conformable_dx_limit(sine, 1.2, 0.0, p, 1e-3) - reference);
  const double d2 = std::abs(conformable_dx_limit(sine, 1.2, 0.0, p, 5e-4) - reference);
  // Halving delta halves the gap, within 20%.
  CHECK(d2 == doctest::Approx(0.5 * d1).epsilon(0.2));
}

TEST_CASE("order one reduces to the plain central difference") {
  const Field2D f = [](double x, double t) { return std::exp(-t) * std::sin(x); };
  const double step = 1e-5;
  for (double x : {0.4, 1.0, 2.3}) {
    const double plain = (f(x + step, 0.5) - f(x - step, 0.5)) / (2.0 * step);
    CHECK(conformable_dx_numeric(f, x, 0.5, 1.0, step) == plain);
  }
}

TEST_CASE("time derivative and second derivative oracles") {
  const double q = 0.8;
  const Field2D g = [q](double, double t) { return std::exp(-std::pow(t, q) / q); };
  const double T = std::pow(0.5, q) / q;
  CHECK(conformable_dt_numeric(g, 1.0, 0.5, q) == doctest::Approx(-std::exp(-T)).epsilon(1e-7));

  // Second conformable derivative of X^2 is the constant 2.
  for (double p : {0.6, 1.0})
    CHECK(conformable_dxx_numeric(squared_stretch(p), 1.1, 0.0, p) ==
          doctest::Approx(2.0).epsilon(1e-6));
}
