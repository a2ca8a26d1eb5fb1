#pragma once
// Adomian polynomials for the three quadratic nonlinearities of the coupled
// Burgers system: u u_X, v v_X and u v, in Cauchy-convolution form.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "cdara/expr.hpp"

namespace cdara {

struct MissingComponentError : std::runtime_error {
  explicit MissingComponentError(const std::string& what) : std::runtime_error(what) {}
};

// Ordered series components u_0 .. u_n.
using ComponentList = std::vector<Expression>;

// A_n = sum_{k=0}^{n} u_k * d/dX u_{n-k}
Expression adomian_a(const ComponentList& u, std::size_t n);

// B_n = sum_{k=0}^{n} v_k * d/dX v_{n-k}
Expression adomian_b(const ComponentList& v, std::size_t n);

// C_n = sum_{k=0}^{n} u_k * v_{n-k}
Expression adomian_c(const ComponentList& u, const ComponentList& v, std::size_t n);

}  // namespace cdara
