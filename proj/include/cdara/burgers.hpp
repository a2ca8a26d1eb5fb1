#pragma once
// The decomposition solver for regular and singular (Bessel-operator) coupled
// Burgers systems in stretched coordinates:
//
//   dT u = dXX u           - lambda u dX u - alpha dX(u v) + k      (regular)
//   dT u = (1/X) dX(X dX u) - lambda u dX u - alpha dX(u v) + k     (singular)
//
// Components follow from u_0 = ic + int_T k and the recursion
// u_{n+1} = int_T( L u_n - lambda A_n - alpha dX C_n ), where int_T realizes
// the (1/s)-scaled image inversion through the exact time-integration
// identity of the transform.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "cdara/adomian.hpp"
#include "cdara/expr.hpp"

namespace cdara {

// The singular recursion produced a term the Bessel operator cannot divide by
// X; the solution leaves the expression basis.
struct SingularStepError : std::runtime_error {
  SingularStepError(const std::string& what, MonomialTerm term)
      : std::runtime_error(what), offending(term) {}
  MonomialTerm offending;
};

enum class Geometry { Regular, SingularBessel };

struct ProblemSpec {
  double lambda = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  Geometry geometry = Geometry::Regular;
  Expression source_k, source_l;  // in (X, T)
  Expression ic_k1, ic_l1;        // in X only
  void validate() const;          // throws std::invalid_argument
};

struct SeriesSolution {
  ComponentList u_components, v_components;
  std::optional<std::size_t> terminated_at;  // first n with u_n = v_n = 0
  ProblemSpec spec;
};

// u_0 = ic_k1 + int_T source_k, v_0 = ic_l1 + int_T source_l.
std::pair<Expression, Expression> init_components(const ProblemSpec& spec);

std::pair<Expression, Expression> step_regular(const ProblemSpec& spec, const ComponentList& u,
                                               const ComponentList& v, std::size_t n);

std::pair<Expression, Expression> step_singular(const ProblemSpec& spec, const ComponentList& u,
                                                const ComponentList& v, std::size_t n);

// (1/X) dX (X dX w); exact in the basis, the outer X-derivative always
// supplies the X factor the division needs.
Expression bessel_operator(const Expression& w);

// Runs init + steps through index max_order.  Termination is declared once
// two consecutive steps produce identically zero components (a single zero
// step does not force the tail to vanish while lower components feed the
// cross terms); remaining slots are zero-filled.
SeriesSolution solve(const ProblemSpec& spec, std::size_t max_order);

std::pair<Expression, Expression> partial_sum(const SeriesSolution& sol, std::size_t order);

// Exact symbolic PDE residual of a candidate pair (zero for exact solutions).
std::pair<Expression, Expression> pde_residual(const ProblemSpec& spec, const Expression& u,
                                               const Expression& v);

namespace presets {
ProblemSpec example1();  // regular, zero sources, sin(X) data
ProblemSpec example2();  // singular Bessel, X^2 e^T - 4 e^T source, X^2 data
}  // namespace presets

}  // namespace cdara
