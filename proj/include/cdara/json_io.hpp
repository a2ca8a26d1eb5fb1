#pragma once
// JSON wire formats.
//
// Expression: array of terms
//   {"coeff": [re, im], "xpow": n, "tpow": m, "xexp": [re, im], "texp": [re, im]}
//
// ProblemSpec:
//   {"lambda": .., "alpha": .., "beta": .., "geometry": "regular"|"singular_bessel",
//    "source_k": <expr>, "source_l": <expr>, "ic_k1": <expr>, "ic_l1": <expr>}

#include <string>

#include "cdara/burgers.hpp"
#include "cdara/expr.hpp"

namespace cdara {

std::string expression_to_json(const Expression& e);
Expression expression_from_json(const std::string& text);

std::string problem_to_json(const ProblemSpec& spec);
ProblemSpec problem_from_json(const std::string& text);

ProblemSpec load_problem_file(const std::string& path);

}  // namespace cdara
