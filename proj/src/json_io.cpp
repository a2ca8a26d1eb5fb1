#include "cdara/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cdara {

namespace {

using nlohmann::json;

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

json expr_to_json_value(const Expression& e) {
  json arr = json::array();
  for (const auto& t : e.terms())
    arr.push_back({{"coeff", complex_to_json(t.coeff)},
                   {"xpow", t.xpow},
                   {"tpow", t.tpow},
                   {"xexp", complex_to_json(t.xexp)},
                   {"texp", complex_to_json(t.texp)}});
  return arr;
}

Expression expr_from_json_value(const json& arr) {
  if (!arr.is_array()) throw std::invalid_argument("expression JSON must be an array of terms");
  std::vector<MonomialTerm> terms;
  for (const auto& j : arr)
    terms.push_back({complex_from_json(j.at("coeff")), j.at("xpow").get<int>(),
                     j.at("tpow").get<int>(), complex_from_json(j.at("xexp")),
                     complex_from_json(j.at("texp"))});
  return Expression(std::move(terms));
}

}  // namespace

std::string expression_to_json(const Expression& e) { return expr_to_json_value(e).dump(); }

Expression expression_from_json(const std::string& text) {
  return expr_from_json_value(json::parse(text));
}

std::string problem_to_json(const ProblemSpec& spec) {
  json j = {{"lambda", spec.lambda},
            {"alpha", spec.alpha},
            {"beta", spec.beta},
            {"geometry", spec.geometry == Geometry::Regular ? "regular" : "singular_bessel"},
            {"source_k", expr_to_json_value(spec.source_k)},
            {"source_l", expr_to_json_value(spec.source_l)},
            {"ic_k1", expr_to_json_value(spec.ic_k1)},
            {"ic_l1", expr_to_json_value(spec.ic_l1)}};
  return j.dump(2);
}

ProblemSpec problem_from_json(const std::string& text) {
  const json j = json::parse(text);
  ProblemSpec spec;
  spec.lambda = j.at("lambda").get<double>();
  spec.alpha = j.at("alpha").get<double>();
  spec.beta = j.at("beta").get<double>();
  const std::string geom = j.at("geometry").get<std::string>();
  if (geom == "regular")
    spec.geometry = Geometry::Regular;
  else if (geom == "singular_bessel")
    spec.geometry = Geometry::SingularBessel;
  else
    throw std::invalid_argument("geometry must be \"regular\" or \"singular_bessel\"");
  spec.source_k = expr_from_json_value(j.at("source_k"));
  spec.source_l = expr_from_json_value(j.at("source_l"));
  spec.ic_k1 = expr_from_json_value(j.at("ic_k1"));
  spec.ic_l1 = expr_from_json_value(j.at("ic_l1"));
  spec.validate();
  return spec;
}

ProblemSpec load_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open problem file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return problem_from_json(buf.str());
}

}  // namespace cdara
