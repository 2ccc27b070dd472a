#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "heavymom/lab.hpp"
#include "heavymom/params.hpp"
#include "heavymom/polynomial.hpp"
#include "heavymom/ymodel.hpp"

namespace heavymom {

using OrderedJson = nlohmann::ordered_json;

// fixed 17-significant-digit rendering so simulation outputs are byte-stable
std::string double_str(double v);

// {"terms":[{"coeff":"2","monomial":{"a[1,1]":2}}, ...]}; canonical term order
OrderedJson polynomial_json(const Polynomial& p);

// parameter source resolved from an inline spec or a JSON file:
//   symbolic | trivial:<a> | er:<alpha> | levy:<alpha>,<B> |
//   network:<alpha>,<rademacher|gaussian|uniform> | <path to JSON file>
// Inline ensembles materialize their first k_max parameters (tails unknown).
struct ParamChoice {
  HeavyParams params = HeavyParams::symbolic();
  std::optional<EnsembleSpec> ensemble;  // present for er/levy/network specs
  std::optional<YModel> y;               // present when a file provides a y model
  std::string label;                     // echo of the source for reports
};

ParamChoice parse_param_text(const std::string& text, int k_max);

// y-model source: none | symbolic | moments:<m1>,<m2>,... | <path to JSON file>
YModel parse_y_text(const std::string& text);

// {"n":2,"edges":[{"src":0,"dst":1,"label":1,"star":false}, ...]}
StarTestGraph graph_from_json(const OrderedJson& j);
StarTestGraph graph_from_file(const std::string& path);

}  // namespace heavymom
