#include "heavymom/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace heavymom {

std::string double_str(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

OrderedJson polynomial_json(const Polynomial& p) {
  OrderedJson terms = OrderedJson::array();
  for (const auto& [mono, coeff] : p.terms()) {
    OrderedJson m = OrderedJson::object();
    for (const auto& [sym, e] : mono) m[sym.str()] = e;
    terms.push_back({{"coeff", rat_str(coeff)}, {"monomial", m}});
  }
  return OrderedJson{{"terms", terms}};
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

WeightLaw parse_law(const std::string& s) {
  if (s == "rademacher") return WeightLaw::rademacher;
  if (s == "gaussian") return WeightLaw::gaussian;
  if (s == "uniform") return WeightLaw::uniform;
  throw ParseError("unknown weight law '" + s + "'");
}

std::vector<Rational> parse_rationals(const std::string& csv) {
  std::vector<Rational> out;
  for (const auto& tok : split(csv, ',')) out.push_back(rat_parse(tok));
  return out;
}

OrderedJson load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  OrderedJson j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError("bad JSON in '" + path + "': " + e.what());
  }
  return j;
}

int letter_index(const std::string& name) {
  if (name.size() < 2 || name[0] != 'x')
    throw ParseError("matrix name must look like x1, got '" + name + "'");
  int j = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!isdigit((unsigned char)name[i]))
      throw ParseError("matrix name must look like x1, got '" + name + "'");
    j = j * 10 + (name[i] - '0');
  }
  if (j < 1) throw ParseError("matrix index must be positive in '" + name + "'");
  return j;
}

YModel y_from_json(const OrderedJson& y) {
  std::string kind = y.value("kind", "diagonal");
  if (kind == "none") return YModel::none();
  if (kind == "symbolic") return YModel::diagonal_symbolic();
  if (kind != "diagonal") throw ParseError("unknown y model kind '" + kind + "'");
  if (!y.contains("moments")) throw ParseError("diagonal y model needs a 'moments' array");
  std::vector<Rational> moments;
  for (const auto& v : y.at("moments")) moments.push_back(rat_parse(v.get<std::string>()));
  return YModel::diagonal_single(moments);
}

ParamChoice params_from_file(const std::string& path) {
  OrderedJson j = load_json(path);
  ParamChoice out;
  out.label = path;
  if (!j.contains("matrices")) throw ParseError("parameter file needs a 'matrices' array");
  std::map<int, std::vector<Rational>> tables;
  for (const auto& m : j.at("matrices")) {
    int idx = letter_index(m.at("name").get<std::string>());
    std::vector<Rational> row;
    for (const auto& v : m.at("a")) row.push_back(rat_parse(v.get<std::string>()));
    if (!tables.emplace(idx, std::move(row)).second)
      throw ParseError("duplicate matrix entry for x" + std::to_string(idx));
  }
  out.params = HeavyParams::numeric(std::move(tables), j.value("complete", false));
  if (j.contains("y")) out.y = y_from_json(j.at("y"));
  return out;
}

}  // namespace

ParamChoice parse_param_text(const std::string& text, int k_max) {
  if (k_max < 1) throw DomainError("parameter depth k_max must be positive");
  ParamChoice out;
  out.label = text;
  auto colon = text.find(':');
  std::string head = text.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);

  if (text == "symbolic") {
    out.params = HeavyParams::symbolic();
    return out;
  }
  if (head == "trivial") {
    out.params = HeavyParams::trivial(rat_parse(rest));
    return out;
  }
  if (head == "er") {
    out.ensemble = EnsembleSpec::erdos_renyi(rat_parse(rest));
  } else if (head == "levy") {
    auto parts = split(rest, ',');
    if (parts.size() != 2) throw ParseError("levy spec wants levy:<alpha>,<B>");
    out.ensemble = EnsembleSpec::truncated_levy(rat_parse(parts[0]), rat_parse(parts[1]));
  } else if (head == "network") {
    auto parts = split(rest, ',');
    if (parts.size() != 2)
      throw ParseError("network spec wants network:<alpha>,<law>");
    out.ensemble = EnsembleSpec::network(rat_parse(parts[0]), parse_law(parts[1]));
  } else {
    return params_from_file(text);
  }
  out.params = ensemble_parameter(*out.ensemble, k_max);
  return out;
}

YModel parse_y_text(const std::string& text) {
  if (text == "none" || text.empty()) return YModel::none();
  if (text == "symbolic") return YModel::diagonal_symbolic();
  if (text.rfind("moments:", 0) == 0)
    return YModel::diagonal_single(parse_rationals(text.substr(8)));
  OrderedJson j = load_json(text);
  if (j.contains("y")) return y_from_json(j.at("y"));
  return y_from_json(j);
}

StarTestGraph graph_from_json(const OrderedJson& j) {
  if (!j.contains("n") || !j.contains("edges"))
    throw ParseError("graph JSON needs 'n' and 'edges'");
  int n = j.at("n").get<int>();
  std::vector<GraphEdge> edges;
  for (const auto& e : j.at("edges")) {
    GraphEdge g;
    g.src = e.at("src").get<int>();
    g.dst = e.at("dst").get<int>();
    g.label = e.value("label", 1);
    g.star = e.value("star", false);
    edges.push_back(g);
  }
  return StarTestGraph::make(n, std::move(edges));
}

StarTestGraph graph_from_file(const std::string& path) { return graph_from_json(load_json(path)); }

}  // namespace heavymom
