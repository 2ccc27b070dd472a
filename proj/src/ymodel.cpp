#include "heavymom/ymodel.hpp"

#include <numeric>

#include "heavymom/errors.hpp"

namespace heavymom {

StarTestGraph expand_y_graph(int n, const std::vector<YEdge>& edges) {
  // contract identity edges first
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  auto find = [&](int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  };
  for (const auto& e : edges)
    if (e.w.empty()) p[find(e.u)] = find(e.v);
  std::vector<int> remap(n, -1);
  int nv = 0;
  for (int v = 0; v < n; ++v) {
    int r = find(v);
    if (remap[r] == -1) remap[r] = nv++;
    remap[v] = remap[r];
  }
  std::vector<GraphEdge> out;
  int fresh = nv;
  for (const auto& e : edges) {
    if (e.w.empty()) continue;
    auto letters = e.w.letters();
    int at = remap[e.u];
    for (std::size_t i = 0; i < letters.size(); ++i) {
      int next = (i + 1 == letters.size()) ? remap[e.v] : fresh++;
      out.push_back({at, next, letters[i], false});
      at = next;
    }
  }
  return StarTestGraph::make(fresh, out);
}

YModel YModel::none() { return YModel{}; }

YModel YModel::diagonal_symbolic() {
  YModel m;
  m.kind_ = Kind::diagonal;
  m.symbolic_ = true;
  return m;
}

YModel YModel::diagonal_numeric(std::map<YWord, Rational> table) {
  YModel m;
  m.kind_ = Kind::diagonal;
  m.symbolic_ = false;
  m.table_ = std::move(table);
  return m;
}

YModel YModel::diagonal_single(const std::vector<Rational>& moments) {
  std::map<YWord, Rational> table;
  for (std::size_t k = 0; k < moments.size(); ++k)
    table[YWord::letter(1, (int)k + 1)] = moments[k];
  return diagonal_numeric(std::move(table));
}

YModel YModel::make_traffic(std::function<Polynomial(const StarTestGraph&)> oracle) {
  YModel m;
  m.kind_ = Kind::traffic;
  m.oracle_ = std::move(oracle);
  return m;
}

Polynomial YModel::phi_y(const YWord& w) const {
  if (w.empty()) return Polynomial(1);
  switch (kind_) {
    case Kind::none:
      throw UnsupportedModelError("y letters present but no y model was given");
    case Kind::diagonal: {
      if (symbolic_) return Polynomial::symbol(Symbol::ymoment(w));
      auto it = table_.find(w);
      if (it == table_.end())
        throw DomainError("y moment unavailable: " + Symbol::ymoment(w).str());
      return Polynomial(it->second);
    }
    case Kind::traffic:
      return tau_y(1, {{0, 0, w}});
  }
  throw DomainError("unreachable");
}

Polynomial YModel::tau_y(int n, const std::vector<YEdge>& edges) const {
  if (kind_ == Kind::traffic) return oracle_(expand_y_graph(n, edges));
  // diagonal matrices force every index equal on a connected graph
  YWord prod;
  for (const auto& e : edges) prod = prod * e.w;
  return phi_y(prod);
}

Rational YModel::lookup(const Symbol& s) const {
  if (s.kind != Symbol::Kind::ymoment)
    throw DomainError("cannot evaluate symbol " + s.str() + " from the y model");
  if (kind_ != Kind::diagonal || symbolic_)
    throw DomainError("numeric y moments unavailable for symbol " + s.str());
  auto it = table_.find(s.word);
  if (it == table_.end()) throw DomainError("y moment unavailable: " + s.str());
  return it->second;
}

}  // namespace heavymom
