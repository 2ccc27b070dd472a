#pragma once

#include <functional>
#include <map>

#include "heavymom/graph.hpp"
#include "heavymom/polynomial.hpp"
#include "heavymom/yword.hpp"

namespace heavymom {

// Edge of a graph whose labels are (possibly empty) y-words; the empty word is the
// identity matrix.
struct YEdge {
  int u = 0, v = 0;
  YWord w;
};

// Rewrites a connected y-word-labeled graph into single-letter form: identity edges
// contract their endpoints (identity loops vanish), a length-d word edge becomes a
// path of d single-letter edges through fresh vertices.
StarTestGraph expand_y_graph(int n, const std::vector<YEdge>& edges);

// The deterministic/diagonal side of the model:
//   none     - no y letters allowed at all
//   diagonal - moments phi_y of commuting diagonal words, symbolic or tabulated
//   traffic  - an oracle giving the limiting trace of any single-y-letter graph
class YModel {
 public:
  enum class Kind { none, diagonal, traffic };

  static YModel none();
  static YModel diagonal_symbolic();
  static YModel diagonal_numeric(std::map<YWord, Rational> table);
  // convenience: moments (m_1, m_2, ...) of the single letter y1
  static YModel diagonal_single(const std::vector<Rational>& moments);
  static YModel make_traffic(std::function<Polynomial(const StarTestGraph&)> oracle);

  Kind kind() const { return kind_; }
  bool diagonalish() const { return kind_ != Kind::traffic; }

  // moment of a diagonal word; 1 on the empty word for every kind
  Polynomial phi_y(const YWord& w) const;

  // limiting trace of a connected y-word-labeled graph (traffic kind only;
  // diagonal kinds answer via the forced-contraction collapse)
  Polynomial tau_y(int n, const std::vector<YEdge>& edges) const;

  // substitution table for evaluating symbolic output
  Rational lookup(const Symbol& s) const;

 private:
  Kind kind_ = Kind::none;
  bool symbolic_ = true;
  std::map<YWord, Rational> table_;
  std::function<Polynomial(const StarTestGraph&)> oracle_;
};

}  // namespace heavymom
