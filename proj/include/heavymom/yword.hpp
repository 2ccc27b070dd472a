#pragma once

#include <string>
#include <utility>
#include <vector>

namespace heavymom {

// A word in the diagonal symbols y_1, y_2, ... .  Diagonal matrices commute, so the
// canonical form is a sorted multiset: (letter, exponent) pairs with letters strictly
// increasing and exponents positive.  The empty word is the constant 1.
struct YWord {
  std::vector<std::pair<int, int>> factors;

  YWord() = default;
  static YWord letter(int j, int e = 1) {
    YWord w;
    if (e > 0) w.factors.push_back({j, e});
    return w;
  }

  bool empty() const { return factors.empty(); }

  int degree() const {
    int d = 0;
    for (auto& [j, e] : factors) d += e;
    return d;
  }

  // multiset union (= product of the diagonal words)
  YWord operator*(const YWord& o) const {
    YWord r;
    size_t a = 0, b = 0;
    while (a < factors.size() || b < o.factors.size()) {
      if (b == o.factors.size() || (a < factors.size() && factors[a].first < o.factors[b].first))
        r.factors.push_back(factors[a++]);
      else if (a == factors.size() || o.factors[b].first < factors[a].first)
        r.factors.push_back(o.factors[b++]);
      else {
        r.factors.push_back({factors[a].first, factors[a].second + o.factors[b].second});
        ++a, ++b;
      }
    }
    return r;
  }
  YWord& operator*=(const YWord& o) { return *this = *this * o; }

  auto operator<=>(const YWord&) const = default;

  // flat single-letter sequence (canonical order), e.g. y1^2 y2 -> {1, 1, 2}
  std::vector<int> letters() const {
    std::vector<int> out;
    for (auto& [j, e] : factors)
      for (int t = 0; t < e; ++t) out.push_back(j);
    return out;
  }

  std::string str() const {
    if (factors.empty()) return "1";
    std::string s;
    for (auto& [j, e] : factors) {
      if (!s.empty()) s += ' ';
      s += "y" + std::to_string(j);
      if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
  }
};

}  // namespace heavymom
