#pragma once

#include <string>
#include <vector>

#include "heavymom/yword.hpp"

namespace heavymom {

// One letter of a monomial before slot grouping.
struct Letter {
  bool is_x = true;
  int j = 1;
  auto operator<=>(const Letter&) const = default;
};

// Monomial P = x_{c(1)} P_1(y) x_{c(2)} P_2(y) ... x_{c(L)} P_L(y); L = 0 encodes a
// pure y word (field `pure`).  Construction rotates any leading y run into the last
// slot: exact under the trace for a single word and entrywise for diagonal y, so it
// is safe to normalize this early.
struct Word {
  std::vector<int> colors;  // c(n) at index n-1
  std::vector<YWord> slots; // P_n at index n-1
  YWord pure;               // only meaningful when colors is empty

  auto operator<=>(const Word&) const = default;

  static Word from_letters(const std::vector<Letter>& seq);
  static Word parse(const std::string& text);  // tokens x<j>, y<j>, optional ^n, or "1"

  int length() const { return (int)colors.size(); }
  bool is_identity() const { return colors.empty() && pure.empty(); }
  bool is_pure_y() const { return colors.empty(); }
  int x_degree() const { return (int)colors.size(); }
  int x_degree_of(int j) const;
  int y_degree() const;
  int total_degree() const { return x_degree() + y_degree(); }
  std::vector<Letter> letters() const;  // flattened sequence (x letters and y letters)

  Word rotated(int r) const;        // cyclic shift by r x-positions
  Word min_rotation() const;        // lexicographically smallest rotation (traciality)
  Word appended_y(const YWord& q) const;  // multiply q into the final slot / pure part

  std::string str() const;
};

}  // namespace heavymom
