#include "heavymom/word.hpp"

#include <algorithm>
#include <sstream>

#include "heavymom/errors.hpp"

namespace heavymom {

Word Word::from_letters(const std::vector<Letter>& seq) {
  Word w;
  std::size_t first_x = 0;
  while (first_x < seq.size() && !seq[first_x].is_x) ++first_x;
  if (first_x == seq.size()) {
    for (const auto& l : seq) w.pure = w.pure * YWord::letter(l.j, 1);
    return w;
  }
  // rotate the leading y run to the tail; then group y runs into slots
  std::vector<Letter> rot(seq.begin() + (long)first_x, seq.end());
  rot.insert(rot.end(), seq.begin(), seq.begin() + (long)first_x);
  for (const auto& l : rot) {
    if (l.is_x) {
      w.colors.push_back(l.j);
      w.slots.push_back({});
    } else {
      w.slots.back() = w.slots.back() * YWord::letter(l.j, 1);
    }
  }
  return w;
}

Word Word::parse(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  std::vector<Letter> seq;
  while (in >> tok) {
    if (tok == "1") continue;
    std::size_t i = 0;
    bool is_x;
    if (tok[i] == 'x') is_x = true;
    else if (tok[i] == 'y') is_x = false;
    else throw ParseError("bad word token: '" + tok + "'");
    ++i;
    std::size_t digits_at = i;
    int j = 0;
    while (i < tok.size() && isdigit((unsigned char)tok[i])) j = j * 10 + (tok[i++] - '0');
    if (i == digits_at) j = 1;  // bare x / y
    else if (j == 0) throw ParseError("bad word token: '" + tok + "' (letter indices start at 1)");
    int exp = 1;
    if (i < tok.size()) {
      if (tok[i] != '^') throw ParseError("bad word token: '" + tok + "'");
      ++i;
      if (i >= tok.size()) throw ParseError("bad word token: '" + tok + "'");
      exp = 0;
      while (i < tok.size() && isdigit((unsigned char)tok[i])) exp = exp * 10 + (tok[i++] - '0');
      if (i != tok.size()) throw ParseError("bad word token: '" + tok + "'");
    }
    for (int r = 0; r < exp; ++r) seq.push_back({is_x, j});
  }
  return from_letters(seq);
}

int Word::x_degree_of(int j) const { return (int)std::count(colors.begin(), colors.end(), j); }

int Word::y_degree() const {
  int d = pure.degree();
  for (const auto& s : slots) d += s.degree();
  return d;
}

std::vector<Letter> Word::letters() const {
  std::vector<Letter> out;
  for (int l : pure.letters()) out.push_back({false, l});
  for (std::size_t n = 0; n < colors.size(); ++n) {
    out.push_back({true, colors[n]});
    for (int l : slots[n].letters()) out.push_back({false, l});
  }
  return out;
}

Word Word::rotated(int r) const {
  if (colors.empty()) return *this;
  int L = length();
  r = ((r % L) + L) % L;
  Word w;
  w.colors.reserve(L);
  w.slots.reserve(L);
  for (int n = 0; n < L; ++n) {
    w.colors.push_back(colors[(n + r) % L]);
    w.slots.push_back(slots[(n + r) % L]);
  }
  return w;
}

Word Word::min_rotation() const {
  Word best = *this;
  for (int r = 1; r < length(); ++r) {
    Word cand = rotated(r);
    if (cand < best) best = cand;
  }
  return best;
}

Word Word::appended_y(const YWord& q) const {
  Word w = *this;
  if (w.colors.empty()) w.pure = w.pure * q;
  else w.slots.back() = w.slots.back() * q;
  return w;
}

std::string Word::str() const {
  if (is_identity()) return "1";
  if (is_pure_y()) return pure.str();
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const std::string& s) {
    if (!first) os << ' ';
    os << s;
    first = false;
  };
  // fold consecutive equal x letters with empty slots into powers
  for (int n = 0; n < length();) {
    int run = 1;
    while (n + run < length() && colors[n + run] == colors[n] && slots[n + run - 1].empty())
      ++run;
    if (run > 1) emit("x" + std::to_string(colors[n]) + "^" + std::to_string(run));
    else emit("x" + std::to_string(colors[n]));
    if (!slots[n + run - 1].empty()) emit(slots[n + run - 1].str());
    n += run;
  }
  return os.str();
}

}  // namespace heavymom
