#include "heavymom/polynomial.hpp"

#include <cstdlib>

#include "heavymom/errors.hpp"

namespace heavymom {

Symbol Symbol::parse(const std::string& s) {
  // accepted forms: a[j,k] and m[<y word>]
  if (s.size() >= 4 && s[1] == '[' && s.back() == ']') {
    std::string body = s.substr(2, s.size() - 3);
    if (s[0] == 'a') {
      auto comma = body.find(',');
      if (comma != std::string::npos) {
        try {
          int j = std::stoi(body.substr(0, comma));
          int k = std::stoi(body.substr(comma + 1));
          return Symbol::param(j, k);
        } catch (...) {
        }
      }
    } else if (s[0] == 'm') {
      // body: space-separated y<j>[^e] tokens, or "1" for the empty word
      YWord w;
      if (body == "1") return Symbol::ymoment(w);
      size_t pos = 0;
      bool ok = true;
      while (pos < body.size() && ok) {
        while (pos < body.size() && body[pos] == ' ') ++pos;
        if (pos >= body.size()) break;
        if (body[pos] != 'y') {
          ok = false;
          break;
        }
        ++pos;
        size_t start = pos;
        while (pos < body.size() && isdigit(body[pos])) ++pos;
        if (start == pos) {
          ok = false;
          break;
        }
        int j = std::stoi(body.substr(start, pos - start));
        int e = 1;
        if (pos < body.size() && body[pos] == '^') {
          ++pos;
          size_t es = pos;
          while (pos < body.size() && isdigit(body[pos])) ++pos;
          if (es == pos) {
            ok = false;
            break;
          }
          e = std::stoi(body.substr(es, pos - es));
        }
        w *= YWord::letter(j, e);
      }
      if (ok) return Symbol::ymoment(w);
    }
  }
  throw ParseError("bad symbol: '" + s + "'");
}

std::string monomial_str(const Monomial& m) {
  if (m.empty()) return "1";
  std::string s;
  for (auto& [sym, e] : m) {
    if (!s.empty()) s += '*';
    s += sym.str();
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return 0;
  if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second;
  throw DomainError("polynomial is not constant: " + str());
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (auto& [m, c] : o.terms_) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (auto& [m, c] : o.terms_) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, -c);
    } else {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r;
  for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

static Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first))
      r.push_back(a[i++]);
    else if (i == a.size() || b[j].first < a[i].first)
      r.push_back(b[j++]);
    else {
      r.push_back({a[i].first, a[i].second + b[j].second});
      ++i, ++j;
    }
  }
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r;
  for (auto& [ma, ca] : terms_)
    for (auto& [mb, cb] : o.terms_) {
      Monomial m = mono_mul(ma, mb);
      auto it = r.terms_.find(m);
      if (it == r.terms_.end()) {
        r.terms_.emplace(std::move(m), ca * cb);
      } else {
        it->second += ca * cb;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  return r;
}

Polynomial& Polynomial::scale(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::pow(int e) const {
  Polynomial acc = Rational(1), b = *this;
  for (int k = e; k > 0; k >>= 1) {
    if (k & 1) acc *= b;
    b = b * b;
  }
  return acc;
}

Rational Polynomial::evaluate(const std::function<Rational(const Symbol&)>& lookup) const {
  Rational out = 0;
  for (auto& [m, c] : terms_) {
    Rational t = c;
    for (auto& [sym, e] : m) t *= rat_pow(lookup(sym), e);
    out += t;
  }
  return out;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto& [m, c] : terms_) {
    std::string cs = rat_str(c);
    if (!s.empty()) {
      if (!cs.empty() && cs[0] == '-') {
        s += " - ";
        cs = cs.substr(1);
      } else {
        s += " + ";
      }
    }
    if (m.empty()) {
      s += cs;
    } else if (cs == "1") {
      s += monomial_str(m);
    } else if (cs == "-1" && s.empty()) {
      s += "-" + monomial_str(m);
    } else {
      s += cs + "*" + monomial_str(m);
    }
  }
  return s;
}

}  // namespace heavymom
