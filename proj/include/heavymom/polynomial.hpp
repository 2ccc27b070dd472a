#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "heavymom/rational.hpp"
#include "heavymom/yword.hpp"

namespace heavymom {

// A symbol appearing in closed-form moment expressions:
//   a[j,k] — heavy-matrix parameter of letter j at pair count k      (prints "a[1,2]")
//   m[w]   — moment of a diagonal word w under phi_y                 (prints "m[y1^2]")
struct Symbol {
  enum class Kind { param, ymoment };
  Kind kind;
  int j = 0, k = 0;  // param
  YWord word;        // ymoment

  static Symbol param(int j, int k) { return {Kind::param, j, k, {}}; }
  static Symbol ymoment(YWord w) { return {Kind::ymoment, 0, 0, std::move(w)}; }

  auto operator<=>(const Symbol&) const = default;

  std::string str() const {
    if (kind == Kind::param)
      return "a[" + std::to_string(j) + "," + std::to_string(k) + "]";
    return "m[" + word.str() + "]";
  }
  static Symbol parse(const std::string& s);
};

// sorted (symbol, exponent) pairs, exponents > 0; empty = the constant monomial
using Monomial = std::vector<std::pair<Symbol, int>>;

std::string monomial_str(const Monomial& m);

// Multivariate polynomial over Symbols with exact rational coefficients.
// Canonical form is an invariant: zero coefficients are never stored and the
// term map is ordered, so printing/serialization is deterministic.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(int v) { *this = Polynomial(Rational(v)); }  // NOLINT: implicit by design
  Polynomial(const Rational& v) {
    if (v != 0) terms_[{}] = v;
  }
  static Polynomial symbol(const Symbol& s) {
    Polynomial p;
    p.terms_[{{s, 1}}] = 1;
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
  Rational constant_value() const;  // DomainError unless is_constant()

  const std::map<Monomial, Rational>& terms() const { return terms_; }

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial operator+(const Polynomial& o) const {
    Polynomial r = *this;
    return r += o;
  }
  Polynomial operator-(const Polynomial& o) const {
    Polynomial r = *this;
    return r -= o;
  }
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& scale(const Rational& c);
  Polynomial pow(int e) const;

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // ring-homomorphic substitution; `lookup` must resolve every symbol present
  Rational evaluate(const std::function<Rational(const Symbol&)>& lookup) const;

  // "2*a[1,1]^2 + a[1,2]"; "0" for the zero polynomial
  std::string str() const;

 private:
  std::map<Monomial, Rational> terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) {
  Polynomial r = p;
  r.scale(c);
  return r;
}

}  // namespace heavymom
