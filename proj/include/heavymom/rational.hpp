#pragma once

#include <gmpxx.h>

#include <string>

#include "heavymom/errors.hpp"

namespace heavymom {

// Exact arithmetic everywhere; GMP rationals are always kept in canonical form.
using Rational = mpq_class;

// Canonical rendering: "p" for integers, "p/q" otherwise (q > 0).
inline std::string rat_str(const Rational& r) { return r.get_str(); }

inline Rational rat_parse(const std::string& s) {
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) throw ParseError("bad rational literal: '" + s + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in rational literal: '" + s + "'");
  q.canonicalize();
  return q;
}

inline Rational rat_pow(const Rational& base, int e) {
  Rational acc = 1, b = base;
  for (int k = e; k > 0; k >>= 1) {
    if (k & 1) acc *= b;
    b *= b;
  }
  return acc;
}

inline double rat_double(const Rational& r) { return r.get_d(); }

}  // namespace heavymom
