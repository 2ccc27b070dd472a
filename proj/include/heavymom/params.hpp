#pragma once

#include <map>
#include <vector>

#include "heavymom/errors.hpp"
#include "heavymom/polynomial.hpp"
#include "heavymom/rational.hpp"

namespace heavymom {

// Parameter family a_{j,k}: one sequence per matrix letter j (k >= 1).
//
// Two modes:
//  * symbolic  - a(j,k) is the formal symbol a[j,k]; an optional truncation k_max
//                turns deeper requests into TruncationError.
//  * numeric   - per-letter rational tables; zero_tail decides whether entries past
//                the table are exact zeros (a complete law like the trivial one) or
//                unknown (TruncationError naming the needed k).
class HeavyParams {
 public:
  static HeavyParams symbolic(int k_max = -1);  // -1: no truncation
  // tables[j] = (a_{j,1}, a_{j,2}, ...); complete=true means all deeper entries are 0
  static HeavyParams numeric(std::map<int, std::vector<Rational>> tables, bool complete);
  // one shared row for every letter
  static HeavyParams numeric_shared(std::vector<Rational> row, bool complete);
  static HeavyParams trivial(const Rational& a1);  // (a1, 0, 0, ...)

  Polynomial a(int j, int k) const;
  bool is_numeric() const { return mode_ == Mode::numeric; }

  // substitution table for Polynomial::evaluate on symbolic engine output
  Rational lookup(const Symbol& s) const;

  // test hook: perturb one entry (used by the self-check's negative control)
  void inject_fault(int j, int k, const Rational& delta);

 private:
  enum class Mode { symbolic, numeric };
  Mode mode_ = Mode::symbolic;
  int k_max_ = -1;
  std::map<int, std::vector<Rational>> tables_;
  std::vector<Rational> shared_row_;
  bool has_shared_ = false;
  bool zero_tail_ = false;

  bool has_fault_ = false;
  int fault_j_ = 0, fault_k_ = 0;
  Rational fault_delta_ = 0;

  Rational raw(int j, int k) const;
};

}  // namespace heavymom
