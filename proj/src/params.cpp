#include "heavymom/params.hpp"

#include <string>

namespace heavymom {

HeavyParams HeavyParams::symbolic(int k_max) {
  HeavyParams p;
  p.mode_ = Mode::symbolic;
  p.k_max_ = k_max;
  return p;
}

HeavyParams HeavyParams::numeric(std::map<int, std::vector<Rational>> tables, bool complete) {
  HeavyParams p;
  p.mode_ = Mode::numeric;
  p.tables_ = std::move(tables);
  p.zero_tail_ = complete;
  for (auto& [j, row] : p.tables_) {
    if (row.empty()) throw DomainError("empty parameter row for letter x" + std::to_string(j));
    if (row[0] < 0)
      throw DomainError("a[" + std::to_string(j) + ",1] must be nonnegative (it is a variance)");
  }
  return p;
}

HeavyParams HeavyParams::numeric_shared(std::vector<Rational> row, bool complete) {
  HeavyParams p;
  p.mode_ = Mode::numeric;
  p.shared_row_ = std::move(row);
  p.has_shared_ = true;
  p.zero_tail_ = complete;
  if (p.shared_row_.empty()) throw DomainError("empty parameter row");
  if (p.shared_row_[0] < 0) throw DomainError("a[j,1] must be nonnegative (it is a variance)");
  return p;
}

HeavyParams HeavyParams::trivial(const Rational& a1) {
  return numeric_shared({a1}, true);
}

Rational HeavyParams::raw(int j, int k) const {
  const std::vector<Rational>* row = nullptr;
  if (auto it = tables_.find(j); it != tables_.end()) row = &it->second;
  else if (has_shared_) row = &shared_row_;
  else throw DomainError("no parameters given for letter x" + std::to_string(j));
  if (k <= (int)row->size()) return (*row)[k - 1];
  if (zero_tail_) return 0;
  throw TruncationError(k, "parameter a[" + std::to_string(j) + "," + std::to_string(k) +
                               "] lies beyond the supplied table");
}

Polynomial HeavyParams::a(int j, int k) const {
  if (k < 1) throw DomainError("parameter index k must be >= 1");
  if (j < 1) throw DomainError("letter index j must be >= 1");
  Polynomial out;
  if (mode_ == Mode::symbolic) {
    if (k_max_ >= 0 && k > k_max_)
      throw TruncationError(k, "parameter a[" + std::to_string(j) + "," + std::to_string(k) +
                                   "] lies beyond the truncation depth");
    out = Polynomial::symbol(Symbol::param(j, k));
  } else {
    out = Polynomial(raw(j, k));
  }
  if (has_fault_ && j == fault_j_ && k == fault_k_) out += Polynomial(fault_delta_);
  return out;
}

Rational HeavyParams::lookup(const Symbol& s) const {
  if (s.kind != Symbol::Kind::param)
    throw DomainError("cannot evaluate symbol " + s.str() + " from matrix parameters alone");
  if (mode_ != Mode::numeric) throw DomainError("lookup requires numeric parameters");
  Rational v = raw(s.j, s.k);
  if (has_fault_ && s.j == fault_j_ && s.k == fault_k_) v += fault_delta_;
  return v;
}

void HeavyParams::inject_fault(int j, int k, const Rational& delta) {
  has_fault_ = true;
  fault_j_ = j;
  fault_k_ = k;
  fault_delta_ = delta;
}

}  // namespace heavymom
