#include "heavymom/sd.hpp"

#include <algorithm>

#include "heavymom/errors.hpp"

namespace heavymom {

namespace {

// subword [from, to) of w, preceded by the slot hanging off position `lead`
// (the y run after a consumed pivot letter belongs to the next block)
Word segment(const Word& w, int lead, int from, int to) {
  std::vector<Letter> seq;
  if (lead >= 0)
    for (int j : w.slots[lead].letters()) seq.push_back({false, j});
  for (int n = from; n < to; ++n) {
    seq.push_back({true, w.colors[n]});
    for (int j : w.slots[n].letters()) seq.push_back({false, j});
  }
  return Word::from_letters(seq);
}

void choose(const std::vector<int>& pool, int want, std::size_t at, std::vector<int>& cur,
            std::vector<std::vector<int>>& out) {
  if ((int)cur.size() == want) {
    out.push_back(cur);
    return;
  }
  if (pool.size() - at < want - cur.size()) return;
  for (std::size_t i = at; i < pool.size(); ++i) {
    cur.push_back(pool[i]);
    choose(pool, want, i + 1, cur, out);
    cur.pop_back();
  }
}

// all 2s-subsets of the word's pivot positions; word 0 must take its leading letter
std::vector<std::vector<int>> selections(const std::vector<int>& pos, int s, bool leading) {
  std::vector<std::vector<int>> out;
  if (leading) {
    if (s == 0 || pos.empty() || pos[0] != 0) return out;
    std::vector<int> cur = {0};
    choose(pos, 2 * s, 1, cur, out);
  } else {
    std::vector<int> cur;
    choose(pos, 2 * s, 0, cur, out);
  }
  return out;
}

Rational binom_rat(int n, int r) {
  if (r < 0 || r > n) return Rational(0);
  Rational b(1);
  for (int i = 1; i <= r; ++i) b *= Rational(n - r + i) / Rational(i);
  return b;
}

}  // namespace

std::vector<SdDecomposition> enumerate_decompositions(const std::vector<Word>& words, int j,
                                                      int k) {
  if (words.empty() || words[0].length() == 0 || words[0].colors[0] != j)
    throw DomainError("first word must begin with the pivot letter x" + std::to_string(j));
  if (k < 1) throw DomainError("pair count must be positive");

  const int K = (int)words.size();
  std::vector<std::vector<int>> pos(K);
  for (int m = 0; m < K; ++m)
    for (int n = 0; n < words[m].length(); ++n)
      if (words[m].colors[n] == j) pos[m].push_back(n);

  std::vector<SdDecomposition> out;

  auto emit = [&](const std::vector<std::vector<int>>& picked) {
    SdDecomposition d;
    for (int m = 0; m < K; ++m) {
      const Word& w = words[m];
      const auto& p = picked[m];
      if (m > 0) d.right.push_back(p.empty() ? w : segment(w, -1, 0, p[0]));
      for (std::size_t i = 0; i + 1 < p.size(); i += 2) {
        int a = p[i], b = p[i + 1];
        d.left.push_back(segment(w, a, a + 1, b));
        int stop = (i + 2 < p.size()) ? p[i + 2] : w.length();
        d.right.push_back(segment(w, b, b + 1, stop));
      }
    }
    out.push_back(std::move(d));
  };

  // distribute k pairs over the words, then pick position subsets per word
  std::vector<std::vector<std::vector<int>>> picked(K);
  auto rec = [&](auto&& self, int m, int left) -> void {
    if (m == K) {
      if (left != 0) return;
      std::vector<std::vector<int>> cur(K);
      auto fill = [&](auto&& go, int i) -> void {
        if (i == K) {
          emit(cur);
          return;
        }
        for (const auto& sel : picked[i]) {
          cur[i] = sel;
          go(go, i + 1);
        }
      };
      fill(fill, 0);
      return;
    }
    int cap = (int)pos[m].size() / 2;
    int lo = (m == 0) ? 1 : 0;
    for (int s = lo; s <= cap && s <= left; ++s) {
      picked[m] = selections(pos[m], s, m == 0);
      if (picked[m].empty() && s > 0) continue;
      if (s == 0) picked[m] = {std::vector<int>{}};
      self(self, m + 1, left - s);
    }
  };
  rec(rec, 0, k);
  return out;
}

SdSolver::SdSolver(HeavyParams params, YModel y) : params_(std::move(params)), y_(std::move(y)) {
  if (!y_.diagonalish())
    throw UnsupportedModelError("the pivot recursion is stated for diagonal y only");
}

Polynomial SdSolver::phi(const Word& w) { return eval({w}); }

Polynomial SdSolver::phi_k(const std::vector<Word>& words) { return eval(words); }

void SdSolver::clear_memo() { memo_.clear(); }

Polynomial SdSolver::eval(std::vector<Word> words) {
  std::vector<Word> xwords;
  YWord pure;
  for (auto& w : words) {
    if (w.is_identity()) continue;
    if (w.is_pure_y()) pure *= w.pure;
    else xwords.push_back(std::move(w));
  }
  if (xwords.empty()) return y_.phi_y(pure);

  std::sort(xwords.begin(), xwords.end());
  if (!pure.empty()) xwords[0] = xwords[0].appended_y(pure);
  if (xwords.size() == 1) xwords[0] = xwords[0].min_rotation();

  auto hit = memo_.find(xwords);
  if (hit != memo_.end()) return hit->second;

  const int j = xwords[0].colors[0];
  int total = 0;
  for (const auto& w : xwords) total += w.x_degree_of(j);

  Polynomial acc(0);
  for (int k = 1; 2 * k <= total; ++k) {
    Polynomial coeff = params_.a(j, k);
    if (coeff.is_zero()) continue;
    for (const auto& d : enumerate_decompositions(xwords, j, k)) {
      Polynomial l = eval(d.left);
      if (l.is_zero()) continue;
      acc += coeff * l * eval(d.right);
    }
  }
  memo_.emplace(std::move(xwords), acc);
  return acc;
}

Polynomial sd_phi(const std::vector<Word>& words, const HeavyParams& params, const YModel& y) {
  SdSolver s(params, y);
  return s.phi_k(words);
}

SeriesTable series_g(const HeavyParams& params, int k_max, int order) {
  if (k_max < 0 || order < 0) throw DomainError("series bounds must be nonnegative");
  if (k_max > 40 || order > 200)
    throw ResourceError("series table request exceeds the built-in guard (k_max 40, order 200)");

  // internal extension: c[K][m] is materialized for K + ceil(m/2) <= ext, which is
  // closed under the recurrence and covers every exposed entry
  const int ext = k_max + (order + 1) / 2;
  std::vector<std::vector<Polynomial>> c(ext + 1);
  for (int K = 0; K <= ext; ++K) c[K].assign(std::min(order, 2 * (ext - K)) + 1, Polynomial(0));
  for (int K = 0; K <= ext; ++K) c[K][0] = Polynomial(1);

  auto at = [&](int K, int m) -> const Polynomial& { return c[K][m]; };

  for (int m = 1; m <= order; ++m) {
    for (int K = 1; K <= ext; ++K) {
      if (m >= (int)c[K].size()) continue;
      Polynomial v = (K == 1) ? Polynomial(0) : at(K - 1, m);
      for (int k = 1; 2 * k <= m; ++k) {
        Polynomial coeff = params.a(1, k);
        if (coeff.is_zero()) continue;
        coeff = binom_rat(K + k - 2, K - 1) * coeff;
        Polynomial conv(0);
        for (int m1 = 0; m1 + 2 * k <= m; ++m1) conv += at(k, m1) * at(k + K - 1, m - 2 * k - m1);
        v += coeff * conv;
      }
      c[K][m] = std::move(v);
    }
  }

  SeriesTable t;
  t.k_max = k_max;
  t.order = order;
  t.c.resize(k_max + 1);
  for (int K = 0; K <= k_max; ++K) {
    t.c[K].assign(order + 1, Polynomial(0));
    for (int m = 0; m <= order && m < (int)c[K].size(); ++m) t.c[K][m] = c[K][m];
  }
  return t;
}

SdReport series_vs_sd_report(const HeavyParams& params, int degree) {
  if (degree < 0 || degree % 2 != 0) throw DomainError("comparison degree must be even");
  if (degree > 40) throw ResourceError("comparison degree capped at 40");

  const int kcheck = 3;
  SeriesTable t = series_g(params, kcheck, degree);
  SdSolver solver(params, YModel::none());

  auto power = [](int n) {
    std::vector<Letter> seq(n, Letter{true, 1});
    return Word::from_letters(seq);
  };

  SdReport r;
  for (int n = 0; n <= degree; ++n) {
    if (!(t.c[1][n] == solver.phi(power(n)))) {
      r.ok = false;
      r.K = 1;
      r.m = n;
      r.message = "series c[1][" + std::to_string(n) + "] disagrees with the recursion";
      return r;
    }
  }
  for (int K = 1; K <= kcheck; ++K) {
    for (int m = 0; m <= degree; ++m) {
      Polynomial sum(0);
      std::vector<int> parts(K, 0);
      auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == K - 1) {
          parts[i] = left;
          std::vector<Word> tuple;
          for (int n : parts) tuple.push_back(power(n));
          sum += solver.phi_k(tuple);
          return;
        }
        for (int n = 0; n <= left; ++n) {
          parts[i] = n;
          self(self, i + 1, left - n);
        }
      };
      rec(rec, 0, m);
      if (!(t.c[K][m] == sum)) {
        r.ok = false;
        r.K = K;
        r.m = m;
        r.message = "series c[" + std::to_string(K) + "][" + std::to_string(m) +
                    "] disagrees with the composition sum";
        return r;
      }
    }
  }
  return r;
}

}  // namespace heavymom
