#pragma once

#include <map>
#include <string>
#include <vector>

#include "heavymom/params.hpp"
#include "heavymom/word.hpp"
#include "heavymom/ymodel.hpp"

namespace heavymom {

// One way of consuming 2k occurrences of the pivot letter: the k blocks strictly
// inside the pairs and the k + K - 1 blocks after/between them (plus the leading
// block of every word past the first).
struct SdDecomposition {
  std::vector<Word> left;
  std::vector<Word> right;
};

// All selections of an even number of x_j positions per word (word 1 must select its
// leading letter; 2k positions in total), paired consecutively within each word.
std::vector<SdDecomposition> enumerate_decompositions(const std::vector<Word>& words, int j,
                                                      int k);

// Evaluates joint moments by the pivot recursion
//   Phi^K(x_j P_1, ..., P_K) = sum_k a_{j,k} sum_decomp Phi^k(L) Phi^{k+K-1}(R),
// independent of the cycle enumeration.  Diagonal or absent y only.
class SdSolver {
 public:
  SdSolver(HeavyParams params, YModel y);

  Polynomial phi(const Word& w);
  Polynomial phi_k(const std::vector<Word>& words);

  void clear_memo();
  std::size_t memo_size() const { return memo_.size(); }

 private:
  Polynomial eval(std::vector<Word> words);

  HeavyParams params_;
  YModel y_;
  std::map<std::vector<Word>, Polynomial> memo_;
};

// one-shot convenience wrapper
Polynomial sd_phi(const std::vector<Word>& words, const HeavyParams& params, const YModel& y);

// Coefficients of the resolvent-style generating series for the first letter:
// G(K) = sum_m c[K][m] lambda^{-(K+m)}, with G(0) := 1 and
//   G(K) = (1/lambda) (G(K-1) + sum_k a_k binom(K+k-2, K-1) G(k) G(k+K-1)).
struct SeriesTable {
  int k_max = 0;
  int order = 0;
  std::vector<std::vector<Polynomial>> c;  // c[K][m], K <= k_max, m <= order
};

SeriesTable series_g(const HeavyParams& params, int k_max, int order);

// Cross-check of the series against the recursion: c[1][n] must equal phi(x^n) and
// c[K][m] must equal the sum of phi_k over all compositions of m into K parts >= 0.
// A mismatch is reported, not thrown.
struct SdReport {
  bool ok = true;
  int K = -1;
  int m = -1;
  std::string message = "match";
};

SdReport series_vs_sd_report(const HeavyParams& params, int degree);

}  // namespace heavymom
