#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "heavymom/graph.hpp"
#include "heavymom/params.hpp"
#include "heavymom/rng.hpp"
#include "heavymom/word.hpp"

namespace heavymom {

// centered weight laws for the network ensemble, with exact even-moment tables
enum class WeightLaw { rademacher, gaussian, uniform };
Rational weight_even_moment(WeightLaw law, int k);  // E[w^{2k}]
double sample_weight(WeightLaw law, SplitMix64& rng);

// A finite-N ensemble whose limit is a heavy family:
//  * erdos_renyi    - centered sparse adjacency matrix, a_k = alpha
//  * network        - sparse adjacency Hadamard an iid centered weight, a_k = alpha m_{2k}
//  * truncated_levy - symmetric Pareto entries (density (a/2)|u|^{-a-1}, |u| >= 1)
//                     truncated at B sigma_N with sigma_N = N^{1/a}, a_k = a/((2k-a)B^a)
//  * custom         - caller-provided entry sampler and a_k table
struct EnsembleSpec {
  enum class Kind { erdos_renyi, network, truncated_levy, custom };
  Kind kind = Kind::erdos_renyi;
  Rational alpha = 1;  // erdos_renyi / network density, or the levy stability index
  Rational cutoff = 1; // levy truncation B
  WeightLaw law = WeightLaw::rademacher;
  std::function<double(SplitMix64&, int)> custom_entry;  // (rng, N) -> one entry
  std::vector<Rational> custom_a;
  bool custom_zero_diagonal = true;

  static EnsembleSpec erdos_renyi(const Rational& alpha);
  static EnsembleSpec network(const Rational& alpha, WeightLaw law);
  static EnsembleSpec truncated_levy(const Rational& alpha_s, const Rational& B);
  static EnsembleSpec custom(std::function<double(SplitMix64&, int)> entry,
                             std::vector<Rational> a, bool zero_diagonal = true);
};

// closed-form limit parameters (a_1, ..., a_{k_max})
std::vector<Rational> ensemble_parameter_row(const EnsembleSpec& spec, int k_max);
HeavyParams ensemble_parameter(const EnsembleSpec& spec, int k_max);

struct MatrixSample {
  int n = 0;
  std::uint64_t seed = 0;
  Eigen::MatrixXd entries;
};

// deterministic in (spec, n, seed); symmetric, entries drawn for i <= j and mirrored
MatrixSample sample_matrix(const EnsembleSpec& spec, int n, std::uint64_t seed);

// matrices bound to the letters of a word; y matrices must be diagonal
struct MatrixBindings {
  std::map<int, Eigen::MatrixXd> x, y;
};

// (1/N) Tr of the bound word, with shortcuts for x^2 and x^4
double word_trace(const Word& w, const MatrixBindings& bind);
// (1/N) sum_i of the product of the words' diagonal entries (entrywise product)
double hadamard_trace(const std::vector<Word>& words, const MatrixBindings& bind);

struct EmpiricalResult {
  double mean = 0;
  double stderr_value = 0;
  int replicates = 0;
};

// Monte Carlo joint moment: every x letter gets an independent sample of the
// ensemble per replicate; replicate r, letter j uses
// seed = replicate_seed(replicate_seed(base_seed, r), j).
EmpiricalResult empirical_phi(const EnsembleSpec& spec, int n, const std::vector<Word>& words,
                              int replicates, std::uint64_t base_seed, int threads = 1);

using RationalMatrix = std::vector<std::vector<Rational>>;

// (injective) traffic trace of a labeled graph at finite N.  Non-injective traces of
// simple directed cycles reduce to a word trace; everything else sums over labelings
// under the cap.  Injective mode combines non-injective traces of quotients.
double traffic_trace(const StarTestGraph& t, const std::map<int, Eigen::MatrixXd>& bind,
                     bool injective, std::int64_t cap = 100'000'000);
double traffic_trace_edges(const StarTestGraph& t, const std::vector<Eigen::MatrixXd>& per_edge,
                           bool injective, std::int64_t cap = 100'000'000);

// exact-arithmetic path for small N plus a direct injective-sum oracle
Rational traffic_trace_exact(const StarTestGraph& t, const std::map<int, RationalMatrix>& bind,
                             bool injective, std::int64_t cap = 100'000'000);
Rational injective_trace_direct(const StarTestGraph& t, const std::map<int, RationalMatrix>& bind,
                                std::int64_t cap = 100'000'000);

// largest singular value by power iteration on A^T A
double operator_norm(const Eigen::MatrixXd& m, double rel_tol = 1e-12);

struct MsBoundResult {
  double lhs = 0;
  double bound = 0;
  bool satisfied = true;
};

// |tau_N[T]| <= N^{r/2 - 1} * product of edge operator norms, r = leaf count of the
// tree of two-edge-connected components
MsBoundResult ms_bound_check(const StarTestGraph& t,
                             const std::vector<Eigen::MatrixXd>& edge_matrices);

struct ValidationResult {
  bool valid = true;
  int block = 0;     // 1: [a_{i+j+1}], 2: [a_{i+j+2}]
  int order = 0;     // size of the offending principal minor
  Rational witness = 0;
};

// Moment-sequence test through order m: both Hankel blocks must be positive
// semidefinite; decided by exact LDL^T, the witness is the first negative leading
// principal minor (product of pivots).
ValidationResult validate_parameter(const std::vector<Rational>& a, int m);

}  // namespace heavymom
