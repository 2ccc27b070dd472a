#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "doctest.h"
#include "heavymom/lab.hpp"

using namespace heavymom;

namespace {

Eigen::MatrixXd random_dense(int n, SplitMix64& rng, double scale = 1.0) {
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = scale * (2.0 * rng.next_unit() - 1.0);
  return m;
}

RationalMatrix random_rational(int n, SplitMix64& rng, bool symmetric) {
  RationalMatrix m(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = symmetric ? i : 0; j < n; ++j) {
      Rational v((long)rng.next_below(7) - 3, (long)rng.next_below(4) + 1);
      m[i][j] = v;
      if (symmetric) m[j][i] = v;
    }
  return m;
}

Eigen::MatrixXd to_double(const RationalMatrix& m) {
  int n = (int)m.size();
  Eigen::MatrixXd d(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d(i, j) = rat_double(m[i][j]);
  return d;
}

// small pool of connected test graphs exercising loops, multi-edges and cycles
std::vector<StarTestGraph> graph_pool() {
  return {
      StarTestGraph::make(1, {{0, 0, 1}}),                                  // self loop
      StarTestGraph::make(2, {{0, 1, 1}, {0, 1, 1}}),                       // doubled edge
      StarTestGraph::make(2, {{0, 1, 1}, {1, 0, 2}}),                       // 2-cycle
      StarTestGraph::make(3, {{0, 1, 1}, {1, 2, 2}, {2, 0, 1}}),            // triangle
      StarTestGraph::make(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 2}, {3, 0, 2}}), // 4-cycle
      StarTestGraph::make(4, {{1, 0, 1}, {2, 0, 1}, {3, 0, 2}}),            // 3-leaf star
      StarTestGraph::make(3, {{0, 1, 1}, {1, 0, 1}, {1, 2, 2}, {2, 1, 2}}), // path of 2-cycles
      StarTestGraph::make(2, {{0, 1, 1}, {0, 1, 2}, {1, 0, 1}}),            // theta
      StarTestGraph::make(2, {{0, 0, 1}, {0, 1, 2}, {1, 1, 1}}),            // loops + bridge
  };
}

}  // namespace

TEST_CASE("ensemble parameter rows") {
  SUBCASE("centered adjacency: constant row") {
    auto row = ensemble_parameter_row(EnsembleSpec::erdos_renyi(2), 4);
    REQUIRE(row.size() == 4);
    for (auto& v : row) CHECK(v == 2);
    auto p = ensemble_parameter(EnsembleSpec::erdos_renyi(2), 4);
    CHECK(p.a(1, 3) == 2);
    CHECK(p.a(7, 2) == 2);  // shared across letters
  }
  SUBCASE("weighted network: alpha times the weight moments") {
    auto rad = ensemble_parameter_row(EnsembleSpec::network(Rational(1, 3), WeightLaw::rademacher), 3);
    CHECK(rad == std::vector<Rational>{Rational(1, 3), Rational(1, 3), Rational(1, 3)});
    auto gau = ensemble_parameter_row(EnsembleSpec::network(2, WeightLaw::gaussian), 3);
    CHECK(gau == std::vector<Rational>{2, 6, 30});  // 2 * (1, 3, 15)
    auto uni = ensemble_parameter_row(EnsembleSpec::network(1, WeightLaw::uniform), 3);
    CHECK(uni == std::vector<Rational>{Rational(1, 3), Rational(1, 5), Rational(1, 7)});
  }
  SUBCASE("truncated heavy tail") {
    auto row = ensemble_parameter_row(EnsembleSpec::truncated_levy(1, 1), 3);
    CHECK(row == std::vector<Rational>{1, Rational(1, 3), Rational(1, 5)});
    // integer stability index keeps B^alpha exact
    auto r2 = ensemble_parameter_row(EnsembleSpec::truncated_levy(1, 2), 2);
    CHECK(r2 == std::vector<Rational>{Rational(1, 2), Rational(1, 6)});
    // fractional index falls back to the closest double for B^alpha
    auto r3 = ensemble_parameter_row(EnsembleSpec::truncated_levy(Rational(3, 2), 2), 1);
    CHECK(rat_double(r3[0]) == doctest::Approx(1.5 / (0.5 * std::pow(2.0, 1.5))));
  }
  SUBCASE("custom tables") {
    auto spec = EnsembleSpec::custom([](SplitMix64& g, int) { return g.next_unit(); },
                                     {1, Rational(1, 2)});
    CHECK(ensemble_parameter_row(spec, 2) == std::vector<Rational>{1, Rational(1, 2)});
    CHECK_THROWS_AS(ensemble_parameter_row(spec, 3), DomainError);
  }
  SUBCASE("rejects out-of-range shapes") {
    CHECK_THROWS_AS(EnsembleSpec::erdos_renyi(0), DomainError);
    CHECK_THROWS_AS(EnsembleSpec::erdos_renyi(-1), DomainError);
    CHECK_THROWS_AS(EnsembleSpec::network(0, WeightLaw::gaussian), DomainError);
    CHECK_THROWS_AS(EnsembleSpec::truncated_levy(2, 1), DomainError);
    CHECK_THROWS_AS(EnsembleSpec::truncated_levy(0, 1), DomainError);
    CHECK_THROWS_AS(EnsembleSpec::truncated_levy(1, 0), DomainError);
    CHECK_THROWS_AS(ensemble_parameter_row(EnsembleSpec::erdos_renyi(1), 0), DomainError);
  }
}

TEST_CASE("matrix samples") {
  SUBCASE("centered adjacency entries and zero diagonal") {
    auto s = sample_matrix(EnsembleSpec::erdos_renyi(1), 4, 11);
    REQUIRE(s.entries.rows() == 4);
    for (int i = 0; i < 4; ++i) {
      CHECK(s.entries(i, i) == 0.0);
      for (int j = 0; j < 4; ++j) {
        CHECK(s.entries(i, j) == s.entries(j, i));
        if (i != j) CHECK((s.entries(i, j) == 0.75 || s.entries(i, j) == -0.25));
      }
    }
  }
  SUBCASE("weighted network entries") {
    auto s = sample_matrix(EnsembleSpec::network(2, WeightLaw::rademacher), 6, 3);
    for (int i = 0; i < 6; ++i) {
      CHECK(s.entries(i, i) == 0.0);
      for (int j = 0; j < 6; ++j)
        CHECK((s.entries(i, j) == 0.0 || std::abs(s.entries(i, j)) == 1.0));
    }
  }
  SUBCASE("truncated heavy-tail entries stay inside the cutoff") {
    auto s = sample_matrix(EnsembleSpec::truncated_levy(1, 1), 40, 17);
    bool diag_used = false, nonzero = false;
    for (int i = 0; i < 40; ++i)
      for (int j = 0; j < 40; ++j) {
        CHECK(std::abs(s.entries(i, j)) <= 1.0);
        CHECK(s.entries(i, j) == s.entries(j, i));
        if (i == j && s.entries(i, j) != 0.0) diag_used = true;
        if (s.entries(i, j) != 0.0) nonzero = true;
      }
    CHECK(nonzero);
    CHECK(diag_used);  // unlike the adjacency models, the diagonal is sampled
  }
  SUBCASE("deterministic in the seed") {
    auto spec = EnsembleSpec::network(1, WeightLaw::gaussian);
    auto a = sample_matrix(spec, 12, 42), b = sample_matrix(spec, 12, 42);
    CHECK(a.entries == b.entries);
    auto c = sample_matrix(spec, 12, 43);
    CHECK(a.entries != c.entries);
  }
  SUBCASE("rejects impossible shapes") {
    CHECK_THROWS_AS(sample_matrix(EnsembleSpec::erdos_renyi(5), 4, 1), DomainError);
    CHECK_THROWS_AS(sample_matrix(EnsembleSpec::erdos_renyi(1), 1, 1), DomainError);
  }
}

TEST_CASE("word and entrywise traces on pinned matrices") {
  MatrixBindings bind;
  Eigen::MatrixXd x(2, 2), y(2, 2);
  x << 0, 1, 1, 0;
  y << 2, 0, 0, 3;
  bind.x[1] = x;
  bind.y[1] = y;

  CHECK(word_trace(Word::parse("1"), bind) == 1.0);
  CHECK(word_trace(Word::parse("y1^2"), bind) == doctest::Approx(6.5));  // (4 + 9)/2
  CHECK(word_trace(Word::parse("x1^2"), bind) == doctest::Approx(1.0));
  CHECK(word_trace(Word::parse("x1 y1 x1 y1"), bind) == doctest::Approx(6.0));  // Tr=12
  CHECK(word_trace(Word::parse("x1^4"), bind) == doctest::Approx(1.0));

  Eigen::MatrixXd g(2, 2);
  g << 1, 2, 2, 5;
  bind.x[2] = g;
  CHECK(word_trace(Word::parse("x2"), bind) == doctest::Approx(3.0));
  CHECK(word_trace(Word::parse("x1 x2"), bind) == doctest::Approx(2.0));  // Tr(XG)/2 = (2+2)/2

  CHECK(hadamard_trace({Word::parse("x2"), Word::parse("x2")}, bind) == doctest::Approx(13.0));
  CHECK(hadamard_trace({Word::parse("x2^2"), Word::parse("y1")}, bind) ==
        doctest::Approx(48.5));  // diag(G^2) = (5, 29) against (2, 3)
  CHECK(hadamard_trace({Word::parse("1"), Word::parse("y1")}, bind) == doctest::Approx(2.5));

  SUBCASE("fast paths match the generic product") {
    SplitMix64 rng(1234);
    Eigen::MatrixXd m = random_dense(40, rng);
    m = (m + m.transpose()).eval();
    MatrixBindings b2;
    b2.x[1] = m;
    CHECK(word_trace(Word::parse("x1^2"), b2) == doctest::Approx((m * m).trace() / 40));
    CHECK(word_trace(Word::parse("x1^4"), b2) ==
          doctest::Approx((m * m * m * m).trace() / 40).epsilon(1e-10));
    // non-symmetric input must not take the Frobenius shortcut
    Eigen::MatrixXd ns = random_dense(15, rng);
    MatrixBindings b3;
    b3.x[1] = ns;
    CHECK(word_trace(Word::parse("x1^2"), b3) == doctest::Approx((ns * ns).trace() / 15));
  }
  SUBCASE("missing binding is reported") {
    CHECK_THROWS_AS(word_trace(Word::parse("x3"), bind), DomainError);
    CHECK_THROWS_AS(word_trace(Word::parse("x1 y2 x1"), bind), DomainError);
  }
}

TEST_CASE("sampled moments hit the exact finite-size means") {
  // E[(1/N)Tr X^2] in closed form, against 4 standard errors
  SUBCASE("centered adjacency") {
    int n = 50;
    auto res = empirical_phi(EnsembleSpec::erdos_renyi(1), n, {Word::parse("x1^2")}, 4000, 777);
    double exact = (n - 1) * (1.0 - 1.0 / n) / n;
    CHECK(std::abs(res.mean - exact) <= 4 * res.stderr_value);
  }
  SUBCASE("truncated heavy tail") {
    int n = 50;
    auto res = empirical_phi(EnsembleSpec::truncated_levy(1, 1), n, {Word::parse("x1^2")}, 4000, 909);
    double exact = (n - 1.0) / n;  // cutoff at N: second moment loses exactly 1/N
    CHECK(std::abs(res.mean - exact) <= 4 * res.stderr_value);
  }
  SUBCASE("weighted network") {
    int n = 50;
    auto res = empirical_phi(EnsembleSpec::network(1, WeightLaw::gaussian), n,
                             {Word::parse("x1^2")}, 4000, 909, 2);
    double exact = (n - 1.0) / n;
    CHECK(std::abs(res.mean - exact) <= 4 * res.stderr_value);
  }
}

TEST_CASE("sampled moments approach the limit values") {
  auto spec = EnsembleSpec::erdos_renyi(1);
  SUBCASE("fourth moment near a1^2 * 2 + a2 = 3") {
    int n = 500;
    auto res = empirical_phi(spec, n, {Word::parse("x1^4")}, 20, 20240613);
    CHECK(std::abs(res.mean - 3.0) <= 4 * res.stderr_value + 5.0 / n);
    CHECK(res.replicates == 20);
    CHECK(res.stderr_value > 0);
  }
  SUBCASE("entrywise pair near a1^2 + a2 = 2") {
    int n = 400;
    auto res = empirical_phi(spec, n, {Word::parse("x1^2"), Word::parse("x1^2")}, 40, 20240613);
    CHECK(std::abs(res.mean - 2.0) <= 4 * res.stderr_value + 4.0 / n);
  }
  SUBCASE("error shrinks with the dimension") {
    auto lo = empirical_phi(spec, 250, {Word::parse("x1^4")}, 20, 20240613);
    auto hi = empirical_phi(spec, 2000, {Word::parse("x1^4")}, 20, 20240613);
    CHECK(std::abs(lo.mean - 3.0) > std::abs(hi.mean - 3.0));
    CHECK(std::abs(hi.mean - 3.0) < 0.1);
  }
  SUBCASE("deterministic and thread-count independent") {
    auto a = empirical_phi(spec, 100, {Word::parse("x1^4")}, 13, 5, 1);
    auto b = empirical_phi(spec, 100, {Word::parse("x1^4")}, 13, 5, 4);
    CHECK(a.mean == b.mean);
    CHECK(a.stderr_value == b.stderr_value);
  }
  SUBCASE("rejects unsupported inputs") {
    CHECK_THROWS_AS(empirical_phi(spec, 50, {Word::parse("x1 y1 x1")}, 5, 1), DomainError);
    CHECK_THROWS_AS(empirical_phi(spec, 50, {Word::parse("x1^2")}, 0, 1), DomainError);
  }
  SUBCASE("replicate seeds never collide") {
    std::set<std::uint64_t> seen;
    for (int r = 0; r < 100; ++r)
      for (int j = 1; j <= 3; ++j) seen.insert(replicate_seed(replicate_seed(20240613, r), j));
    CHECK(seen.size() == 300);
  }
}

TEST_CASE("finite-size graph traces: exact inclusion-exclusion identities") {
  SplitMix64 rng(20260814);
  for (const auto& t : graph_pool()) {
    // distinct labels present in the graph
    std::set<int> labels;
    for (auto& e : t.edges) labels.insert(e.label);
    for (int n : {4, 5}) {
      std::map<int, RationalMatrix> bind;
      for (int l : labels) bind[l] = random_rational(n, rng, true);

      // direct injective sum == combination of plain traces over quotients
      Rational direct = injective_trace_direct(t, bind);
      Rational via_quotients = traffic_trace_exact(t, bind, true);
      CHECK(direct == via_quotients);

      // plain trace == sum of injective traces of the quotients
      Rational plain = traffic_trace_exact(t, bind, false);
      Rational rebuilt = trace_from_injective<Rational>(
          t, [&](const StarTestGraph& q) { return injective_trace_direct(q, bind); });
      CHECK(plain == rebuilt);

      // the floating-point path agrees with the exact one
      std::map<int, Eigen::MatrixXd> dbind;
      for (auto& [l, m] : bind) dbind[l] = to_double(m);
      CHECK(traffic_trace(t, dbind, false) == doctest::Approx(rat_double(plain)).epsilon(1e-9));
      CHECK(traffic_trace(t, dbind, true) == doctest::Approx(rat_double(direct)).epsilon(1e-9));
    }
  }
}

TEST_CASE("finite-size graph traces: examples") {
  SUBCASE("self loop is the plain normalized trace") {
    auto t = StarTestGraph::make(1, {{0, 0, 1}});
    Eigen::MatrixXd m(3, 3);
    m << 1, 9, 9, 9, 2, 9, 9, 9, 4;
    CHECK(traffic_trace(t, {{1, m}}, false) == doctest::Approx(7.0 / 3.0));
  }
  SUBCASE("directed cycle matches the exact labeled sum") {
    auto t = StarTestGraph::make(4, {{0, 1, 1}, {1, 2, 2}, {2, 3, 3}, {3, 0, 4}});
    SplitMix64 rng(5);
    std::map<int, RationalMatrix> bind;
    for (int l = 1; l <= 4; ++l) bind[l] = random_rational(6, rng, false);
    std::map<int, Eigen::MatrixXd> dbind;
    for (auto& [l, m] : bind) dbind[l] = to_double(m);
    // fast matrix-product path against the label-sum path (exact arithmetic)
    CHECK(traffic_trace(t, dbind, false) ==
          doctest::Approx(rat_double(traffic_trace_exact(t, bind, false))).epsilon(1e-12));
  }
  SUBCASE("doubled edge concentrates near the density") {
    auto t = StarTestGraph::make(2, {{0, 1, 1}, {0, 1, 1}});
    auto m = sample_matrix(EnsembleSpec::erdos_renyi(Rational(1, 2)), 1200, 99).entries;
    double v = traffic_trace_edges(t, {m, m}, false);
    CHECK(std::abs(v - 0.5) < 0.15);  // sd of the estimator is about 0.03 here
  }
  SUBCASE("resource guard on the labeled sum") {
    auto t = graph_pool()[5];  // star: no cycle fast path
    std::map<int, Eigen::MatrixXd> bind;
    bind[1] = Eigen::MatrixXd::Identity(60, 60);
    bind[2] = Eigen::MatrixXd::Identity(60, 60);
    CHECK_THROWS_AS(traffic_trace(t, bind, false, 1000), ResourceError);
  }
  SUBCASE("shape errors") {
    auto t = StarTestGraph::make(2, {{0, 1, 1}, {1, 0, 2}});
    std::map<int, Eigen::MatrixXd> bind;
    bind[1] = Eigen::MatrixXd::Identity(4, 4);
    CHECK_THROWS_AS(traffic_trace(t, bind, false), DomainError);  // label 2 unbound
    bind[2] = Eigen::MatrixXd::Identity(5, 5);
    CHECK_THROWS_AS(traffic_trace(t, bind, false), DomainError);  // dimension mismatch
  }
}

TEST_CASE("operator norm") {
  SUBCASE("agrees with a singular value decomposition") {
    SplitMix64 rng(42);
    for (int trial = 0; trial < 5; ++trial) {
      Eigen::MatrixXd m = random_dense(30, rng);
      CHECK(operator_norm(m) ==
            doctest::Approx(m.jacobiSvd().singularValues()(0)).epsilon(1e-8));
      Eigen::MatrixXd s = m + m.transpose();
      CHECK(operator_norm(s) ==
            doctest::Approx(s.jacobiSvd().singularValues()(0)).epsilon(1e-8));
    }
  }
  SUBCASE("edge cases") {
    CHECK(operator_norm(Eigen::MatrixXd::Zero(5, 5)) == 0.0);
    CHECK(operator_norm(Eigen::MatrixXd::Identity(5, 5)) == doctest::Approx(1.0));
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(2, 2);
    d(0, 0) = 3;
    d(1, 1) = -7;
    CHECK(operator_norm(d) == doctest::Approx(7.0));
    CHECK_THROWS_AS(operator_norm(Eigen::MatrixXd::Zero(2, 3)), DomainError);
  }
}

TEST_CASE("trace bound from the bridge structure") {
  SUBCASE("three-leaf star against identity matrices") {
    auto t = StarTestGraph::make(4, {{1, 0, 1}, {2, 0, 2}, {3, 0, 3}});
    std::vector<Eigen::MatrixXd> mats(3, Eigen::MatrixXd::Identity(64, 64));
    auto res = ms_bound_check(t, mats);
    CHECK(res.lhs == doctest::Approx(1.0));
    CHECK(res.bound == doctest::Approx(8.0));  // 64^{3/2 - 1}
    CHECK(res.satisfied);
  }
  SUBCASE("two-edge-connected graphs get the dimension-free bound") {
    auto t = StarTestGraph::make(2, {{0, 1, 1}, {1, 0, 1}});
    SplitMix64 rng(7);
    Eigen::MatrixXd m = random_dense(20, rng);
    auto res = ms_bound_check(t, {m, m.transpose()});
    double norms = operator_norm(m) * operator_norm(m.transpose());
    CHECK(res.bound == doctest::Approx(norms));  // r = 2 kills the N power
    CHECK(res.satisfied);
  }
  SUBCASE("doubled edge is tight for the identity") {
    auto t = StarTestGraph::make(2, {{0, 1, 1}, {0, 1, 1}});
    Eigen::MatrixXd id = Eigen::MatrixXd::Identity(10, 10);
    auto res = ms_bound_check(t, {id, id});
    CHECK(res.lhs == doctest::Approx(1.0));
    CHECK(res.bound == doctest::Approx(1.0));
    CHECK(res.satisfied);
  }
  SUBCASE("randomized graphs and matrices never violate the bound") {
    SplitMix64 rng(99);
    auto pool = graph_pool();
    int cases = 0;
    for (int trial = 0; trial < 12; ++trial) {
      for (const auto& t : pool) {
        int n = 4 + (int)rng.next_below(13);
        std::vector<Eigen::MatrixXd> mats;
        for (std::size_t e = 0; e < t.edges.size(); ++e) mats.push_back(random_dense(n, rng));
        auto res = ms_bound_check(t, mats);
        CHECK(res.satisfied);
        ++cases;
      }
    }
    CHECK(cases == 108);
  }
}

TEST_CASE("moment-sequence validation") {
  SUBCASE("pure point masses are valid, including zero") {
    for (Rational a : {Rational(0), Rational(2), Rational(1, 3)}) {
      auto res = validate_parameter({a, 0, 0, 0}, 3);
      CHECK(res.valid);
    }
  }
  SUBCASE("constant rows are valid") {
    CHECK(validate_parameter({Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)}, 3)
              .valid);
    CHECK(validate_parameter({1, 1, 1, 1}, 3).valid);
  }
  SUBCASE("catalan numbers form a moment sequence") {
    CHECK(validate_parameter({1, 1, 2, 5, 14, 42}, 4).valid);
    // heavy-tail rows a_k = 1/((2k-1)) are the moments of a uniform weight
    CHECK(validate_parameter({1, Rational(1, 3), Rational(1, 5), Rational(1, 7)}, 3).valid);
  }
  SUBCASE("hump in the middle is rejected with a signed witness") {
    auto res = validate_parameter({1, 2, 1}, 2);
    REQUIRE_FALSE(res.valid);
    CHECK(res.block == 1);
    CHECK(res.order == 2);
    CHECK(res.witness == -3);  // det [[1,2],[2,1]]
  }
  SUBCASE("zero head with mass later is rejected") {
    auto res = validate_parameter({0, 1, 0, 0}, 3);
    REQUIRE_FALSE(res.valid);
    CHECK(res.block == 1);
    CHECK(res.witness == -1);
  }
  SUBCASE("negative entries are caught in the shifted block") {
    auto res = validate_parameter({1, -1, 1}, 2);
    REQUIRE_FALSE(res.valid);
    CHECK(res.witness < 0);
  }
  SUBCASE("input shape guards") {
    CHECK_THROWS_AS(validate_parameter({1, 1}, 0), DomainError);
    CHECK_THROWS_AS(validate_parameter({1, 1}, 2), DomainError);
  }
}
