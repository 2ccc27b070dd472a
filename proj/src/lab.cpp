#include "heavymom/lab.hpp"

#include <cmath>
#include <exception>
#include <thread>

namespace heavymom {

namespace {

void require_range(const EnsembleSpec& spec) {
  switch (spec.kind) {
    case EnsembleSpec::Kind::erdos_renyi:
    case EnsembleSpec::Kind::network:
      if (spec.alpha <= 0) throw DomainError("density alpha must be positive");
      break;
    case EnsembleSpec::Kind::truncated_levy:
      if (spec.alpha <= 0 || spec.alpha >= 2)
        throw DomainError("stability index must lie in (0,2)");
      if (spec.cutoff <= 0) throw DomainError("truncation cutoff must be positive");
      break;
    case EnsembleSpec::Kind::custom:
      if (!spec.custom_entry) throw DomainError("custom ensemble needs an entry sampler");
      break;
  }
}

}  // namespace

Rational weight_even_moment(WeightLaw law, int k) {
  if (k < 1) throw DomainError("moment index must be positive");
  switch (law) {
    case WeightLaw::rademacher:
      return 1;
    case WeightLaw::gaussian: {
      Rational m = 1;
      for (int i = 3; i <= 2 * k - 1; i += 2) m *= i;  // (2k-1)!!
      return m;
    }
    case WeightLaw::uniform:
      return Rational(1, 2 * k + 1);
  }
  throw DomainError("unknown weight law");
}

double sample_weight(WeightLaw law, SplitMix64& rng) {
  switch (law) {
    case WeightLaw::rademacher:
      return (rng.next() & 1) ? 1.0 : -1.0;
    case WeightLaw::gaussian: {
      double u1 = 1.0 - rng.next_unit();
      double u2 = rng.next_unit();
      return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }
    case WeightLaw::uniform:
      return 2.0 * rng.next_unit() - 1.0;
  }
  throw DomainError("unknown weight law");
}

EnsembleSpec EnsembleSpec::erdos_renyi(const Rational& alpha) {
  EnsembleSpec s;
  s.kind = Kind::erdos_renyi;
  s.alpha = alpha;
  require_range(s);
  return s;
}

EnsembleSpec EnsembleSpec::network(const Rational& alpha, WeightLaw law) {
  EnsembleSpec s;
  s.kind = Kind::network;
  s.alpha = alpha;
  s.law = law;
  require_range(s);
  return s;
}

EnsembleSpec EnsembleSpec::truncated_levy(const Rational& alpha_s, const Rational& B) {
  EnsembleSpec s;
  s.kind = Kind::truncated_levy;
  s.alpha = alpha_s;
  s.cutoff = B;
  require_range(s);
  return s;
}

EnsembleSpec EnsembleSpec::custom(std::function<double(SplitMix64&, int)> entry,
                                  std::vector<Rational> a, bool zero_diagonal) {
  EnsembleSpec s;
  s.kind = Kind::custom;
  s.custom_entry = std::move(entry);
  s.custom_a = std::move(a);
  s.custom_zero_diagonal = zero_diagonal;
  require_range(s);
  return s;
}

std::vector<Rational> ensemble_parameter_row(const EnsembleSpec& spec, int k_max) {
  require_range(spec);
  if (k_max < 1) throw DomainError("k_max must be positive");
  std::vector<Rational> row;
  switch (spec.kind) {
    case EnsembleSpec::Kind::erdos_renyi:
      row.assign(k_max, spec.alpha);
      break;
    case EnsembleSpec::Kind::network:
      for (int k = 1; k <= k_max; ++k) row.push_back(spec.alpha * weight_even_moment(spec.law, k));
      break;
    case EnsembleSpec::Kind::truncated_levy: {
      // B^alpha is exact for integer alpha or B = 1; otherwise the closest double
      Rational pow_ba;
      if (spec.cutoff == 1) pow_ba = 1;
      else if (spec.alpha.get_den() == 1) pow_ba = rat_pow(spec.cutoff, (int)spec.alpha.get_num().get_si());
      else pow_ba = Rational(std::pow(rat_double(spec.cutoff), rat_double(spec.alpha)));
      for (int k = 1; k <= k_max; ++k)
        row.push_back(spec.alpha / ((Rational(2 * k) - spec.alpha) * pow_ba));
      break;
    }
    case EnsembleSpec::Kind::custom:
      if ((int)spec.custom_a.size() < k_max)
        throw DomainError("custom ensemble table is shorter than k_max");
      row.assign(spec.custom_a.begin(), spec.custom_a.begin() + k_max);
      break;
  }
  return row;
}

HeavyParams ensemble_parameter(const EnsembleSpec& spec, int k_max) {
  return HeavyParams::numeric_shared(ensemble_parameter_row(spec, k_max), false);
}

MatrixSample sample_matrix(const EnsembleSpec& spec, int n, std::uint64_t seed) {
  require_range(spec);
  if (n < 2) throw DomainError("matrix dimension must be at least 2");

  MatrixSample out;
  out.n = n;
  out.seed = seed;
  out.entries = Eigen::MatrixXd::Zero(n, n);
  SplitMix64 rng(seed);

  switch (spec.kind) {
    case EnsembleSpec::Kind::erdos_renyi: {
      if (spec.alpha > n) throw DomainError("edge probability alpha/N exceeds one");
      double p = rat_double(spec.alpha) / n;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          double v = (rng.next_unit() < p) ? 1.0 - p : -p;
          out.entries(i, j) = out.entries(j, i) = v;
        }
      break;
    }
    case EnsembleSpec::Kind::network: {
      if (spec.alpha > n) throw DomainError("edge probability alpha/N exceeds one");
      double p = rat_double(spec.alpha) / n;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          double v = (rng.next_unit() < p) ? sample_weight(spec.law, rng) : 0.0;
          out.entries(i, j) = out.entries(j, i) = v;
        }
      break;
    }
    case EnsembleSpec::Kind::truncated_levy: {
      double a = rat_double(spec.alpha);
      double c = rat_double(spec.cutoff) * std::pow((double)n, 1.0 / a);
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          double mag = std::pow(1.0 - rng.next_unit(), -1.0 / a);  // Pareto, |u| >= 1
          double v = (rng.next() & 1) ? mag : -mag;
          v = (std::abs(v) <= c) ? v / c : 0.0;
          out.entries(i, j) = out.entries(j, i) = v;
        }
      break;
    }
    case EnsembleSpec::Kind::custom: {
      for (int i = 0; i < n; ++i)
        for (int j = spec.custom_zero_diagonal ? i + 1 : i; j < n; ++j) {
          double v = spec.custom_entry(rng, n);
          out.entries(i, j) = out.entries(j, i) = v;
        }
      break;
    }
  }
  return out;
}

namespace {

int common_dim(const MatrixBindings& bind) {
  int n = -1;
  auto visit = [&](const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols()) throw DomainError("bound matrices must be square");
    if (n == -1) n = (int)m.rows();
    else if (n != (int)m.rows()) throw DomainError("bound matrices disagree on dimension");
  };
  for (auto& [j, m] : bind.x) visit(m);
  for (auto& [j, m] : bind.y) visit(m);
  if (n == -1) throw DomainError("no matrices bound");
  return n;
}

const Eigen::MatrixXd& bound(const std::map<int, Eigen::MatrixXd>& table, int j,
                             const char* what) {
  auto it = table.find(j);
  if (it == table.end())
    throw DomainError(std::string("no matrix bound to ") + what + std::to_string(j));
  return it->second;
}

// product of the diagonal entries of a pure y word, one value per index
Eigen::VectorXd pure_diagonal(const YWord& w, const MatrixBindings& bind, int n) {
  Eigen::VectorXd d = Eigen::VectorXd::Ones(n);
  for (auto& [j, e] : w.factors) {
    const auto& m = bound(bind.y, j, "y");
    for (int t = 0; t < e; ++t) d.array() *= m.diagonal().array();
  }
  return d;
}

// full product matrix of a word (generic path, diagonal letters as scalings)
Eigen::MatrixXd word_matrix(const Word& w, const MatrixBindings& bind, int n) {
  Eigen::MatrixXd p;
  bool started = false;
  auto feed_y = [&](const YWord& q) {
    if (q.empty()) return;
    Eigen::VectorXd d = pure_diagonal(q, bind, n);
    if (started) p = p * d.asDiagonal();
    else {
      p = Eigen::MatrixXd(d.asDiagonal());
      started = true;
    }
  };
  if (w.is_pure_y()) {
    feed_y(w.pure);
    if (!started) return Eigen::MatrixXd::Identity(n, n);
    return p;
  }
  for (int i = 0; i < w.length(); ++i) {
    const auto& x = bound(bind.x, w.colors[i], "x");
    if (started) p = p * x;
    else {
      p = x;
      started = true;
    }
    feed_y(w.slots[i]);
  }
  return p;
}

bool is_even_power(const Word& w, int exponent) {
  if (w.length() != exponent || w.y_degree() != 0) return false;
  for (int c : w.colors)
    if (c != w.colors[0]) return false;
  return true;
}

double frob2_selfadjoint_lower(const Eigen::MatrixXd& s) {
  double f = 0;
  for (int i = 0; i < s.rows(); ++i) {
    f += s(i, i) * s(i, i);
    for (int j = 0; j < i; ++j) f += 2.0 * s(i, j) * s(i, j);
  }
  return f;
}

}  // namespace

double word_trace(const Word& w, const MatrixBindings& bind) {
  int n = common_dim(bind);
  if (w.is_identity()) return 1.0;
  if (w.is_pure_y()) return pure_diagonal(w.pure, bind, n).mean();

  if (is_even_power(w, 2)) {
    const auto& x = bound(bind.x, w.colors[0], "x");
    if (x.isApprox(x.transpose())) return x.squaredNorm() / n;
  }
  if (is_even_power(w, 4)) {
    const auto& x = bound(bind.x, w.colors[0], "x");
    if (x.isApprox(x.transpose())) {
      Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n, n);
      s.selfadjointView<Eigen::Lower>().rankUpdate(x);  // s = x x^T = x^2
      return frob2_selfadjoint_lower(s) / n;
    }
  }
  if (w.length() == 1 && w.y_degree() == 0)
    return bound(bind.x, w.colors[0], "x").trace() / n;

  // split the trace: Tr(UV) = sum U .* V^T
  auto seq = w.letters();
  int half = ((int)seq.size() + 1) / 2;
  auto build = [&](int from, int to) {
    Eigen::MatrixXd p;
    bool started = false;
    for (int i = from; i < to; ++i) {
      if (seq[i].is_x) {
        const auto& x = bound(bind.x, seq[i].j, "x");
        if (started) p = p * x;
        else {
          p = x;
          started = true;
        }
      } else {
        const auto& y = bound(bind.y, seq[i].j, "y");
        if (started) p = p * y.diagonal().asDiagonal();
        else {
          p = Eigen::MatrixXd(y.diagonal().asDiagonal());
          started = true;
        }
      }
    }
    return p;
  };
  Eigen::MatrixXd u = build(0, half);
  Eigen::MatrixXd v = build(half, (int)seq.size());
  return u.cwiseProduct(v.transpose()).sum() / n;
}

namespace {

Eigen::VectorXd word_diagonal(const Word& w, const MatrixBindings& bind, int n) {
  if (w.is_identity()) return Eigen::VectorXd::Ones(n);
  if (w.is_pure_y()) return pure_diagonal(w.pure, bind, n);
  if (is_even_power(w, 2)) {
    const auto& x = bound(bind.x, w.colors[0], "x");
    if (x.isApprox(x.transpose())) return x.rowwise().squaredNorm();
  }
  if (w.length() == 1 && w.y_degree() == 0)
    return bound(bind.x, w.colors[0], "x").diagonal();
  return word_matrix(w, bind, n).diagonal();
}

}  // namespace

double hadamard_trace(const std::vector<Word>& words, const MatrixBindings& bind) {
  int n = common_dim(bind);
  Eigen::VectorXd d = Eigen::VectorXd::Ones(n);
  for (const auto& w : words) d.array() *= word_diagonal(w, bind, n).array();
  return d.mean();
}

EmpiricalResult empirical_phi(const EnsembleSpec& spec, int n, const std::vector<Word>& words,
                              int replicates, std::uint64_t base_seed, int threads) {
  if (replicates < 1) throw DomainError("need at least one replicate");
  std::vector<int> letters;
  for (const auto& w : words) {
    if (w.y_degree() != 0)
      throw DomainError("the ensemble driver binds heavy letters only; no y letters");
    for (int c : w.colors)
      if (std::find(letters.begin(), letters.end(), c) == letters.end()) letters.push_back(c);
  }

  std::vector<double> values(replicates, 0.0);
  auto run_range = [&](int from, int to, std::exception_ptr& err) {
    try {
      for (int r = from; r < to; ++r) {
        MatrixBindings bind;
        std::uint64_t rs = replicate_seed(base_seed, r);
        for (int j : letters) bind.x[j] = sample_matrix(spec, n, replicate_seed(rs, j)).entries;
        if (letters.empty()) bind.x[1] = sample_matrix(spec, n, replicate_seed(rs, 1)).entries;
        values[r] = (words.size() == 1) ? word_trace(words[0], bind)
                                        : hadamard_trace(words, bind);
      }
    } catch (...) {
      err = std::current_exception();
    }
  };

  int workers = std::max(1, std::min(threads, replicates));
  std::vector<std::exception_ptr> errs(workers);
  if (workers == 1) {
    run_range(0, replicates, errs[0]);
  } else {
    std::vector<std::thread> pool;
    int chunk = (replicates + workers - 1) / workers;
    for (int t = 0; t < workers; ++t) {
      int from = t * chunk, to = std::min(replicates, from + chunk);
      if (from >= to) break;
      pool.emplace_back(run_range, from, to, std::ref(errs[t]));
    }
    for (auto& th : pool) th.join();
  }
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);

  // compensated mean so thread count cannot change the result
  double sum = 0, comp = 0;
  for (double v : values) {
    double y = v - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  EmpiricalResult res;
  res.replicates = replicates;
  res.mean = sum / replicates;
  if (replicates > 1) {
    double ss = 0;
    for (double v : values) ss += (v - res.mean) * (v - res.mean);
    res.stderr_value = std::sqrt(ss / (replicates - 1) / replicates);
  }
  return res;
}

namespace {

// N^v against the labeling cap
void check_labelings(int n_vertices, int n, std::int64_t cap) {
  double total = std::pow((double)n, (double)n_vertices);
  if (total > (double)cap)
    throw ResourceError("labeling sum needs " + std::to_string(total) + " terms, cap " +
                        std::to_string(cap));
}

template <class Entry>
double tau_direct(const StarTestGraph& t, Entry entry, int n, std::int64_t cap, bool injective) {
  check_labelings(t.n, n, cap);
  std::vector<int> phi(t.n, 0);
  double total = 0;
  for (;;) {
    bool ok = true;
    if (injective)
      for (int i = 0; i < t.n && ok; ++i)
        for (int j = i + 1; j < t.n && ok; ++j)
          if (phi[i] == phi[j]) ok = false;
    if (ok) {
      double p = 1;
      for (std::size_t e = 0; e < t.edges.size() && p != 0; ++e)
        p *= entry(e, phi[t.edges[e].dst], phi[t.edges[e].src]);
      total += p;
    }
    int i = 0;
    while (i < t.n && phi[i] == n - 1) phi[i++] = 0;
    if (i == t.n) break;
    ++phi[i];
  }
  return total / n;
}

// single directed cycle <=> word trace; gives the exact-equality fast path
bool simple_cycle_order(const StarTestGraph& t, std::vector<int>& edge_order) {
  if ((int)t.edges.size() != t.n) return false;
  std::vector<int> out_edge(t.n, -1), in_deg(t.n, 0);
  for (int e = 0; e < (int)t.edges.size(); ++e) {
    if (out_edge[t.edges[e].src] != -1) return false;
    out_edge[t.edges[e].src] = e;
    ++in_deg[t.edges[e].dst];
  }
  for (int v = 0; v < t.n; ++v)
    if (out_edge[v] == -1 || in_deg[v] != 1) return false;
  edge_order.clear();
  int v = 0;
  for (int step = 0; step < t.n; ++step) {
    int e = out_edge[v];
    edge_order.push_back(e);
    v = t.edges[e].dst;
  }
  return v == 0 && (int)edge_order.size() == t.n;  // one cycle, not several
}

double tau_edges_noninjective(const StarTestGraph& t,
                              const std::vector<const Eigen::MatrixXd*>& mats, std::int64_t cap) {
  int n = (int)mats[0]->rows();
  std::vector<int> order;
  if (simple_cycle_order(t, order)) {
    if (order.size() == 1) return mats[order[0]]->trace() / n;
    Eigen::MatrixXd p = *mats[order[0]];
    for (std::size_t i = 1; i + 1 < order.size(); ++i) p = *mats[order[i]] * p;
    // last factor folded into the trace
    const Eigen::MatrixXd& last = *mats[order.back()];
    return last.cwiseProduct(p.transpose()).sum() / n;
  }
  return tau_direct(
      t, [&](std::size_t e, int r, int c) { return (*mats[e])(r, c); }, n, cap, false);
}

}  // namespace

double traffic_trace_edges(const StarTestGraph& t, const std::vector<Eigen::MatrixXd>& per_edge,
                           bool injective, std::int64_t cap) {
  if (per_edge.size() != t.edges.size())
    throw DomainError("need exactly one matrix per edge");
  int n = per_edge.empty() ? 0 : (int)per_edge[0].rows();
  for (const auto& m : per_edge)
    if (m.rows() != n || m.cols() != n) throw DomainError("edge matrices disagree on dimension");
  if (t.edges.empty()) throw DomainError("graph has no edges");

  auto non_inj = [&](const StarTestGraph& g) {
    std::vector<const Eigen::MatrixXd*> mats;
    for (const auto& m : per_edge) mats.push_back(&m);
    return tau_edges_noninjective(g, mats, cap);
  };
  if (!injective) return non_inj(t);
  return injective_from_trace<double>(t, non_inj, cap);
}

double traffic_trace(const StarTestGraph& t, const std::map<int, Eigen::MatrixXd>& bind,
                     bool injective, std::int64_t cap) {
  std::vector<Eigen::MatrixXd> per_edge;
  for (const auto& e : t.edges) {
    auto it = bind.find(e.label);
    if (it == bind.end())
      throw DomainError("no matrix bound to label " + std::to_string(e.label));
    per_edge.push_back(it->second);
  }
  return traffic_trace_edges(t, per_edge, injective, cap);
}

namespace {

Rational tau_exact_noninjective(const StarTestGraph& t,
                                const std::vector<const RationalMatrix*>& mats, int n,
                                std::int64_t cap) {
  check_labelings(t.n, n, cap);
  std::vector<int> phi(t.n, 0);
  Rational total = 0;
  for (;;) {
    Rational p = 1;
    for (std::size_t e = 0; e < t.edges.size() && p != 0; ++e)
      p *= (*mats[e])[phi[t.edges[e].dst]][phi[t.edges[e].src]];
    total += p;
    int i = 0;
    while (i < t.n && phi[i] == n - 1) phi[i++] = 0;
    if (i == t.n) break;
    ++phi[i];
  }
  return total / n;
}

std::vector<const RationalMatrix*> exact_per_edge(const StarTestGraph& t,
                                                  const std::map<int, RationalMatrix>& bind,
                                                  int& n) {
  std::vector<const RationalMatrix*> mats;
  n = -1;
  for (const auto& e : t.edges) {
    auto it = bind.find(e.label);
    if (it == bind.end())
      throw DomainError("no matrix bound to label " + std::to_string(e.label));
    const RationalMatrix& m = it->second;
    if (n == -1) n = (int)m.size();
    if ((int)m.size() != n) throw DomainError("matrices disagree on dimension");
    for (const auto& row : m)
      if ((int)row.size() != n) throw DomainError("matrix is not square");
    mats.push_back(&m);
  }
  if (n <= 0) throw DomainError("graph has no edges");
  return mats;
}

}  // namespace

Rational traffic_trace_exact(const StarTestGraph& t, const std::map<int, RationalMatrix>& bind,
                             bool injective, std::int64_t cap) {
  int n = 0;
  exact_per_edge(t, bind, n);
  auto non_inj = [&](const StarTestGraph& g) {
    int gn = 0;
    auto mats = exact_per_edge(g, bind, gn);
    return tau_exact_noninjective(g, mats, gn, cap);
  };
  if (!injective) return non_inj(t);
  return injective_from_trace<Rational>(t, non_inj, cap);
}

Rational injective_trace_direct(const StarTestGraph& t, const std::map<int, RationalMatrix>& bind,
                                std::int64_t cap) {
  int n = 0;
  auto mats = exact_per_edge(t, bind, n);
  check_labelings(t.n, n, cap);
  std::vector<int> phi(t.n, 0);
  Rational total = 0;
  for (;;) {
    bool distinct = true;
    for (int i = 0; i < t.n && distinct; ++i)
      for (int j = i + 1; j < t.n && distinct; ++j)
        if (phi[i] == phi[j]) distinct = false;
    if (distinct) {
      Rational p = 1;
      for (std::size_t e = 0; e < t.edges.size() && p != 0; ++e)
        p *= (*mats[e])[phi[t.edges[e].dst]][phi[t.edges[e].src]];
      total += p;
    }
    int i = 0;
    while (i < t.n && phi[i] == n - 1) phi[i++] = 0;
    if (i == t.n) break;
    ++phi[i];
  }
  return total / n;
}

double operator_norm(const Eigen::MatrixXd& m, double rel_tol) {
  int n = (int)m.rows();
  if (m.cols() != n) throw DomainError("operator norm expects a square matrix");
  SplitMix64 rng(0x6f70b7a6u);  // fixed start vector: reproducible and generic
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v(i) = rng.next_unit() - 0.5;
  double nv = v.norm();
  if (nv == 0) v.setOnes();
  v.normalize();

  double lambda = 0;
  for (int it = 0; it < 20000; ++it) {
    Eigen::VectorXd w = m.transpose() * (m * v);
    double norm = w.norm();
    if (norm == 0) return 0;
    double next = norm;  // v is unit, so |A^T A v| -> largest eigenvalue of A^T A
    v = w / norm;
    if (it > 0 && std::abs(next - lambda) <= rel_tol * next) {
      lambda = next;
      break;
    }
    lambda = next;
  }
  return std::sqrt(lambda);
}

MsBoundResult ms_bound_check(const StarTestGraph& t,
                             const std::vector<Eigen::MatrixXd>& edge_matrices) {
  MsBoundResult res;
  res.lhs = std::abs(traffic_trace_edges(t, edge_matrices, false));
  int n = (int)edge_matrices.at(0).rows();
  double r = (double)two_edge_structure(t).leaf_count;
  double bound = std::pow((double)n, r / 2.0 - 1.0);
  for (const auto& m : edge_matrices) bound *= operator_norm(m);
  res.bound = bound;
  res.satisfied = res.lhs <= bound * (1.0 + 1e-9);
  return res;
}

ValidationResult validate_parameter(const std::vector<Rational>& a, int m) {
  if (m < 1) throw DomainError("validation order must be positive");
  if ((int)a.size() < m + 1)
    throw DomainError("need at least m+1 parameter entries");

  const int len = (int)a.size();
  for (int block = 1; block <= 2; ++block) {
    // [a_{i+j+block}] must fit inside the table
    int s = std::min(m, (len + 2 - block) / 2);
    std::vector<std::vector<Rational>> h(s, std::vector<Rational>(s));
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) h[i][j] = a[i + j + block - 1];

    Rational minors = 1;  // product of accepted pivots = current leading minor
    for (int k = 0; k < s; ++k) {
      Rational pivot = h[k][k];
      if (pivot < 0) {
        ValidationResult bad;
        bad.valid = false;
        bad.block = block;
        bad.order = k + 1;
        bad.witness = minors * pivot;
        return bad;
      }
      if (pivot == 0) {
        for (int j = k + 1; j < s; ++j)
          if (h[k][j] != 0) {
            ValidationResult bad;  // principal 2x2 minor on rows {k, j} is -h[k][j]^2
            bad.valid = false;
            bad.block = block;
            bad.order = 2;
            bad.witness = -h[k][j] * h[k][j];
            return bad;
          }
        continue;
      }
      minors *= pivot;
      for (int i = k + 1; i < s; ++i) {
        Rational f = h[i][k] / pivot;
        for (int j = k + 1; j < s; ++j) h[i][j] -= f * h[k][j];
      }
    }
  }
  return {};
}

}  // namespace heavymom
