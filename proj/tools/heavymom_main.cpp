#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "heavymom/json_io.hpp"
#include "heavymom/lab.hpp"
#include "heavymom/moments.hpp"
#include "heavymom/sd.hpp"

using namespace heavymom;

namespace {

constexpr const char* kFormats = "json|csv|pretty";

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  return out + "\"";
}

std::string word_list(const std::vector<Word>& words) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out += ", ";
    out += words[i].str();
  }
  return out;
}

std::vector<Word> parse_words(const std::vector<std::string>& texts) {
  std::vector<Word> words;
  for (const auto& t : texts) words.push_back(Word::parse(t));
  if (words.empty()) throw ParseError("no word given");
  return words;
}

// ---------------------------------------------------------------------------
// moments / sd

struct MomentsConfig {
  std::vector<std::string> word_texts;
  std::string param = "symbolic";
  std::string y = "none";
  bool symbolic = false;
  std::string engine = "tree";
  std::string format = "pretty";
  int threads = 1;
  int kmax = 10;
  std::int64_t node_cap = 100'000'000;
  std::int64_t partition_cap = 1'000'000;
  bool y_given = false;
};

int run_moments(const MomentsConfig& cfg) {
  ParamChoice pc = parse_param_text(cfg.symbolic ? "symbolic" : cfg.param, cfg.kmax);
  YModel y = (cfg.y_given || !pc.y) ? parse_y_text(cfg.y) : *pc.y;
  auto words = parse_words(cfg.word_texts);

  std::vector<std::string> engines;
  if (cfg.engine == "all") {
    engines = {"tree", "partition", "sd"};
    if (words.size() > 1) engines = {"tree", "sd"};  // the oracle covers single words
  } else if (cfg.engine == "tree" || cfg.engine == "partition" || cfg.engine == "sd") {
    engines = {cfg.engine};
  } else {
    throw ParseError("unknown engine '" + cfg.engine + "' (tree|partition|sd|all)");
  }

  EnumOptions opts;
  opts.threads = cfg.threads;
  opts.node_cap = cfg.node_cap;

  std::map<std::string, Polynomial> results;
  for (const auto& eng : engines) {
    if (eng == "tree")
      results[eng] = words.size() == 1 ? phi(words[0], pc.params, y, opts)
                                       : phi_k(words, pc.params, y, opts);
    else if (eng == "partition") {
      if (words.size() > 1)
        throw DomainError("the partition oracle computes single-word moments only");
      results[eng] = phi_bruteforce(words[0], pc.params, y, cfg.partition_cap);
    } else {
      SdSolver solver(pc.params, y);
      results[eng] = words.size() == 1 ? solver.phi(words[0]) : solver.phi_k(words);
    }
  }

  bool agree = true;
  for (const auto& [name, p] : results)
    if (p != results.begin()->second) agree = false;

  const Polynomial& value = results.begin()->second;
  if (cfg.format == "json") {
    OrderedJson out;
    out["command"] = "moments";
    out["words"] = OrderedJson::array();
    for (const auto& w : words) out["words"].push_back(w.str());
    out["parameters"] = pc.label;
    out["engines"] = engines;
    out["results"] = OrderedJson::object();
    for (const auto& [name, p] : results) out["results"][name] = polynomial_json(p);
    out["text"] = value.str();
    if (value.is_constant()) out["value"] = rat_str(value.constant_value());
    out["agreement"] = agree;
    std::cout << out.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    std::cout << "engine,word,polynomial\n";
    for (const auto& [name, p] : results)
      std::cout << name << "," << csv_quote(word_list(words)) << "," << csv_quote(p.str())
                << "\n";
  } else {
    std::cout << value.str() << "\n";
    if (engines.size() > 1) {
      for (const auto& [name, p] : results)
        std::cout << name << ": " << p.str() << "\n";
      std::cout << "agreement: " << (agree ? "yes" : "NO") << "\n";
    }
  }

  if (!agree) {
    std::cerr << "engines disagree on " << word_list(words) << ":\n";
    for (const auto& [name, p] : results)
      std::cerr << "  " << name << ": " << p.str() << "\n";
    auto first = results.begin();
    for (auto it = std::next(results.begin()); it != results.end(); ++it)
      if (it->second != first->second)
        std::cerr << "  difference (" << it->first << " - " << first->first
                  << "): " << (it->second - first->second).str() << "\n";
    return 4;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// series

struct SeriesConfig {
  int kmax = 1;
  int order = 12;
  std::string param = "symbolic";
  bool symbolic = false;
  bool check = false;
  std::string format = "pretty";
};

int run_series(const SeriesConfig& cfg) {
  ParamChoice pc =
      parse_param_text(cfg.symbolic ? "symbolic" : cfg.param, std::max(1, cfg.order / 2));
  SeriesTable table = series_g(pc.params, cfg.kmax, cfg.order);

  SdReport report;
  if (cfg.check) {
    int degree = std::min(cfg.order - cfg.order % 2, 8);
    report = series_vs_sd_report(pc.params, degree);
  }

  if (cfg.format == "json") {
    OrderedJson out;
    out["command"] = "series";
    out["parameters"] = pc.label;
    out["k_max"] = cfg.kmax;
    out["order"] = cfg.order;
    out["rows"] = OrderedJson::array();
    for (int K = 0; K < (int)table.c.size(); ++K) {
      OrderedJson row;
      row["K"] = K;
      row["coefficients"] = OrderedJson::array();
      for (int m = 0; m < (int)table.c[K].size(); ++m)
        row["coefficients"].push_back({{"m", m}, {"value", polynomial_json(table.c[K][m])}});
      out["rows"].push_back(row);
    }
    if (cfg.check)
      out["check"] = {{"ok", report.ok}, {"K", report.K}, {"m", report.m},
                      {"message", report.message}};
    std::cout << out.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    std::cout << "K,m,value\n";
    for (int K = 0; K < (int)table.c.size(); ++K)
      for (int m = 0; m < (int)table.c[K].size(); ++m)
        std::cout << K << "," << m << "," << csv_quote(table.c[K][m].str()) << "\n";
  } else {
    for (int K = 0; K < (int)table.c.size(); ++K) {
      std::cout << "c[" << K << "] = [";
      for (int m = 0; m < (int)table.c[K].size(); ++m)
        std::cout << (m ? ", " : "") << table.c[K][m].str();
      std::cout << "]\n";
    }
    if (cfg.check) std::cout << "check: " << (report.ok ? "ok" : report.message) << "\n";
  }
  return cfg.check && !report.ok ? 4 : 0;
}

// ---------------------------------------------------------------------------
// simulate

struct SimulateConfig {
  std::string ensemble;
  std::string alpha = "1";
  std::string alpha_stable = "1";
  std::string cutoff = "1";
  std::string law = "rademacher";
  int n = 1000;
  int reps = 100;
  std::uint64_t seed = 20240613;
  int threads = 1;
  std::vector<std::string> word_texts;
  std::string format = "pretty";
};

int run_simulate(const SimulateConfig& cfg) {
  EnsembleSpec spec = EnsembleSpec::erdos_renyi(1);
  OrderedJson ens;
  if (cfg.ensemble == "erdos-renyi" || cfg.ensemble == "er") {
    spec = EnsembleSpec::erdos_renyi(rat_parse(cfg.alpha));
    ens = {{"kind", "erdos-renyi"}, {"alpha", cfg.alpha}};
  } else if (cfg.ensemble == "network") {
    WeightLaw law = cfg.law == "rademacher"  ? WeightLaw::rademacher
                    : cfg.law == "gaussian"  ? WeightLaw::gaussian
                    : cfg.law == "uniform"   ? WeightLaw::uniform
                                             : throw ParseError("unknown weight law '" + cfg.law + "'");
    spec = EnsembleSpec::network(rat_parse(cfg.alpha), law);
    ens = {{"kind", "network"}, {"alpha", cfg.alpha}, {"law", cfg.law}};
  } else if (cfg.ensemble == "truncated-levy" || cfg.ensemble == "levy") {
    spec = EnsembleSpec::truncated_levy(rat_parse(cfg.alpha_stable), rat_parse(cfg.cutoff));
    ens = {{"kind", "truncated-levy"}, {"alpha_stable", cfg.alpha_stable},
           {"cutoff", cfg.cutoff}};
  } else {
    throw ParseError("unknown ensemble '" + cfg.ensemble +
                     "' (erdos-renyi|network|truncated-levy)");
  }

  auto words = parse_words(cfg.word_texts);
  int degree = 0;
  for (const auto& w : words) degree += w.total_degree();

  EmpiricalResult emp = empirical_phi(spec, cfg.n, words, cfg.reps, cfg.seed, cfg.threads);

  HeavyParams limit_params = ensemble_parameter(spec, std::max(1, degree / 2));
  Polynomial limit_poly = words.size() == 1 ? phi(words[0], limit_params, YModel::none())
                                            : phi_k(words, limit_params, YModel::none());
  Rational limit = limit_poly.constant_value();
  double z = emp.stderr_value > 0 ? (emp.mean - rat_double(limit)) / emp.stderr_value : 0.0;

  if (cfg.format == "json") {
    OrderedJson out;
    out["command"] = "simulate";
    out["ensemble"] = ens;
    out["words"] = OrderedJson::array();
    for (const auto& w : words) out["words"].push_back(w.str());
    out["n"] = cfg.n;
    out["replicates"] = cfg.reps;
    out["seed"] = cfg.seed;
    out["mean"] = double_str(emp.mean);
    out["stderr"] = double_str(emp.stderr_value);
    out["limit"] = rat_str(limit);
    out["z"] = double_str(z);
    std::cout << out.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    std::cout << "ensemble,words,n,replicates,seed,mean,stderr,limit,z\n";
    std::cout << cfg.ensemble << "," << csv_quote(word_list(words)) << "," << cfg.n << ","
              << cfg.reps << "," << cfg.seed << "," << double_str(emp.mean) << ","
              << double_str(emp.stderr_value) << "," << rat_str(limit) << "," << double_str(z)
              << "\n";
  } else {
    std::cout << "ensemble: " << ens.dump() << "\n";
    std::cout << "words: " << word_list(words) << "\n";
    std::cout << "n = " << cfg.n << ", replicates = " << cfg.reps << ", seed = " << cfg.seed
              << ", threads = " << cfg.threads << "\n";
    std::cout << "mean = " << double_str(emp.mean) << "\n";
    std::cout << "stderr = " << double_str(emp.stderr_value) << "\n";
    std::cout << "limit = " << rat_str(limit) << "\n";
    std::cout << "z = " << double_str(z) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyConfig {
  int degree = 8;
  std::string param = "symbolic";
  bool symbolic = false;
  std::string format = "pretty";
  int threads = 1;
  std::int64_t node_cap = 100'000'000;
  std::int64_t partition_cap = 1'000'000;
  std::string inject_fault;  // "j,k,delta" corrupts the tree engine's table
};

struct CheckLine {
  std::string name;
  bool ok = true;
  std::string detail;
};

Word word_from_mask(int length, unsigned mask) {
  std::vector<Letter> seq;
  for (int i = 0; i < length; ++i) seq.push_back({true, (mask >> i) & 1u ? 2 : 1});
  return Word::from_letters(seq);
}

std::string cycle_key(const ColoredCycleOnTree& c) {
  std::ostringstream os;
  for (int v : c.parent) os << v << ',';
  os << ';';
  for (int v : c.edge_color) os << v << ',';
  os << ';';
  for (int v : c.edge_visits) os << v << ',';
  os << ';';
  for (int v : c.walk) os << v << ',';
  return os.str();
}

int run_verify(const VerifyConfig& cfg) {
  if (cfg.degree < 1 || cfg.degree > 10)
    throw DomainError("verification degree must lie in 1..10");
  ParamChoice pc = parse_param_text(cfg.symbolic ? "symbolic" : cfg.param,
                                    std::max(5, cfg.degree / 2 + 1));

  HeavyParams tree_params = pc.params;
  if (!cfg.inject_fault.empty()) {
    std::stringstream in(cfg.inject_fault);
    int j = 0, k = 0;
    char c1 = 0, c2 = 0;
    std::string delta;
    in >> j >> c1 >> k >> c2;
    std::getline(in, delta);
    if (j < 1 || k < 1 || c1 != ',' || c2 != ',' || delta.empty())
      throw ParseError("fault spec wants j,k,delta");
    tree_params.inject_fault(j, k, rat_parse(delta));
  }

  EnumOptions opts;
  opts.threads = cfg.threads;
  opts.node_cap = cfg.node_cap;
  YModel none = YModel::none();
  SdSolver solver(pc.params, none);

  std::vector<CheckLine> checks;
  std::optional<std::string> counterexample;
  std::vector<std::string> diff_lines;

  // 1+2. every pure word in two letters: engines agree; odd degrees vanish
  {
    CheckLine agree{"engines-agree", true, ""};
    CheckLine odd{"odd-vanishing", true, ""};
    int n_even = 0, n_odd = 0;
    for (int L = 1; L <= cfg.degree && agree.ok && odd.ok; ++L) {
      for (unsigned mask = 0; mask < (1u << L); ++mask) {
        Word w = word_from_mask(L, mask);
        Polynomial t = phi(w, tree_params, none, opts);
        Polynomial s = solver.phi(w);
        std::optional<Polynomial> p;
        if (L <= 8) p = phi_bruteforce(w, pc.params, none, cfg.partition_cap);
        if (L % 2 == 1) {
          ++n_odd;
          if (!t.is_zero() || !s.is_zero() || (p && !p->is_zero())) {
            odd.ok = false;
            odd.detail = "nonzero odd moment at " + w.str();
            counterexample = w.str();
            break;
          }
          continue;
        }
        ++n_even;
        bool same = t == s && (!p || *p == t);
        if (!same) {
          agree.ok = false;
          agree.detail = "mismatch at " + w.str();
          counterexample = w.str();
          diff_lines.push_back("  tree:      " + t.str());
          if (p) diff_lines.push_back("  partition: " + p->str());
          diff_lines.push_back("  recursion: " + s.str());
          break;
        }
      }
    }
    if (agree.ok) agree.detail = std::to_string(n_even) + " even words, degree <= " +
                                 std::to_string(cfg.degree);
    if (odd.ok) odd.detail = std::to_string(n_odd) + " odd words";
    checks.push_back(agree);
    checks.push_back(odd);
  }

  // 3. series coefficients against the recursion
  {
    CheckLine line{"series-vs-recursion", true, ""};
    int degree = std::min(cfg.degree - cfg.degree % 2, 8);
    SdReport rep = series_vs_sd_report(pc.params, degree);
    line.ok = rep.ok;
    line.detail = rep.ok ? "degree " + std::to_string(degree) : rep.message;
    if (!rep.ok && !counterexample) counterexample = "series K=" + std::to_string(rep.K) +
                                                     " m=" + std::to_string(rep.m);
    checks.push_back(line);
  }

  // 4. trivial parameter degenerates to the Catalan numbers
  {
    CheckLine line{"catalan-degeneration", true, ""};
    const long catalan[] = {1, 1, 2, 5, 14, 42, 132};
    HeavyParams triv = HeavyParams::trivial(1);
    SeriesTable t1 = series_g(triv, 1, cfg.degree);
    for (int k = 0; 2 * k <= cfg.degree && line.ok; ++k) {
      std::vector<Letter> seq(2 * k, Letter{true, 1});
      Polynomial m = phi(Word::from_letters(seq), triv, none, opts);
      bool ok = m == Polynomial(Rational(catalan[k])) &&
                t1.c[1][2 * k] == Polynomial(Rational(catalan[k]));
      if (!ok) {
        line.ok = false;
        line.detail = "x1^" + std::to_string(2 * k);
        if (!counterexample) counterexample = "x1^" + std::to_string(2 * k);
      }
    }
    if (line.ok) line.detail = "k <= " + std::to_string(cfg.degree / 2);
    checks.push_back(line);
  }

  // 5. unfolding partitions every cycle family onto doubled representatives
  {
    CheckLine line{"unfold-fibers", true, ""};
    int classes = 0;
    for (int L = 2; L <= std::min(cfg.degree, 6) && line.ok; L += 2) {
      for (unsigned mask = 0; mask < (1u << L) && line.ok; ++mask) {
        std::vector<int> gamma;
        for (int i = 0; i < L; ++i) gamma.push_back((mask >> i) & 1u ? 2 : 1);
        auto cycles = enumerate_cycles(gamma);
        std::map<std::string, int> fibers;
        for (const auto& c : cycles) {
          auto image = unfold(c);
          if (!image.all_doubled() || image.gamma != gamma || !(unfold(image) == image)) {
            line.ok = false;
            line.detail = "bad image for " + word_from_mask(L, mask).str();
            if (!counterexample) counterexample = word_from_mask(L, mask).str();
            break;
          }
          bool found = false;
          for (const auto& member : cycles)
            if (member == image) found = true;
          if (!found) {
            line.ok = false;
            line.detail = "image outside the family for " + word_from_mask(L, mask).str();
            if (!counterexample) counterexample = word_from_mask(L, mask).str();
            break;
          }
          ++fibers[cycle_key(image)];
        }
        int total = 0;
        for (auto& [key, size] : fibers) total += size;
        if (line.ok && total != (int)cycles.size()) {
          line.ok = false;
          line.detail = "fibers do not partition " + word_from_mask(L, mask).str();
        }
        classes += (int)fibers.size();
      }
    }
    if (line.ok) line.detail = std::to_string(classes) + " fibers";
    checks.push_back(line);
  }

  // 6. moment-sequence validation spot checks
  {
    CheckLine line{"parameter-validation", true, ""};
    auto bad = validate_parameter({1, 2, 1}, 2);
    bool ok = !bad.valid && bad.witness == -3 && bad.block == 1;
    ok = ok && validate_parameter({1, 1, 1, 1}, 3).valid;
    ok = ok && validate_parameter({2, 0, 0, 0}, 3).valid;
    line.ok = ok;
    line.detail = ok ? "witness -3 reproduced" : "unexpected validation verdict";
    if (!ok && !counterexample) counterexample = "(1,2,1)";
    checks.push_back(line);
  }

  bool all_ok = true;
  for (const auto& c : checks) all_ok = all_ok && c.ok;

  if (cfg.format == "json") {
    OrderedJson out;
    out["command"] = "verify";
    out["parameters"] = pc.label;
    out["degree"] = cfg.degree;
    out["checks"] = OrderedJson::array();
    for (const auto& c : checks)
      out["checks"].push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    out["ok"] = all_ok;
    if (counterexample) out["counterexample"] = *counterexample;
    std::cout << out.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    std::cout << "check,ok,detail\n";
    for (const auto& c : checks)
      std::cout << c.name << "," << (c.ok ? "true" : "false") << "," << csv_quote(c.detail)
                << "\n";
  } else {
    for (const auto& c : checks)
      std::cout << c.name << ": " << (c.ok ? "ok" : "FAIL") << " (" << c.detail << ")\n";
    if (counterexample) {
      std::cout << "counterexample: " << *counterexample << "\n";
      for (const auto& l : diff_lines) std::cout << l << "\n";
    }
    std::cout << "verification: " << (all_ok ? "PASS" : "FAIL") << "\n";
  }
  return all_ok ? 0 : 4;
}

// ---------------------------------------------------------------------------
// graph

struct GraphConfig {
  std::string file;
  std::string param = "symbolic";
  bool symbolic = false;
  std::string format = "pretty";
};

int run_graph(const GraphConfig& cfg) {
  StarTestGraph t = graph_from_file(cfg.file);
  ParamChoice pc = parse_param_text(cfg.symbolic ? "symbolic" : cfg.param, 10);

  bool cyclic = is_cyclic(t);
  auto profile = fat_tree_profile(t);
  auto structure = two_edge_structure(t);
  bool free_prod = is_free_product(t, [](int label) { return label; });
  Polynomial limit = limit_injective_trace(t, pc.params);

  // the (letter, pairs) census only exists for single-label even-multiplicity trees
  bool even_tree = profile.has_value();
  if (profile)
    for (const auto& e : profile->edges)
      if (e.multiplicity % 2 != 0 || e.labels.size() != 1) even_tree = false;
  OrderedJson type = OrderedJson::array();
  if (even_tree) {
    for (const auto& [jk, count] : profile->type())
      type.push_back({{"letter", jk.first}, {"pairs", jk.second}, {"count", count}});
  }

  if (cfg.format == "json") {
    OrderedJson out;
    out["command"] = "graph";
    out["n"] = t.n;
    out["edges"] = (int)t.edges.size();
    out["cyclic"] = cyclic;
    out["fat_tree"] = profile.has_value();
    out["type"] = type;
    out["r"] = structure.leaf_count;
    out["bridges"] = (int)structure.bridges.size();
    out["free_product"] = free_prod;
    out["limit"] = polynomial_json(limit);
    out["limit_text"] = limit.str();
    std::cout << out.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    std::cout << "key,value\n";
    std::cout << "n," << t.n << "\n";
    std::cout << "edges," << t.edges.size() << "\n";
    std::cout << "cyclic," << (cyclic ? "true" : "false") << "\n";
    std::cout << "fat_tree," << (profile ? "true" : "false") << "\n";
    std::cout << "r," << structure.leaf_count << "\n";
    std::cout << "bridges," << structure.bridges.size() << "\n";
    std::cout << "free_product," << (free_prod ? "true" : "false") << "\n";
    std::cout << "limit," << csv_quote(limit.str()) << "\n";
  } else {
    std::cout << "vertices: " << t.n << ", edges: " << t.edges.size() << "\n";
    std::cout << "cyclic: " << (cyclic ? "yes" : "no") << "\n";
    std::cout << "fat_tree: " << (profile ? "yes" : "no") << "\n";
    if (even_tree) {
      std::cout << "type:";
      for (const auto& entry : type)
        std::cout << " " << entry["count"] << "x(letter " << entry["letter"] << ", "
                  << entry["pairs"] << " pairs)";
      std::cout << "\n";
    }
    std::cout << "r: " << structure.leaf_count << "\n";
    std::cout << "bridges: " << structure.bridges.size() << "\n";
    std::cout << "free_product: " << (free_prod ? "yes" : "no") << "\n";
    std::cout << "limit: " << limit.str() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Limiting joint moments of heavy random matrices: tree enumeration,\n"
               "partition oracle, recursive solver, formal series, finite-size Monte\n"
               "Carlo, and cross-engine verification.",
               "heavymom"};
  app.require_subcommand(1);
  argv = app.ensure_utf8(argv);

  MomentsConfig mc;
  SeriesConfig sc;
  SimulateConfig sim;
  VerifyConfig vc;
  GraphConfig gc;
  bool engine_sd_only = false;

  auto add_param_flags = [](CLI::App* cmd, std::string& param, bool& symbolic) {
    cmd->add_option("--param", param,
                    "parameter source: symbolic | trivial:<a> | er:<alpha> | levy:<alpha>,<B> | "
                    "network:<alpha>,<law> | <JSON file>")
        ->capture_default_str();
    cmd->add_flag("--symbolic", symbolic, "force formal parameters a[j,k]");
  };

  auto* moments = app.add_subcommand("moments", "limiting moment of one word, or the joint "
                                                "moment of several (entrywise product)");
  moments->add_option("--word", mc.word_texts, "word such as \"x1^2 y1 x2\"; repeat for joint moments")
      ->required();
  add_param_flags(moments, mc.param, mc.symbolic);
  auto* yopt = moments->add_option("--y", mc.y,
                                   "diagonal model: none | symbolic | moments:<m1>,<m2>,... | "
                                   "<JSON file>");
  yopt->capture_default_str();
  moments->add_option("--engine", mc.engine, "tree | partition | sd | all")->capture_default_str();
  moments->add_option("--format", mc.format, kFormats)->capture_default_str();
  moments->add_option("--threads", mc.threads, "worker threads for the tree enumeration")
      ->capture_default_str();
  moments->add_option("--kmax", mc.kmax, "parameter depth materialized for inline ensembles")
      ->capture_default_str();
  moments->add_option("--node-cap", mc.node_cap, "enumeration node budget")->capture_default_str();
  moments->add_option("--partition-cap", mc.partition_cap, "partition-sum budget")
      ->capture_default_str();

  auto* sd = app.add_subcommand("sd", "same computation through the recursive solver only");
  sd->add_option("--word", mc.word_texts, "word; repeat for joint moments")->required();
  add_param_flags(sd, mc.param, mc.symbolic);
  auto* yopt2 = sd->add_option("--y", mc.y, "diagonal model (see moments --y)");
  sd->add_option("--format", mc.format, kFormats)->capture_default_str();
  sd->add_option("--kmax", mc.kmax, "parameter depth for inline ensembles")->capture_default_str();

  auto* series = app.add_subcommand("series", "coefficients of the formal resolvent series");
  series->add_option("--kmax", sc.kmax, "number of series rows (K)")->capture_default_str();
  series->add_option("--order", sc.order, "highest moment order m")->capture_default_str();
  add_param_flags(series, sc.param, sc.symbolic);
  series->add_flag("--check", sc.check, "cross-check coefficients against the recursive solver");
  series->add_option("--format", sc.format, kFormats)->capture_default_str();

  auto* simulate = app.add_subcommand("simulate", "finite-size Monte Carlo moments of an ensemble");
  simulate->add_option("--ensemble", sim.ensemble, "erdos-renyi | network | truncated-levy")
      ->required();
  simulate->add_option("--alpha", sim.alpha, "density for erdos-renyi/network")
      ->capture_default_str();
  simulate->add_option("--alpha-stable", sim.alpha_stable, "stability index in (0,2) for "
                                                           "truncated-levy")
      ->capture_default_str();
  simulate->add_option("--cutoff", sim.cutoff, "truncation level B for truncated-levy")
      ->capture_default_str();
  simulate->add_option("--law", sim.law, "network weight law: rademacher | gaussian | uniform")
      ->capture_default_str();
  simulate->add_option("--n", sim.n, "matrix dimension")->capture_default_str();
  simulate->add_option("--reps", sim.reps, "number of replicates")->capture_default_str();
  simulate->add_option("--seed", sim.seed, "base seed of the replicate/letter seed tree")
      ->capture_default_str();
  simulate->add_option("--threads", sim.threads, "worker threads over replicates")
      ->capture_default_str();
  simulate->add_option("--word", sim.word_texts, "pure heavy-letter word; repeat for joint moments")
      ->required();
  simulate->add_option("--format", sim.format, kFormats)->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run the cross-engine equality suite");
  verify->add_option("--degree", vc.degree, "sweep degree cap (1..10; the partition oracle "
                                            "joins up to 8)")
      ->capture_default_str();
  add_param_flags(verify, vc.param, vc.symbolic);
  verify->add_option("--format", vc.format, kFormats)->capture_default_str();
  verify->add_option("--threads", vc.threads, "worker threads for the tree enumeration")
      ->capture_default_str();
  verify->add_option("--node-cap", vc.node_cap, "enumeration node budget")->capture_default_str();
  verify->add_option("--partition-cap", vc.partition_cap, "partition-sum budget")
      ->capture_default_str();
  verify->add_option("--inject-fault", vc.inject_fault, "j,k,delta")->group("");

  auto* graph = app.add_subcommand("graph", "analyze a labeled test graph from JSON");
  graph->add_option("--file", gc.file, "graph JSON: {\"n\":2,\"edges\":[{\"src\":0,\"dst\":1,"
                                       "\"label\":1}]}")
      ->required();
  add_param_flags(graph, gc.param, gc.symbolic);
  graph->add_option("--format", gc.format, kFormats)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  engine_sd_only = sd->parsed();
  mc.y_given = yopt->count() > 0 || (yopt2 && yopt2->count() > 0);
  if (engine_sd_only) mc.engine = "sd";

  try {
    if (moments->parsed() || engine_sd_only) return run_moments(mc);
    if (series->parsed()) return run_series(sc);
    if (simulate->parsed()) return run_simulate(sim);
    if (verify->parsed()) return run_verify(vc);
    if (graph->parsed()) return run_graph(gc);
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
