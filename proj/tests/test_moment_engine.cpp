#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "heavymom/moments.hpp"

using namespace heavymom;

namespace {

Polynomial sym(int j, int k) { return Polynomial::symbol(Symbol::param(j, k)); }
Polynomial ym(const YWord& w) { return Polynomial::symbol(Symbol::ymoment(w)); }
YWord yw(int j, int e) { return YWord::letter(j, e); }

// every monomial must book 2k occurrences of x_j per a[j,k] factor and one y letter
// per letter inside each m[...] factor
void check_degree_bookkeeping(const Polynomial& p, const Word& w) {
  for (const auto& [mono, coeff] : p.terms()) {
    std::map<int, int> xdeg;
    int ydeg = 0;
    for (const auto& [s, e] : mono) {
      if (s.kind == Symbol::Kind::param) xdeg[s.j] += 2 * s.k * e;
      else ydeg += s.word.degree() * e;
    }
    for (auto& [j, d] : xdeg) CHECK(d == w.x_degree_of(j));
    for (int c : w.colors)
      if (!xdeg.count(c)) CHECK(w.x_degree_of(c) == 0);
    CHECK(ydeg == w.y_degree());
  }
}

// walk-compatible surjection: sends the n-th walk vertex of g0 to the n-th of b
bool folds_onto(const ColoredCycleOnTree& g0, const ColoredCycleOnTree& b) {
  if (g0.length() != b.length()) return false;
  std::vector<int> sigma(g0.vertices(), -1);
  for (int n = 0; n <= g0.length(); ++n) {
    int s = g0.walk[n], t = b.walk[n];
    if (sigma[s] == -1) sigma[s] = t;
    else if (sigma[s] != t) return false;
  }
  std::set<int> image;
  for (int v = 0; v < g0.vertices(); ++v) {
    if (sigma[v] == -1) return false;
    image.insert(sigma[v]);
  }
  if ((int)image.size() != b.vertices()) return false;
  for (int v = 1; v < g0.vertices(); ++v) {
    if (sigma[v] == 0) return false;  // root maps to root only
    if (b.parent[sigma[v]] != sigma[g0.parent[v]]) return false;
    if (b.edge_color[sigma[v]] != g0.edge_color[v]) return false;
  }
  return sigma[0] == 0;
}

}  // namespace

TEST_CASE("word parsing and normalization") {
  Word w = Word::parse("x1^2 x2^2");
  CHECK(w.colors == std::vector<int>{1, 1, 2, 2});
  CHECK(w.str() == "x1^2 x2^2");
  CHECK(Word::parse("x").colors == std::vector<int>{1});
  CHECK(Word::parse("1").is_identity());
  CHECK(Word::parse("y1^2").is_pure_y());
  CHECK(Word::parse("y1^2").pure == yw(1, 2));

  // leading y run rotates into the final slot
  Word r = Word::parse("y1 x1 y1 x1");
  CHECK(r.colors == std::vector<int>{1, 1});
  CHECK(r.slots[0] == yw(1, 1));
  CHECK(r.slots[1] == yw(1, 1));

  CHECK(Word::parse("x1 y2 x1").slots[0] == yw(2, 1));
  CHECK_THROWS_AS(Word::parse("z3"), ParseError);
  CHECK_THROWS_AS(Word::parse("x1^"), ParseError);
  CHECK(Word::parse("x1^0 x2").colors == std::vector<int>{2});

  // indices are 1-based: an explicit 0 must not alias letter 1
  CHECK_THROWS_AS(Word::parse("x0^2"), ParseError);
  CHECK_THROWS_AS(Word::parse("y0"), ParseError);
  CHECK(Word::parse("x01").colors == std::vector<int>{1});  // leading zero, index 1

  Word m = Word::parse("x2 x1 x1 x2");
  CHECK(m.min_rotation() == Word::parse("x1 x1 x2 x2"));
}

TEST_CASE("cycle enumeration counts") {
  CHECK(enumerate_cycles({1, 1}).size() == 1);
  CHECK(enumerate_cycles({1, 1, 1, 1}).size() == 3);
  CHECK(enumerate_cycles({1, 2, 1, 2}).empty());
  CHECK(enumerate_cycles({1}).empty());
  CHECK(enumerate_cycles({1, 1, 1, 1, 1, 1}).size() == 12);
  CHECK(enumerate_cycles({}).size() == 1);  // the empty walk

  EnumOptions chain22;
  chain22.chain = {2, 2};
  CHECK(enumerate_cycles({1, 1, 1, 1}, chain22).size() == 2);
  EnumOptions chain11;
  chain11.chain = {1, 1};
  CHECK(enumerate_cycles({1, 1}, chain11).empty());
}

TEST_CASE("cycle enumeration is canonical and deterministic") {
  for (auto gamma : {std::vector<int>{1, 1, 1, 1, 1, 1}, std::vector<int>{1, 1, 2, 2, 1, 1, 2, 2}}) {
    auto a = enumerate_cycles(gamma);
    auto b = enumerate_cycles(gamma);
    CHECK(a == b);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = i + 1; j < a.size(); ++j) CHECK(!(a[i] == a[j]));
    // frontier splitting must not change the result
    EnumOptions par;
    par.threads = 4;
    CHECK(enumerate_cycles(gamma, par) == a);
  }
}

TEST_CASE("enumeration cap") {
  EnumOptions tight;
  tight.node_cap = 3;
  CHECK_THROWS_AS(enumerate_cycles({1, 1, 1, 1, 1, 1}, tight), ResourceError);
}

TEST_CASE("first moments") {
  auto params = HeavyParams::symbolic();
  auto none = YModel::none();
  CHECK(phi(Word::parse("x"), params, none).is_zero());
  CHECK(phi(Word::parse("x^2"), params, none) == sym(1, 1));
  CHECK(phi(Word::parse("x^4"), params, none) == Rational(2) * sym(1, 1).pow(2) + sym(1, 2));
  CHECK(phi(Word::parse("1"), params, none) == Polynomial(1));
}

TEST_CASE("degree six moment confirmed by the partition oracle before freezing") {
  auto params = HeavyParams::symbolic();
  auto none = YModel::none();
  Polynomial golden = Rational(5) * sym(1, 1).pow(3) + Rational(6) * sym(1, 1) * sym(1, 2) +
                      sym(1, 3);
  CHECK(phi_bruteforce(Word::parse("x^6"), params, none) == golden);
  CHECK(phi(Word::parse("x^6"), params, none) == golden);
}

TEST_CASE("two letter moment") {
  auto params = HeavyParams::symbolic();
  auto none = YModel::none();
  Polynomial golden = Rational(3) * sym(1, 1).pow(2) * sym(2, 1).pow(2) +
                      sym(1, 2) * sym(2, 1).pow(2) + sym(1, 1).pow(2) * sym(2, 2) +
                      sym(1, 2) * sym(2, 2);
  Word w = Word::parse("x1^2 x2^2 x1^2 x2^2");
  CHECK(phi(w, params, none) == golden);
  CHECK(phi_bruteforce(w, params, none) == golden);
}

TEST_CASE("odd occurrence vanishing and factorization over distinct letters") {
  auto params = HeavyParams::symbolic();
  auto none = YModel::none();
  CHECK(phi(Word::parse("x1^2 x2"), params, none).is_zero());
  CHECK(phi(Word::parse("x1 x2 x1 x2 x1 x2"), params, none).is_zero());
  CHECK(phi(Word::parse("x1^2 x2^2"), params, none) == sym(1, 1) * sym(2, 1));
  CHECK(phi(Word::parse("x1^2 x2^4"), params, none) ==
        sym(1, 1) * (Rational(2) * sym(2, 1).pow(2) + sym(2, 2)));
  auto diag = YModel::diagonal_symbolic();
  CHECK(phi(Word::parse("x1^2 y1^2"), params, diag) == sym(1, 1) * ym(yw(1, 2)));
}

TEST_CASE("catalan degeneration under the trivial parameter") {
  auto triv = HeavyParams::trivial(1);
  auto none = YModel::none();
  const long cat[] = {1, 1, 2, 5, 14, 42};
  for (int k = 1; k <= 5; ++k) {
    std::vector<int> gamma(2 * k, 1);
    Word w = Word::from_letters([&] {
      std::vector<Letter> seq;
      for (int i = 0; i < 2 * k; ++i) seq.push_back({true, 1});
      return seq;
    }());
    CHECK(phi(w, triv, none) == Polynomial(Rational(cat[k])));
    long doubled = 0;
    for (const auto& gc : enumerate_cycles(gamma))
      if (gc.all_doubled()) ++doubled;
    CHECK(doubled == cat[k]);
  }
}

TEST_CASE("diagonal y moments") {
  auto params = HeavyParams::symbolic();
  auto diag = YModel::diagonal_symbolic();

  CHECK(phi(Word::parse("x y x y"), params, diag) == sym(1, 1) * ym(yw(1, 1)) * ym(yw(1, 1)));

  Polynomial golden = sym(1, 1).pow(2) * ym(yw(1, 2)).pow(2) + sym(1, 1).pow(2) * ym(yw(1, 4)) +
                      sym(1, 2) * ym(yw(1, 4));
  Word w = Word::parse("x^2 y^2 x^2 y^2");
  CHECK(phi(w, params, diag) == golden);
  CHECK(phi_bruteforce(w, params, diag) == golden);

  // numeric table
  auto ynum = YModel::diagonal_single({0, 1, 0, 3});
  CHECK(phi(w, params, ynum) == sym(1, 1).pow(2) + Rational(3) * sym(1, 1).pow(2) +
                                    Rational(3) * sym(1, 2));
  CHECK(phi(Word::parse("y^2"), params, ynum) == Polynomial(1));
  CHECK_THROWS_AS(phi(Word::parse("y^6"), params, ynum), DomainError);
  CHECK_THROWS_AS(phi(Word::parse("x y x y"), params, YModel::none()), UnsupportedModelError);
}

TEST_CASE("joint moments with shared root") {
  auto params = HeavyParams::symbolic();
  auto none = YModel::none();
  auto x2 = Word::parse("x^2");
  CHECK(phi_k({x2, x2}, params, none) == sym(1, 1).pow(2) + sym(1, 2));
  CHECK(phi_k({Word::parse("x"), Word::parse("x")}, params, none).is_zero());
  CHECK(phi_k({Word::parse("1"), Word::parse("1")}, params, none) == Polynomial(1));
  CHECK(phi_k({x2}, params, none) == phi(x2, params, none));

  // argument symmetry and identity removal
  auto x4 = Word::parse("x^4");
  CHECK(phi_k({x2, x4}, params, none) == phi_k({x4, x2}, params, none));
  CHECK(phi_k({x2, Word::parse("1"), x4}, params, none) == phi_k({x2, x4}, params, none));

  // pure y arguments join at the root index
  auto diag = YModel::diagonal_symbolic();
  CHECK(phi_k({Word::parse("y^2"), Word::parse("y^2")}, params, diag) == ym(yw(1, 4)));
  CHECK(phi_k({x2, Word::parse("y^2")}, params, diag) ==
        phi(Word::parse("x^2 y^2"), params, diag));
}

TEST_CASE("unfolding") {
  for (auto gamma : {std::vector<int>{1, 1, 1, 1}, std::vector<int>{1, 1, 1, 1, 1, 1},
                     std::vector<int>{1, 1, 2, 2, 1, 1}}) {
    auto all = enumerate_cycles(gamma);
    std::vector<ColoredCycleOnTree> doubled;
    for (const auto& gc : all)
      if (gc.all_doubled()) doubled.push_back(gc);
    std::map<std::vector<int>, int> fiber_of_profile;

    for (const auto& gc : all) {
      auto u = unfold(gc);
      CHECK(u.all_doubled());
      CHECK(u.profile() == gc.profile());
      CHECK(unfold(u) == u);
      // image lies in the enumerated doubled family, and folding is a
      // walk-compatible surjection from exactly that element
      int hits = 0;
      for (const auto& d : doubled) {
        bool is_image = (d == u);
        CHECK(folds_onto(d, gc) == is_image);
        if (is_image) ++hits;
      }
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("unfolding fiber sizes at length six") {
  auto all = enumerate_cycles({1, 1, 1, 1, 1, 1});
  REQUIRE(all.size() == 12);
  std::map<std::vector<int>, int> sizes;
  for (const auto& gc : all) {
    auto u = unfold(gc);
    std::vector<int> key;
    for (int v = 1; v < u.vertices(); ++v) key.push_back(u.parent[v]);
    ++sizes[key];
  }
  CHECK(sizes.size() == 5);
  std::multiset<int> counts;
  for (auto& [k, c] : sizes) counts.insert(c);
  CHECK(counts == std::multiset<int>{1, 2, 2, 2, 5});

  // the single edge visited four times unfolds to the two-child doubled tree
  for (const auto& gc : enumerate_cycles({1, 1, 1, 1})) {
    if (gc.vertices() == 2 && gc.edge_visits[1] == 4) {
      auto u = unfold(gc);
      CHECK(u.vertices() == 3);
      CHECK(u.parent == std::vector<int>{-1, 0, 0});
      CHECK(u.profile() == std::vector<int>{1, -1, 1, -1});
    }
  }
}

TEST_CASE("weights sum over fibers reproduces the moment") {
  auto params = HeavyParams::symbolic();
  auto none = YModel::none();
  std::vector<int> gamma = {1, 1, 2, 2, 1, 1, 2, 2};
  auto all = enumerate_cycles(gamma);
  std::map<std::string, Polynomial> per_fiber;
  std::vector<YWord> slots(gamma.size());
  for (const auto& gc : all) {
    auto u = unfold(gc);
    std::string key;
    for (int v = 1; v < u.vertices(); ++v)
      key += std::to_string(u.parent[v]) + ":" + std::to_string(u.edge_color[v]) + ",";
    per_fiber[key] += hw_weight(gc, params) * traffic_weight(gc, slots, none);
  }
  Polynomial total(0);
  for (auto& [k, v] : per_fiber) total += v;
  Word w = Word::from_letters({{true, 1}, {true, 1}, {true, 2}, {true, 2},
                               {true, 1}, {true, 1}, {true, 2}, {true, 2}});
  CHECK(total == phi(w, params, none));
}

TEST_CASE("engines agree on pure x words up to degree eight") {
  auto params = HeavyParams::symbolic();
  auto none = YModel::none();
  for (int L = 1; L <= 8; ++L) {
    for (int mask = 0; mask < (1 << L); ++mask) {
      std::vector<Letter> seq;
      for (int i = 0; i < L; ++i) seq.push_back({true, (mask >> i & 1) + 1});
      Word w = Word::from_letters(seq);
      Polynomial tree = phi(w, params, none);
      Polynomial oracle = phi_bruteforce(w, params, none);
      CAPTURE(w.str());
      CHECK(tree == oracle);
      check_degree_bookkeeping(tree, w);
    }
  }
}

TEST_CASE("engines agree on diagonal words up to degree eight") {
  auto params = HeavyParams::symbolic();
  auto diag = YModel::diagonal_symbolic();
  for (int L = 1; L <= 6; ++L) {
    std::vector<int> exps(L, 0);
    for (;;) {
      int ydeg = 0;
      for (int e : exps) ydeg += e;
      if (L + ydeg <= 8) {
        for (int mask = 0; mask < (1 << L); ++mask) {
          if (L > 4 && mask != 0 && ydeg > 0) continue;  // keep the sweep quick
          std::vector<Letter> seq;
          for (int i = 0; i < L; ++i) {
            seq.push_back({true, (mask >> i & 1) + 1});
            for (int r = 0; r < exps[i]; ++r) seq.push_back({false, 1});
          }
          Word w = Word::from_letters(seq);
          Polynomial tree = phi(w, params, diag);
          Polynomial oracle = phi_bruteforce(w, params, diag);
          CAPTURE(w.str());
          CHECK(tree == oracle);
          check_degree_bookkeeping(tree, w);
        }
      }
      // next exponent pattern, entries 0..2
      int i = 0;
      while (i < L && exps[i] == 2) exps[i++] = 0;
      if (i == L) break;
      ++exps[i];
    }
  }
}

TEST_CASE("traffic oracle path matches the diagonal collapse") {
  auto params = HeavyParams::symbolic();
  auto diag = YModel::diagonal_symbolic();
  // simulate a diagonal family through the traffic interface
  auto traffic = YModel::make_traffic([](const StarTestGraph& g) {
    YWord prod;
    for (const auto& e : g.edges) prod = prod * YWord::letter(e.label, 1);
    if (prod.empty()) return Polynomial(1);
    return Polynomial::symbol(Symbol::ymoment(prod));
  });
  for (const char* text : {"x y x y", "x^2 y^2", "x y^2 x y^2", "x^2 y^2 x^2 y^2",
                           "x1 y x2 y x1 y x2 y", "x^4"}) {
    Word w = Word::parse(text);
    CAPTURE(text);
    Polynomial expect = phi(w, params, diag);
    CHECK(phi(w, params, traffic) == expect);
    CHECK(phi_bruteforce(w, params, traffic) == expect);
  }
}

TEST_CASE("freeness defect") {
  auto params = HeavyParams::symbolic();

  auto heavy = freeness_defect_second_letter(params);
  CHECK(heavy.g == sym(2, 2));
  CHECK(heavy.f == sym(1, 2) * sym(2, 2));

  auto diag = freeness_defect(params, YModel::diagonal_symbolic());
  CHECK(diag.g == ym(yw(1, 4)) - ym(yw(1, 2)).pow(2));
  CHECK(diag.f == sym(1, 2) * diag.g);

  // Dirac mass: moments of a point have no variance
  auto dirac = freeness_defect(params, YModel::diagonal_single({2, 4, 8, 16}));
  CHECK(dirac.f.is_zero());
  CHECK(dirac.g.is_zero());

  auto spread = freeness_defect(params, YModel::diagonal_single({0, 1, 0, 3}));
  CHECK(spread.g == Polynomial(2));
  CHECK(spread.f == Rational(2) * sym(1, 2));
}
