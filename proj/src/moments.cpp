#include "heavymom/moments.hpp"

#include <algorithm>
#include <numeric>

#include "heavymom/errors.hpp"
#include "heavymom/partitions.hpp"

namespace heavymom {

namespace {

Polynomial cycle_sum(const std::vector<int>& gamma, const std::vector<YWord>& slots,
                     const HeavyParams& params, const YModel& y, EnumOptions opts) {
  Polynomial acc(0);
  for (const auto& gc : enumerate_cycles(gamma, opts))
    acc += hw_weight(gc, params) * traffic_weight(gc, slots, y);
  return acc;
}

}  // namespace

Polynomial phi(const Word& P, const HeavyParams& params, const YModel& y,
               const EnumOptions& opts) {
  if (P.is_pure_y()) return y.phi_y(P.pure);
  EnumOptions o = opts;
  o.chain.clear();
  return cycle_sum(P.colors, P.slots, params, y, o);
}

Polynomial phi_k(const std::vector<Word>& words, const HeavyParams& params, const YModel& y,
                 const EnumOptions& opts) {
  std::vector<Word> xwords;
  YWord pure;
  for (const auto& w : words) {
    if (w.is_identity()) continue;
    if (w.is_pure_y()) {
      if (!y.diagonalish())
        throw UnsupportedModelError("pure y arguments need a diagonal y model");
      pure = pure * w.pure;
    } else {
      xwords.push_back(w);
    }
  }
  if (xwords.empty()) return y.phi_y(pure);
  if (!pure.empty()) xwords[0] = xwords[0].appended_y(pure);  // lands at the shared root

  EnumOptions o = opts;
  o.chain.clear();
  std::vector<int> gamma;
  std::vector<YWord> slots;
  for (const auto& w : xwords) {
    o.chain.push_back(w.length());
    gamma.insert(gamma.end(), w.colors.begin(), w.colors.end());
    slots.insert(slots.end(), w.slots.begin(), w.slots.end());
  }
  return cycle_sum(gamma, slots, params, y, o);
}

namespace {

struct BfXEdge {
  int u, v, j;
};
struct BfYEdge {
  int u, v;
  YWord w;
};

// free-product indicator on the quotient: x labels are their own families, every
// y edge belongs to one shared family
bool quotient_is_free_product(int nv, const std::vector<BfXEdge>& xe,
                              const std::vector<BfYEdge>& ye) {
  int ymark = 1;
  for (const auto& e : xe) ymark = std::max(ymark, e.j + 1);
  std::vector<GraphEdge> edges;
  edges.reserve(xe.size() + ye.size());
  for (const auto& e : xe) edges.push_back({e.u, e.v, e.j, false});
  for (const auto& e : ye)
    if (!(e.w.empty() && e.u == e.v)) edges.push_back({e.u, e.v, ymark, false});
  StarTestGraph q = StarTestGraph::make(nv, std::move(edges));
  int cap = ymark;
  return is_free_product(q, [cap](int l) { return l >= cap ? 0 : l; });
}

// product of injective limits of the per-letter components
Polynomial x_component_score(int nv, const std::vector<BfXEdge>& xe, const HeavyParams& params) {
  std::map<int, std::vector<BfXEdge>> by_label;
  for (const auto& e : xe) by_label[e.j].push_back(e);
  Polynomial acc(1);
  for (auto& [j, es] : by_label) {
    std::vector<int> p(nv);
    std::iota(p.begin(), p.end(), 0);
    auto find = [&](int x) {
      while (p[x] != x) x = p[x] = p[p[x]];
      return x;
    };
    for (const auto& e : es) p[find(e.u)] = find(e.v);
    std::map<int, std::vector<BfXEdge>> comps;
    for (const auto& e : es) comps[find(e.u)].push_back(e);
    for (auto& [root, ces] : comps) {
      std::map<int, int> reindex;
      std::vector<GraphEdge> local;
      auto idx = [&](int v) {
        auto [it, fresh] = reindex.try_emplace(v, (int)reindex.size());
        return it->second;
      };
      for (const auto& e : ces) local.push_back({idx(e.u), idx(e.v), j, false});
      acc *= limit_injective_trace(StarTestGraph::make((int)reindex.size(), local), params);
      if (acc.is_zero()) return acc;
    }
  }
  return acc;
}

// injective limiting trace of one connected y-labeled component
Polynomial y_component_injective(int nv, const std::vector<BfYEdge>& edges, const YModel& y) {
  Polynomial acc(0);
  for_each_partition(nv, [&](const std::vector<int>& rgs, int nb) {
    std::vector<YEdge> mapped;
    mapped.reserve(edges.size());
    for (const auto& e : edges) mapped.push_back({rgs[e.u], rgs[e.v], e.w});
    acc += detail::mul_int(y.tau_y(nb, mapped), partition_mobius_from_rgs(rgs, nb));
    return true;
  });
  return acc;
}

Polynomial score_partition(int nv, const std::vector<BfXEdge>& xe, const std::vector<BfYEdge>& ye,
                           const HeavyParams& params, const YModel& y) {
  if (!quotient_is_free_product(nv, xe, ye)) return Polynomial(0);
  Polynomial acc = x_component_score(nv, xe, params);
  if (acc.is_zero()) return acc;
  if (y.diagonalish()) {
    // y edges must already be loops; group per vertex (loops at one vertex form
    // one component) and collapse to a plain moment
    std::map<int, YWord> at;
    for (const auto& e : ye) {
      if (e.u != e.v) return Polynomial(0);
      at[e.u] = at[e.u] * e.w;
    }
    for (auto& [v, w] : at) acc *= y.phi_y(w);
    return acc;
  }
  // traffic: injective value of each connected y component
  std::vector<int> p(nv);
  std::iota(p.begin(), p.end(), 0);
  auto find = [&](int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  };
  for (const auto& e : ye) p[find(e.u)] = find(e.v);
  std::map<int, std::vector<BfYEdge>> comps;
  for (const auto& e : ye) comps[find(e.u)].push_back(e);
  for (auto& [root, ces] : comps) {
    std::map<int, int> reindex;
    std::vector<BfYEdge> local;
    auto idx = [&](int v) {
      auto [it, fresh] = reindex.try_emplace(v, (int)reindex.size());
      return it->second;
    };
    for (const auto& e : ces) local.push_back({idx(e.u), idx(e.v), e.w});
    acc *= y_component_injective((int)reindex.size(), local, y);
    if (acc.is_zero()) return acc;
  }
  return acc;
}

}  // namespace

Polynomial phi_bruteforce(const Word& P, const HeavyParams& params, const YModel& y,
                          std::int64_t partition_cap) {
  if (P.is_pure_y()) return y.phi_y(P.pure);
  const int L = P.length();

  // base graph: contracted L-cycle with y loops (diagonal, loops forced), or the
  // alternating 2L-cycle (traffic)
  int nv;
  std::vector<BfXEdge> xe;
  std::vector<BfYEdge> ye;
  if (y.diagonalish()) {
    nv = L;
    for (int n = 1; n <= L; ++n) xe.push_back({n - 1, n % L, P.colors[n - 1]});
    for (int n = 1; n <= L; ++n)
      if (!P.slots[n - 1].empty()) ye.push_back({n % L, n % L, P.slots[n - 1]});
  } else {
    nv = 2 * L;
    for (int n = 1; n <= L; ++n) {
      xe.push_back({2 * n - 2, 2 * n - 1, P.colors[n - 1]});
      ye.push_back({2 * n - 1, (2 * n) % nv, P.slots[n - 1]});
    }
  }

  Polynomial acc(0);
  std::int64_t count = 0;
  for_each_partition(nv, [&](const std::vector<int>& rgs, int nb) {
    if (++count > partition_cap)
      throw ResourceError("partition enumeration exceeded its budget");
    std::vector<BfXEdge> qx;
    qx.reserve(xe.size());
    for (const auto& e : xe) qx.push_back({rgs[e.u], rgs[e.v], e.j});
    std::vector<BfYEdge> qy;
    qy.reserve(ye.size());
    bool dead = false;
    for (const auto& e : ye) {
      int u = rgs[e.u], v = rgs[e.v];
      if (e.w.empty()) {
        if (u != v) dead = true;  // identity edge across distinct indices
        continue;
      }
      qy.push_back({u, v, e.w});
    }
    if (!dead) acc += score_partition(nb, qx, qy, params, y);
    return true;
  });
  return acc;
}

namespace {

Polynomial centered_product_moment(const std::vector<std::pair<std::vector<Letter>, Polynomial>>& factors,
                                   const HeavyParams& params, const YModel& y) {
  const int F = (int)factors.size();
  Polynomial total(0);
  for (int mask = 0; mask < (1 << F); ++mask) {
    Polynomial coeff(1);
    std::vector<Letter> seq;
    for (int i = 0; i < F; ++i) {
      if (mask & (1 << i)) seq.insert(seq.end(), factors[i].first.begin(), factors[i].first.end());
      else coeff *= Polynomial(0) - factors[i].second;
    }
    total += coeff * phi(Word::from_letters(seq), params, y);
  }
  return total;
}

}  // namespace

FreenessDefect freeness_defect(const HeavyParams& params, const YModel& y) {
  std::vector<Letter> xx = {{true, 1}, {true, 1}};
  std::vector<Letter> yy = {{false, 1}, {false, 1}};
  Polynomial cx = phi(Word::from_letters(xx), params, y);
  Polynomial cy = phi(Word::from_letters(yy), params, y);
  FreenessDefect d;
  d.f = centered_product_moment({{xx, cx}, {yy, cy}, {xx, cx}, {yy, cy}}, params, y);
  if (y.diagonalish()) {
    d.g = y.phi_y(YWord::letter(1, 4)) - y.phi_y(YWord::letter(1, 2)) * y.phi_y(YWord::letter(1, 2));
  } else {
    // entrywise square of y^2: two doubled edges sharing the root index
    YWord y1 = YWord::letter(1, 1);
    Polynomial had = y.tau_y(3, {{0, 1, y1}, {1, 0, y1}, {0, 2, y1}, {2, 0, y1}});
    d.g = had - cy * cy;
  }
  return d;
}

FreenessDefect freeness_defect_second_letter(const HeavyParams& params) {
  YModel none = YModel::none();
  std::vector<Letter> xx = {{true, 1}, {true, 1}};
  std::vector<Letter> yy = {{true, 2}, {true, 2}};
  Polynomial cx = phi(Word::from_letters(xx), params, none);
  Polynomial cy = phi(Word::from_letters(yy), params, none);
  FreenessDefect d;
  d.f = centered_product_moment({{xx, cx}, {yy, cy}, {xx, cx}, {yy, cy}}, params, none);
  d.g = phi_k({Word::from_letters(yy), Word::from_letters(yy)}, params, none) - cy * cy;
  return d;
}

}  // namespace heavymom
