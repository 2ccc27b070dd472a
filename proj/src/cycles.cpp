#include "heavymom/cycles.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>

#include "heavymom/errors.hpp"

namespace heavymom {

bool ColoredCycleOnTree::all_doubled() const {
  for (int v = 1; v < vertices(); ++v)
    if (edge_visits[v] != 2) return false;
  return true;
}

std::vector<int> ColoredCycleOnTree::profile() const {
  std::vector<int> depth(vertices(), 0);
  for (int v = 1; v < vertices(); ++v) depth[v] = depth[parent[v]] + 1;  // parents precede children
  std::vector<int> prof(length());
  for (int n = 1; n <= length(); ++n)
    prof[n - 1] = depth[walk[n]] > depth[walk[n - 1]] ? 1 : -1;
  return prof;
}

namespace {

struct EnumState {
  std::vector<int> parent{-1}, edge_color{0}, visits{0}, walk{0};
  std::vector<std::vector<int>> children{{}};
  std::vector<int> path_cnt;
  int cur = 0, depth = 0, n = 0;
};

class Enumerator {
 public:
  Enumerator(const std::vector<int>& gamma, const EnumOptions& opts,
             std::atomic<std::int64_t>& nodes)
      : gamma_(gamma), L_((int)gamma.size()), cap_(opts.node_cap), nodes_(nodes) {
    // color indexing
    std::vector<int> cs = gamma;
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    for (int i = 0; i < (int)cs.size(); ++i) cidx_[cs[i]] = i;
    nc_ = (int)cs.size();
    rem_.assign(L_ + 1, std::vector<int>(nc_, 0));
    for (int n = L_ - 1; n >= 0; --n) {
      rem_[n] = rem_[n + 1];
      ++rem_[n][cidx_[gamma_[n]]];
    }
    // boundaries: prefix sums of the chain profile (always include L)
    std::vector<char> is_b(L_ + 1, 0);
    is_b[L_] = 1;
    if (!opts.chain.empty()) {
      int acc = 0;
      for (int lk : opts.chain) {
        if (lk < 0) throw DomainError("negative chain length");
        acc += lk;
        if (acc > L_) throw DomainError("chain profile exceeds walk length");
        is_b[acc] = 1;
      }
      if (acc != L_) throw DomainError("chain profile must sum to the walk length");
    }
    next_b_.assign(L_ + 1, L_);
    for (int n = L_; n >= 0; --n) next_b_[n] = is_b[n] ? n : next_b_[n + 1];
    // a closed sub-walk needs an even number of steps of each color
    feasible_at_all_ = true;
    int seg_start = 0;
    for (int n = 1; n <= L_; ++n) {
      if (!is_b[n]) continue;
      for (int ci = 0; ci < nc_; ++ci)
        if ((rem_[seg_start][ci] - rem_[n][ci]) % 2 != 0) feasible_at_all_ = false;
      seg_start = n;
    }
  }

  bool possible() const { return feasible_at_all_; }
  int length() const { return L_; }

  // run the DFS from `s` until step stop_n; completed walks land in `out`,
  // interior frontier states in `snapshots`
  void run(EnumState& s, int stop_n, std::vector<EnumState>* snapshots,
           std::vector<ColoredCycleOnTree>* out) {
    if (++nodes_ > cap_) throw ResourceError("cycle enumeration exceeded its node budget");
    if (s.n == stop_n) {
      if (stop_n == L_) out->push_back(emit(s));
      else snapshots->push_back(s);
      return;
    }
    int c = gamma_[s.n];
    int ci = cidx_.at(c);
    if ((int)s.path_cnt.size() < nc_) s.path_cnt.resize(nc_, 0);
    // ascend
    if (s.cur != 0 && s.edge_color[s.cur] == c) {
      int v = s.cur;
      s.cur = s.parent[v];
      ++s.visits[v];
      --s.depth;
      --s.path_cnt[ci];
      s.walk.push_back(s.cur);
      ++s.n;
      if (feasible(s)) run(s, stop_n, snapshots, out);
      --s.n;
      s.walk.pop_back();
      ++s.path_cnt[ci];
      ++s.depth;
      s.cur = v;
      --s.visits[v];
    }
    // descend an existing child
    for (std::size_t i = 0; i < s.children[s.cur].size(); ++i) {
      int w = s.children[s.cur][i];
      if (s.edge_color[w] != c) continue;
      int p = s.cur;
      s.cur = w;
      ++s.visits[w];
      ++s.depth;
      ++s.path_cnt[ci];
      s.walk.push_back(w);
      ++s.n;
      if (feasible(s)) run(s, stop_n, snapshots, out);
      --s.n;
      s.walk.pop_back();
      --s.path_cnt[ci];
      --s.depth;
      --s.visits[w];
      s.cur = p;
    }
    // create a new rightmost child
    {
      int v = (int)s.parent.size();
      int p = s.cur;
      s.parent.push_back(p);
      s.edge_color.push_back(c);
      s.visits.push_back(1);
      s.children.push_back({});
      s.children[p].push_back(v);
      s.cur = v;
      ++s.depth;
      ++s.path_cnt[ci];
      s.walk.push_back(v);
      ++s.n;
      if (feasible(s)) run(s, stop_n, snapshots, out);
      --s.n;
      s.walk.pop_back();
      --s.path_cnt[ci];
      --s.depth;
      s.cur = p;
      s.children[p].pop_back();
      s.children.pop_back();
      s.visits.pop_back();
      s.edge_color.pop_back();
      s.parent.pop_back();
    }
  }

 private:
  bool feasible(const EnumState& s) const {
    int b = next_b_[s.n];
    int to_b = b - s.n;
    if (s.depth > to_b || ((to_b - s.depth) & 1)) return false;
    for (int ci = 0; ci < nc_; ++ci) {
      int seg = rem_[s.n][ci] - rem_[b][ci];
      int pc = ci < (int)s.path_cnt.size() ? s.path_cnt[ci] : 0;
      if (seg < pc || ((seg - pc) & 1)) return false;
    }
    return true;
  }

  ColoredCycleOnTree emit(const EnumState& s) const {
    ColoredCycleOnTree gc;
    gc.parent = s.parent;
    gc.edge_color = s.edge_color;
    gc.edge_visits = s.visits;
    gc.walk = s.walk;
    gc.gamma = gamma_;
    return gc;
  }

  const std::vector<int>& gamma_;
  int L_;
  std::int64_t cap_;
  std::atomic<std::int64_t>& nodes_;
  std::map<int, int> cidx_;
  int nc_ = 0;
  std::vector<std::vector<int>> rem_;
  std::vector<int> next_b_;
  bool feasible_at_all_ = true;
};

}  // namespace

std::vector<ColoredCycleOnTree> enumerate_cycles(const std::vector<int>& gamma,
                                                 const EnumOptions& opts) {
  std::atomic<std::int64_t> nodes{0};
  Enumerator en(gamma, opts, nodes);
  std::vector<ColoredCycleOnTree> out;
  if (!en.possible()) return out;
  EnumState root;
  if (opts.threads <= 1 || en.length() < 2) {
    en.run(root, en.length(), nullptr, &out);
    return out;
  }
  // split the frontier at a fixed depth; workers own private buffers merged in branch order
  int split = std::min(en.length(), 4);
  std::vector<EnumState> frontier;
  en.run(root, split, &frontier, &out);
  std::vector<std::vector<ColoredCycleOnTree>> buf(frontier.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr fail;
  std::mutex fail_mu;
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= frontier.size()) return;
      try {
        EnumState s = frontier[i];
        en.run(s, en.length(), nullptr, &buf[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lk(fail_mu);
        if (!fail) fail = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < opts.threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (fail) std::rethrow_exception(fail);
  for (auto& b : buf)
    for (auto& gc : b) out.push_back(std::move(gc));
  return out;
}

Polynomial hw_weight(const ColoredCycleOnTree& gc, const HeavyParams& params) {
  Polynomial acc(1);
  for (int v = 1; v < gc.vertices(); ++v) {
    if (gc.edge_visits[v] % 2 != 0) throw DomainError("odd edge visit count in cycle");
    acc *= params.a(gc.edge_color[v], gc.edge_visits[v] / 2);
  }
  return acc;
}

Polynomial traffic_weight(const ColoredCycleOnTree& gc, const std::vector<YWord>& slots,
                          const YModel& y) {
  int L = gc.length();
  if ((int)slots.size() != L) throw DomainError("slot count must match walk length");
  bool all_empty = true;
  for (const auto& s : slots)
    if (!s.empty()) all_empty = false;
  if (all_empty) return Polynomial(1);

  // edge crossed by step n is owned by the deeper endpoint
  std::vector<int> eid(L + 1, 0);
  for (int n = 1; n <= L; ++n) {
    int a = gc.walk[n - 1], b = gc.walk[n];
    eid[n] = (gc.parent[b] == a) ? b : a;
  }
  // local test graph per vertex: nodes indexed by incident edge id, one edge per landing
  std::vector<std::map<int, int>> local(gc.vertices());
  std::vector<std::vector<YEdge>> tv(gc.vertices());
  auto node = [&](int v, int e) {
    auto [it, fresh] = local[v].try_emplace(e, (int)local[v].size());
    return it->second;
  };
  for (int n = 1; n <= L; ++n) {
    int v = gc.walk[n];
    int e_in = eid[n];
    int e_out = eid[n == L ? 1 : n + 1];
    tv[v].push_back({node(v, e_in), node(v, e_out), slots[n - 1]});
  }
  Polynomial acc(1);
  for (int v = 0; v < gc.vertices(); ++v)
    if (!tv[v].empty()) acc *= y.tau_y((int)local[v].size(), tv[v]);
  return acc;
}

ColoredCycleOnTree unfold(const ColoredCycleOnTree& gc) {
  std::vector<int> depth(gc.vertices(), 0);
  for (int v = 1; v < gc.vertices(); ++v) depth[v] = depth[gc.parent[v]] + 1;
  ColoredCycleOnTree out;
  out.gamma = gc.gamma;
  out.parent = {-1};
  out.edge_color = {0};
  out.edge_visits = {0};
  out.walk = {0};
  int cur = 0;
  for (int n = 1; n <= gc.length(); ++n) {
    if (depth[gc.walk[n]] > depth[gc.walk[n - 1]]) {
      int v = (int)out.parent.size();
      out.parent.push_back(cur);
      out.edge_color.push_back(gc.gamma[n - 1]);
      out.edge_visits.push_back(2);
      cur = v;
    } else {
      cur = out.parent[cur];
    }
    out.walk.push_back(cur);
  }
  return out;
}

}  // namespace heavymom
