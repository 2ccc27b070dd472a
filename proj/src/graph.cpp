#include "heavymom/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "heavymom/errors.hpp"

namespace heavymom {

namespace {

// small union-find
struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

VertexPartition VertexPartition::from_rgs(const std::vector<int>& rgs, int nblocks) {
  VertexPartition pi;
  pi.blocks.assign(nblocks, {});
  for (int v = 0; v < (int)rgs.size(); ++v) {
    if (rgs[v] < 0 || rgs[v] >= nblocks) throw DomainError("malformed restricted growth string");
    pi.blocks[rgs[v]].push_back(v);
  }
  for (auto& b : pi.blocks)
    if (b.empty()) throw DomainError("malformed restricted growth string: empty block");
  return pi;
}

VertexPartition VertexPartition::singletons(int n) {
  VertexPartition pi;
  pi.blocks.reserve(n);
  for (int v = 0; v < n; ++v) pi.blocks.push_back({v});
  return pi;
}

void VertexPartition::validate(int n) const {
  std::vector<int> seen(n, 0);
  int prev_min = -1;
  for (const auto& b : blocks) {
    if (b.empty()) throw DomainError("vertex partition has an empty block");
    if (!std::is_sorted(b.begin(), b.end())) throw DomainError("partition block not sorted");
    if (b.front() <= prev_min) throw DomainError("partition blocks not ordered by minimum");
    prev_min = b.front();
    for (int v : b) {
      if (v < 0 || v >= n) throw DomainError("partition element out of range");
      if (seen[v]++) throw DomainError("partition element repeated");
    }
  }
  for (int v = 0; v < n; ++v)
    if (!seen[v]) throw DomainError("partition does not cover every vertex");
}

std::int64_t VertexPartition::mobius() const {
  std::vector<int> sizes;
  sizes.reserve(blocks.size());
  for (const auto& b : blocks) sizes.push_back((int)b.size());
  return partition_mobius_from_sizes(sizes);
}

std::vector<int> VertexPartition::to_rgs(int n) const {
  validate(n);
  std::vector<int> rgs(n, -1);
  for (int i = 0; i < (int)blocks.size(); ++i)
    for (int v : blocks[i]) rgs[v] = i;
  return rgs;
}

StarTestGraph StarTestGraph::make(int n, std::vector<GraphEdge> edges) {
  if (n < 1) throw DomainError("graph needs at least one vertex");
  for (const auto& e : edges) {
    if (e.src < 0 || e.src >= n || e.dst < 0 || e.dst >= n)
      throw DomainError("edge endpoint out of range");
    if (e.label < 1) throw DomainError("edge labels must be positive ids");
  }
  StarTestGraph T{n, std::move(edges)};
  if (!T.weakly_connected()) throw DomainError("graph must be connected");
  return T;
}

bool StarTestGraph::weakly_connected() const {
  Dsu dsu(n);
  for (const auto& e : edges) dsu.unite(e.src, e.dst);
  int root = dsu.find(0);
  for (int v = 1; v < n; ++v)
    if (dsu.find(v) != root) return false;
  return true;
}

StarTestGraph StarTestGraph::quotient(const VertexPartition& pi) const {
  return quotient_rgs(pi.to_rgs(n), pi.nblocks());
}

StarTestGraph StarTestGraph::quotient_rgs(const std::vector<int>& rgs, int nblocks) const {
  StarTestGraph q;
  q.n = nblocks;
  q.edges.reserve(edges.size());
  for (const auto& e : edges)
    q.edges.push_back({rgs[e.src], rgs[e.dst], e.label, e.star});
  return q;  // quotient of a connected graph stays connected
}

std::string StarTestGraph::key() const {
  auto sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  std::ostringstream os;
  os << n << ';';
  for (const auto& e : sorted)
    os << e.src << '>' << e.dst << ':' << e.label << (e.star ? "*" : "") << ',';
  return os.str();
}

TwoEdgeStructure two_edge_structure(const StarTestGraph& T) {
  const int m = (int)T.edges.size();
  // undirected view with stable edge ids; loops cannot be bridges and are skipped
  std::vector<std::vector<std::pair<int, int>>> adj(T.n);  // (neighbor, edge id)
  for (int id = 0; id < m; ++id) {
    const auto& e = T.edges[id];
    if (e.src == e.dst) continue;
    adj[e.src].push_back({e.dst, id});
    adj[e.dst].push_back({e.src, id});
  }

  std::vector<int> disc(T.n, -1), low(T.n, 0);
  std::vector<char> is_bridge(m, 0);
  int timer = 0;
  struct Frame {
    int v, parent_edge;
    std::size_t idx;
  };
  std::vector<Frame> stack;
  for (int root = 0; root < T.n; ++root) {
    if (disc[root] != -1) continue;
    disc[root] = low[root] = timer++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.idx < adj[f.v].size()) {
        auto [w, id] = adj[f.v][f.idx++];
        if (id == f.parent_edge) continue;  // parallel copies carry distinct ids
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, id, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        int v = f.v, pe = f.parent_edge;
        stack.pop_back();
        if (!stack.empty()) {
          int u = stack.back().v;
          low[u] = std::min(low[u], low[v]);
          if (low[v] > disc[u]) is_bridge[pe] = 1;
        }
      }
    }
  }

  Dsu dsu(T.n);
  for (int id = 0; id < m; ++id) {
    const auto& e = T.edges[id];
    if (e.src != e.dst && !is_bridge[id]) dsu.unite(e.src, e.dst);
  }
  std::vector<int> comp_of(T.n, -1);
  TwoEdgeStructure out;
  for (int v = 0; v < T.n; ++v) {
    int r = dsu.find(v);
    if (comp_of[r] == -1) {
      comp_of[r] = (int)out.components.blocks.size();
      out.components.blocks.push_back({});
    }
    comp_of[v] = comp_of[r];
    out.components.blocks[comp_of[v]].push_back(v);
  }

  int ncomp = out.components.nblocks();
  std::vector<int> degree(ncomp, 0);
  for (int id = 0; id < m; ++id) {
    if (!is_bridge[id]) continue;
    const auto& e = T.edges[id];
    out.bridges.push_back(e);
    int cu = comp_of[e.src], cv = comp_of[e.dst];
    out.component_tree.push_back({cu, cv});
    ++degree[cu];
    ++degree[cv];
  }
  if (ncomp == 1) {
    out.leaf_count = 2;  // trivial tree: both "sides" of the single node count
  } else {
    out.leaf_count = (int)std::count(degree.begin(), degree.end(), 1);
  }
  return out;
}

bool is_cyclic(const StarTestGraph& T) {
  std::vector<int> deg(T.n, 0);
  for (const auto& e : T.edges) {
    ++deg[e.src];
    --deg[e.dst];
  }
  for (int v = 0; v < T.n; ++v)
    if (deg[v] != 0) return false;
  return T.weakly_connected() && !T.edges.empty();
}

std::map<std::pair<int, int>, int> FatTreeProfile::type() const {
  std::map<std::pair<int, int>, int> q;
  for (const auto& e : edges) {
    if (e.labels.size() != 1 || e.multiplicity % 2 != 0)
      throw DomainError("fat tree type requires single-label even-multiplicity edges");
    ++q[{e.labels[0], e.multiplicity / 2}];
  }
  return q;
}

std::optional<FatTreeProfile> fat_tree_profile(const StarTestGraph& T) {
  std::map<std::pair<int, int>, std::pair<int, std::set<int>>> acc;  // (u,v) -> (mult, labels)
  for (const auto& e : T.edges) {
    if (e.src == e.dst) return std::nullopt;  // loops disqualify
    auto uv = std::minmax(e.src, e.dst);
    auto& slot = acc[{uv.first, uv.second}];
    ++slot.first;
    slot.second.insert(e.label);
  }
  if ((int)acc.size() != T.n - 1) return std::nullopt;  // connected, so n-1 edges <=> tree
  FatTreeProfile prof;
  for (const auto& [uv, slot] : acc) {
    FatTreeEdge fe;
    fe.u = uv.first;
    fe.v = uv.second;
    fe.multiplicity = slot.first;
    fe.labels.assign(slot.second.begin(), slot.second.end());
    prof.edges.push_back(fe);
  }
  return prof;
}

Polynomial limit_injective_trace(const StarTestGraph& T, const HeavyParams& params) {
  auto prof = fat_tree_profile(T);
  if (!prof) return Polynomial(0);
  Polynomial acc(1);
  for (const auto& fe : prof->edges) {
    if (fe.labels.size() != 1 || fe.multiplicity % 2 != 0) return Polynomial(0);
    acc *= params.a(fe.labels[0], fe.multiplicity / 2);
  }
  return acc;
}

bool is_free_product(const StarTestGraph& T, const std::function<int(int)>& family_of) {
  if (T.edges.empty()) return true;  // single vertex
  // connected components of each single-family subgraph
  std::map<int, Dsu> per_family;
  std::map<int, std::set<int>> touched;  // family -> involved vertices
  for (const auto& e : T.edges) {
    int f = family_of(e.label);
    auto [it, fresh] = per_family.try_emplace(f, T.n);
    it->second.unite(e.src, e.dst);
    touched[f].insert(e.src);
    touched[f].insert(e.dst);
  }
  std::map<std::pair<int, int>, int> comp_id;  // (family, dsu root) -> node index
  std::vector<std::vector<int>> comps_at(T.n);
  int ncomp = 0;
  for (auto& [f, dsu] : per_family) {
    for (int v : touched[f]) {
      auto key = std::make_pair(f, dsu.find(v));
      auto [it, fresh] = comp_id.try_emplace(key, ncomp);
      if (fresh) ++ncomp;
      comps_at[v].push_back(it->second);
    }
  }
  // the reduced incidence graph: component nodes plus vertices shared by >= 2 of them
  int shared = 0;
  std::int64_t red_edges = 0;
  Dsu red(ncomp);
  for (int v = 0; v < T.n; ++v) {
    auto& cs = comps_at[v];
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    if (cs.size() >= 2) {
      ++shared;
      red_edges += (std::int64_t)cs.size();
      for (std::size_t i = 1; i < cs.size(); ++i) red.unite(cs[0], cs[i]);
    }
  }
  int root = red.find(0);
  for (int c = 1; c < ncomp; ++c)
    if (red.find(c) != root) return false;  // disconnected (cannot happen when T is connected)
  return red_edges == (std::int64_t)ncomp + shared - 1;
}

}  // namespace heavymom
