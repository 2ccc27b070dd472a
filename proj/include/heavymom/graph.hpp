#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "heavymom/params.hpp"
#include "heavymom/partitions.hpp"
#include "heavymom/polynomial.hpp"

namespace heavymom {

// directed labeled edge with *-flag; labels are small integer ids (naming is external)
struct GraphEdge {
  int src = 0, dst = 0;
  int label = 1;
  bool star = false;
  auto operator<=>(const GraphEdge&) const = default;
};

struct VertexPartition {
  std::vector<std::vector<int>> blocks;  // sorted within blocks; blocks ordered by min element

  static VertexPartition from_rgs(const std::vector<int>& rgs, int nblocks);
  static VertexPartition singletons(int n);
  void validate(int n) const;  // blocks disjoint, nonempty, covering 0..n-1
  int nblocks() const { return (int)blocks.size(); }
  std::int64_t mobius() const;
  std::vector<int> to_rgs(int n) const;  // element -> block index
};

// Finite connected directed multigraph with labeled, star-flagged edges.
// Vertices are dense 0..n-1.  Connectivity is enforced at construction.
struct StarTestGraph {
  int n = 0;
  std::vector<GraphEdge> edges;

  // validates endpoints, n >= 1 and connectivity; throws DomainError otherwise
  static StarTestGraph make(int n, std::vector<GraphEdge> edges);

  bool weakly_connected() const;
  StarTestGraph quotient(const VertexPartition& pi) const;           // DomainError on mismatch
  StarTestGraph quotient_rgs(const std::vector<int>& rgs, int nblocks) const;  // unchecked fast path
  std::string key() const;  // canonical serialization (edges sorted); used for oracle/memo keys
};

struct TwoEdgeStructure {
  VertexPartition components;               // two-edge-connected components
  std::vector<GraphEdge> bridges;           // the cutting edges
  std::vector<std::pair<int, int>> component_tree;  // one (comp,comp) pair per bridge
  int leaf_count = 2;                       // r(T); trivial tree convention: 2
};

TwoEdgeStructure two_edge_structure(const StarTestGraph& T);

// Eulerian-circuit criterion: connected and in-degree = out-degree at every vertex.
bool is_cyclic(const StarTestGraph& T);

struct FatTreeEdge {
  int u = 0, v = 0;              // u < v, endpoints in the underlying tree
  int multiplicity = 0;          // number of directed edges between u and v (either direction)
  std::vector<int> labels;       // distinct labels present, sorted
};
struct FatTreeProfile {
  std::vector<FatTreeEdge> edges;
  // type (q_{j,k}): count of undirected edges with single label j and multiplicity 2k;
  // meaningful only when every edge is single-label and even
  std::map<std::pair<int, int>, int> type() const;
};

// Present iff the underlying simple undirected graph is a loop-free tree.
std::optional<FatTreeProfile> fat_tree_profile(const StarTestGraph& T);

// prod over undirected edges of a_{label, multiplicity/2} on loop-free single-label even
// fat trees; 0 otherwise.  TruncationError if a needed k exceeds the parameter truncation.
Polynomial limit_injective_trace(const StarTestGraph& T, const HeavyParams& params);

// G_red tree test: nodes are single-family connected components plus shared vertices.
bool is_free_product(const StarTestGraph& T, const std::function<int(int)>& family_of);

namespace detail {
template <class V>
V mul_int(const V& v, std::int64_t m) {
  return v * static_cast<V>(m);
}
inline Polynomial mul_int(const Polynomial& p, std::int64_t m) {
  return Rational(static_cast<long>(m)) * p;
}
inline Rational mul_int(const Rational& r, std::int64_t m) {
  return r * Rational(static_cast<long>(m));
}
}  // namespace detail

// Möbius inversion between trace and injective trace over the partition lattice:
//   injective(T) = sum_pi mu(pi) * trace(T^pi)
//   trace(T)     = sum_pi injective(T^pi)
template <class Value, class Oracle>
Value injective_from_trace(const StarTestGraph& T, Oracle&& trace_oracle,
                           std::int64_t partition_cap = 1'000'000) {
  Value acc{};
  std::int64_t count = 0;
  for_each_partition(T.n, [&](const std::vector<int>& rgs, int nb) {
    if (++count > partition_cap) throw ResourceError("injective_from_trace: partition cap exceeded");
    acc += detail::mul_int(Value(trace_oracle(T.quotient_rgs(rgs, nb))),
                           partition_mobius_from_rgs(rgs, nb));
    return true;
  });
  return acc;
}

template <class Value, class Oracle>
Value trace_from_injective(const StarTestGraph& T, Oracle&& injective_oracle,
                           std::int64_t partition_cap = 1'000'000) {
  Value acc{};
  std::int64_t count = 0;
  for_each_partition(T.n, [&](const std::vector<int>& rgs, int nb) {
    if (++count > partition_cap) throw ResourceError("trace_from_injective: partition cap exceeded");
    acc += Value(injective_oracle(T.quotient_rgs(rgs, nb)));
    return true;
  });
  return acc;
}

}  // namespace heavymom
