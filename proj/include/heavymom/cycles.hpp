#pragma once

#include <cstdint>
#include <vector>

#include "heavymom/params.hpp"
#include "heavymom/polynomial.hpp"
#include "heavymom/ymodel.hpp"

namespace heavymom {

// A closed colored walk on a rooted plane tree (the tree is created by the walk:
// children are ordered by first visit, so the parent array IS the canonical
// embedding).  Vertex 0 is the root; vertex v>0 owns the edge to its parent.
struct ColoredCycleOnTree {
  std::vector<int> parent;       // parent[0] = -1
  std::vector<int> edge_color;   // edge_color[v], v >= 1 (index 0 unused, 0)
  std::vector<int> edge_visits;  // visit count of edge v-parent[v] (always even)
  std::vector<int> walk;         // vertices, walk[0] = walk[L] = 0
  std::vector<int> gamma;        // step colors, size L

  bool operator==(const ColoredCycleOnTree&) const = default;
  int vertices() const { return (int)parent.size(); }
  int edges() const { return vertices() - 1; }
  int length() const { return (int)gamma.size(); }
  bool all_doubled() const;
  std::vector<int> profile() const;  // +1 per descent, -1 per ascent
};

struct EnumOptions {
  std::int64_t node_cap = 100'000'000;  // DFS nodes before giving up
  int threads = 1;
  std::vector<int> chain;  // word lengths L_1..L_K; walk must touch the root at each prefix sum
};

// All closed colored walks for the color word gamma, deterministically ordered by
// the DFS move order (ascend, existing children left to right, new child).
std::vector<ColoredCycleOnTree> enumerate_cycles(const std::vector<int>& gamma,
                                                 const EnumOptions& opts = {});

// product over edges of a_{color, visits/2}
Polynomial hw_weight(const ColoredCycleOnTree& gc, const HeavyParams& params);

// product over tree vertices v of the y-model trace of the local test graph T_v
// (nodes = incident edges; one edge per landing of the walk, labeled by that step's
// y slot).  slots[n] is the y word following step n+1's letter; empty = identity.
Polynomial traffic_weight(const ColoredCycleOnTree& gc, const std::vector<YWord>& slots,
                          const YModel& y);

// The unique doubled-tree walk with the same descent/ascent profile: repeatedly
// splitting re-visited subtrees off into fresh copies lands here, and matched
// descent/ascent pairs always cross one original edge, so colors transfer.
ColoredCycleOnTree unfold(const ColoredCycleOnTree& gc);

}  // namespace heavymom
