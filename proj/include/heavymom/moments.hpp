#pragma once

#include "heavymom/cycles.hpp"
#include "heavymom/word.hpp"

namespace heavymom {

// Limiting moment of one monomial: sum of hw_weight * traffic_weight over all
// colored cycles of its color word.  A pure y word answers through the y model.
Polynomial phi(const Word& P, const HeavyParams& params, const YModel& y,
               const EnumOptions& opts = {});

// Joint moment of K monomials sharing their root index (entrywise product of the
// arguments under the normalized trace).  Identity arguments drop out; pure y
// arguments merge into another argument's tail slot (diagonal models only).
Polynomial phi_k(const std::vector<Word>& words, const HeavyParams& params, const YModel& y,
                 const EnumOptions& opts = {});

// Independent oracle: sum over partitions of the cycle graph's vertices of the
// product of per-family injective traces, restricted to free-product quotients.
// Pure-x and diagonal-y words run on the contracted L-vertex cycle; a traffic
// y model runs on the full alternating 2L-vertex cycle.
Polynomial phi_bruteforce(const Word& P, const HeavyParams& params, const YModel& y,
                          std::int64_t partition_cap = 1'000'000);

struct FreenessDefect {
  Polynomial f;  // the mixed fourth-order centered moment
  Polynomial g;  // the y-side variance factor; f = a_{1,2} * g
};

// f = Phi((x^2-Phi x^2)(y^2-Phi y^2)(x^2-Phi x^2)(y^2-Phi y^2)) with x = x1 and the
// given y model (y is real symmetric, so y* = y).
FreenessDefect freeness_defect(const HeavyParams& params, const YModel& y);

// Same functional with a second heavy letter x2 playing the role of y.
FreenessDefect freeness_defect_second_letter(const HeavyParams& params);

}  // namespace heavymom
