#pragma once

// The operator r_{v,w}: along a reduced word of w, keep T_s for the letters
// of a non-decreasing subexpression evaluating to v and replace every other
// T_s by -c_s.

#include <vector>

#include "prohecke/hecke.hpp"

namespace prohecke {

struct Subexpression {
  ReducedWord base;
  std::vector<bool> mask;
};

// Product of the masked letters followed by the Omega part.
WeylElement evaluate_mask(const RootDatum& rd, const ReducedWord& word, const std::vector<bool>& mask);
// The length of the masked product equals the number of kept letters.
bool is_non_decreasing(const RootDatum& rd, const ReducedWord& word, const std::vector<bool>& mask);

// Scans left to right and keeps a letter whenever the prefix can still be
// completed to a non-decreasing subexpression for v. Throws OrderError
// unless v <= w.
Subexpression find_subexpression(const RootDatum& rd, const WeylElement& v, const ReducedWord& word);

// Every non-decreasing mask of `word` evaluating to v (exhaustive).
std::vector<std::vector<bool>> all_non_decreasing_masks(const RootDatum& rd, const WeylElement& v,
                                                        const ReducedWord& word);

// T_t * prod_k (mask[k] ? T_{lifts[k]} : -c_{lifts[k]}) * T_{omega_lift}.
HeckeElement r_apply_word(const HeckeAlgebra& H, const ZElem& t, const std::vector<W1Element>& lifts,
                          const W1Element& omega_lift, const std::vector<bool>& mask);

// r_{v,w} on an element supported on the fiber over w, using the canonical
// reduced word of w and the greedy mask.
HeckeElement r_apply(const HeckeAlgebra& H, const WeylElement& v, const WeylElement& w, const HeckeElement& h);

}  // namespace prohecke
