#pragma once

#include <cstddef>
#include <vector>

#include "riskpref/prospect.hpp"

namespace riskpref {

/// Certain alternatives offered against a prospect, stored in rendered
/// order: the outcome with the larger absolute value first, stepping toward
/// the other extreme. Gains therefore render best-first, losses worst-first.
struct SureOptionLadder {
    enum class Spacing { Geometric, Arithmetic };

    std::vector<double> rungs;  // rendered order
    Prospect prospect;          // the generating prospect
    Spacing spacing;

    std::size_t size() const { return rungs.size(); }
};

/// Build the sure-option ladder for a prospect.
///
/// Same-sign prospects get rungs whose magnitudes are logarithmically spaced
/// between the extreme outcomes. Prospects with a zero outcome or mixed
/// signs use arithmetic spacing, since a geometric sequence cannot reach or
/// cross zero. Throws DegenerateProspectError when |x_max| == |x_min|, which
/// leaves the rendering order undefined.
SureOptionLadder build_ladder(const Prospect& prospect, std::size_t n_rungs = 7);

/// Decisions a prospect-theory agent with the given parameters makes over
/// the ladder: accept a sure option s exactly when value(s) >= the
/// prospect's utility (ties accept). Returned in rendered rung order; in
/// preference order the sequence has at most one accept->reject transition
/// because the value function is strictly increasing.
DecisionSequence optimal_decisions(const Prospect& prospect, const SureOptionLadder& ladder,
                                   const PTParams& params);

/// Indices of the ladder's rungs sorted most-preferred first (descending
/// money value). Shared by the extraction and coherence logic.
std::vector<std::size_t> preference_order(const SureOptionLadder& ladder);

}  // namespace riskpref
