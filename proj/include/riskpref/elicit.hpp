#pragma once

#include "riskpref/ladder.hpp"
#include "riskpref/prospect.hpp"

namespace riskpref {

enum class Censoring { None, AtBest, AtWorst };

/// One empirical certainty equivalent, the unit the fitter consumes.
///
/// AtBest: every sure option was rejected; the true CE lies at or beyond the
/// most-preferred rung, whose value is stored in `ce`. AtWorst: every sure
/// option was accepted; the true CE lies at or below the least-preferred
/// rung. Uncensored observations carry the turning-point midpoint.
struct CEObservation {
    Prospect prospect;
    double ce;
    Censoring censoring;
    DecisionSequence raw_sequence;
};

/// Read the empirical certainty equivalent off a decision sequence.
///
/// The sequence is first normalized to preference order (most-preferred sure
/// option first). A coherent sequence is then A...AR...R; its CE is the
/// arithmetic midpoint of the last-accepted and first-rejected rungs.
/// All-accept and all-reject sequences are retained as censored
/// observations. Throws MonotonicityError when the normalized sequence has
/// more than one transition.
CEObservation extract_empirical_ce(const DecisionSequence& seq, const SureOptionLadder& ladder);

}  // namespace riskpref
