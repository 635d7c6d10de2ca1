#include "riskpref/elicit.hpp"

#include <cstddef>

namespace riskpref {

CEObservation extract_empirical_ce(const DecisionSequence& seq, const SureOptionLadder& ladder) {
    const std::size_t n = ladder.size();
    if (seq.size() != n) {
        throw ValidationError("extract_empirical_ce: sequence length does not match ladder");
    }

    const auto order = preference_order(ladder);
    std::vector<Decision> pref(n);
    std::vector<double> rungs(n);
    for (std::size_t i = 0; i < n; ++i) {
        pref[i] = seq[order[i]];
        rungs[i] = ladder.rungs[order[i]];
    }

    std::size_t accepts = 0;
    while (accepts < n && pref[accepts] == Decision::Accept) ++accepts;
    for (std::size_t i = accepts; i < n; ++i) {
        if (pref[i] == Decision::Accept) {
            throw MonotonicityError(
                "decision sequence has more than one transition in preference order");
        }
    }

    if (accepts == n) {
        // Even the least-preferred sure option beats the prospect.
        return CEObservation{ladder.prospect, rungs.back(), Censoring::AtWorst, seq};
    }
    if (accepts == 0) {
        // The prospect beats even the most-preferred sure option.
        return CEObservation{ladder.prospect, rungs.front(), Censoring::AtBest, seq};
    }
    const double ce = 0.5 * (rungs[accepts - 1] + rungs[accepts]);
    return CEObservation{ladder.prospect, ce, Censoring::None, seq};
}

}  // namespace riskpref
